#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dcj {

// Samplers built on mt19937_64 only, so fixed seeds reproduce bit-identically
// across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // uniform on [0, n)
  std::uint64_t below(std::uint64_t n);

  // uniform on [0, 1)
  double real();

  // Poisson with the given mean; large means are split into independent
  // halves so the product method never underflows.
  long poisson(double mean);

private:
  std::mt19937_64 engine_;
};

// Zipf distribution on {1..max}: P(k) proportional to k^-exponent, truncated
// and renormalized.
class ZipfSampler {
public:
  ZipfSampler(double exponent, int max = 50);
  int sample(Rng& rng) const;
  double probabilityOfOne() const { return cdf_.front(); }

private:
  std::vector<double> cdf_;
};

}  // namespace dcj
