#include "dcjindel/random.hpp"

#include <cmath>
#include <stdexcept>

namespace dcj {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  if (n == 1) return 0;
  std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(n - 1);
  std::uint64_t r;
  do {
    r = engine_() & mask;
  } while (r >= n);
  return r;
}

double Rng::real() { return (engine_() >> 11) * 0x1.0p-53; }

long Rng::poisson(double mean) {
  if (mean <= 0) return 0;
  if (mean > 30) {
    double half = mean / 2;
    return poisson(half) + poisson(mean - half);
  }
  double limit = std::exp(-mean);
  long k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= real();
  } while (p > limit);
  return k - 1;
}

ZipfSampler::ZipfSampler(double exponent, int max) {
  if (exponent <= 1.0 || max < 1) throw std::invalid_argument("bad zipf parameters");
  std::vector<double> weights(max);
  double total = 0;
  for (int k = 1; k <= max; ++k) {
    weights[k - 1] = std::pow(static_cast<double>(k), -exponent);
    total += weights[k - 1];
  }
  cdf_.resize(max);
  double acc = 0;
  for (int k = 0; k < max; ++k) {
    acc += weights[k] / total;
    cdf_[k] = acc;
  }
  cdf_.back() = 1.0;
}

int ZipfSampler::sample(Rng& rng) const {
  double u = rng.real();
  int lo = 0, hi = static_cast<int>(cdf_.size()) - 1;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (cdf_[mid] > u)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo + 1;
}

}  // namespace dcj
