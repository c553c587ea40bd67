#include "dcjindel/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dcjindel/errors.hpp"

namespace dcj {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

}  // namespace

SiblingSetEnumerator::SiblingSetEnumerator(const Diagram& d) : d_(&d) {
  auto famA = d.familyOccurrences(GenomeSide::A);
  auto famB = d.familyOccurrences(GenomeSide::B);
  for (const auto& family : d.census.common) {
    FamilyState f;
    const auto& a = famA.at(family);
    const auto& b = famB.at(family);
    f.scarceIsA = a.size() <= b.size();
    f.scarce = f.scarceIsA ? a : b;
    f.abundant = f.scarceIsA ? b : a;
    f.assign.resize(f.scarce.size());
    for (std::size_t i = 0; i < f.assign.size(); ++i) f.assign[i] = static_cast<int>(i);

    f.pairId.assign(f.scarce.size(), std::vector<int>(f.abundant.size(), 0));
    for (const auto& p : d.siblingPairs) {
      if (p.family != family) continue;
      int sOcc = f.scarceIsA ? p.occurrenceA : p.occurrenceB;
      int aOcc = f.scarceIsA ? p.occurrenceB : p.occurrenceA;
      auto sIt = std::find(f.scarce.begin(), f.scarce.end(), sOcc);
      auto aIt = std::find(f.abundant.begin(), f.abundant.end(), aOcc);
      f.pairId[sIt - f.scarce.begin()][aIt - f.abundant.begin()] = p.id;
    }

    // falling factorial P(|abundant|, |scarce|)
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < f.scarce.size(); ++i)
      count = saturating_mul(count, static_cast<std::uint64_t>(f.abundant.size() - i));
    total_ = saturating_mul(total_, count);
    families_.push_back(std::move(f));
  }
}

void SiblingSetEnumerator::reset(FamilyState& f) {
  for (std::size_t i = 0; i < f.assign.size(); ++i) f.assign[i] = static_cast<int>(i);
}

// Next k-permutation of {0..n-1} in lexicographic order.
bool SiblingSetEnumerator::advance(FamilyState& f) {
  int k = static_cast<int>(f.assign.size());
  int n = static_cast<int>(f.abundant.size());
  std::vector<char> used(n, 0);
  for (int v : f.assign) used[v] = 1;
  for (int pos = k - 1; pos >= 0; --pos) {
    used[f.assign[pos]] = 0;
    for (int v = f.assign[pos] + 1; v < n; ++v) {
      if (used[v]) continue;
      f.assign[pos] = v;
      used[v] = 1;
      for (int fill = pos + 1; fill < k; ++fill) {
        for (int w = 0; w < n; ++w) {
          if (!used[w]) {
            f.assign[fill] = w;
            used[w] = 1;
            break;
          }
        }
      }
      return true;
    }
  }
  return false;
}

void SiblingSetEnumerator::emit(SiblingSet& out) const {
  out.pairs.clear();
  for (const FamilyState& f : families_)
    for (std::size_t i = 0; i < f.assign.size(); ++i)
      out.pairs.push_back(f.pairId[i][f.assign[i]]);
  std::sort(out.pairs.begin(), out.pairs.end());
}

bool SiblingSetEnumerator::next(SiblingSet& out) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
    emit(out);
    return true;
  }
  // odometer over families, last family fastest
  for (int i = static_cast<int>(families_.size()) - 1; i >= 0; --i) {
    if (advance(families_[i])) {
      emit(out);
      return true;
    }
    reset(families_[i]);
  }
  done_ = true;
  return false;
}

EnumerationResult solve_by_enumeration(const Genome& a, const Genome& b, std::uint64_t budget) {
  MarkerCensus c = census(a, b);
  Diagram d = build_mrd(a, b, c);
  SiblingSetEnumerator en(d);
  if (en.totalCount() > budget) throw BudgetExceeded(en.totalCount(), budget);

  EnumerationResult result;
  bool first = true;
  SiblingSet s;
  while (en.next(s)) {
    ScoredDecomposition sd = induce_decomposition(d, s);
    ++result.enumerated;
    if (first || sd.distance < result.distance) {
      first = false;
      result.distance = sd.distance;
      result.best = s;
      result.score = std::move(sd);
    }
  }
  return result;
}

namespace {

constexpr int kCounterBits = 8;
constexpr std::uint64_t kCounterMask = 0xff;

std::uint64_t pack(const std::array<int, 8>& c) {
  std::uint64_t out = 0;
  for (int i = 0; i < 8; ++i) {
    if (c[i] < 0 || c[i] > 200) throw std::invalid_argument("counter out of range");
    out |= static_cast<std::uint64_t>(c[i]) << (i * kCounterBits);
  }
  return out;
}

// subtract a group's consumption; returns false on underflow
bool apply(std::uint64_t state, const std::array<int, 8>& consumes, std::uint64_t& out) {
  out = state;
  for (int i = 0; i < 8; ++i) {
    if (consumes[i] == 0) continue;
    std::uint64_t have = (state >> (i * kCounterBits)) & kCounterMask;
    if (have < static_cast<std::uint64_t>(consumes[i])) return false;
    out -= static_cast<std::uint64_t>(consumes[i]) << (i * kCounterBits);
  }
  return true;
}

}  // namespace

int DeltaOracle::best(std::uint64_t packed) {
  auto it = memo_.find(packed);
  if (it != memo_.end()) return it->second;
  int bestValue = 0;
  for (const RecombinationGroup& g : recombination_groups()) {
    std::uint64_t rest;
    if (!apply(packed, g.consumes, rest)) continue;
    bestValue = std::max(bestValue, g.deduction + best(rest));
  }
  memo_.emplace(packed, bestValue);
  return bestValue;
}

int DeltaOracle::operator()(const GroupTally& counters) { return best(pack(counters.counters())); }

int delta_oracle(const GroupTally& counters) {
  DeltaOracle oracle;
  return oracle(counters);
}

}  // namespace dcj
