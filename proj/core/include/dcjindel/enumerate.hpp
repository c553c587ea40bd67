#pragma once

#include <cstdint>
#include <unordered_map>

#include "dcjindel/decomposition.hpp"

namespace dcj {

// Streams every maximal sibling set of a diagram exactly once: per common
// family, all injective assignments of the scarcer side's occurrences to the
// other side, families in lexicographic order, assignments in lexicographic
// index order, the last family advancing fastest.
class SiblingSetEnumerator {
public:
  explicit SiblingSetEnumerator(const Diagram& d);

  // product over families of P(max, min); saturates at UINT64_MAX
  std::uint64_t totalCount() const { return total_; }

  // false when exhausted
  bool next(SiblingSet& out);

private:
  struct FamilyState {
    std::vector<int> scarce;    // occurrence indices on the scarcer side
    std::vector<int> abundant;  // occurrence indices on the larger side
    bool scarceIsA = true;
    std::vector<int> assign;    // positions into `abundant`, pairwise distinct
    // sibling pair id for (scarce ordinal, abundant ordinal)
    std::vector<std::vector<int>> pairId;
  };

  bool advance(FamilyState& f);
  void reset(FamilyState& f);
  void emit(SiblingSet& out) const;

  const Diagram* d_;
  std::vector<FamilyState> families_;
  std::uint64_t total_ = 1;
  bool fresh_ = true;
  bool done_ = false;
};

struct EnumerationResult {
  long distance = 0;
  SiblingSet best;               // first optimum in enumeration order
  ScoredDecomposition score;     // uncapped scoring of the optimum
  std::uint64_t enumerated = 0;  // sibling sets examined
};

// Exact DCJ-indel distance of natural genomes by exhausting maximal sibling
// sets and scoring their uncapped consistent decompositions. Throws
// BudgetExceeded (with the total count) when more than `budget` sets exist.
EnumerationResult solve_by_enumeration(const Genome& a, const Genome& b,
                                       std::uint64_t budget = 1000000);

// Exhaustive maximum of the recombination-group deduction over all group
// multiplicities that the counters admit; the reference greedy_delta is
// checked against. Counters up to 12 each are supported; the memo is shared
// across calls so sweeps stay cheap.
class DeltaOracle {
public:
  int operator()(const GroupTally& counters);

private:
  int best(std::uint64_t packed);
  std::unordered_map<std::uint64_t, int> memo_;
};

int delta_oracle(const GroupTally& counters);

}  // namespace dcj
