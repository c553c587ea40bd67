#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcjindel/components.hpp"
#include "dcjindel/recombination.hpp"

namespace dcj {

// A matching of occurrences encoded as sibling pair ids of a diagram. Maximal
// when every common family matches min(occA, occB) occurrence pairs.
struct SiblingSet {
  std::vector<int> pairs;  // sibling pair ids, ascending

  std::string describe(const Diagram& d) const;
};

// A perfect matching between the 2*pStar caps of A and of B: capsB[i] is the
// 0-based B-cap ordinal matched to the i-th A-cap.
struct CapChoice {
  std::vector<int> capsB;
};

struct ScoredDecomposition {
  std::vector<char> selected;  // edge mask, indexed by edge id - 1
  std::vector<Component> components;
  bool capped = false;

  int abCycles = 0;           // c
  int abPaths = 0;            // i (0 in capped decompositions)
  int sumLambda = 0;
  GroupTally tally;           // uncapped only

  int indelFreeCycles = 0;    // c-tilde
  int transitions = 0;        // aleph, even
  int circularSingletons = 0; // s

  int weightTimesTwo = 0;     // weight has denominator <= 2
  long distance = 0;

  double weight() const { return weightTimesTwo / 2.0; }
};

// Throws InvalidSiblingSet unless `s` is a maximal sibling set of `d`.
void validate_sibling_set(const Diagram& d, const SiblingSet& s);

// Build and score the consistent decomposition induced by a maximal sibling
// set: adjacency edges plus the sibling set (plus the cap matching on capped
// diagrams), then every indel edge whose endpoints are still free. Scores
// with the path/recombination formula when uncapped and with the
// transition-based cycle formula when capped; `capChoice` must be given
// exactly when `d` is capped.
ScoredDecomposition induce_decomposition(const Diagram& d, const SiblingSet& s,
                                         const std::optional<CapChoice>& capChoice = {});

// All perfect cap matchings of a capped diagram ((2 pStar)! of them; intended
// for small instances and tests).
std::vector<CapChoice> all_cap_choices(const Diagram& d);

}  // namespace dcj
