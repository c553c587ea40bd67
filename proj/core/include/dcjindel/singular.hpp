#pragma once

#include "dcjindel/components.hpp"
#include "dcjindel/recombination.hpp"

namespace dcj {

struct SingularBreakdown {
  long commonFamilies = 0;  // |G|
  int abCycles = 0;         // c
  int abPaths = 0;          // i
  int sumLambda = 0;
  GroupTally tally;  // applied recombination groups and delta
  long distance = 0;
};

// Exact DCJ-indel distance of singular genomes:
// |G| - c - i/2 + sum(lambda) - delta.
SingularBreakdown singular_distance(const Genome& a, const Genome& b);

// Simplified formula for all-circular singular genomes: |G| - c + sum(lambda).
// Throws NotCircular when a linear chromosome is present.
long circular_distance(const Genome& a, const Genome& b);

}  // namespace dcj
