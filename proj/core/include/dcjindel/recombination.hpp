#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dcjindel/components.hpp"

namespace dcj {

// Census of indel-enclosing path classes:
//   W  = AA:ab   WA = AA:a   WB = AA:b
//   M  = BB:ab   MA = BB:a   MB = BB:b
//   Z  = AB:ab   N  = AB:ba
// Indel-free paths and AB:a / AB:b paths never act as recombination sources
// and are excluded. The applied counts nP..nN record how many chained
// recombination groups of each part were consumed; the total deduction is
// delta = 2 nP + 3 nQ + 2 nT + nS + 2 nM + nN.
struct GroupTally {
  int w = 0, wa = 0, wb = 0;
  int m = 0, ma = 0, mb = 0;
  int z = 0, n = 0;
  int nP = 0, nQ = 0, nT = 0, nS = 0, nM = 0, nN = 0;
  int delta = 0;

  std::array<int, 8> counters() const { return {w, wa, wb, m, ma, mb, z, n}; }
  void setCounters(const std::array<int, 8>& c) {
    w = c[0]; wa = c[1]; wb = c[2]; m = c[3]; ma = c[4]; mb = c[5]; z = c[6]; n = c[7];
  }
};

// Count indel-enclosing source paths by class.
GroupTally tally_paths(const std::vector<Component>& components);

enum class GroupPart : std::uint8_t { P, Q, T, S, M, N };

// One chained recombination group: how many paths of each class it consumes
// and how much it deducts from the distance.
struct RecombinationGroup {
  GroupPart part;
  std::array<int, 8> consumes;  // same order as GroupTally::counters()
  int deduction;
};

// All groups in greedy application order (parts P, Q, T, S, M, N top-down).
const std::vector<RecombinationGroup>& recombination_groups();

// Apply the groups strictly top-down, each as often as the remaining counters
// allow. Resultant paths are never fed back. Input counters must be set and
// applied counts zero; returns the consumed tally with delta filled in.
GroupTally greedy_delta(GroupTally counters);

}  // namespace dcj
