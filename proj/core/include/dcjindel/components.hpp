#pragma once

#include <vector>

#include "dcjindel/diagram.hpp"

namespace dcj {

enum class ComponentKind : std::uint8_t { ABCycle, IndelOnlyCycle, AAPath, BBPath, ABPath };

// Run structure of a component: genome of the first and last run, epsilon when
// indel-free. AA- and BB-paths have no reading direction, so ab and ba are
// identified as AB; AB-paths are read from A to B and keep the distinction.
enum class PathClass : std::uint8_t { Epsilon, A, B, AB, BA, NotApplicable };

struct Component {
  ComponentKind kind;
  bool isCycle = false;
  int runCount = 0;  // Lambda
  PathClass pathClass = PathClass::NotApplicable;
  bool isCircularSingleton = false;
  bool isLinearSingleton = false;
  int transitions = 0;  // aleph; cycles only, 0 for paths
  std::vector<int> vertexIds;  // traversal order; AB-paths start at the A end
  std::vector<int> edgeIds;    // traversal order, edgeIds[i] joins vertex i and i+1
};

// Minimum indels chargeable to a component with `runs` runs:
// 0 if none, otherwise ceil((runs+1)/2).
int indel_potential(int runs);

// aleph/2 + r, where r = 1 iff the cycle is indel-enclosing; equal to
// indel_potential(runs) on every cycle.
int lambda_via_transitions(const Component& cycle);

int transitions(const Component& cycle);

// Split the subgraph selected by `selectedEdges` (indexed by edge id - 1) into
// its cycles and paths. Every vertex must have degree <= 2 in the selection
// and every vertex is covered (isolated vertices are not expected: callers
// always select at least one edge per vertex).
std::vector<Component> decompose_selection(const Diagram& d,
                                           const std::vector<char>& selectedEdges);

// Components of the full diagram; meaningful for relational diagrams of
// singular genomes, where every vertex has degree <= 2.
std::vector<Component> decompose_components(const Diagram& d);

}  // namespace dcj
