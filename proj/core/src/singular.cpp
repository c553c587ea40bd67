#include "dcjindel/singular.hpp"

#include "dcjindel/errors.hpp"

namespace dcj {

SingularBreakdown singular_distance(const Genome& a, const Genome& b) {
  MarkerCensus c = census(a, b);
  Diagram d = build_relational_diagram(a, b, c);
  std::vector<Component> components = decompose_components(d);

  SingularBreakdown out;
  out.commonFamilies = static_cast<long>(c.common.size());
  for (const Component& comp : components) {
    out.sumLambda += indel_potential(comp.runCount);
    if (comp.kind == ComponentKind::ABCycle) ++out.abCycles;
    if (comp.kind == ComponentKind::ABPath) ++out.abPaths;
  }
  out.tally = greedy_delta(tally_paths(components));
  // i is even, so the division is exact
  out.distance = out.commonFamilies - out.abCycles - out.abPaths / 2 + out.sumLambda -
                 out.tally.delta;
  return out;
}

long circular_distance(const Genome& a, const Genome& b) {
  for (const Genome* g : {&a, &b})
    for (const auto& chrom : g->chromosomes)
      if (chrom.topology != Topology::Circular)
        throw NotCircular("genome '" + g->name + "' has a linear chromosome");

  MarkerCensus c = census(a, b);
  Diagram d = build_relational_diagram(a, b, c);
  std::vector<Component> components = decompose_components(d);

  long cycles = 0;
  long sumLambda = 0;
  for (const Component& comp : components) {
    sumLambda += indel_potential(comp.runCount);
    if (comp.kind == ComponentKind::ABCycle) ++cycles;
  }
  return static_cast<long>(c.common.size()) - cycles + sumLambda;
}

}  // namespace dcj
