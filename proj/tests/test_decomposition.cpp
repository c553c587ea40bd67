#include <doctest.h>

#include "dcjindel/enumerate.hpp"
#include "dcjindel/errors.hpp"
#include "test_support.hpp"

using namespace dcj;
using namespace dcj::testing;

namespace {

Diagram mrd_of(const Genome& a, const Genome& b) { return build_mrd(a, b, census(a, b)); }

// sibling pairs by (family, 0-based A-occurrence ordinal, B ordinal)
SiblingSet pairs_of(const Diagram& d,
                    const std::vector<std::tuple<std::string, int, int>>& spec) {
  SiblingSet s;
  for (const auto& [family, a, b] : spec) s.pairs.push_back(d.siblingPairId(family, a, b));
  std::sort(s.pairs.begin(), s.pairs.end());
  return s;
}

}  // namespace

TEST_CASE("multi-relational diagram of the duplicated-marker example") {
  auto [a, b] = duplicated_marker_example();
  Diagram d = mrd_of(a, b);

  CHECK(d.vertexCount() == 36);
  int fam3 = 0;
  for (const auto& p : d.siblingPairs)
    if (p.family == "3") ++fam3;
  CHECK(fam3 * 2 == 12);  // 2 x 3 occurrence pairs, head + tail edges
  CHECK(d.countEdges(EdgeKind::IndelA) == 4);
  CHECK(d.countEdges(EdgeKind::IndelB) == 8);
  CHECK(d.countEdges(EdgeKind::Extremity) == 24);
  CHECK(d.countEdges(EdgeKind::AdjacencyA) == 7);
  CHECK(d.countEdges(EdgeKind::AdjacencyB) == 9);
  CHECK(d.siblingPairs.size() == 12);
}

TEST_CASE("the diagram of singular genomes reduces to the relational diagram") {
  auto [a, b] = singular_two_chromosome_example();
  MarkerCensus c = census(a, b);
  Diagram mrd = build_mrd(a, b, c);
  Diagram rel = build_relational_diagram(a, b, c);
  CHECK(mrd.vertexCount() == rel.vertexCount());
  CHECK(mrd.edgeCount() == rel.edgeCount());
  CHECK(mrd.siblingPairs.size() == c.common.size());
}

TEST_CASE("diagram with no common families") {
  Genome a = genome("A", {circ("6")});
  Genome b = genome("B", {circ("1")});
  Diagram d = mrd_of(a, b);
  CHECK(d.vertexCount() == 4);
  CHECK(d.countEdges(EdgeKind::AdjacencyA) == 1);
  CHECK(d.countEdges(EdgeKind::AdjacencyB) == 1);
  CHECK(d.countEdges(EdgeKind::IndelA) == 1);
  CHECK(d.countEdges(EdgeKind::IndelB) == 1);
  CHECK(d.countEdges(EdgeKind::Extremity) == 0);
  CHECK(d.singletonCandidates.size() == 2);
}

TEST_CASE("capping plans") {
  auto [a, b] = duplicated_marker_example();
  CappingPlan plan = capping_plan(census(a, b));
  CHECK(plan.pStar == 1);
  CHECK(plan.aStar == 0);
  CHECK(plan.artificialSide == CappingPlan::Side::None);

  Genome la = genome("A", {lin("1")});
  Genome cb = genome("B", {circ("1")});
  CappingPlan plan2 = capping_plan(census(la, cb));
  CHECK(plan2.pStar == 1);
  CHECK(plan2.aStar == 1);
  CHECK(plan2.artificialSide == CappingPlan::Side::B);
}

TEST_CASE("capped diagram of the duplicated-marker example") {
  auto [a, b] = duplicated_marker_example();
  MarkerCensus c = census(a, b);
  Diagram capped = cap_mrd(build_mrd(a, b, c), capping_plan(c));
  CHECK(capped.pStar == 1);
  CHECK(capped.vertexCount() == 40);
  CHECK(capped.countEdges(EdgeKind::CapExtremity) == 4);
  CHECK(capped.countEdges(EdgeKind::AdjacencyA) == 9);   // 7 + 2 telomere caps
  CHECK(capped.countEdges(EdgeKind::AdjacencyB) == 11);  // 9 + 2
  // every vertex now touches an adjacency-like edge
  for (const auto& v : capped.vertices) {
    bool hasAdj = false;
    for (int eid : capped.incident[v.id - 1])
      if (is_adjacency_like(capped.edge(eid).kind)) hasAdj = true;
    CHECK(hasAdj);
  }
}

TEST_CASE("artificial adjacencies pair surplus caps on the deficient side") {
  Genome la = genome("A", {lin("1")});
  Genome cb = genome("B", {circ("1")});
  MarkerCensus c = census(la, cb);
  Diagram capped = cap_mrd(build_mrd(la, cb, c), capping_plan(c));
  CHECK(capped.countEdges(EdgeKind::ArtificialAdjacencyB) == 1);
  CHECK(capped.countEdges(EdgeKind::ArtificialAdjacencyA) == 0);
  CHECK(capped.countEdges(EdgeKind::CapExtremity) == 4);
  for (const auto& e : capped.edges) {
    if (e.kind != EdgeKind::ArtificialAdjacencyB) continue;
    CHECK(capped.vertex(e.u).isCap);
    CHECK(capped.vertex(e.v).isCap);
  }
}

TEST_CASE("all-circular genomes need no caps") {
  Genome a = genome("A", {circ("1 2")});
  Genome b = genome("B", {circ("2 1")});
  MarkerCensus c = census(a, b);
  Diagram d = build_mrd(a, b, c);
  Diagram capped = cap_mrd(d, capping_plan(c));
  CHECK(capped.pStar == 0);
  CHECK(capped.vertexCount() == d.vertexCount());
  CHECK(capped.edgeCount() == d.edgeCount());
}

TEST_CASE("scores of the two reference matchings of the duplicated-marker example") {
  auto [a, b] = duplicated_marker_example();
  Diagram d = mrd_of(a, b);

  // family 3 occurs at A positions 2,6 and B positions 4,7,10; family 1 at
  // B positions 1,5,9; family 4 at A positions 5,8
  SiblingSet first =
      pairs_of(d, {{"1", 0, 1}, {"2", 0, 0}, {"3", 0, 0}, {"3", 1, 1}, {"4", 0, 0}});
  ScoredDecomposition firstScore = induce_decomposition(d, first);
  CHECK(firstScore.distance == 8);
  CHECK(firstScore.abCycles == 0);
  CHECK(firstScore.abPaths == 2);
  CHECK(firstScore.sumLambda == 4);
  CHECK(firstScore.tally.delta == 0);

  // The second matching decomposes into an indel-free AB-path, an AB-path
  // with one run, a two-run cycle and a cycle whose two A-indel edges share
  // an adjacency and therefore form a single run: 5 - 2 - 1 + (1+2+1) = 6.
  SiblingSet second =
      pairs_of(d, {{"1", 0, 0}, {"2", 0, 0}, {"3", 0, 1}, {"3", 1, 0}, {"4", 1, 0}});
  ScoredDecomposition secondScore = induce_decomposition(d, second);
  CHECK(secondScore.distance == 6);
  CHECK(secondScore.abCycles == 2);
  CHECK(secondScore.abPaths == 2);
  CHECK(secondScore.sumLambda == 4);
  CHECK(secondScore.tally.delta == 0);
  int runCensus[5] = {0, 0, 0, 0, 0};
  for (const Component& comp : secondScore.components) runCensus[comp.runCount]++;
  CHECK(runCensus[0] == 1);
  CHECK(runCensus[1] == 2);
  CHECK(runCensus[2] == 1);
}

TEST_CASE("empty sibling set on exclusive circulars gives two singletons") {
  Genome a = genome("A", {circ("6")});
  Genome b = genome("B", {circ("1")});
  MarkerCensus c = census(a, b);
  Diagram d = build_mrd(a, b, c);

  ScoredDecomposition uncapped = induce_decomposition(d, SiblingSet{});
  CHECK(uncapped.distance == 2);

  Diagram capped = cap_mrd(d, capping_plan(c));
  ScoredDecomposition sd = induce_decomposition(capped, SiblingSet{}, CapChoice{{}});
  CHECK(sd.circularSingletons == 2);
  CHECK(sd.indelFreeCycles == 0);
  CHECK(sd.transitions == 0);
  CHECK(sd.weightTimesTwo == -4);
  CHECK(sd.distance == 2);
}

TEST_CASE("four-run cycle: transitions and the reformulated potential") {
  auto [a, b] = four_run_cycle_example();
  MarkerCensus c = census(a, b);
  Diagram capped = cap_mrd(build_mrd(a, b, c), capping_plan(c));
  SiblingSet s = pairs_of(capped, {{"1", 0, 0}, {"2", 0, 0}});
  ScoredDecomposition sd = induce_decomposition(capped, s, CapChoice{{}});

  REQUIRE(sd.components.size() == 1);
  const Component& cycle = sd.components[0];
  CHECK(cycle.runCount == 4);
  CHECK(cycle.transitions == 4);
  CHECK(lambda_via_transitions(cycle) == 3);
  CHECK(lambda_via_transitions(cycle) == indel_potential(cycle.runCount));
  CHECK(sd.distance == solve_by_enumeration(a, b).distance);
}

TEST_CASE("single-run and indel-free cycles have no transitions") {
  Genome a = genome("A", {circ("1 p")});
  Genome b = genome("B", {circ("1")});
  MarkerCensus c = census(a, b);
  Diagram capped = cap_mrd(build_mrd(a, b, c), capping_plan(c));
  SiblingSet s;
  s.pairs.push_back(capped.siblingPairId("1", 0, 0));
  ScoredDecomposition sd = induce_decomposition(capped, s, CapChoice{{}});
  REQUIRE(sd.components.size() == 1);
  CHECK(sd.components[0].runCount == 1);
  CHECK(sd.components[0].transitions == 0);
  CHECK(lambda_via_transitions(sd.components[0]) == 1);

  Genome a2 = genome("A", {circ("1")});
  Diagram capped2 = cap_mrd(mrd_of(a2, b), capping_plan(census(a2, b)));
  SiblingSet s2;
  s2.pairs.push_back(capped2.siblingPairId("1", 0, 0));
  ScoredDecomposition sd2 = induce_decomposition(capped2, s2, CapChoice{{}});
  REQUIRE(sd2.components.size() == 1);
  CHECK(sd2.components[0].runCount == 0);
  CHECK(sd2.components[0].transitions == 0);
  CHECK(lambda_via_transitions(sd2.components[0]) == 0);
}

TEST_CASE("invalid sibling sets and cap matchings are rejected") {
  auto [a, b] = duplicated_marker_example();
  MarkerCensus c = census(a, b);
  Diagram d = build_mrd(a, b, c);

  // not maximal
  CHECK_THROWS_AS(induce_decomposition(d, SiblingSet{}), InvalidSiblingSet);
  // two pairs sharing the same A occurrence of family 3
  SiblingSet incident = pairs_of(d, {{"1", 0, 0}, {"2", 0, 0}, {"3", 0, 0}, {"3", 0, 1},
                                     {"4", 0, 0}});
  CHECK_THROWS_AS(induce_decomposition(d, incident), InvalidSiblingSet);

  Diagram capped = cap_mrd(d, capping_plan(c));
  SiblingSet ok = pairs_of(capped, {{"1", 0, 0}, {"2", 0, 0}, {"3", 0, 0}, {"3", 1, 1},
                                    {"4", 0, 0}});
  CHECK_THROWS_AS(induce_decomposition(capped, ok), InvalidCapping);
  CHECK_THROWS_AS(induce_decomposition(capped, ok, CapChoice{{0}}), InvalidCapping);
  CHECK_THROWS_AS(induce_decomposition(capped, ok, CapChoice{{0, 0}}), InvalidCapping);
  CHECK_THROWS_AS(induce_decomposition(d, ok, CapChoice{{0, 1}}), InvalidCapping);
}

TEST_CASE("capped decompositions are cycle covers with even transition counts") {
  InstanceFilter filter;
  filter.maxSiblingSets = 200;
  for (auto& [a, b] : simulated_instances(10, 1234, filter)) {
    MarkerCensus c = census(a, b);
    Diagram capped = cap_mrd(build_mrd(a, b, c), capping_plan(c));
    SiblingSetEnumerator en(capped);
    SiblingSet s;
    while (en.next(s)) {
      ScoredDecomposition sd = induce_decomposition(capped, s, all_cap_choices(capped).front());
      int sumLambdaViaTransitions = 0;
      for (const Component& comp : sd.components) {
        CHECK(comp.isCycle);
        CHECK(comp.transitions % 2 == 0);
        CHECK(lambda_via_transitions(comp) == indel_potential(comp.runCount));
        sumLambdaViaTransitions += lambda_via_transitions(comp);
      }
      CHECK(sumLambdaViaTransitions == sd.sumLambda);
    }
  }
}

TEST_CASE("uncapped distance equals the best capped distance") {
  InstanceFilter filter;
  filter.maxSiblingSets = 60;
  for (auto& [a, b] : simulated_instances(8, 999, filter)) {
    MarkerCensus c = census(a, b);
    Diagram d = build_mrd(a, b, c);
    Diagram capped = cap_mrd(d, capping_plan(c));
    SiblingSetEnumerator en(d);
    SiblingSet s;
    while (en.next(s)) {
      long uncapped = induce_decomposition(d, s).distance;
      CHECK(uncapped == min_capped_distance(capped, s));
    }
  }
}
