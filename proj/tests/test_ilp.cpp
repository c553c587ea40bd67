#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dcjindel/enumerate.hpp"
#include "dcjindel/errors.hpp"
#include "dcjindel/ilp.hpp"
#include "test_support.hpp"

using namespace dcj;
using namespace dcj::testing;

namespace {

Diagram capped_of(const Genome& a, const Genome& b) {
  MarkerCensus c = census(a, b);
  return cap_mrd(build_mrd(a, b, c), capping_plan(c));
}

struct Best {
  double objective = 0;
  bool any = false;
  SiblingSet s;
  CapChoice p;
};

// brute-force optimum of the model objective over all (sibling set, capping)
Best best_encoded(const IlpModel& m, const Diagram& capped) {
  Best best;
  SiblingSetEnumerator en(capped);
  SiblingSet s;
  auto caps = all_cap_choices(capped);
  while (en.next(s)) {
    for (const CapChoice& p : caps) {
      ScoredDecomposition sd = induce_decomposition(capped, s, p);
      SolverSolution sol = encode_assignment(m, capped, sd);
      if (!best.any || sol.objective > best.objective) {
        best = {sol.objective, true, s, p};
      }
    }
  }
  return best;
}

std::string dump_solution(const SolverSolution& sol) {
  std::vector<std::string> names;
  for (const auto& [name, value] : sol.values) names.push_back(name);
  std::sort(names.begin(), names.end());
  std::ostringstream out;
  for (const auto& n : names) out << n << ' ' << sol.values.at(n) << '\n';
  return out.str();
}

// Minimum number of run-label changes on one cycle, with labels forced at the
// endpoints of selected indel edges and changes restricted to `allowed`
// edges. Independent of the transition counter in the component walk.
int min_flips(const Diagram& d, const Component& cycle, bool canonized,
              const std::vector<char>& selected) {
  int n = static_cast<int>(cycle.vertexIds.size());
  std::vector<int> forced(n, -1);
  for (int j = 0; j < n; ++j) {
    const DiagramEdge& e = d.edge(cycle.edgeIds[j]);
    if (!is_indel(e.kind)) continue;
    int value = e.kind == EdgeKind::IndelA ? 0 : 1;
    forced[j] = value;
    forced[(j + 1) % n] = value;
  }
  std::vector<char> allowed(n, 1);
  if (canonized) {
    for (int j = 0; j < n; ++j) {
      const DiagramEdge& e = d.edge(cycle.edgeIds[j]);
      bool adjA = e.kind == EdgeKind::AdjacencyA || e.kind == EdgeKind::ArtificialAdjacencyA;
      bool nearIndel = false;
      for (int vid : {e.u, e.v})
        for (int eid : d.incident[vid - 1])
          if (d.edge(eid).kind == EdgeKind::IndelA && selected[eid - 1]) nearIndel = true;
      allowed[j] = adjA && nearIndel;
    }
  }

  const int inf = 1 << 20;
  int best = inf;
  for (int start : {0, 1}) {
    if (forced[0] != -1 && forced[0] != start) continue;
    std::array<int, 2> dp = {inf, inf};
    dp[start] = 0;
    for (int j = 1; j < n; ++j) {
      std::array<int, 2> next = {inf, inf};
      for (int prev : {0, 1}) {
        if (dp[prev] == inf) continue;
        for (int cur : {0, 1}) {
          if (forced[j] != -1 && forced[j] != cur) continue;
          int cost = prev == cur ? 0 : (allowed[j - 1] ? 1 : inf);
          if (cost == inf) continue;
          next[cur] = std::min(next[cur], dp[prev] + cost);
        }
      }
      dp = next;
    }
    for (int last : {0, 1}) {
      if (dp[last] == inf) continue;
      int cost = last == start ? 0 : (allowed[n - 1] ? 1 : inf);
      if (cost == inf) continue;
      best = std::min(best, dp[last] + cost);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("identity instance model structure and optimum") {
  Genome a = genome("A", {circ("1")});
  Genome b = genome("B", {circ("1")});
  Diagram capped = capped_of(a, b);
  IlpModel m = build_ilp(capped);

  CHECK(m.vertexCount == 4);
  CHECK(m.edgeCount == 4);
  CHECK(m.countConstraints(ConstraintFamily::C02) == 4);
  CHECK(m.countConstraints(ConstraintFamily::C11) == 0);

  Best best = best_encoded(m, capped);
  CHECK(best.objective == 1.0);
  CHECK(m.nStar + m.pStar - best.objective == 0);

  ScoredDecomposition sd = induce_decomposition(capped, best.s, best.p);
  SolverSolution sol = encode_assignment(m, capped, sd);
  IlpResult r = extract_result(m, sol, capped);
  CHECK(r.distance == 0);
  CHECK(r.siblingSet.pairs == best.s.pairs);
}

TEST_CASE("forced circular singletons") {
  Genome a = genome("A", {circ("6")});
  Genome b = genome("B", {circ("1")});
  Diagram capped = capped_of(a, b);
  IlpModel m = build_ilp(capped);

  REQUIRE(capped.singletonCandidates.size() == 2);
  CHECK(capped.singletonCandidates[0].indelEdges.size() == 1);
  CHECK(capped.singletonCandidates[1].indelEdges.size() == 1);
  CHECK(m.countConstraints(ConstraintFamily::C11) == 2);

  Best best = best_encoded(m, capped);
  CHECK(best.objective == -2.0);
  SolverSolution sol =
      encode_assignment(m, capped, induce_decomposition(capped, best.s, best.p));
  IlpResult r = extract_result(m, sol, capped);
  CHECK(r.distance == 2);
  CHECK(r.siblingSet.pairs.empty());
  CHECK(r.decomposition.circularSingletons == 2);
}

TEST_CASE("model optimum matches the enumeration solver on the duplicated example") {
  auto [a, b] = duplicated_marker_example();
  Diagram capped = capped_of(a, b);
  IlpModel m = build_ilp(capped);
  Best best = best_encoded(m, capped);
  long viaModel = std::lround(m.nStar + m.pStar - best.objective);
  CHECK(viaModel == solve_by_enumeration(a, b).distance);
  CHECK(viaModel <= 7);

  // forcing one reference matching: the best capping reproduces its uncapped
  // score through the model objective
  SiblingSet center;
  for (auto [family, ia, ib] : std::vector<std::tuple<std::string, int, int>>{
           {"1", 0, 0}, {"2", 0, 0}, {"3", 0, 1}, {"3", 1, 0}, {"4", 1, 0}})
    center.pairs.push_back(capped.siblingPairId(family, ia, ib));
  std::sort(center.pairs.begin(), center.pairs.end());
  long bestForced = 0;
  bool first = true;
  for (const CapChoice& p : all_cap_choices(capped)) {
    ScoredDecomposition sd = induce_decomposition(capped, center, p);
    SolverSolution sol = encode_assignment(m, capped, sd);
    IlpResult r = extract_result(m, sol, capped);
    CHECK(r.distance == sd.distance);
    if (first || r.distance < bestForced) bestForced = r.distance;
    first = false;
  }
  CHECK(bestForced == induce_decomposition(build_mrd(a, b, census(a, b)), center).distance);
  CHECK(bestForced == 6);
}

TEST_CASE("LP text structure") {
  auto [a, b] = duplicated_marker_example();
  Diagram capped = capped_of(a, b);
  IlpModel m = build_ilp(capped);
  std::string text = write_lp(m);

  CHECK(text.find("Maximize\n obj: z_1 +") != std::string::npos);
  CHECK(text.find("Subject To\n") != std::string::npos);
  CHECK(text.find("- 0.5 t_e") != std::string::npos);
  // every z enters the objective with coefficient one
  std::string objLine = text.substr(text.find(" obj: "));
  objLine = objLine.substr(0, objLine.find('\n'));
  for (std::size_t at = objLine.find(" z_"); at != std::string::npos;
       at = objLine.find(" z_", at + 1))
    CHECK(!isdigit(static_cast<unsigned char>(objLine[at - 1])));

  LpStructure s = parse_lp_structure(text);
  CHECK(s.fingerprint == m.fingerprint);
  CHECK(s.constraintsByPrefix.at("deg") == static_cast<std::size_t>(m.vertexCount));
  CHECK(s.constraintsByPrefix.at("adj") ==
        static_cast<std::size_t>(m.countConstraints(ConstraintFamily::C01)));
  CHECK(s.constraintsByPrefix.at("lab") == 2 * static_cast<std::size_t>(m.edgeCount));
  CHECK(s.boundsLines.size() == static_cast<std::size_t>(m.vertexCount));
  for (const auto& v : m.variables) {
    if (v.kind != VarKind::CycleLabel) continue;
    std::string expect = "0 <= " + v.name + " <= " + std::to_string(v.upper);
    CHECK(std::find(s.boundsLines.begin(), s.boundsLines.end(), expect) != s.boundsLines.end());
  }
  std::size_t binaries = 0, generals = 0;
  for (const auto& v : m.variables) (v.binary ? binaries : generals)++;
  CHECK(s.binaries == binaries);
  CHECK(s.generals == generals);
  CHECK(s.objectiveTerms == m.objective.size());

  // serialization is deterministic and the fingerprint tracks the model
  CHECK(write_lp(m) == text);
  CHECK(build_ilp(capped).fingerprint == m.fingerprint);
  Genome a2 = genome("A", {circ("1")});
  Genome b2 = genome("B", {circ("1")});
  CHECK(build_ilp(capped_of(a2, b2)).fingerprint != m.fingerprint);
}

TEST_CASE("solution parsing") {
  Genome a = genome("A", {circ("1")});
  Genome b = genome("B", {circ("1")});
  Diagram capped = capped_of(a, b);
  IlpModel m = build_ilp(capped);

  SolverSolution sol = read_solution("x_e1 1\n# comment\nz_1 1\n", m);
  CHECK(sol.values.size() == 2);
  CHECK(sol.value("x_e1") == 1.0);
  CHECK(sol.value("x_e2") == 0.0);  // missing defaults to zero

  CHECK_THROWS_AS(read_solution("bogus 1\n", m), UnknownVariable);
  CHECK_THROWS_AS(read_solution("x_e1 pi\n", m), UnparsableValue);
  CHECK_THROWS_AS(read_solution("x_e1\n", m), UnparsableValue);

  // solver noise within tolerance rounds cleanly
  SiblingSet s;
  s.pairs.push_back(capped.siblingPairId("1", 0, 0));
  ScoredDecomposition sd = induce_decomposition(capped, s, CapChoice{{}});
  SolverSolution enc = encode_assignment(m, capped, sd);
  for (auto& [name, value] : enc.values)
    if (name[0] == 'x') value = 0.9999999;
  IlpResult r = extract_result(m, enc, capped);
  CHECK(r.distance == 0);
}

TEST_CASE("infeasible and inconsistent assignments are rejected") {
  Genome a = genome("A", {circ("1")});
  Genome b = genome("B", {circ("1")});
  Diagram capped = capped_of(a, b);
  IlpModel m = build_ilp(capped);
  SiblingSet s;
  s.pairs.push_back(capped.siblingPairId("1", 0, 0));
  ScoredDecomposition sd = induce_decomposition(capped, s, CapChoice{{}});

  // dropping one sibling edge violates the sibling-pair coupling
  SolverSolution broken = encode_assignment(m, capped, sd);
  broken.values["x_e3"] = 0;
  bool thrown = false;
  try {
    extract_result(m, broken, capped);
  } catch (const InfeasibleAssignment&) {
    thrown = true;
  }
  CHECK(thrown);

  // a value far from integral is rejected
  SolverSolution frac = encode_assignment(m, capped, sd);
  frac.values["x_e1"] = 0.6;
  CHECK_THROWS_AS(extract_result(m, frac, capped), InfeasibleAssignment);

  // losing the representative flag makes the objective disagree with the
  // rescored decomposition
  SolverSolution loose = encode_assignment(m, capped, sd);
  loose.values.erase("z_1");
  CHECK_THROWS_AS(extract_result(m, loose, capped), ScoreMismatch);
}

TEST_CASE("canonized and free transition placement have the same optimum") {
  InstanceFilter filter;
  filter.maxSiblingSets = 60;
  auto instances = simulated_instances(8, 2024, filter);
  for (auto& [a, b] : instances) {
    Diagram capped = capped_of(a, b);
    SiblingSetEnumerator en(capped);
    SiblingSet s;
    auto caps = all_cap_choices(capped);
    while (en.next(s)) {
      for (const CapChoice& p : caps) {
        ScoredDecomposition sd = induce_decomposition(capped, s, p);
        for (const Component& c : sd.components) {
          if (!c.isCycle) continue;
          int canonized = min_flips(capped, c, true, sd.selected);
          int free = min_flips(capped, c, false, sd.selected);
          CHECK(canonized == c.transitions);
          CHECK(free == c.transitions);
        }
      }
    }
  }
}

TEST_CASE("encoded assignments satisfy every constraint") {
  InstanceFilter filter;
  filter.maxSiblingSets = 40;
  for (auto& [a, b] : simulated_instances(6, 777, filter)) {
    Diagram capped = capped_of(a, b);
    IlpModel m = build_ilp(capped);
    SiblingSetEnumerator en(capped);
    SiblingSet s;
    auto caps = all_cap_choices(capped);
    while (en.next(s)) {
      for (const CapChoice& p : caps) {
        ScoredDecomposition sd = induce_decomposition(capped, s, p);
        SolverSolution sol = encode_assignment(m, capped, sd);
        IlpResult r = extract_result(m, sol, capped);  // validates all constraints
        CHECK(r.distance == sd.distance);
        CHECK(m.nStar + m.pStar - sol.objective == sd.distance);
      }
    }
  }
}

TEST_CASE("round trip through a solution dump") {
  auto [a, b] = duplicated_marker_example();
  Diagram capped = capped_of(a, b);
  IlpModel m = build_ilp(capped);
  Best best = best_encoded(m, capped);
  SolverSolution sol =
      encode_assignment(m, capped, induce_decomposition(capped, best.s, best.p));
  SolverSolution reread = read_solution(dump_solution(sol), m);
  IlpResult r = extract_result(m, reread, capped);
  CHECK(r.distance == 6);
}
