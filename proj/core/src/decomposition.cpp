#include "dcjindel/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dcjindel/errors.hpp"

namespace dcj {

std::string SiblingSet::describe(const Diagram& d) const {
  std::map<std::string, std::vector<std::pair<int, int>>> byFamily;
  for (int pid : pairs) {
    const SiblingPair& p = d.siblingPairs[pid - 1];
    const Occurrence& a = d.occurrencesA[p.occurrenceA];
    const Occurrence& b = d.occurrencesB[p.occurrenceB];
    byFamily[p.family].push_back({a.chromosome * 1000000 + a.position,
                                  b.chromosome * 1000000 + b.position});
  }
  std::ostringstream out;
  bool firstFam = true;
  for (auto& [family, list] : byFamily) {
    std::sort(list.begin(), list.end());
    if (!firstFam) out << "; ";
    firstFam = false;
    out << family << ":";
    for (auto [a, b] : list)
      out << " A" << a / 1000000 + 1 << "." << a % 1000000 + 1 << "->B" << b / 1000000 + 1
          << "." << b % 1000000 + 1;
  }
  return out.str();
}

void validate_sibling_set(const Diagram& d, const SiblingSet& s) {
  std::vector<char> usedA(d.occurrencesA.size(), 0);
  std::vector<char> usedB(d.occurrencesB.size(), 0);
  std::map<std::string, int> matchedPerFamily;
  for (int pid : s.pairs) {
    if (pid < 1 || pid > static_cast<int>(d.siblingPairs.size()))
      throw InvalidSiblingSet("sibling pair id " + std::to_string(pid) + " out of range");
    const SiblingPair& p = d.siblingPairs[pid - 1];
    if (usedA[p.occurrenceA] || usedB[p.occurrenceB])
      throw InvalidSiblingSet("incident sibling pairs on family " + p.family);
    usedA[p.occurrenceA] = 1;
    usedB[p.occurrenceB] = 1;
    matchedPerFamily[p.family]++;
  }
  for (const auto& family : d.census.common) {
    const FamilyCount& fc = d.census.at(family);
    int expected = std::min(fc.occA, fc.occB);
    auto it = matchedPerFamily.find(family);
    int got = it == matchedPerFamily.end() ? 0 : it->second;
    if (got != expected)
      throw InvalidSiblingSet("family " + family + " matches " + std::to_string(got) +
                              " pairs, maximality requires " + std::to_string(expected));
  }
}

namespace {

std::vector<int> cap_vertices(const Diagram& d, GenomeSide side) {
  std::vector<int> out;
  for (const auto& v : d.vertices)
    if (v.isCap && v.side == side) out.push_back(v.id);
  return out;
}

void score_uncapped(const Diagram& d, ScoredDecomposition& sd) {
  for (const Component& c : sd.components) {
    sd.sumLambda += indel_potential(c.runCount);
    if (c.kind == ComponentKind::ABCycle) ++sd.abCycles;
    if (c.kind == ComponentKind::ABPath) ++sd.abPaths;
  }
  sd.tally = greedy_delta(tally_paths(sd.components));
  // w = c + i/2 - sum(lambda) + delta
  sd.weightTimesTwo = 2 * sd.abCycles + sd.abPaths - 2 * sd.sumLambda + 2 * sd.tally.delta;
  long d2 = 2 * d.census.nStar - sd.weightTimesTwo;
  sd.distance = d2 / 2;
}

void score_capped(const Diagram& d, ScoredDecomposition& sd) {
  for (const Component& c : sd.components) {
    if (!c.isCycle) throw std::logic_error("capped decomposition contains a path");
    if (c.isCircularSingleton) {
      ++sd.circularSingletons;
    } else {
      ++sd.abCycles;
      if (c.runCount == 0) ++sd.indelFreeCycles;
    }
    sd.transitions += c.transitions;
    sd.sumLambda += indel_potential(c.runCount);
  }
  // w = c-tilde - aleph/2 - s
  sd.weightTimesTwo = 2 * sd.indelFreeCycles - sd.transitions - 2 * sd.circularSingletons;
  long d2 = 2 * (d.census.nStar + d.pStar) - sd.weightTimesTwo;
  sd.distance = d2 / 2;
}

}  // namespace

ScoredDecomposition induce_decomposition(const Diagram& d, const SiblingSet& s,
                                         const std::optional<CapChoice>& capChoice) {
  validate_sibling_set(d, s);
  if (d.capped != capChoice.has_value())
    throw InvalidCapping(d.capped ? "capped diagram requires a cap matching"
                                  : "cap matching given for an uncapped diagram");

  ScoredDecomposition sd;
  sd.capped = d.capped;
  sd.selected.assign(d.edges.size(), 0);
  std::vector<int> degree(d.vertices.size(), 0);
  auto select = [&](int eid) {
    sd.selected[eid - 1] = 1;
    degree[d.edge(eid).u - 1]++;
    degree[d.edge(eid).v - 1]++;
  };

  for (const auto& e : d.edges)
    if (is_adjacency_like(e.kind)) select(e.id);
  for (int pid : s.pairs) {
    select(d.siblingPairs[pid - 1].tailEdge);
    select(d.siblingPairs[pid - 1].headEdge);
  }

  if (capChoice) {
    std::vector<int> capsA = cap_vertices(d, GenomeSide::A);
    std::vector<int> capsB = cap_vertices(d, GenomeSide::B);
    const std::vector<int>& perm = capChoice->capsB;
    if (perm.size() != capsA.size())
      throw InvalidCapping("cap matching has wrong size");
    std::vector<char> seen(capsB.size(), 0);
    for (int b : perm) {
      if (b < 0 || b >= static_cast<int>(capsB.size()) || seen[b])
        throw InvalidCapping("cap matching is not a permutation");
      seen[b] = 1;
    }
    // cap extremity edges were added A-cap major, B-cap minor
    int firstCapEdge = -1;
    for (const auto& e : d.edges)
      if (e.kind == EdgeKind::CapExtremity) {
        firstCapEdge = e.id;
        break;
      }
    int n = static_cast<int>(capsB.size());
    for (int i = 0; i < n; ++i) select(firstCapEdge + i * n + perm[i]);
  }

  // an indel edge materializes when both its endpoints are still free
  for (const auto& e : d.edges) {
    if (!is_indel(e.kind)) continue;
    if (degree[e.u - 1] <= 1 && degree[e.v - 1] <= 1) select(e.id);
  }

  sd.components = decompose_selection(d, sd.selected);
  if (d.capped)
    score_capped(d, sd);
  else
    score_uncapped(d, sd);
  return sd;
}

std::vector<CapChoice> all_cap_choices(const Diagram& d) {
  if (!d.capped) throw InvalidCapping("diagram is not capped");
  int n = 2 * d.pStar;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CapChoice> out;
  do {
    out.push_back(CapChoice{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (out.empty()) out.push_back(CapChoice{{}});
  return out;
}

}  // namespace dcj
