#include "dcjindel/diagram.hpp"

#include <algorithm>
#include <cassert>

#include "dcjindel/errors.hpp"

namespace dcj {

bool is_adjacency_like(EdgeKind k) {
  return k == EdgeKind::AdjacencyA || k == EdgeKind::AdjacencyB ||
         k == EdgeKind::ArtificialAdjacencyA || k == EdgeKind::ArtificialAdjacencyB;
}

bool is_indel(EdgeKind k) { return k == EdgeKind::IndelA || k == EdgeKind::IndelB; }

bool is_crossing(EdgeKind k) {
  return k == EdgeKind::Extremity || k == EdgeKind::CapExtremity;
}

GenomeSide indel_side(EdgeKind k) {
  assert(is_indel(k));
  return k == EdgeKind::IndelA ? GenomeSide::A : GenomeSide::B;
}

int Diagram::countEdges(EdgeKind k) const {
  int n = 0;
  for (const auto& e : edges)
    if (e.kind == k) ++n;
  return n;
}

std::map<std::string, std::vector<int>> Diagram::familyOccurrences(GenomeSide s) const {
  std::map<std::string, std::vector<int>> out;
  const auto& occs = occurrences(s);
  for (int i = 0; i < static_cast<int>(occs.size()); ++i) out[occs[i].family].push_back(i);
  return out;
}

int Diagram::siblingPairId(const std::string& family, int aOrdinal, int bOrdinal) const {
  auto occA = familyOccurrences(GenomeSide::A);
  auto occB = familyOccurrences(GenomeSide::B);
  int a = occA.at(family).at(aOrdinal);
  int b = occB.at(family).at(bOrdinal);
  for (const auto& p : siblingPairs)
    if (p.occurrenceA == a && p.occurrenceB == b) return p.id;
  throw InvalidSiblingSet("no sibling pair for family " + family);
}

CappingPlan capping_plan(const MarkerCensus& c) {
  CappingPlan plan;
  plan.pStar = std::max(c.kappaA, c.kappaB);
  plan.aStar = std::abs(c.kappaA - c.kappaB);
  if (c.kappaA < c.kappaB)
    plan.artificialSide = CappingPlan::Side::A;
  else if (c.kappaB < c.kappaA)
    plan.artificialSide = CappingPlan::Side::B;
  return plan;
}

namespace {

std::string side_name(GenomeSide s) { return s == GenomeSide::A ? "A" : "B"; }

struct Builder {
  Diagram d;

  int addVertex(DiagramVertex v) {
    v.id = static_cast<int>(d.vertices.size()) + 1;
    d.vertices.push_back(std::move(v));
    d.incident.emplace_back();
    return d.vertices.back().id;
  }

  int addEdge(int u, int v, EdgeKind kind) {
    DiagramEdge e;
    e.id = static_cast<int>(d.edges.size()) + 1;
    e.u = u;
    e.v = v;
    e.kind = kind;
    d.edges.push_back(e);
    d.incident[u - 1].push_back(e.id);
    d.incident[v - 1].push_back(e.id);
    return e.id;
  }

  // Vertices and adjacency edges of one genome, in reading order. For a
  // forward marker the tail is met first, for a reverse marker the head.
  void addGenome(const Genome& g, GenomeSide side) {
    auto& occs = side == GenomeSide::A ? d.occurrencesA : d.occurrencesB;
    EdgeKind adjKind = side == GenomeSide::A ? EdgeKind::AdjacencyA : EdgeKind::AdjacencyB;
    for (int ci = 0; ci < static_cast<int>(g.chromosomes.size()); ++ci) {
      const Chromosome& chrom = g.chromosomes[ci];
      int firstLeft = 0;
      int prevRight = 0;
      for (int pi = 0; pi < static_cast<int>(chrom.markers.size()); ++pi) {
        const Marker& m = chrom.markers[pi];
        Occurrence occ;
        occ.side = side;
        occ.chromosome = ci;
        occ.position = pi;
        occ.family = m.family;
        occ.orientation = m.orientation;
        int occIdx = static_cast<int>(occs.size());

        auto makeVertex = [&](ExtremityEnd end) {
          DiagramVertex v;
          v.side = side;
          v.occurrence = occIdx;
          v.end = end;
          v.label = side_name(side) + ":" + m.family +
                    (end == ExtremityEnd::Tail ? "t" : "h") + "@" + std::to_string(ci + 1) +
                    "." + std::to_string(pi + 1);
          return addVertex(std::move(v));
        };

        int left, right;
        if (m.orientation == Orientation::Forward) {
          int tail = makeVertex(ExtremityEnd::Tail);
          int head = makeVertex(ExtremityEnd::Head);
          occ.tailVertex = tail;
          occ.headVertex = head;
          left = tail;
          right = head;
        } else {
          int head = makeVertex(ExtremityEnd::Head);
          int tail = makeVertex(ExtremityEnd::Tail);
          occ.tailVertex = tail;
          occ.headVertex = head;
          left = head;
          right = tail;
        }
        occs.push_back(std::move(occ));
        if (pi == 0)
          firstLeft = left;
        else
          addEdge(prevRight, left, adjKind);
        prevRight = right;
      }
      if (chrom.topology == Topology::Circular) addEdge(prevRight, firstLeft, adjKind);
    }
  }

  void addExtremityEdges() {
    auto famA = d.familyOccurrences(GenomeSide::A);
    auto famB = d.familyOccurrences(GenomeSide::B);
    for (const auto& [family, aList] : famA) {
      auto itB = famB.find(family);
      if (itB == famB.end()) continue;
      for (int a : aList) {
        for (int b : itB->second) {
          SiblingPair pair;
          pair.id = static_cast<int>(d.siblingPairs.size()) + 1;
          pair.family = family;
          pair.occurrenceA = a;
          pair.occurrenceB = b;
          pair.tailEdge = addEdge(d.occurrencesA[a].tailVertex, d.occurrencesB[b].tailVertex,
                                  EdgeKind::Extremity);
          pair.headEdge = addEdge(d.occurrencesA[a].headVertex, d.occurrencesB[b].headVertex,
                                  EdgeKind::Extremity);
          d.edges[pair.tailEdge - 1].siblingPair = pair.id;
          d.edges[pair.headEdge - 1].siblingPair = pair.id;
          d.siblingPairs.push_back(pair);
        }
      }
    }
  }

  void addIndelEdges(GenomeSide side) {
    auto& occs = side == GenomeSide::A ? d.occurrencesA : d.occurrencesB;
    EdgeKind kind = side == GenomeSide::A ? EdgeKind::IndelA : EdgeKind::IndelB;
    for (auto& occ : occs) {
      const FamilyCount& fc = d.census.at(occ.family);
      int surplus = side == GenomeSide::A ? fc.occA - fc.occB : fc.occB - fc.occA;
      if (surplus > 0) occ.indelEdge = addEdge(occ.tailVertex, occ.headVertex, kind);
    }
  }

  void collectSingletonCandidates() {
    for (GenomeSide side : {GenomeSide::A, GenomeSide::B}) {
      const Genome& g = side == GenomeSide::A ? d.genomeA : d.genomeB;
      const auto& occs = d.occurrences(side);
      for (int ci = 0; ci < static_cast<int>(g.chromosomes.size()); ++ci) {
        if (g.chromosomes[ci].topology != Topology::Circular) continue;
        std::vector<int> indels;
        bool all = true;
        for (const auto& occ : occs) {
          if (occ.chromosome != ci) continue;
          if (occ.indelEdge < 0) {
            all = false;
            break;
          }
          indels.push_back(occ.indelEdge);
        }
        if (!all || indels.empty()) continue;
        SingletonCandidate k;
        k.side = side;
        k.chromosome = ci;
        k.chromosomeId = (side == GenomeSide::A ? 0 : static_cast<int>(d.genomeA.chromosomes.size())) +
                         ci + 1;
        k.indelEdges = std::move(indels);
        d.singletonCandidates.push_back(std::move(k));
      }
    }
  }
};

}  // namespace

Diagram build_mrd(const Genome& a, const Genome& b, const MarkerCensus& c) {
  Builder builder;
  builder.d.genomeA = a;
  builder.d.genomeB = b;
  builder.d.census = c;
  builder.addGenome(a, GenomeSide::A);
  builder.addGenome(b, GenomeSide::B);
  builder.addExtremityEdges();
  builder.addIndelEdges(GenomeSide::A);
  builder.addIndelEdges(GenomeSide::B);
  builder.collectSingletonCandidates();
  return std::move(builder.d);
}

Diagram build_relational_diagram(const Genome& a, const Genome& b, const MarkerCensus& c) {
  for (const auto& family : c.common) {
    const FamilyCount& fc = c.at(family);
    if (fc.occA != 1 || fc.occB != 1)
      throw NotSingular("common family '" + family + "' occurs " + std::to_string(fc.occA) +
                        "/" + std::to_string(fc.occB) + " times");
  }
  return build_mrd(a, b, c);
}

Diagram cap_mrd(const Diagram& d, const CappingPlan& plan) {
  if (d.capped) throw InvalidCapping("diagram is already capped");
  Diagram out = d;
  out.capped = true;
  out.pStar = plan.pStar;
  out.aStar = plan.aStar;
  if (plan.pStar == 0) return out;

  Builder builder;
  builder.d = std::move(out);

  auto addCaps = [&](GenomeSide side) {
    std::vector<int> capIds;
    for (int i = 1; i <= 2 * plan.pStar; ++i) {
      DiagramVertex v;
      v.side = side;
      v.isCap = true;
      v.capIndex = i;
      v.label = "cap" + side_name(side) + std::to_string(i);
      capIds.push_back(builder.addVertex(std::move(v)));
    }
    return capIds;
  };
  std::vector<int> capsA = addCaps(GenomeSide::A);
  std::vector<int> capsB = addCaps(GenomeSide::B);

  // one cap adjacency per telomere, in reading order
  auto capTelomeres = [&](GenomeSide side, const std::vector<int>& caps) {
    const Genome& g = side == GenomeSide::A ? builder.d.genomeA : builder.d.genomeB;
    const auto& occs = builder.d.occurrences(side);
    EdgeKind adjKind = side == GenomeSide::A ? EdgeKind::AdjacencyA : EdgeKind::AdjacencyB;
    int next = 0;
    for (int ci = 0; ci < static_cast<int>(g.chromosomes.size()); ++ci) {
      const Chromosome& chrom = g.chromosomes[ci];
      if (chrom.topology != Topology::Linear) continue;
      const Occurrence* first = nullptr;
      const Occurrence* last = nullptr;
      for (const auto& occ : occs) {
        if (occ.chromosome != ci) continue;
        if (!first || occ.position < first->position) first = &occ;
        if (!last || occ.position > last->position) last = &occ;
      }
      int leftVertex = first->orientation == Orientation::Forward ? first->tailVertex
                                                                  : first->headVertex;
      int rightVertex = last->orientation == Orientation::Forward ? last->headVertex
                                                                  : last->tailVertex;
      builder.addEdge(leftVertex, caps[next++], adjKind);
      builder.addEdge(rightVertex, caps[next++], adjKind);
    }
    return next;
  };
  int usedA = capTelomeres(GenomeSide::A, capsA);
  int usedB = capTelomeres(GenomeSide::B, capsB);

  // surplus caps of the genome with fewer linear chromosomes are paired off
  // by artificial adjacencies
  if (plan.artificialSide == CappingPlan::Side::A) {
    for (int i = usedA; i + 1 < 2 * plan.pStar; i += 2)
      builder.addEdge(capsA[i], capsA[i + 1], EdgeKind::ArtificialAdjacencyA);
  } else if (plan.artificialSide == CappingPlan::Side::B) {
    for (int j = usedB; j + 1 < 2 * plan.pStar; j += 2)
      builder.addEdge(capsB[j], capsB[j + 1], EdgeKind::ArtificialAdjacencyB);
  }

  for (int a : capsA)
    for (int b : capsB) builder.addEdge(a, b, EdgeKind::CapExtremity);

  return std::move(builder.d);
}

}  // namespace dcj
