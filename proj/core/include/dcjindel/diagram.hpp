#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcjindel/genome.hpp"

namespace dcj {

enum class GenomeSide : std::uint8_t { A, B };

enum class ExtremityEnd : std::uint8_t { Tail, Head };

enum class EdgeKind : std::uint8_t {
  AdjacencyA,
  AdjacencyB,
  ArtificialAdjacencyA,
  ArtificialAdjacencyB,
  Extremity,
  IndelA,
  IndelB,
  CapExtremity,
};

bool is_adjacency_like(EdgeKind k);          // adjacency or artificial adjacency
bool is_indel(EdgeKind k);
bool is_crossing(EdgeKind k);                // extremity or cap extremity
GenomeSide indel_side(EdgeKind k);           // IndelA -> A, IndelB -> B

// One marker occurrence of one genome, in reading order.
struct Occurrence {
  GenomeSide side;
  int chromosome = 0;  // index within its genome
  int position = 0;    // index within its chromosome
  std::string family;
  Orientation orientation = Orientation::Forward;
  int tailVertex = 0;
  int headVertex = 0;
  int indelEdge = -1;  // set iff the family is over-represented on this side
};

struct DiagramVertex {
  int id = 0;  // 1-based; doubles as the ILP vertex identifier
  GenomeSide side;
  bool isCap = false;
  int occurrence = -1;  // index into occurrences(side); -1 for caps
  ExtremityEnd end = ExtremityEnd::Tail;
  int capIndex = -1;  // 1-based cap ordinal within its genome
  std::string label;  // e.g. "A:3t@1.2" or "capA1"; for reports and metadata
};

struct DiagramEdge {
  int id = 0;  // 1-based; deterministic construction order
  int u = 0;
  int v = 0;  // vertex ids, u < v except where construction order differs
  EdgeKind kind;
  int siblingPair = -1;  // extremity edges only
};

// Head and tail extremity edge of one candidate occurrence pair; selected
// together or not at all.
struct SiblingPair {
  int id = 0;  // 1-based
  std::string family;
  int occurrenceA = 0;  // index into occurrences A
  int occurrenceB = 0;
  int tailEdge = 0;  // edge ids
  int headEdge = 0;
};

// A circular chromosome all of whose occurrences carry indel edges; the only
// chromosomes that can decompose into circular singletons.
struct SingletonCandidate {
  int chromosomeId = 0;  // global: A chromosomes first, then B, 1-based
  GenomeSide side;
  int chromosome = 0;          // index within its genome
  std::vector<int> indelEdges;  // one per occurrence
};

// The relational diagram of singular genomes and the multi-relational diagram
// of natural genomes share this representation; the capped variant appends cap
// vertices and their edges. Vertex ids follow reading order: genome A first,
// per occurrence the extremity met first when reading left to right, then
// genome B, then caps of A, then caps of B.
struct Diagram {
  Genome genomeA;
  Genome genomeB;
  MarkerCensus census;

  std::vector<DiagramVertex> vertices;
  std::vector<DiagramEdge> edges;
  std::vector<std::vector<int>> incident;  // vertex id -> incident edge ids
  std::vector<Occurrence> occurrencesA;
  std::vector<Occurrence> occurrencesB;
  std::vector<SiblingPair> siblingPairs;
  std::vector<SingletonCandidate> singletonCandidates;

  bool capped = false;
  int pStar = 0;
  int aStar = 0;

  const DiagramVertex& vertex(int id) const { return vertices[id - 1]; }
  const DiagramEdge& edge(int id) const { return edges[id - 1]; }
  const std::vector<Occurrence>& occurrences(GenomeSide s) const {
    return s == GenomeSide::A ? occurrencesA : occurrencesB;
  }
  int vertexCount() const { return static_cast<int>(vertices.size()); }
  int edgeCount() const { return static_cast<int>(edges.size()); }
  int countEdges(EdgeKind k) const;

  // occurrence indices per family, in reading order
  std::map<std::string, std::vector<int>> familyOccurrences(GenomeSide s) const;
  // sibling pair id for (family, a-th A occurrence, b-th B occurrence), 0-based ordinals
  int siblingPairId(const std::string& family, int aOrdinal, int bOrdinal) const;
};

struct CappingPlan {
  int pStar = 0;
  int aStar = 0;
  enum class Side : std::uint8_t { A, B, None } artificialSide = Side::None;
};

CappingPlan capping_plan(const MarkerCensus& c);

// Multi-relational diagram: all-pairs extremity edges per common family, one
// indel edge per occurrence of every over-represented family.
Diagram build_mrd(const Genome& a, const Genome& b, const MarkerCensus& c);

// Relational diagram of singular genomes. Throws NotSingular if any common
// family occurs more than once in either genome.
Diagram build_relational_diagram(const Genome& a, const Genome& b, const MarkerCensus& c);

// Append 4*pStar cap vertices, cap adjacencies for every telomere, artificial
// adjacencies pairing surplus caps on the deficient side, and the complete
// bipartite cap extremity edges.
Diagram cap_mrd(const Diagram& d, const CappingPlan& plan);

}  // namespace dcj
