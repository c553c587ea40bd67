#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dcjindel/genome.hpp"

namespace dcj {

// A cut position: the boundary before marker `boundary` of a chromosome.
// Linear chromosomes with k markers have boundaries 0..k (0 and k are the
// telomeres), circular ones 0..k-1.
struct CutPoint {
  int chromosome = 0;
  int boundary = 0;
};

// The two non-trivial rejoinings of the four open ends: Cross swaps the parts
// (translocation, fusion, fission, excision), Invert re-joins with one part
// reversed (inversion, reversed translocation or integration).
enum class JoinMode : std::uint8_t { Cross, Invert };

Genome apply_dcj(const Genome& g, CutPoint cut1, CutPoint cut2, JoinMode mode);

// Remove `length` markers starting at position `pos` (0-based); wraps around
// on circular chromosomes. A chromosome deleted empty disappears.
Genome apply_deletion(const Genome& g, int chromosome, int pos, int length);

// Splice `markers` at boundary `pos` of the chromosome.
Genome apply_insertion(const Genome& g, int chromosome, int pos,
                       const std::vector<Marker>& markers);

// Copy `length` markers starting at (srcChromosome, srcPos) and splice the
// copy, orientation preserved, at boundary (dstChromosome, dstPos).
Genome apply_duplication(const Genome& g, int srcChromosome, int srcPos, int length,
                         int dstChromosome, int dstPos);

struct SimConfig {
  long rootLength = 20000;           // marker occurrences in the root genome
  int chromosomeCount = 1;
  Topology topology = Topology::Linear;
  std::array<double, 2> edgeWeights = {0.0, 0.0};  // expected DCJs per branch
  double insertionRate = 0.1;        // expected insertions = weight * rate
  double deletionRate = 0.2;
  double duplicationRate = 0.0;
  double zipfIndel = 4.0;            // segment length exponent for indels
  double zipfDup = 6.0;              // segment length exponent for duplications
  std::uint64_t seed = 1;

  void validate() const;  // throws ConfigInvalid
};

struct SimEvent {
  enum class Type : std::uint8_t { Dcj, Duplication, Deletion, Insertion };
  Type type;
  int branch;  // 0 = branch to A, 1 = branch to B
  CutPoint cut1, cut2;          // DCJ
  JoinMode mode = JoinMode::Cross;
  int chromosome = 0, position = 0, length = 0;  // indels and duplications
  int dstChromosome = 0, dstPosition = 0;        // duplications
  std::string firstFamily;                       // insertions
};

std::string to_json(const SimEvent& e);

struct SimResult {
  Genome root;
  Genome a;
  Genome b;
  std::vector<SimEvent> events;

  int appliedDcj(int branch) const;
  int appliedIndels(int branch) const;
};

// Two-leaf evolution: Poisson event counts per branch (DCJs with the branch
// weight as mean, duplications/deletions/insertions with weight * rate),
// applied in the order DCJs, duplications, deletions, insertions; segment
// lengths Zipf-distributed, locations uniform over the genome; inserted
// markers get globally fresh families. Deterministic for a fixed seed.
SimResult simulate_pair(const SimConfig& cfg);

void write_event_log(std::ostream& out, const std::vector<SimEvent>& events);

}  // namespace dcj
