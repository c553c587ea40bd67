#include "dcjindel/sim.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dcjindel/errors.hpp"
#include "dcjindel/random.hpp"

namespace dcj {

namespace {

using Seq = std::vector<Marker>;

Seq reversed_seq(Seq s) {
  std::reverse(s.begin(), s.end());
  for (auto& m : s) m = reversed(m);
  return s;
}

Seq slice(const Seq& s, int from, int to) {  // [from, to)
  return Seq(s.begin() + from, s.begin() + to);
}

Seq concat(Seq a, const Seq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void check_chromosome(const Genome& g, int c) {
  if (c < 0 || c >= static_cast<int>(g.chromosomes.size()))
    throw InvalidLocation("chromosome " + std::to_string(c) + " out of range");
}

int boundary_count(const Chromosome& c) {
  return c.topology == Topology::Linear ? static_cast<int>(c.size()) + 1
                                        : static_cast<int>(c.size());
}

void check_cut(const Genome& g, CutPoint cut) {
  if (cut.chromosome < 0 || cut.chromosome >= static_cast<int>(g.chromosomes.size()))
    throw InvalidCut("cut chromosome out of range");
  const Chromosome& c = g.chromosomes[cut.chromosome];
  if (cut.boundary < 0 || cut.boundary >= boundary_count(c))
    throw InvalidCut("cut boundary out of range");
}

void push_chromosome(std::vector<Chromosome>& out, Topology topology, Seq seq) {
  if (seq.empty()) return;
  out.push_back(topology == Topology::Linear ? Chromosome::linear(std::move(seq))
                                             : Chromosome::circular(std::move(seq)));
}

}  // namespace

Genome apply_dcj(const Genome& g, CutPoint cut1, CutPoint cut2, JoinMode mode) {
  check_cut(g, cut1);
  check_cut(g, cut2);
  if (cut1.chromosome == cut2.chromosome && cut1.boundary == cut2.boundary)
    throw InvalidCut("cut positions must be distinct");

  Genome out;
  out.name = g.name;
  std::vector<Chromosome> result;

  if (cut1.chromosome == cut2.chromosome) {
    const Chromosome& c = g.chromosomes[cut1.chromosome];
    int p = std::min(cut1.boundary, cut2.boundary);
    int q = std::max(cut1.boundary, cut2.boundary);
    if (c.topology == Topology::Linear) {
      Seq left = slice(c.markers, 0, p);
      Seq mid = slice(c.markers, p, q);
      Seq right = slice(c.markers, q, static_cast<int>(c.size()));
      if (mode == JoinMode::Invert) {
        push_chromosome(result, Topology::Linear,
                        concat(concat(std::move(left), reversed_seq(mid)), right));
      } else {
        // excise the middle as a circular chromosome
        push_chromosome(result, Topology::Linear, concat(std::move(left), right));
        push_chromosome(result, Topology::Circular, std::move(mid));
      }
    } else {
      Seq arc1 = slice(c.markers, p, q);
      Seq arc2 = concat(slice(c.markers, q, static_cast<int>(c.size())),
                        slice(c.markers, 0, p));
      if (mode == JoinMode::Invert) {
        push_chromosome(result, Topology::Circular,
                        concat(reversed_seq(arc1), arc2));
      } else {
        // fission into two circulars
        push_chromosome(result, Topology::Circular, std::move(arc1));
        push_chromosome(result, Topology::Circular, std::move(arc2));
      }
    }
  } else {
    const Chromosome& c1 = g.chromosomes[cut1.chromosome];
    const Chromosome& c2 = g.chromosomes[cut2.chromosome];
    if (c1.topology == Topology::Linear && c2.topology == Topology::Linear) {
      Seq x1 = slice(c1.markers, 0, cut1.boundary);
      Seq y1 = slice(c1.markers, cut1.boundary, static_cast<int>(c1.size()));
      Seq x2 = slice(c2.markers, 0, cut2.boundary);
      Seq y2 = slice(c2.markers, cut2.boundary, static_cast<int>(c2.size()));
      if (mode == JoinMode::Cross) {
        push_chromosome(result, Topology::Linear, concat(std::move(x1), y2));
        push_chromosome(result, Topology::Linear, concat(std::move(x2), y1));
      } else {
        push_chromosome(result, Topology::Linear,
                        concat(std::move(x1), reversed_seq(x2)));
        push_chromosome(result, Topology::Linear,
                        concat(reversed_seq(y1), y2));
      }
    } else if (c1.topology == Topology::Circular && c2.topology == Topology::Circular) {
      Seq a = concat(slice(c1.markers, cut1.boundary, static_cast<int>(c1.size())),
                     slice(c1.markers, 0, cut1.boundary));
      Seq b = concat(slice(c2.markers, cut2.boundary, static_cast<int>(c2.size())),
                     slice(c2.markers, 0, cut2.boundary));
      push_chromosome(result, Topology::Circular,
                      mode == JoinMode::Cross ? concat(std::move(a), b)
                                              : concat(std::move(a), reversed_seq(b)));
    } else {
      // linear + circular: integrate the opened circular at the linear cut
      const bool firstLinear = c1.topology == Topology::Linear;
      const Chromosome& lin = firstLinear ? c1 : c2;
      const Chromosome& circ = firstLinear ? c2 : c1;
      CutPoint linCut = firstLinear ? cut1 : cut2;
      CutPoint circCut = firstLinear ? cut2 : cut1;
      Seq opened = concat(slice(circ.markers, circCut.boundary, static_cast<int>(circ.size())),
                          slice(circ.markers, 0, circCut.boundary));
      if (mode == JoinMode::Invert) opened = reversed_seq(opened);
      Seq left = slice(lin.markers, 0, linCut.boundary);
      Seq right = slice(lin.markers, linCut.boundary, static_cast<int>(lin.size()));
      push_chromosome(result, Topology::Linear,
                      concat(concat(std::move(left), opened), right));
    }
  }

  for (int i = 0; i < static_cast<int>(g.chromosomes.size()); ++i)
    if (i != cut1.chromosome && i != cut2.chromosome) result.push_back(g.chromosomes[i]);
  out.chromosomes = std::move(result);
  return out;
}

Genome apply_deletion(const Genome& g, int chromosome, int pos, int length) {
  check_chromosome(g, chromosome);
  const Chromosome& c = g.chromosomes[chromosome];
  int k = static_cast<int>(c.size());
  if (length < 1 || length > k) throw InvalidLocation("deletion length out of range");
  if (pos < 0 || pos >= k) throw InvalidLocation("deletion position out of range");
  if (c.topology == Topology::Linear && pos + length > k)
    throw InvalidLocation("deletion runs past the chromosome end");

  Genome out = g;
  if (length == k) {
    out.chromosomes.erase(out.chromosomes.begin() + chromosome);
    return out;
  }
  Seq kept;
  if (pos + length <= k) {
    kept = concat(slice(c.markers, 0, pos), slice(c.markers, pos + length, k));
  } else {  // circular wrap
    int wrap = pos + length - k;
    kept = slice(c.markers, wrap, pos);
  }
  out.chromosomes[chromosome] = c.topology == Topology::Linear
                                    ? Chromosome::linear(std::move(kept))
                                    : Chromosome::circular(std::move(kept));
  return out;
}

Genome apply_insertion(const Genome& g, int chromosome, int pos,
                       const std::vector<Marker>& markers) {
  check_chromosome(g, chromosome);
  if (markers.empty()) throw InvalidLocation("insertion of length 0");
  const Chromosome& c = g.chromosomes[chromosome];
  if (pos < 0 || pos > static_cast<int>(c.size()) ||
      (c.topology == Topology::Circular && pos == static_cast<int>(c.size())))
    throw InvalidLocation("insertion position out of range");

  Seq seq = c.markers;
  seq.insert(seq.begin() + pos, markers.begin(), markers.end());
  Genome out = g;
  out.chromosomes[chromosome] = c.topology == Topology::Linear
                                    ? Chromosome::linear(std::move(seq))
                                    : Chromosome::circular(std::move(seq));
  return out;
}

Genome apply_duplication(const Genome& g, int srcChromosome, int srcPos, int length,
                         int dstChromosome, int dstPos) {
  check_chromosome(g, srcChromosome);
  const Chromosome& src = g.chromosomes[srcChromosome];
  int k = static_cast<int>(src.size());
  if (length < 1 || length > k) throw InvalidLocation("duplication length out of range");
  if (srcPos < 0 || srcPos >= k) throw InvalidLocation("duplication source out of range");
  if (src.topology == Topology::Linear && srcPos + length > k)
    throw InvalidLocation("duplication runs past the chromosome end");

  Seq copy;
  if (srcPos + length <= k) {
    copy = slice(src.markers, srcPos, srcPos + length);
  } else {
    copy = concat(slice(src.markers, srcPos, k), slice(src.markers, 0, srcPos + length - k));
  }
  return apply_insertion(g, dstChromosome, dstPos, copy);
}

void SimConfig::validate() const {
  if (rootLength < 1) throw ConfigInvalid("root length must be positive");
  if (chromosomeCount < 1 || chromosomeCount > rootLength)
    throw ConfigInvalid("chromosome count must be in [1, root length]");
  if (edgeWeights[0] < 0 || edgeWeights[1] < 0) throw ConfigInvalid("negative edge weight");
  if (insertionRate < 0 || deletionRate < 0 || duplicationRate < 0)
    throw ConfigInvalid("negative rate");
  if (zipfIndel <= 1.0 || zipfDup <= 1.0) throw ConfigInvalid("zipf exponents must exceed 1");
}

namespace {

struct Simulator {
  const SimConfig& cfg;
  Rng rng;
  ZipfSampler indelLength;
  ZipfSampler dupLength;
  long nextFamily;
  std::vector<SimEvent>* log;

  Simulator(const SimConfig& c, std::vector<SimEvent>* events)
      : cfg(c), rng(c.seed), indelLength(c.zipfIndel), dupLength(c.zipfDup),
        nextFamily(c.rootLength + 1), log(events) {}

  Genome makeRoot() const {
    Genome root;
    root.name = "root";
    long next = 1;
    for (int c = 0; c < cfg.chromosomeCount; ++c) {
      long size = cfg.rootLength / cfg.chromosomeCount +
                  (c < cfg.rootLength % cfg.chromosomeCount ? 1 : 0);
      Seq seq;
      for (long i = 0; i < size; ++i)
        seq.push_back({std::to_string(next++), Orientation::Forward});
      if (cfg.topology == Topology::Linear)
        root.chromosomes.push_back(Chromosome::linear(std::move(seq)));
      else
        root.chromosomes.push_back(Chromosome::circular(std::move(seq)));
    }
    return root;
  }

  long totalBoundaries(const Genome& g) const {
    long n = 0;
    for (const auto& c : g.chromosomes) n += boundary_count(c);
    return n;
  }

  CutPoint nthBoundary(const Genome& g, long n) const {
    for (int c = 0; c < static_cast<int>(g.chromosomes.size()); ++c) {
      int b = boundary_count(g.chromosomes[c]);
      if (n < b) return {c, static_cast<int>(n)};
      n -= b;
    }
    throw std::logic_error("boundary index out of range");
  }

  // position index over all marker positions of the genome
  std::pair<int, int> nthPosition(const Genome& g, long n) const {
    for (int c = 0; c < static_cast<int>(g.chromosomes.size()); ++c) {
      long k = static_cast<long>(g.chromosomes[c].size());
      if (n < k) return {c, static_cast<int>(n)};
      n -= k;
    }
    throw std::logic_error("position index out of range");
  }

  void applyDcjs(Genome& g, int branch, long count) {
    for (long i = 0; i < count; ++i) {
      long boundaries = totalBoundaries(g);
      if (boundaries < 2) return;
      CutPoint cut1 = nthBoundary(g, static_cast<long>(rng.below(boundaries)));
      CutPoint cut2;
      do {
        cut2 = nthBoundary(g, static_cast<long>(rng.below(boundaries)));
      } while (cut1.chromosome == cut2.chromosome && cut1.boundary == cut2.boundary);
      JoinMode mode = rng.below(2) == 0 ? JoinMode::Cross : JoinMode::Invert;
      g = apply_dcj(g, cut1, cut2, mode);
      SimEvent e;
      e.type = SimEvent::Type::Dcj;
      e.branch = branch;
      e.cut1 = cut1;
      e.cut2 = cut2;
      e.mode = mode;
      log->push_back(e);
    }
  }

  void applyDuplications(Genome& g, int branch, long count) {
    for (long i = 0; i < count; ++i) {
      long positions = static_cast<long>(g.markerCount());
      if (positions == 0) return;
      auto [srcChrom, srcPos] = nthPosition(g, static_cast<long>(rng.below(positions)));
      const Chromosome& src = g.chromosomes[srcChrom];
      int avail = src.topology == Topology::Linear
                      ? static_cast<int>(src.size()) - srcPos
                      : static_cast<int>(src.size());
      int len = std::min(dupLength.sample(rng), avail);
      long slots = totalBoundaries(g);
      CutPoint dst = nthBoundary(g, static_cast<long>(rng.below(slots)));
      g = apply_duplication(g, srcChrom, srcPos, len, dst.chromosome, dst.boundary);
      SimEvent e;
      e.type = SimEvent::Type::Duplication;
      e.branch = branch;
      e.chromosome = srcChrom;
      e.position = srcPos;
      e.length = len;
      e.dstChromosome = dst.chromosome;
      e.dstPosition = dst.boundary;
      log->push_back(e);
    }
  }

  void applyDeletions(Genome& g, int branch, long count) {
    for (long i = 0; i < count; ++i) {
      long positions = static_cast<long>(g.markerCount());
      if (positions == 0) return;
      auto [chrom, pos] = nthPosition(g, static_cast<long>(rng.below(positions)));
      const Chromosome& c = g.chromosomes[chrom];
      int avail = c.topology == Topology::Linear ? static_cast<int>(c.size()) - pos
                                                 : static_cast<int>(c.size());
      int len = std::min(indelLength.sample(rng), avail);
      g = apply_deletion(g, chrom, pos, len);
      SimEvent e;
      e.type = SimEvent::Type::Deletion;
      e.branch = branch;
      e.chromosome = chrom;
      e.position = pos;
      e.length = len;
      log->push_back(e);
    }
  }

  void applyInsertions(Genome& g, int branch, long count) {
    for (long i = 0; i < count; ++i) {
      if (g.chromosomes.empty()) return;
      int len = indelLength.sample(rng);
      Seq fresh;
      std::string first = std::to_string(nextFamily);
      for (int j = 0; j < len; ++j)
        fresh.push_back({std::to_string(nextFamily++), Orientation::Forward});
      long slots = totalBoundaries(g);
      CutPoint dst = nthBoundary(g, static_cast<long>(rng.below(slots)));
      g = apply_insertion(g, dst.chromosome, dst.boundary, fresh);
      SimEvent e;
      e.type = SimEvent::Type::Insertion;
      e.branch = branch;
      e.chromosome = dst.chromosome;
      e.position = dst.boundary;
      e.length = len;
      e.firstFamily = first;
      log->push_back(e);
    }
  }

  Genome evolve(const Genome& root, int branch) {
    double w = cfg.edgeWeights[branch];
    long nDcj = rng.poisson(w);
    long nDup = rng.poisson(w * cfg.duplicationRate);
    long nDel = rng.poisson(w * cfg.deletionRate);
    long nIns = rng.poisson(w * cfg.insertionRate);
    Genome g = root;
    g.name = branch == 0 ? "A" : "B";
    applyDcjs(g, branch, nDcj);
    applyDuplications(g, branch, nDup);
    applyDeletions(g, branch, nDel);
    applyInsertions(g, branch, nIns);
    return g;
  }
};

}  // namespace

std::string to_json(const SimEvent& e) {
  std::ostringstream out;
  out << "{\"branch\":\"" << (e.branch == 0 ? "A" : "B") << "\",";
  switch (e.type) {
    case SimEvent::Type::Dcj:
      out << "\"type\":\"dcj\",\"cut1\":[" << e.cut1.chromosome << ',' << e.cut1.boundary
          << "],\"cut2\":[" << e.cut2.chromosome << ',' << e.cut2.boundary << "],\"join\":\""
          << (e.mode == JoinMode::Cross ? "cross" : "invert") << '"';
      break;
    case SimEvent::Type::Duplication:
      out << "\"type\":\"duplication\",\"src\":[" << e.chromosome << ',' << e.position
          << "],\"length\":" << e.length << ",\"dst\":[" << e.dstChromosome << ','
          << e.dstPosition << ']';
      break;
    case SimEvent::Type::Deletion:
      out << "\"type\":\"deletion\",\"at\":[" << e.chromosome << ',' << e.position
          << "],\"length\":" << e.length;
      break;
    case SimEvent::Type::Insertion:
      out << "\"type\":\"insertion\",\"at\":[" << e.chromosome << ',' << e.position
          << "],\"length\":" << e.length << ",\"firstFamily\":\"" << e.firstFamily << '"';
      break;
  }
  out << '}';
  return out.str();
}

int SimResult::appliedDcj(int branch) const {
  int n = 0;
  for (const auto& e : events)
    if (e.branch == branch && e.type == SimEvent::Type::Dcj) ++n;
  return n;
}

int SimResult::appliedIndels(int branch) const {
  int n = 0;
  for (const auto& e : events)
    if (e.branch == branch && e.type != SimEvent::Type::Dcj) ++n;
  return n;
}

SimResult simulate_pair(const SimConfig& cfg) {
  cfg.validate();
  SimResult result;
  Simulator sim(cfg, &result.events);
  result.root = sim.makeRoot();
  result.a = sim.evolve(result.root, 0);
  result.b = sim.evolve(result.root, 1);
  return result;
}

void write_event_log(std::ostream& out, const std::vector<SimEvent>& events) {
  for (const auto& e : events) out << to_json(e) << '\n';
}

}  // namespace dcj
