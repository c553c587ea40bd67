#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dcj {

enum class Orientation : std::uint8_t { Forward, Reverse };

// One oriented marker occurrence. The family is an arbitrary token: no
// whitespace, no '|' ')' '>' characters, no leading '-'.
struct Marker {
  std::string family;
  Orientation orientation = Orientation::Forward;

  bool operator==(const Marker&) const = default;
  bool operator<(const Marker& o) const {
    return family != o.family ? family < o.family : orientation < o.orientation;
  }
};

// Reverse complement of a marker: same family, flipped orientation.
Marker reversed(const Marker& m);

enum class Topology : std::uint8_t { Linear, Circular };

struct Chromosome {
  Topology topology = Topology::Linear;
  std::vector<Marker> markers;  // non-empty; canonical rotation for circulars

  // Circular chromosomes are rotation- and reflection-invariant, so the
  // constructor stores the lexicographically smallest reading of either
  // strand and plain equality is semantic equality.
  static Chromosome linear(std::vector<Marker> markers);
  static Chromosome circular(std::vector<Marker> markers);

  std::size_t size() const { return markers.size(); }
  bool operator==(const Chromosome&) const = default;
};

struct Genome {
  std::string name;
  std::vector<Chromosome> chromosomes;  // may be empty

  std::size_t markerCount() const;
  int linearChromosomeCount() const;
  bool operator==(const Genome&) const = default;
};

// Per-family occurrence counts for a genome pair.
struct FamilyCount {
  int occA = 0;
  int occB = 0;
  int delta() const { return occA - occB; }
};

struct MarkerCensus {
  std::map<std::string, FamilyCount> families;  // the full family set U
  std::set<std::string> common;                 // G: occA > 0 and occB > 0
  long nStar = 0;   // sum over G of min(occA, occB)
  int kappaA = 0;   // linear chromosomes in A
  int kappaB = 0;   // linear chromosomes in B

  const FamilyCount& at(const std::string& family) const;
  int delta(const std::string& family) const { return at(family).delta(); }
  bool isCommon(const std::string& family) const { return common.count(family) > 0; }
};

MarkerCensus census(const Genome& a, const Genome& b);

// Genome file format (UniMoG dialect):
//   >name        starts a genome
//   tokens       whitespace-separated signed markers; "-" prefix = reverse
//   |            ends a linear chromosome
//   )            ends a circular chromosome
//   #            comment until end of line
// Throws ParseError with a line number on malformed input.
std::vector<Genome> parse_genomes(std::istream& in);
std::vector<Genome> parse_genomes(const std::string& text);
std::vector<Genome> load_genomes(const std::string& path);

void write_genomes(std::ostream& out, const std::vector<Genome>& genomes);
std::string to_string(const Genome& g);

}  // namespace dcj
