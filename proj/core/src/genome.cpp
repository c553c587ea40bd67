#include "dcjindel/genome.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dcjindel/errors.hpp"

namespace dcj {

Marker reversed(const Marker& m) {
  return {m.family, m.orientation == Orientation::Forward ? Orientation::Reverse
                                                          : Orientation::Forward};
}

namespace {

std::vector<Marker> reverse_strand(const std::vector<Marker>& seq) {
  std::vector<Marker> out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(reversed(*it));
  return out;
}

std::vector<Marker> smallest_rotation(const std::vector<Marker>& seq) {
  std::vector<Marker> best = seq;
  std::vector<Marker> cur = seq;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

Chromosome Chromosome::linear(std::vector<Marker> markers) {
  return {Topology::Linear, std::move(markers)};
}

Chromosome Chromosome::circular(std::vector<Marker> markers) {
  std::vector<Marker> fwd = smallest_rotation(markers);
  std::vector<Marker> rev = smallest_rotation(reverse_strand(markers));
  return {Topology::Circular, fwd < rev ? std::move(fwd) : std::move(rev)};
}

std::size_t Genome::markerCount() const {
  std::size_t n = 0;
  for (const auto& c : chromosomes) n += c.size();
  return n;
}

int Genome::linearChromosomeCount() const {
  int n = 0;
  for (const auto& c : chromosomes)
    if (c.topology == Topology::Linear) ++n;
  return n;
}

const FamilyCount& MarkerCensus::at(const std::string& family) const {
  static const FamilyCount zero{};
  auto it = families.find(family);
  return it == families.end() ? zero : it->second;
}

MarkerCensus census(const Genome& a, const Genome& b) {
  MarkerCensus c;
  for (const auto& chrom : a.chromosomes)
    for (const auto& m : chrom.markers) c.families[m.family].occA++;
  for (const auto& chrom : b.chromosomes)
    for (const auto& m : chrom.markers) c.families[m.family].occB++;
  for (const auto& [family, count] : c.families) {
    if (count.occA > 0 && count.occB > 0) {
      c.common.insert(family);
      c.nStar += std::min(count.occA, count.occB);
    }
  }
  c.kappaA = a.linearChromosomeCount();
  c.kappaB = b.linearChromosomeCount();
  return c;
}

namespace {

bool valid_family(const std::string& f) {
  if (f.empty() || f.front() == '-') return false;
  return f.find_first_of("|)>") == std::string::npos;
}

struct Parser {
  std::istream& in;
  int lineNo = 0;

  std::vector<Genome> run() {
    std::vector<Genome> genomes;
    std::set<std::string> names;
    Genome* current = nullptr;
    std::vector<Marker> pending;
    int pendingLine = 0;

    std::string line;
    while (std::getline(in, line)) {
      ++lineNo;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream tokens(line);
      std::string tok;
      while (tokens >> tok) {
        if (tok.front() == '>') {
          if (!pending.empty())
            throw ParseError("unterminated chromosome before '" + tok + "'", lineNo);
          std::string name = tok.substr(1);
          // allow a space between '>' and the name
          if (name.empty() && tokens >> name) {}
          if (name.empty()) throw ParseError("missing genome name after '>'", lineNo);
          if (!names.insert(name).second)
            throw ParseError("duplicate genome name '" + name + "'", lineNo);
          genomes.push_back(Genome{name, {}});
          current = &genomes.back();
        } else if (tok == "|" || tok == ")") {
          if (current == nullptr) throw ParseError("chromosome before first genome", lineNo);
          if (pending.empty()) throw ParseError("empty chromosome", lineNo);
          current->chromosomes.push_back(tok == "|" ? Chromosome::linear(std::move(pending))
                                                    : Chromosome::circular(std::move(pending)));
          pending.clear();
        } else {
          if (current == nullptr) throw ParseError("marker before first genome", lineNo);
          if (pending.empty()) pendingLine = lineNo;
          Marker m;
          if (tok.front() == '-') {
            m.family = tok.substr(1);
            m.orientation = Orientation::Reverse;
          } else {
            m.family = tok;
          }
          if (!valid_family(m.family))
            throw ParseError("invalid marker token '" + tok + "'", lineNo);
          pending.push_back(std::move(m));
        }
      }
    }
    if (!pending.empty())
      throw ParseError("unterminated chromosome at end of input", pendingLine);
    return genomes;
  }
};

}  // namespace

std::vector<Genome> parse_genomes(std::istream& in) { return Parser{in}.run(); }

std::vector<Genome> parse_genomes(const std::string& text) {
  std::istringstream in(text);
  return parse_genomes(in);
}

std::vector<Genome> load_genomes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0);
  return parse_genomes(in);
}

void write_genomes(std::ostream& out, const std::vector<Genome>& genomes) {
  for (const auto& g : genomes) {
    out << '>' << g.name << '\n';
    for (const auto& chrom : g.chromosomes) {
      for (const auto& m : chrom.markers) {
        if (m.orientation == Orientation::Reverse) out << '-';
        out << m.family << ' ';
      }
      out << (chrom.topology == Topology::Linear ? "|" : ")") << '\n';
    }
  }
}

std::string to_string(const Genome& g) {
  std::ostringstream out;
  write_genomes(out, {g});
  return out.str();
}

}  // namespace dcj
