#include <doctest.h>

#include <sstream>

#include "dcjindel/errors.hpp"
#include "dcjindel/genome.hpp"
#include "dcjindel/sim.hpp"
#include "test_support.hpp"

using namespace dcj;
using namespace dcj::testing;

TEST_CASE("parse two linear genomes") {
  auto genomes = parse_genomes(">A\n1 3 2 -5 -4 3 5 4 |\n>B\n1 6 2 3 1 7 3 4 1 3 |\n");
  REQUIRE(genomes.size() == 2);
  CHECK(genomes[0].name == "A");
  REQUIRE(genomes[0].chromosomes.size() == 1);
  CHECK(genomes[0].chromosomes[0].topology == Topology::Linear);
  CHECK(genomes[0].markerCount() == 8);
  CHECK(genomes[1].markerCount() == 10);
  CHECK(genomes[0].chromosomes[0].markers[3] == Marker{"5", Orientation::Reverse});
  CHECK(genomes[0].chromosomes[0].markers[2] == Marker{"2", Orientation::Forward});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_genomes(">X\n)\n"), ParseError);
  try {
    parse_genomes(">X\n)\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  // unterminated chromosome
  CHECK_THROWS_AS(parse_genomes(">A\n1 2\n>B\n3 |\n"), ParseError);
  CHECK_THROWS_AS(parse_genomes(">A\n1 2 |\n3\n"), ParseError);
  // duplicate genome name
  CHECK_THROWS_AS(parse_genomes(">A\n1 |\n>A\n2 |\n"), ParseError);
  // reserved characters inside tokens
  CHECK_THROWS_AS(parse_genomes(">A\na|b |\n"), ParseError);
  CHECK_THROWS_AS(parse_genomes(">A\n--x |\n"), ParseError);
  CHECK_THROWS_AS(parse_genomes(">A\n- |\n"), ParseError);
  // markers before any genome
  CHECK_THROWS_AS(parse_genomes("1 2 |\n"), ParseError);
}

TEST_CASE("single circular chromosome and comments") {
  auto genomes = parse_genomes("# header comment\n>C\n6 ) # trailing\n");
  REQUIRE(genomes.size() == 1);
  REQUIRE(genomes[0].chromosomes.size() == 1);
  CHECK(genomes[0].chromosomes[0].topology == Topology::Circular);
  CHECK(genomes[0].chromosomes[0].size() == 1);
}

TEST_CASE("empty genomes are legal") {
  auto genomes = parse_genomes(">A\n>B\n1 |\n");
  REQUIRE(genomes.size() == 2);
  CHECK(genomes[0].chromosomes.empty());
  CHECK(genomes[1].chromosomes.size() == 1);
}

TEST_CASE("circular chromosomes are stored canonically") {
  CHECK(circ("1 3 2") == circ("3 2 1"));
  CHECK(circ("1 3 2") == circ("2 1 3"));
  // reading the other strand: reverse order, flip signs
  CHECK(circ("1 3 2") == circ("-2 -3 -1"));
  CHECK(circ("1 2") != circ("1 -2"));
  CHECK(circ("1 2 3") != circ("1 3 2"));
}

TEST_CASE("census of the duplicated-marker example") {
  auto [a, b] = duplicated_marker_example();
  MarkerCensus c = census(a, b);
  CHECK(c.delta("1") == -2);
  CHECK(c.delta("2") == 0);
  CHECK(c.delta("3") == -1);
  CHECK(c.delta("4") == 1);
  CHECK(c.delta("5") == 2);
  CHECK(c.delta("6") == -1);
  CHECK(c.delta("7") == -1);
  CHECK(c.nStar == 5);
  CHECK(c.kappaA == 1);
  CHECK(c.kappaB == 1);
  CHECK(c.common == std::set<std::string>{"1", "2", "3", "4"});
  CHECK(c.families.size() == 7);
}

TEST_CASE("census of a genome against itself") {
  auto [a, b] = duplicated_marker_example();
  MarkerCensus c = census(a, a);
  long total = 0;
  for (const auto& [family, fc] : c.families) {
    CHECK(fc.delta() == 0);
    total += fc.occA;
  }
  CHECK(total == static_cast<long>(a.markerCount()));
  CHECK(c.nStar == total);
}

TEST_CASE("census antisymmetry and nStar symmetry") {
  InstanceFilter filter;
  filter.maxSiblingSets = UINT64_MAX;
  filter.maxOccurrencesPerGenome = 40;
  for (auto& [a, b] : simulated_instances(10, 77, filter)) {
    MarkerCensus ab = census(a, b);
    MarkerCensus ba = census(b, a);
    CHECK(ab.nStar == ba.nStar);
    CHECK(ab.kappaA == ba.kappaB);
    for (const auto& [family, fc] : ab.families)
      CHECK(fc.delta() == -ba.at(family).delta());
  }
}

TEST_CASE("parse-serialize-parse round trip") {
  SimConfig cfg;
  cfg.rootLength = 30;
  cfg.chromosomeCount = 3;
  cfg.topology = Topology::Circular;
  cfg.edgeWeights = {4, 4};
  cfg.duplicationRate = 0.3;
  cfg.seed = 5;
  SimResult r = simulate_pair(cfg);

  std::ostringstream out;
  write_genomes(out, {r.a, r.b});
  auto reparsed = parse_genomes(out.str());
  REQUIRE(reparsed.size() == 2);
  CHECK(reparsed[0] == r.a);
  CHECK(reparsed[1] == r.b);

  std::ostringstream out2;
  write_genomes(out2, reparsed);
  CHECK(out.str() == out2.str());
}
