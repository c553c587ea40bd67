#include "cli.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcjindel/decomposition.hpp"
#include "dcjindel/enumerate.hpp"
#include "dcjindel/errors.hpp"
#include "dcjindel/ilp.hpp"
#include "dcjindel/sim.hpp"
#include "dcjindel/singular.hpp"

namespace dcj {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPartialMatrix = 4;

std::vector<Genome> load_exactly_two(const std::string& path) {
  std::vector<Genome> genomes = load_genomes(path);
  if (genomes.size() != 2)
    throw ParseError("expected exactly 2 genomes, found " + std::to_string(genomes.size()), 0);
  return genomes;
}

bool is_singular_pair(const MarkerCensus& c) {
  for (const auto& family : c.common) {
    const FamilyCount& fc = c.at(family);
    if (fc.occA != 1 || fc.occB != 1) return false;
  }
  return true;
}

int cmd_census(const std::string& path, bool tsv, std::ostream& out) {
  std::vector<Genome> genomes = load_exactly_two(path);
  MarkerCensus c = census(genomes[0], genomes[1]);
  const char* sep = tsv ? "\t" : "  ";
  out << "family" << sep << "occA" << sep << "occB" << sep << "delta\n";
  for (const auto& [family, fc] : c.families)
    out << family << sep << fc.occA << sep << fc.occB << sep << fc.delta() << '\n';
  out << "nStar" << sep << c.nStar << '\n';
  out << "kappaA" << sep << c.kappaA << '\n';
  out << "kappaB" << sep << c.kappaB << '\n';
  return kExitOk;
}

void write_ilp_files(const Genome& a, const Genome& b, const std::string& outPath,
                     std::ostream& out) {
  MarkerCensus c = census(a, b);
  Diagram capped = cap_mrd(build_mrd(a, b, c), capping_plan(c));
  IlpModel model = build_ilp(capped);

  std::ofstream lp(outPath);
  if (!lp) throw std::runtime_error("cannot write " + outPath);
  write_lp(model, lp);

  nlohmann::json meta;
  meta["fingerprint"] = model.fingerprint;
  meta["nstar"] = model.nStar;
  meta["pstar"] = model.pStar;
  meta["genomes"] = {a.name, b.name};
  meta["vertices"] = model.vertexCount;
  meta["edges"] = model.edgeCount;
  nlohmann::json vlabels = nlohmann::json::array();
  for (const auto& v : capped.vertices) vlabels.push_back(v.label);
  meta["vertexLabels"] = std::move(vlabels);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : capped.edges)
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"kind", static_cast<int>(e.kind)}});
  meta["edgeTable"] = std::move(edges);

  std::ofstream metaOut(outPath + ".meta.json");
  if (!metaOut) throw std::runtime_error("cannot write " + outPath + ".meta.json");
  metaOut << meta.dump(2) << '\n';

  out << "wrote " << outPath << " (" << model.constraints.size() << " constraints, "
      << model.variables.size() << " variables)\n";
  out << "wrote " << outPath << ".meta.json\n";
  out << "next: solve with a MILP solver, dump 'name value' lines, then run\n";
  out << "  dcjindel solve-file <genomes> --sol <solution> --lp " << outPath << '\n';
}

int cmd_dist(const std::string& path, const std::string& mode, std::uint64_t budget,
             const std::string& lpOut, std::ostream& out) {
  std::vector<Genome> genomes = load_exactly_two(path);
  const Genome& a = genomes[0];
  const Genome& b = genomes[1];
  MarkerCensus c = census(a, b);

  std::string effective = mode;
  if (mode == "auto") {
    if (is_singular_pair(c)) {
      effective = "formula";
    } else {
      Diagram d = build_mrd(a, b, c);
      SiblingSetEnumerator en(d);
      effective = en.totalCount() <= budget ? "oracle" : "ilp";
    }
  }

  if (effective == "formula") {
    SingularBreakdown r = singular_distance(a, b);
    out << "distance " << r.distance << '\n';
    out << "mode formula\n";
    out << "common " << r.commonFamilies << '\n';
    out << "breakdown c=" << r.abCycles << " i=" << r.abPaths << " sum_lambda=" << r.sumLambda
        << " delta=" << r.tally.delta << '\n';
    return kExitOk;
  }
  if (effective == "oracle") {
    EnumerationResult r = solve_by_enumeration(a, b, budget);
    Diagram d = build_mrd(a, b, c);
    out << "distance " << r.distance << '\n';
    out << "mode oracle\n";
    out << "nstar " << c.nStar << '\n';
    out << "breakdown c=" << r.score.abCycles << " i=" << r.score.abPaths
        << " sum_lambda=" << r.score.sumLambda << " delta=" << r.score.tally.delta << '\n';
    out << "sibling_sets " << r.enumerated << '\n';
    out << "matching " << r.best.describe(d) << '\n';
    return kExitOk;
  }
  if (effective == "ilp") {
    out << "mode ilp\n";
    write_ilp_files(a, b, lpOut, out);
    return kExitOk;
  }
  throw std::runtime_error("unknown mode " + effective);
}

int cmd_ilp(const std::string& path, const std::string& outPath, std::ostream& out) {
  std::vector<Genome> genomes = load_exactly_two(path);
  write_ilp_files(genomes[0], genomes[1], outPath, out);
  return kExitOk;
}

int cmd_solve_file(const std::string& path, const std::string& solPath,
                   const std::string& lpPath, std::ostream& out) {
  std::vector<Genome> genomes = load_exactly_two(path);
  MarkerCensus c = census(genomes[0], genomes[1]);
  Diagram capped = cap_mrd(build_mrd(genomes[0], genomes[1], c), capping_plan(c));
  IlpModel model = build_ilp(capped);

  if (!lpPath.empty()) {
    std::ifstream lp(lpPath);
    if (!lp) throw std::runtime_error("cannot read " + lpPath);
    LpStructure s = parse_lp_structure(lp);
    if (s.fingerprint != model.fingerprint)
      throw FingerprintMismatch("model rebuilt from '" + path + "' has fingerprint " +
                                model.fingerprint + " but " + lpPath + " carries " +
                                s.fingerprint);
  }

  std::ifstream sol(solPath);
  if (!sol) throw std::runtime_error("cannot read " + solPath);
  SolverSolution solution = read_solution(sol, model);
  IlpResult r = extract_result(model, solution, capped);

  out << "distance " << r.distance << '\n';
  out << "mode ilp\n";
  out << "objective " << r.objective << '\n';
  out << "nstar " << model.nStar << " pstar " << model.pStar << '\n';
  out << "breakdown indel_free_cycles=" << r.decomposition.indelFreeCycles
      << " transitions=" << r.decomposition.transitions
      << " singletons=" << r.decomposition.circularSingletons << '\n';
  out << "matching " << r.siblingSet.describe(capped) << '\n';
  return kExitOk;
}

struct PairResult {
  bool ok = false;
  long distance = 0;
};

int cmd_matrix(const std::string& path, const std::string& mode, std::uint64_t budget,
               int jobs, std::ostream& out, std::ostream& err) {
  std::vector<Genome> genomes = load_genomes(path);
  if (genomes.size() < 2)
    throw ParseError("matrix needs at least 2 genomes, found " + std::to_string(genomes.size()),
                     0);
  int k = static_cast<int>(genomes.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < k; ++i)
    for (int j = 0; j < i; ++j) pairs.push_back({i, j});

  std::vector<PairResult> results(pairs.size());
  std::vector<std::string> errors(pairs.size());
  std::atomic<std::size_t> cursor{0};

  auto worker = [&] {
    while (true) {
      std::size_t at = cursor.fetch_add(1);
      if (at >= pairs.size()) return;
      auto [i, j] = pairs[at];
      try {
        MarkerCensus c = census(genomes[i], genomes[j]);
        bool singular = is_singular_pair(c);
        std::string effective = mode;
        if (mode == "auto") effective = singular ? "formula" : "oracle";
        if (effective == "formula") {
          results[at] = {true, singular_distance(genomes[i], genomes[j]).distance};
        } else {
          results[at] = {true, solve_by_enumeration(genomes[i], genomes[j], budget).distance};
        }
      } catch (const std::exception& e) {
        errors[at] = e.what();
      }
    }
  };

  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(pairs.size())));
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  bool anyFailed = false;
  out << std::setw(5) << k << '\n';
  std::size_t at = 0;
  for (int i = 0; i < k; ++i) {
    std::string name = genomes[i].name.substr(0, 10);
    out << name << std::string(name.size() < 10 ? 10 - name.size() : 1, ' ');
    for (int j = 0; j < i; ++j, ++at) {
      if (j > 0) out << ' ';
      if (results[at].ok) {
        out << results[at].distance;
      } else {
        out << "NA";
        anyFailed = true;
        err << "pair " << genomes[i].name << "/" << genomes[j].name << ": " << errors[at]
            << '\n';
      }
    }
    out << '\n';
  }
  return anyFailed ? kExitPartialMatrix : kExitOk;
}

int cmd_sim(const SimConfig& cfg, const std::string& outPath, const std::string& logPath,
            std::ostream& out) {
  SimResult r = simulate_pair(cfg);

  std::ofstream genomeOut(outPath);
  if (!genomeOut) throw std::runtime_error("cannot write " + outPath);
  genomeOut << "# seed=" << cfg.seed << " root_length=" << cfg.rootLength << " dcj=("
            << cfg.edgeWeights[0] << "," << cfg.edgeWeights[1] << ")"
            << " rates=(ins=" << cfg.insertionRate << ",del=" << cfg.deletionRate
            << ",dup=" << cfg.duplicationRate << ")\n";
  write_genomes(genomeOut, {r.a, r.b});

  if (!logPath.empty()) {
    std::ofstream logOut(logPath);
    if (!logOut) throw std::runtime_error("cannot write " + logPath);
    write_event_log(logOut, r.events);
  }

  out << "seed " << cfg.seed << '\n';
  out << "wrote " << outPath << '\n';
  if (!logPath.empty()) out << "wrote " << logPath << '\n';
  out << "events dcjA=" << r.appliedDcj(0) << " dcjB=" << r.appliedDcj(1)
      << " indelA=" << r.appliedIndels(0) << " indelB=" << r.appliedIndels(1) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DCJ-indel rearrangement distance of genomes with duplicate and exclusive "
               "markers"};
  app.require_subcommand(1);

  std::string file, mode = "auto", lpOut = "model.lp", solPath, lpPath;
  std::uint64_t budget = 1000000;
  bool tsv = false;
  int jobs = 0;

  auto* censusCmd = app.add_subcommand("census", "per-family occurrence table");
  censusCmd->add_option("file", file)->required();
  censusCmd->add_flag("--tsv", tsv, "tab-separated output");

  auto* distCmd = app.add_subcommand("dist", "DCJ-indel distance of two genomes");
  distCmd->add_option("file", file)->required();
  distCmd->add_option("--mode", mode)->check(CLI::IsMember({"auto", "formula", "oracle", "ilp"}));
  distCmd->add_option("--budget", budget, "max sibling sets for the oracle");
  distCmd->add_option("--out", lpOut, "LP output path for ilp mode");

  auto* ilpCmd = app.add_subcommand("ilp", "write the ILP in LP format");
  ilpCmd->add_option("file", file)->required();
  ilpCmd->add_option("--out", lpOut)->required();

  auto* solveCmd = app.add_subcommand("solve-file", "validate a solver assignment");
  solveCmd->add_option("file", file)->required();
  solveCmd->add_option("--sol", solPath)->required();
  solveCmd->add_option("--lp", lpPath, "check the fingerprint of this LP file");

  std::string matrixMode = "auto";
  auto* matrixCmd = app.add_subcommand("matrix", "pairwise PHYLIP distance matrix");
  matrixCmd->add_option("file", file)->required();
  matrixCmd->add_option("--mode", matrixMode)->check(CLI::IsMember({"auto", "formula", "oracle"}));
  matrixCmd->add_option("--budget", budget);
  matrixCmd->add_option("--jobs", jobs, "worker threads (default: hardware)");

  SimConfig cfg;
  std::string simOut, simLog;
  double dcjBoth = -1, ratesAll = -1;
  bool circular = false;
  auto* simCmd = app.add_subcommand("sim", "simulate a genome pair");
  simCmd->add_option("--out", simOut)->required();
  simCmd->add_option("--log", simLog, "JSON-lines event log");
  simCmd->add_option("-n,--markers", cfg.rootLength, "root genome length");
  simCmd->add_option("--chromosomes", cfg.chromosomeCount);
  simCmd->add_flag("--circular", circular, "circular root chromosomes");
  simCmd->add_option("--dcj", dcjBoth, "expected DCJs on both branches");
  simCmd->add_option("--dcj-a", cfg.edgeWeights[0]);
  simCmd->add_option("--dcj-b", cfg.edgeWeights[1]);
  simCmd->add_option("--rates", ratesAll, "set all three rates at once");
  simCmd->add_option("--ins-rate", cfg.insertionRate);
  simCmd->add_option("--del-rate", cfg.deletionRate);
  simCmd->add_option("--dup-rate", cfg.duplicationRate);
  simCmd->add_option("--zipf-indel", cfg.zipfIndel);
  simCmd->add_option("--zipf-dup", cfg.zipfDup);
  simCmd->add_option("--seed", cfg.seed);

  std::vector<const char*> argv;
  argv.push_back("dcjindel");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    int code = app.exit(e, usage, usage);
    (code == 0 ? out : err) << usage.str();
    return code;
  }

  try {
    if (censusCmd->parsed()) return cmd_census(file, tsv, out);
    if (distCmd->parsed()) return cmd_dist(file, mode, budget, lpOut, out);
    if (ilpCmd->parsed()) return cmd_ilp(file, lpOut, out);
    if (solveCmd->parsed()) return cmd_solve_file(file, solPath, lpPath, out);
    if (matrixCmd->parsed()) return cmd_matrix(file, matrixMode, budget, jobs, out, err);
    if (simCmd->parsed()) {
      if (circular) cfg.topology = Topology::Circular;
      if (dcjBoth >= 0) cfg.edgeWeights = {dcjBoth, dcjBoth};
      if (ratesAll >= 0) {
        cfg.insertionRate = ratesAll;
        cfg.deletionRate = ratesAll;
        cfg.duplicationRate = ratesAll;
      }
      return cmd_sim(cfg, simOut, simLog, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UnknownVariable& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UnparsableValue& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    err << "sibling_sets " << e.count() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace dcj
