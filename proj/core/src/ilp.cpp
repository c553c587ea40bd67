#include "dcjindel/ilp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

#include "dcjindel/errors.hpp"

namespace dcj {

const char* family_label(ConstraintFamily f) {
  switch (f) {
    case ConstraintFamily::C01: return "adj";
    case ConstraintFamily::C02: return "deg";
    case ConstraintFamily::C03: return "sib";
    case ConstraintFamily::C04: return "lab";
    case ConstraintFamily::C05: return "zero";
    case ConstraintFamily::C06: return "rep";
    case ConstraintFamily::C07: return "run";
    case ConstraintFamily::C08: return "tra";
    case ConstraintFamily::C09: return "can";
    case ConstraintFamily::C10: return "tz";
    case ConstraintFamily::C11: return "sing";
  }
  return "?";
}

int IlpModel::varIndex(const std::string& name) const {
  auto it = variableIndex.find(name);
  if (it == variableIndex.end()) throw UnknownVariable(name);
  return it->second;
}

int IlpModel::countConstraints(ConstraintFamily f) const {
  int n = 0;
  for (const auto& c : constraints)
    if (c.family == f) ++n;
  return n;
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string model_fingerprint(const IlpModel& m) {
  std::uint64_t h = 1469598103934665603ULL;
  std::ostringstream buf;
  for (const auto& v : m.variables)
    buf << v.name << '/' << v.lower << ':' << v.upper << (v.binary ? "b" : "i") << ';';
  for (const auto& c : m.constraints) {
    buf << c.label << ':';
    for (const auto& t : c.terms) buf << t.coefficient << '*' << t.var << '+';
    buf << c.sense << c.rhs << ';';
  }
  for (const auto& t : m.objective) buf << t.coefficient << '*' << t.var << '+';
  buf << m.nStar << '/' << m.pStar;
  h = fnv1a(h, buf.str());
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

struct ModelBuilder {
  const Diagram& d;
  IlpModel m;
  std::vector<int> xVar, yVar, zVar, rVar, tVar;  // by edge/vertex id - 1
  std::map<int, int> sVar;                        // chromosome id -> var index

  explicit ModelBuilder(const Diagram& diagram) : d(diagram) {}

  int addVar(IlpVariable v) {
    int idx = static_cast<int>(m.variables.size());
    m.variableIndex[v.name] = idx;
    m.variables.push_back(std::move(v));
    return idx;
  }

  void addVariables() {
    xVar.resize(d.edges.size());
    tVar.resize(d.edges.size());
    yVar.resize(d.vertices.size());
    zVar.resize(d.vertices.size());
    rVar.resize(d.vertices.size());
    for (const auto& e : d.edges)
      xVar[e.id - 1] =
          addVar({"x_e" + std::to_string(e.id), VarKind::EdgeSelect, true, 0, 1, e.id});
    for (const auto& v : d.vertices)
      yVar[v.id - 1] =
          addVar({"y_" + std::to_string(v.id), VarKind::CycleLabel, false, 0, v.id, v.id});
    for (const auto& v : d.vertices)
      zVar[v.id - 1] =
          addVar({"z_" + std::to_string(v.id), VarKind::Representative, true, 0, 1, v.id});
    for (const auto& v : d.vertices)
      rVar[v.id - 1] = addVar({"r_" + std::to_string(v.id), VarKind::RunLabel, true, 0, 1, v.id});
    for (const auto& e : d.edges)
      tVar[e.id - 1] =
          addVar({"t_e" + std::to_string(e.id), VarKind::Transition, true, 0, 1, e.id});
    for (const auto& k : d.singletonCandidates)
      sVar[k.chromosomeId] = addVar({"s_k" + std::to_string(k.chromosomeId), VarKind::Singleton,
                                     true, 0, 1, k.chromosomeId});
  }

  void add(ConstraintFamily f, const std::string& label, std::vector<LinearTerm> terms,
           char sense, double rhs) {
    m.constraints.push_back({label, f, std::move(terms), sense, rhs});
  }

  void build() {
    addVariables();
    const double one = 1.0;

    // C.01: adjacency and artificial adjacency edges are always selected
    for (const auto& e : d.edges)
      if (is_adjacency_like(e.kind))
        add(ConstraintFamily::C01, "adj_e" + std::to_string(e.id),
            {{one, xVar[e.id - 1]}}, '=', 1);

    // C.02: degree 2 at every vertex
    for (const auto& v : d.vertices) {
      std::vector<LinearTerm> terms;
      for (int eid : d.incident[v.id - 1]) terms.push_back({one, xVar[eid - 1]});
      add(ConstraintFamily::C02, "deg_" + std::to_string(v.id), std::move(terms), '=', 2);
    }

    // C.03: siblings are selected together
    for (const auto& p : d.siblingPairs)
      add(ConstraintFamily::C03, "sib_p" + std::to_string(p.id),
          {{one, xVar[p.tailEdge - 1]}, {-one, xVar[p.headEdge - 1]}}, '=', 0);

    // C.04: y_u <= y_v + u (1 - x_e), both orientations
    for (const auto& e : d.edges) {
      add(ConstraintFamily::C04, "lab_e" + std::to_string(e.id) + "_f",
          {{one, yVar[e.u - 1]}, {-one, yVar[e.v - 1]}, {double(e.u), xVar[e.id - 1]}}, '<',
          e.u);
      add(ConstraintFamily::C04, "lab_e" + std::to_string(e.id) + "_r",
          {{one, yVar[e.v - 1]}, {-one, yVar[e.u - 1]}, {double(e.v), xVar[e.id - 1]}}, '<',
          e.v);
    }

    // C.05: a selected indel edge zeroes the cycle label at both endpoints
    for (const auto& e : d.edges) {
      if (!is_indel(e.kind)) continue;
      add(ConstraintFamily::C05, "zero_e" + std::to_string(e.id) + "_f",
          {{one, yVar[e.u - 1]}, {double(e.u), xVar[e.id - 1]}}, '<', e.u);
      add(ConstraintFamily::C05, "zero_e" + std::to_string(e.id) + "_r",
          {{one, yVar[e.v - 1]}, {double(e.v), xVar[e.id - 1]}}, '<', e.v);
    }

    // C.06: i z_i <= y_i
    for (const auto& v : d.vertices)
      add(ConstraintFamily::C06, "rep_" + std::to_string(v.id),
          {{double(v.id), zVar[v.id - 1]}, {-one, yVar[v.id - 1]}}, '<', 0);

    // C.07: selected A-indel endpoints are labeled 0, B-indel endpoints 1
    for (const auto& e : d.edges) {
      if (!is_indel(e.kind)) continue;
      const char* ab = e.kind == EdgeKind::IndelA ? "runa_e" : "runb_e";
      if (e.kind == EdgeKind::IndelA) {
        add(ConstraintFamily::C07, ab + std::to_string(e.id) + "_f",
            {{one, rVar[e.u - 1]}, {one, xVar[e.id - 1]}}, '<', 1);
        add(ConstraintFamily::C07, ab + std::to_string(e.id) + "_r",
            {{one, rVar[e.v - 1]}, {one, xVar[e.id - 1]}}, '<', 1);
      } else {
        add(ConstraintFamily::C07, ab + std::to_string(e.id) + "_f",
            {{one, rVar[e.u - 1]}, {-one, xVar[e.id - 1]}}, '>', 0);
        add(ConstraintFamily::C07, ab + std::to_string(e.id) + "_r",
            {{one, rVar[e.v - 1]}, {-one, xVar[e.id - 1]}}, '>', 0);
      }
    }

    // C.08: t_e >= r_v - r_u - (1 - x_e), both orientations
    for (const auto& e : d.edges) {
      add(ConstraintFamily::C08, "tra_e" + std::to_string(e.id) + "_f",
          {{one, tVar[e.id - 1]},
           {-one, rVar[e.v - 1]},
           {one, rVar[e.u - 1]},
           {-one, xVar[e.id - 1]}},
          '>', -1);
      add(ConstraintFamily::C08, "tra_e" + std::to_string(e.id) + "_r",
          {{one, tVar[e.id - 1]},
           {-one, rVar[e.u - 1]},
           {one, rVar[e.v - 1]},
           {-one, xVar[e.id - 1]}},
          '>', -1);
    }

    // C.09: a transition needs a selected indel edge on one of its endpoints
    for (const auto& e : d.edges) {
      if (e.kind != EdgeKind::AdjacencyA && e.kind != EdgeKind::ArtificialAdjacencyA) continue;
      std::vector<LinearTerm> terms;
      for (int vid : {e.u, e.v})
        for (int eid : d.incident[vid - 1])
          if (d.edge(eid).kind == EdgeKind::IndelA) terms.push_back({one, xVar[eid - 1]});
      terms.push_back({-one, tVar[e.id - 1]});
      add(ConstraintFamily::C09, "can_e" + std::to_string(e.id), std::move(terms), '>', 0);
    }

    // C.10: transitions are observed on adjacencies of genome A only
    for (const auto& e : d.edges) {
      if (e.kind == EdgeKind::AdjacencyA || e.kind == EdgeKind::ArtificialAdjacencyA) continue;
      add(ConstraintFamily::C10, "tz_e" + std::to_string(e.id), {{one, tVar[e.id - 1]}}, '=',
          0);
    }

    // C.11: all indel edges of a circular chromosome selected -> singleton
    for (const auto& k : d.singletonCandidates) {
      std::vector<LinearTerm> terms;
      for (int eid : k.indelEdges) terms.push_back({one, xVar[eid - 1]});
      terms.push_back({-one, sVar.at(k.chromosomeId)});
      add(ConstraintFamily::C11, "sing_k" + std::to_string(k.chromosomeId), std::move(terms),
          '<', static_cast<double>(k.indelEdges.size()) - 1);
    }

    for (const auto& v : d.vertices) m.objective.push_back({1.0, zVar[v.id - 1]});
    for (const auto& e : d.edges) m.objective.push_back({-0.5, tVar[e.id - 1]});
    for (const auto& [chromId, varIdx] : sVar) m.objective.push_back({-1.0, varIdx});

    m.nStar = d.census.nStar;
    m.pStar = d.pStar;
    m.vertexCount = d.vertexCount();
    m.edgeCount = d.edgeCount();
    m.fingerprint = model_fingerprint(m);
  }
};

std::string format_coefficient(double c) {
  if (c == static_cast<long>(c)) return std::to_string(static_cast<long>(c));
  std::ostringstream out;
  out << c;
  return out.str();
}

void write_terms(std::ostream& out, const IlpModel& m, const std::vector<LinearTerm>& terms) {
  bool first = true;
  for (const auto& t : terms) {
    double c = t.coefficient;
    if (first) {
      if (c < 0) out << "- ";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    double mag = std::abs(c);
    if (mag != 1.0) out << format_coefficient(mag) << ' ';
    out << m.variables[t.var].name;
  }
  if (first) out << '0';
}

}  // namespace

IlpModel build_ilp(const Diagram& capped) {
  if (!capped.capped) throw InvalidCapping("build_ilp requires a capped diagram");
  ModelBuilder builder(capped);
  builder.build();
  return std::move(builder.m);
}

void write_lp(const IlpModel& m, std::ostream& out) {
  out << "\\ DCJ-indel cycle decomposition ILP\n";
  out << "\\ fingerprint=" << m.fingerprint << "\n";
  out << "\\ nstar=" << m.nStar << " pstar=" << m.pStar << " distance=nstar+pstar-objective\n";
  out << "Maximize\n obj: ";
  write_terms(out, m, m.objective);
  out << "\nSubject To\n";
  for (const auto& c : m.constraints) {
    out << ' ' << c.label << ": ";
    write_terms(out, m, c.terms);
    out << ' ' << (c.sense == '<' ? "<=" : c.sense == '>' ? ">=" : "=") << ' '
        << format_coefficient(c.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const auto& v : m.variables)
    if (v.kind == VarKind::CycleLabel)
      out << ' ' << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
  out << "Binaries\n";
  int onLine = 0;
  for (const auto& v : m.variables) {
    if (!v.binary) continue;
    out << ' ' << v.name;
    if (++onLine % 10 == 0) out << '\n';
  }
  if (onLine % 10 != 0) out << '\n';
  out << "Generals\n";
  onLine = 0;
  for (const auto& v : m.variables) {
    if (v.binary) continue;
    out << ' ' << v.name;
    if (++onLine % 10 == 0) out << '\n';
  }
  if (onLine % 10 != 0) out << '\n';
  out << "End\n";
}

std::string write_lp(const IlpModel& m) {
  std::ostringstream out;
  write_lp(m, out);
  return out.str();
}

LpStructure parse_lp_structure(std::istream& in) {
  LpStructure s;
  enum Section { None, Objective, Constraints, Bounds, Binaries, Generals, Done };
  Section section = None;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '\\') {
      auto pos = line.find("fingerprint=");
      if (pos != std::string::npos) s.fingerprint = line.substr(pos + 12);
      continue;
    }
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed == "Maximize") { section = Objective; continue; }
    if (trimmed == "Subject To") { section = Constraints; continue; }
    if (trimmed == "Bounds") { section = Bounds; continue; }
    if (trimmed == "Binaries") { section = Binaries; continue; }
    if (trimmed == "Generals") { section = Generals; continue; }
    if (trimmed == "End") { section = Done; continue; }

    switch (section) {
      case Objective: {
        std::istringstream toks(trimmed);
        std::string tok;
        while (toks >> tok)
          if (tok != "obj:" && tok != "+" && tok != "-" &&
              tok.find_first_not_of("0123456789.") != std::string::npos)
            ++s.objectiveTerms;
        break;
      }
      case Constraints: {
        auto colon = trimmed.find(':');
        if (colon == std::string::npos) break;
        std::string label = trimmed.substr(0, colon);
        auto us = label.find('_');
        std::string prefix = us == std::string::npos ? label : label.substr(0, us);
        s.constraintsByPrefix[prefix]++;
        break;
      }
      case Bounds:
        s.boundsLines.push_back(trimmed);
        break;
      case Binaries: {
        std::istringstream toks(trimmed);
        std::string tok;
        while (toks >> tok) ++s.binaries;
        break;
      }
      case Generals: {
        std::istringstream toks(trimmed);
        std::string tok;
        while (toks >> tok) ++s.generals;
        break;
      }
      default:
        break;
    }
  }
  return s;
}

LpStructure parse_lp_structure(const std::string& text) {
  std::istringstream in(text);
  return parse_lp_structure(in);
}

SolverSolution read_solution(std::istream& in, const IlpModel& m) {
  SolverSolution sol;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream toks(line);
    std::string name, valueText;
    if (!(toks >> name)) continue;
    if (!(toks >> valueText)) throw UnparsableValue("missing value for '" + name + "'");
    std::string extra;
    if (toks >> extra) throw UnparsableValue("trailing token '" + extra + "'");
    m.varIndex(name);  // throws UnknownVariable
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(valueText, &used);
    } catch (const std::exception&) {
      throw UnparsableValue(valueText);
    }
    if (used != valueText.size()) throw UnparsableValue(valueText);
    sol.values[name] = value;
  }
  // objective at this assignment
  for (const auto& t : m.objective) sol.objective += t.coefficient * sol.value(m.variables[t.var].name);
  return sol;
}

SolverSolution read_solution(const std::string& text, const IlpModel& m) {
  std::istringstream in(text);
  return read_solution(in, m);
}

namespace {

constexpr double kIntegerTolerance = 0.1;
constexpr double kFeasibilityEps = 1e-6;

// x, z, r, t, s snap to integers; y stays as given (its integrality is implied
// at integral x).
std::vector<double> rounded_values(const IlpModel& m, const SolverSolution& sol) {
  std::vector<double> v(m.variables.size(), 0.0);
  for (std::size_t i = 0; i < m.variables.size(); ++i) {
    const IlpVariable& var = m.variables[i];
    double raw = sol.value(var.name);
    if (var.kind == VarKind::CycleLabel) {
      if (raw < var.lower - kIntegerTolerance || raw > var.upper + kIntegerTolerance)
        throw InfeasibleAssignment(var.name + " = " + std::to_string(raw) +
                                   " is out of bounds");
      v[i] = raw;
      continue;
    }
    double nearest = std::round(raw);
    if (std::abs(raw - nearest) > kIntegerTolerance)
      throw InfeasibleAssignment(var.name + " = " + std::to_string(raw) +
                                 " is not integral");
    v[i] = nearest;
    if (nearest < var.lower - 0.5 || nearest > var.upper + 0.5)
      throw InfeasibleAssignment(var.name + " = " + std::to_string(raw) + " is out of bounds");
  }
  return v;
}

void check_constraints(const IlpModel& m, const std::vector<double>& v) {
  for (const auto& c : m.constraints) {
    double lhs = 0;
    for (const auto& t : c.terms) lhs += t.coefficient * v[t.var];
    bool ok = c.sense == '<'   ? lhs <= c.rhs + kFeasibilityEps
              : c.sense == '>' ? lhs >= c.rhs - kFeasibilityEps
                               : std::abs(lhs - c.rhs) <= kFeasibilityEps;
    if (!ok)
      throw InfeasibleAssignment("constraint " + c.label + " violated: lhs=" +
                                 std::to_string(lhs));
  }
}

}  // namespace

IlpResult extract_result(const IlpModel& m, const SolverSolution& sol, const Diagram& capped) {
  std::vector<double> v = rounded_values(m, sol);
  check_constraints(m, v);

  IlpResult result;
  std::set<int> pairIds;
  std::map<int, int> capMatch;  // A-cap ordinal -> B-cap ordinal
  for (const auto& var : m.variables) {
    if (var.kind != VarKind::EdgeSelect) continue;
    if (v[m.variableIndex.at(var.name)] < 0.5) continue;
    const DiagramEdge& e = capped.edge(var.ref);
    if (e.kind == EdgeKind::Extremity) pairIds.insert(e.siblingPair);
    if (e.kind == EdgeKind::CapExtremity) {
      const DiagramVertex& u = capped.vertex(e.u);
      const DiagramVertex& w = capped.vertex(e.v);
      const DiagramVertex& capA = u.side == GenomeSide::A ? u : w;
      const DiagramVertex& capB = u.side == GenomeSide::A ? w : u;
      capMatch[capA.capIndex - 1] = capB.capIndex - 1;
    }
  }
  result.siblingSet.pairs.assign(pairIds.begin(), pairIds.end());
  result.capChoice.capsB.resize(capMatch.size());
  for (auto [a, b] : capMatch) result.capChoice.capsB[a] = b;

  result.decomposition = induce_decomposition(
      capped, result.siblingSet,
      capped.capped ? std::optional<CapChoice>(result.capChoice) : std::nullopt);

  double objective = 0;
  for (const auto& t : m.objective) objective += t.coefficient * v[t.var];
  result.objective = objective;
  double distance = m.nStar + m.pStar - objective;
  long rounded = std::lround(distance);
  if (std::abs(distance - rounded) > kFeasibilityEps)
    throw InfeasibleAssignment("objective yields non-integral distance " +
                               std::to_string(distance));
  result.distance = rounded;

  if (result.distance != result.decomposition.distance)
    throw ScoreMismatch("assignment distance " + std::to_string(result.distance) +
                        " but rescored decomposition gives " +
                        std::to_string(result.decomposition.distance));
  return result;
}

SolverSolution encode_assignment(const IlpModel& m, const Diagram& capped,
                                 const ScoredDecomposition& sd) {
  if (!sd.capped) throw InvalidCapping("encode_assignment needs a capped decomposition");
  SolverSolution sol;
  auto set = [&](const std::string& name, double value) {
    if (value != 0) sol.values[name] = value;
  };

  for (const auto& e : capped.edges)
    set("x_e" + std::to_string(e.id), sd.selected[e.id - 1] ? 1 : 0);

  for (const Component& c : sd.components) {
    int n = static_cast<int>(c.vertexIds.size());
    if (c.runCount == 0) {
      int minId = *std::min_element(c.vertexIds.begin(), c.vertexIds.end());
      for (int vid : c.vertexIds) set("y_" + std::to_string(vid), minId);
      set("z_" + std::to_string(minId), 1);
      continue;  // r stays 0, no transitions
    }

    if (c.isCircularSingleton) {
      const DiagramVertex& v0 = capped.vertex(c.vertexIds.front());
      const Occurrence& occ = capped.occurrences(v0.side)[v0.occurrence];
      bool found = false;
      for (const auto& k : capped.singletonCandidates) {
        if (k.side == v0.side && k.chromosome == occ.chromosome) {
          set("s_k" + std::to_string(k.chromosomeId), 1);
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("circular singleton without a candidate entry");
    }

    // y = 0 on indel-enclosing cycles (default); assign run labels arc by arc
    std::vector<int> indelPos;
    for (int j = 0; j < n; ++j)
      if (is_indel(capped.edge(c.edgeIds[j]).kind)) indelPos.push_back(j);

    if (indelPos.size() == 1 || c.runCount == 1) {
      GenomeSide g = indel_side(capped.edge(c.edgeIds[indelPos.front()]).kind);
      if (g == GenomeSide::B)
        for (int vid : c.vertexIds) set("r_" + std::to_string(vid), 1);
      continue;
    }

    auto runValue = [](GenomeSide g) { return g == GenomeSide::A ? 0.0 : 1.0; };
    int arcs = static_cast<int>(indelPos.size());
    for (int a = 0; a < arcs; ++a) {
      int p = indelPos[a];
      int q = indelPos[(a + 1) % arcs];
      GenomeSide gp = indel_side(capped.edge(c.edgeIds[p]).kind);
      GenomeSide gq = indel_side(capped.edge(c.edgeIds[q]).kind);
      // vertices strictly after edge p up to and including the head of edge q
      std::vector<int> span;
      for (int j = (p + 1) % n;; j = (j + 1) % n) {
        span.push_back(c.vertexIds[j]);
        if (j == q) break;
      }
      if (gp == gq) {
        for (int vid : span) set("r_" + std::to_string(vid), runValue(gp));
      } else if (gp == GenomeSide::A) {
        // flip on the A-adjacency right after the A-indel edge
        set("r_" + std::to_string(span.front()), 0);
        for (std::size_t i = 1; i < span.size(); ++i)
          set("r_" + std::to_string(span[i]), 1);
        set("t_e" + std::to_string(c.edgeIds[(p + 1) % n]), 1);
      } else {
        // flip on the A-adjacency right before the A-indel edge
        for (std::size_t i = 0; i + 1 < span.size(); ++i)
          set("r_" + std::to_string(span[i]), 1);
        set("r_" + std::to_string(span.back()), 0);
        set("t_e" + std::to_string(c.edgeIds[(q - 1 + n) % n]), 1);
      }
    }
  }

  for (const auto& t : m.objective)
    sol.objective += t.coefficient * sol.value(m.variables[t.var].name);
  return sol;
}

}  // namespace dcj
