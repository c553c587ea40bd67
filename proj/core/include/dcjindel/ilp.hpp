#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcjindel/decomposition.hpp"

namespace dcj {

enum class VarKind : std::uint8_t {
  EdgeSelect,      // x_e<edge>: edge is part of the decomposition
  CycleLabel,      // y_<vertex>: smallest vertex id on the cycle, 0 if indel-enclosing
  Representative,  // z_<vertex>: vertex represents an indel-free cycle
  RunLabel,        // r_<vertex>: 0 in A-runs, 1 in B-runs
  Transition,      // t_e<edge>: run label changes across the edge
  Singleton,       // s_k<chromosome>: circular chromosome is a singleton
};

enum class ConstraintFamily : std::uint8_t {
  C01,  // adjacency edges are in every decomposition
  C02,  // every vertex has degree 2
  C03,  // extremity edges are selected together with their sibling
  C04,  // cycle labels propagate along selected edges
  C05,  // a selected indel edge forces its cycle label to 0
  C06,  // a vertex represents a cycle only if it carries its own id
  C07,  // run labels are fixed at selected indel edges
  C08,  // a label change across a selected edge raises its transition flag
  C09,  // transitions only at adjacencies touching a selected indel edge
  C10,  // transitions only on adjacencies of genome A
  C11,  // all indel edges of a circular chromosome set force its singleton flag
};

const char* family_label(ConstraintFamily f);

struct IlpVariable {
  std::string name;
  VarKind kind;
  bool binary = true;
  long lower = 0;
  long upper = 1;  // y_i has upper bound i
  int ref = 0;     // edge id, vertex id, or chromosome id
};

struct LinearTerm {
  double coefficient;
  int var;  // index into IlpModel::variables
};

struct IlpConstraint {
  std::string label;
  ConstraintFamily family;
  std::vector<LinearTerm> terms;
  char sense;  // '<', '>', '='
  double rhs;
};

struct IlpModel {
  std::vector<IlpVariable> variables;
  std::unordered_map<std::string, int> variableIndex;
  std::vector<IlpConstraint> constraints;
  std::vector<LinearTerm> objective;  // maximized
  long nStar = 0;
  int pStar = 0;
  int vertexCount = 0;
  int edgeCount = 0;
  std::string fingerprint;  // hash of the full model, embedded in LP comments

  int varIndex(const std::string& name) const;
  int countConstraints(ConstraintFamily f) const;
};

// Translate a capped multi-relational diagram into the cycle-decomposition
// ILP: maximize sum(z) - 1/2 sum(t) - sum(s); the DCJ-indel distance is
// nStar + pStar - optimum.
IlpModel build_ilp(const Diagram& capped);

// CPLEX-style LP text: Maximize / Subject To / Bounds / Binaries / Generals /
// End, one constraint per line, deterministic order, fingerprint in a leading
// comment.
void write_lp(const IlpModel& m, std::ostream& out);
std::string write_lp(const IlpModel& m);

// Structural summary of an LP file written by write_lp; used to audit that a
// serialized model parses back with identical counts.
struct LpStructure {
  std::string fingerprint;
  std::size_t objectiveTerms = 0;
  std::map<std::string, std::size_t> constraintsByPrefix;  // label prefix -> rows
  std::vector<std::string> boundsLines;
  std::size_t binaries = 0;
  std::size_t generals = 0;
};

LpStructure parse_lp_structure(std::istream& in);
LpStructure parse_lp_structure(const std::string& text);

struct SolverSolution {
  std::unordered_map<std::string, double> values;  // missing variables are 0
  double objective = 0;                            // evaluated on the model

  double value(const std::string& name) const {
    auto it = values.find(name);
    return it == values.end() ? 0.0 : it->second;
  }
};

// Whitespace-separated "name value" lines, '#' comments. Rejects names that
// are not model variables and unparsable values.
SolverSolution read_solution(std::istream& in, const IlpModel& m);
SolverSolution read_solution(const std::string& text, const IlpModel& m);

struct IlpResult {
  long distance = 0;
  SiblingSet siblingSet;
  CapChoice capChoice;
  ScoredDecomposition decomposition;
  double objective = 0;
};

// Validate an assignment against every constraint (x, z, r, t, s rounded to
// integers, at most 0.1 away), rebuild the selected decomposition, rescore it
// independently, and return the distance nStar + pStar - objective. Throws
// InfeasibleAssignment on constraint violations and ScoreMismatch if the
// rescored distance disagrees with the objective-derived one.
IlpResult extract_result(const IlpModel& m, const SolverSolution& sol, const Diagram& capped);

// The canonical assignment a consistent capped decomposition induces: selected
// x, minimum-id cycle labels on indel-free cycles, run labels flipped at the
// A-adjacency next to each boundary indel edge, singleton flags. Its objective
// equals the decomposition weight.
SolverSolution encode_assignment(const IlpModel& m, const Diagram& capped,
                                 const ScoredDecomposition& sd);

}  // namespace dcj
