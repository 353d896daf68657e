#pragma once

#include <string>
#include <vector>

#include "w4/problems.hpp"
#include "w4/solver.hpp"

namespace w4 {

enum class SolverKind { NR, DNR, Broyden, W4SV, W4Generic };

std::string solver_label(SolverKind s);
SolverKind solver_from_name(const std::string& name);

struct RunSpec {
  ProblemId problem = ProblemId::Rosenbrock;
  SolverKind solver = SolverKind::W4SV;
  double dtau = 0.5;
  Vec2 x0;
  std::uint64_t max_iter = 1000000;
  double tol = 1e-8;
  double sigma_threshold = 1e-15;
  ThresholdMode threshold_mode = ThresholdMode::Relative;
  PreconditionerFn pre_fn;  // only for SolverKind::W4Generic
};

/// A cell of the comparison table: an iteration count, "*" on failure
/// (Diverged/SingularAbort), or the triangle mark on hitting the 10^6 cap.
struct TableCell {
  std::string display;
};

struct TableRow {
  ProblemId problem;
  Vec2 x0;
  std::vector<TableCell> cells;
};

struct TableDocument {
  std::vector<std::string> column_labels;  // "solver@dtau"
  std::vector<TableRow> rows;

  std::string to_csv() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// The 10 (problem, start) rows of the comparison tables, in print order.
std::vector<std::pair<ProblemId, Vec2>> table_rows();

SolveReport run_case(const RunSpec& spec);

/// One column per solver; W4SV expands to one column per requested dtau.
/// Throws std::invalid_argument when W4SV is requested with an empty dtau list.
TableDocument run_table(const std::vector<double>& dtaus, const std::vector<SolverKind>& solvers,
                        std::uint64_t max_iter = 1000000, double tol = 1e-8);

/// Writes `step,x,y,sigma_ratio,f_norm_sq,err_metric` rows at full precision.
void emit_trace(const SolveReport& report, const std::string& path);

std::string report_to_json(const SolveReport& report);
TableCell cell_for(const SolveReport& report, std::uint64_t max_iter);

}  // namespace w4
