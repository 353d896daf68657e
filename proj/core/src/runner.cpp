#include "w4/runner.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "w4/classic.hpp"

namespace w4 {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_point(const Vec2& v) {
  std::ostringstream os;
  os << "(" << v.e0 << "," << v.e1 << ")";
  return os.str();
}

}  // namespace

std::string solver_label(SolverKind s) {
  switch (s) {
    case SolverKind::NR: return "NR";
    case SolverKind::DNR: return "dNR";
    case SolverKind::Broyden: return "qN";
    case SolverKind::W4SV: return "W4SV";
    case SolverKind::W4Generic: return "W4";
  }
  return "?";
}

SolverKind solver_from_name(const std::string& name) {
  if (name == "NR" || name == "nr" || name == "newton") return SolverKind::NR;
  if (name == "dNR" || name == "dnr" || name == "damped-newton") return SolverKind::DNR;
  if (name == "qN" || name == "qn" || name == "broyden") return SolverKind::Broyden;
  if (name == "W4SV" || name == "w4sv") return SolverKind::W4SV;
  throw std::invalid_argument("unknown solver: " + name);
}

std::vector<std::pair<ProblemId, Vec2>> table_rows() {
  return {
      {ProblemId::Rosenbrock, {-1.2, 1.0}},
      {ProblemId::FreudensteinRoth, {6.0, 3.0}},
      {ProblemId::Powell, {0.0, 1.0}},
      {ProblemId::Powell, {1.0, 1.0}},
      {ProblemId::Brown, {1.0, 1.0}},
      {ProblemId::Beale, {1.0, 1.0}},
      {ProblemId::Beale, {0.0, 2.0}},
      {ProblemId::Hueso, {1.5, 2.5}},
      {ProblemId::Fujisawa, {0.0, 1.0}},
      {ProblemId::Fujisawa, {0.0, -1.0}},
  };
}

SolveReport run_case(const RunSpec& spec) {
  const Problem& problem = registry(spec.problem);
  W4Config cfg;
  cfg.dtau = spec.dtau;
  cfg.max_iter = spec.max_iter;
  cfg.tol = spec.tol;
  cfg.sigma_threshold = spec.sigma_threshold;
  cfg.threshold_mode = spec.threshold_mode;
  switch (spec.solver) {
    case SolverKind::NR: return solve_newton(problem, spec.x0, cfg);
    case SolverKind::DNR: return solve_damped_newton(problem, spec.x0, cfg);
    case SolverKind::Broyden: return solve_broyden_good(problem, spec.x0, cfg);
    case SolverKind::W4SV: return solve_w4sv(problem, spec.x0, cfg);
    case SolverKind::W4Generic:
      if (!spec.pre_fn) throw std::invalid_argument("W4Generic requires a preconditioner factory");
      return solve_w4_generic(problem, spec.x0, cfg, spec.pre_fn);
  }
  throw std::invalid_argument("unknown solver kind");
}

TableCell cell_for(const SolveReport& report, std::uint64_t max_iter) {
  switch (report.status) {
    case SolveStatus::Converged: return {std::to_string(report.iterations)};
    case SolveStatus::MaxIterExceeded: return {max_iter == 1000000 ? "△" : ">max-iter"};
    case SolveStatus::Diverged:
    case SolveStatus::SingularAbort: return {"*"};
  }
  return {"?"};
}

TableDocument run_table(const std::vector<double>& dtaus, const std::vector<SolverKind>& solvers,
                        std::uint64_t max_iter, double tol) {
  if (solvers.empty()) throw std::invalid_argument("run_table: empty solver list");

  struct Column {
    SolverKind solver;
    double dtau;
  };
  std::vector<Column> columns;
  TableDocument doc;
  for (SolverKind s : solvers) {
    if (s == SolverKind::W4SV) {
      if (dtaus.empty()) {
        throw std::invalid_argument("run_table: W4SV requested with an empty dtau list");
      }
      for (double dt : dtaus) {
        columns.push_back({s, dt});
        std::ostringstream os;
        os << solver_label(s) << "@" << dt;
        doc.column_labels.push_back(os.str());
      }
    } else {
      const double dt = s == SolverKind::NR ? 1.0 : 0.5;
      columns.push_back({s, dt});
      std::ostringstream os;
      os << solver_label(s);
      if (s != SolverKind::NR) os << "@" << dt;
      doc.column_labels.push_back(os.str());
    }
  }

  for (const auto& [id, x0] : table_rows()) {
    TableRow row{id, x0, {}};
    for (const Column& col : columns) {
      RunSpec spec;
      spec.problem = id;
      spec.solver = col.solver;
      spec.dtau = col.dtau;
      spec.x0 = x0;
      spec.max_iter = max_iter;
      spec.tol = tol;
      row.cells.push_back(cell_for(run_case(spec), max_iter));
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

std::string TableDocument::to_csv() const {
  std::ostringstream os;
  os << "problem,x0";
  for (const auto& label : column_labels) os << "," << label;
  os << "\n";
  for (const auto& row : rows) {
    os << problem_name(row.problem) << ",\"" << fmt_point(row.x0) << "\"";
    for (const auto& cell : row.cells) os << "," << cell.display;
    os << "\n";
  }
  return os.str();
}

std::string TableDocument::to_text() const {
  std::vector<size_t> widths{18, 12};
  for (const auto& label : column_labels) widths.push_back(std::max<size_t>(label.size(), 8));
  std::ostringstream os;
  auto pad = [&os](const std::string& s, size_t w) {
    os << s;
    for (size_t i = s.size(); i < w + 2; ++i) os << ' ';
  };
  pad("problem", widths[0]);
  pad("x0", widths[1]);
  for (size_t c = 0; c < column_labels.size(); ++c) pad(column_labels[c], widths[c + 2]);
  os << "\n";
  for (const auto& row : rows) {
    pad(problem_name(row.problem), widths[0]);
    pad(fmt_point(row.x0), widths[1]);
    for (size_t c = 0; c < row.cells.size(); ++c) pad(row.cells[c].display, widths[c + 2]);
    os << "\n";
  }
  return os.str();
}

std::string TableDocument::to_json() const {
  nlohmann::json j;
  j["columns"] = column_labels;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["problem"] = problem_name(row.problem);
    r["x0"] = {row.x0.e0, row.x0.e1};
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : row.cells) cells.push_back(cell.display);
    r["cells"] = cells;
    j["rows"].push_back(r);
  }
  return j.dump(2);
}

void emit_trace(const SolveReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_trace: cannot open " + path);
  out << "step,x,y,sigma_ratio,f_norm_sq,err_metric\n";
  for (const TraceRow& r : report.trace) {
    out << r.step << "," << fmt17(r.x) << "," << fmt17(r.y) << "," << fmt17(r.sigma_ratio) << ","
        << fmt17(r.f_norm_sq) << "," << fmt17(r.err_metric) << "\n";
  }
  if (!out.good()) throw std::runtime_error("emit_trace: write failed for " + path);
}

std::string report_to_json(const SolveReport& report) {
  nlohmann::json j;
  j["status"] = to_string(report.status);
  j["iterations"] = report.iterations;
  j["final_x"] = {report.final_x.e0, report.final_x.e1};
  if (!report.message.empty()) j["message"] = report.message;
  nlohmann::json trace = nlohmann::json::array();
  for (const TraceRow& r : report.trace) {
    trace.push_back({{"step", r.step},
                     {"x", r.x},
                     {"y", r.y},
                     {"sigma_ratio", r.sigma_ratio},
                     {"f_norm_sq", r.f_norm_sq},
                     {"err_metric", r.err_metric}});
  }
  j["trace"] = trace;
  return j.dump(2);
}

}  // namespace w4
