// Benchmark harness for the W4SV root-finder: comparison tables, single-case
// runs with per-iteration traces, and the spectral verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "w4/analysis.hpp"
#include "w4/classic.hpp"
#include "w4/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

w4::Vec2 parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--x0 expects \"a,b\"");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--x0 expects two real numbers \"a,b\"");
  }
}

void write_or_print(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  out << content;
  if (!out.good()) throw std::runtime_error("cannot write " + path);
}

w4::Mat2 random_nonsingular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (;;) {
    w4::Mat2 m{dist(rng), dist(rng), dist(rng), dist(rng)};
    if (std::abs(w4::det2(m)) > 1e-3) return m;
  }
}

w4::Mat2 random_rank1(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (;;) {
    w4::Vec2 u{dist(rng), dist(rng)};
    w4::Vec2 v{dist(rng), dist(rng)};
    if (u.norm() > 0.1 && v.norm() > 0.1) return w4::Mat2::outer(u, v);
  }
}

int run_verify(int trials) {
  bool all_pass = true;
  std::mt19937_64 rng(20220426);
  w4::W4Config cfg;

  for (double dtau : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    int fails = 0;
    for (int i = 0; i < trials; ++i) {
      const w4::Mat2 j = random_nonsingular(rng);
      const auto w = w4::build_w_matrix(j, w4::w4sv_preconditioners(j, cfg), dtau);
      if (!w4::check_nonsingular_spectrum(w).pass) ++fails;
    }
    const bool pass = fails == 0;
    all_pass = all_pass && pass;
    std::printf("[%s] nonsingular spectrum dtau=%.1f (%d trials)\n", pass ? "PASS" : "FAIL", dtau,
                trials);
  }

  {
    int fails = 0;
    for (int i = 0; i < trials; ++i) {
      const w4::Mat2 j = random_rank1(rng);
      const auto w = w4::build_w_matrix(j, w4::w4sv_preconditioners(j, cfg), 0.5);
      if (!w4::check_singular_spectrum(w, 0.5).pass) ++fails;
    }
    const bool pass = fails == 0;
    all_pass = all_pass && pass;
    std::printf("[%s] singular spectrum dtau=0.5 (%d trials)\n", pass ? "PASS" : "FAIL", trials);
  }

  const std::pair<w4::ProblemId, w4::Vec2> singular_starts[] = {
      {w4::ProblemId::Powell, {1.0, 1.0}},   {w4::ProblemId::Beale, {1.0, 1.0}},
      {w4::ProblemId::Beale, {0.0, 2.0}},    {w4::ProblemId::Fujisawa, {0.0, 1.0}},
      {w4::ProblemId::Fujisawa, {0.0, -1.0}},
  };
  for (const auto& [id, x0] : singular_starts) {
    const auto r = w4::verify_increment_formula(w4::registry(id), x0, cfg);
    all_pass = all_pass && r.pass;
    std::printf("[%s] increment formula %s (%g,%g), error=%.3e\n", r.pass ? "PASS" : "FAIL",
                w4::problem_name(id).c_str(), x0.e0, x0.e1, r.error);
  }

  std::printf("%s\n", all_pass ? "all checks passed" : "SOME CHECKS FAILED");
  return all_pass ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"W4SV nonlinear root-finding benchmark harness"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "reproduce the solver comparison tables");
  std::vector<std::string> solver_names{"NR", "dNR", "qN", "W4SV"};
  std::vector<double> dtaus{1.0, 0.9, 0.8, 0.7, 0.5};
  std::string table_format = "text";
  std::string table_output;
  std::uint64_t table_max_iter = 1000000;
  double table_tol = 1e-8;
  table->add_option("--solver", solver_names, "solvers: NR dNR qN W4SV")->delimiter(',');
  table->add_option("--dtau", dtaus, "dtau values for the W4SV columns")->delimiter(',');
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "text", "json"}));
  table->add_option("--output,-o", table_output, "output file (stdout when omitted)");
  table->add_option("--max-iter", table_max_iter);
  table->add_option("--tol", table_tol);

  // run
  auto* run = app.add_subcommand("run", "run a single (problem, solver, x0) case");
  std::string run_problem;
  std::string run_solver = "W4SV";
  double run_dtau = 0.5;
  std::string run_x0;
  double run_tol = 1e-8;
  std::uint64_t run_max_iter = 1000000;
  std::string run_format = "text";
  std::string run_trace;
  std::string threshold_mode = "relative";
  run->add_option("--problem", run_problem, "problem name")->required();
  run->add_option("--solver", run_solver, "NR, dNR, qN or W4SV");
  run->add_option("--dtau", run_dtau);
  run->add_option("--x0", run_x0, "initial point \"a,b\" (default: the problem's first start)");
  run->add_option("--tol", run_tol);
  run->add_option("--max-iter", run_max_iter);
  run->add_option("--format", run_format)->check(CLI::IsMember({"csv", "text", "json"}));
  run->add_option("--trace", run_trace, "write the per-iteration trace CSV here");
  run->add_option("--threshold-mode", threshold_mode)
      ->check(CLI::IsMember({"relative", "absolute"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the spectral verification suites");
  int verify_trials = 1000;
  verify->add_option("--trials", verify_trials, "random matrices per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) {
      std::vector<w4::SolverKind> solvers;
      for (const auto& name : solver_names) solvers.push_back(w4::solver_from_name(name));
      const auto doc = w4::run_table(dtaus, solvers, table_max_iter, table_tol);
      const std::string content = table_format == "csv"    ? doc.to_csv()
                                  : table_format == "json" ? doc.to_json() + "\n"
                                                           : doc.to_text();
      write_or_print(content, table_output);
      return kExitOk;
    }

    if (run->parsed()) {
      w4::RunSpec spec;
      spec.problem = w4::problem_from_name(run_problem);
      spec.solver = w4::solver_from_name(run_solver);
      spec.dtau = run_dtau;
      spec.x0 = run_x0.empty() ? w4::registry(spec.problem).starts.front() : parse_point(run_x0);
      spec.tol = run_tol;
      spec.max_iter = run_max_iter;
      spec.threshold_mode = threshold_mode == "absolute" ? w4::ThresholdMode::Absolute
                                                         : w4::ThresholdMode::Relative;
      const auto report = w4::run_case(spec);
      if (!run_trace.empty()) w4::emit_trace(report, run_trace);

      if (run_format == "json") {
        std::cout << w4::report_to_json(report) << "\n";
      } else if (run_format == "csv") {
        std::cout << "status,iterations,x,y\n"
                  << w4::to_string(report.status) << "," << report.iterations << ","
                  << report.final_x.e0 << "," << report.final_x.e1 << "\n";
      } else {
        std::cout << "status:     " << w4::to_string(report.status) << "\n"
                  << "iterations: " << report.iterations << "\n"
                  << "final x:    (" << report.final_x.e0 << ", " << report.final_x.e1 << ")\n";
        if (!report.message.empty()) std::cout << "message:    " << report.message << "\n";
      }
      return kExitOk;
    }

    if (verify->parsed()) return run_verify(verify_trials);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
