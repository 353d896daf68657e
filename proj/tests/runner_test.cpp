#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "w4/runner.hpp"

using namespace w4;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("run_case dispatches by solver kind") {
  RunSpec spec;
  spec.problem = ProblemId::Powell;
  spec.x0 = {1.0, 1.0};

  spec.solver = SolverKind::NR;
  CHECK(run_case(spec).status == SolveStatus::SingularAbort);

  spec.solver = SolverKind::W4SV;
  spec.dtau = 0.5;
  CHECK(run_case(spec).status == SolveStatus::Converged);

  spec.solver = SolverKind::W4Generic;
  spec.pre_fn = [](const Mat2& j) {
    W4Config cfg;
    return w4sv_preconditioners(j, cfg);
  };
  CHECK(run_case(spec).status == SolveStatus::Converged);
}

TEST_CASE("table cells encode the status marks") {
  SolveReport r;
  r.status = SolveStatus::Converged;
  r.iterations = 58;
  CHECK(cell_for(r, 1000000).display == "58");
  r.status = SolveStatus::SingularAbort;
  CHECK(cell_for(r, 1000000).display == "*");
  r.status = SolveStatus::Diverged;
  CHECK(cell_for(r, 1000000).display == "*");
  r.status = SolveStatus::MaxIterExceeded;
  CHECK(cell_for(r, 1000000).display == "△");
}

TEST_CASE("run_table layout and validation") {
  CHECK_THROWS_AS(run_table({}, {SolverKind::W4SV}), std::invalid_argument);
  CHECK_THROWS_AS(run_table({0.5}, {}), std::invalid_argument);

  const auto doc = run_table({0.5}, {SolverKind::NR, SolverKind::W4SV}, 2000);
  REQUIRE(doc.rows.size() == 10);
  REQUIRE(doc.column_labels.size() == 2);
  CHECK(doc.column_labels[0] == "NR");
  CHECK(doc.column_labels[1] == "W4SV@0.5");

  const std::string csv = doc.to_csv();
  CHECK(csv.rfind("problem,x0,NR,W4SV@0.5\n", 0) == 0);
  // Every "*" row comes from a SingularAbort/Diverged, never a crash: the
  // singular starts must show "*" under NR.
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  int stars = 0;
  while (std::getline(lines, line)) {
    if (line.find(",*") != std::string::npos) ++stars;
  }
  CHECK(stars >= 5);
}

TEST_CASE("W4SV dtau grid expands to one column per value") {
  const auto doc = run_table({1.0, 0.9, 0.8, 0.7, 0.5}, {SolverKind::W4SV}, 500);
  CHECK(doc.column_labels.size() == 5);
  CHECK(doc.column_labels.front() == "W4SV@1");
  CHECK(doc.column_labels.back() == "W4SV@0.5");
}

TEST_CASE("emit_trace schema and determinism") {
  RunSpec spec;
  spec.problem = ProblemId::Powell;
  spec.solver = SolverKind::W4SV;
  spec.dtau = 0.5;
  spec.x0 = {0.0, 1.0};
  const auto report = run_case(spec);
  REQUIRE(report.status == SolveStatus::Converged);

  const std::string path1 = "trace_test_1.csv";
  const std::string path2 = "trace_test_2.csv";
  emit_trace(report, path1);
  emit_trace(run_case(spec), path2);

  const std::string t1 = slurp(path1);
  const std::string t2 = slurp(path2);
  CHECK(t1 == t2);  // bit-identical across runs
  CHECK(t1.rfind("step,x,y,sigma_ratio,f_norm_sq,err_metric\n", 0) == 0);

  // step-0 row holds the initial point; row count = iterations + 1.
  std::istringstream lines(t1);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line.rfind("0,0,1,", 0) == 0);
  int rows = 1;
  while (std::getline(lines, line)) ++rows;
  CHECK(static_cast<std::uint64_t>(rows) == report.iterations + 1);

  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("emit_trace surfaces I/O errors with path context") {
  SolveReport r;
  r.trace.push_back({});
  try {
    emit_trace(r, "/nonexistent-dir/trace.csv");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/trace.csv") != std::string::npos);
  }
}

TEST_CASE("json report mirrors the solve report") {
  RunSpec spec;
  spec.problem = ProblemId::Rosenbrock;
  spec.solver = SolverKind::W4SV;
  spec.dtau = 1.0;
  spec.x0 = {-1.2, 1.0};
  const auto report = run_case(spec);
  const std::string j = report_to_json(report);
  CHECK(j.find("\"status\": \"Converged\"") != std::string::npos);
  CHECK(j.find("\"iterations\"") != std::string::npos);
  CHECK(j.find("\"trace\"") != std::string::npos);
}
