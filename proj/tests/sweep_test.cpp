#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "qht/sweep.hpp"
#include "qht/verify.hpp"

using namespace qht;

namespace {

std::string csv_of(const SweepConfig& cfg) {
  std::ostringstream os;
  write_csv(run_sweep(cfg), os);
  return os.str();
}

}  // namespace

TEST_CASE("grid points hit exact endpoints without drift") {
  for (int k = 0; k < 11; ++k) {
    const double x = detail::grid_point(0.0, 1.0, 11, k);
    CHECK(x == doctest::Approx(k / 10.0).epsilon(1e-16));
  }
  CHECK(detail::grid_point(0.0, 5.0, 21, 20) == 5.0);
  CHECK(detail::grid_point(0.25, 0.75, 3, 0) == 0.25);
  CHECK(detail::grid_point(0.25, 0.75, 3, 2) == 0.75);
}

TEST_CASE("check-mode sweep over all hypergraphs") {
  SweepConfig cfg;  // qutrit-flip, plus, H1..H5, 11 steps, check
  const std::vector<SweepRow> rows = run_sweep(cfg);
  REQUIRE(rows.size() == 55);

  int h_prev = 0;
  double p_prev = -1.0;
  for (const SweepRow& r : rows) {
    REQUIRE(r.abs_err.has_value());
    CHECK(*r.abs_err <= 1e-9);
    // ordered by hypergraph then parameter
    CHECK(r.hypergraph >= h_prev);
    if (r.hypergraph != h_prev) p_prev = -1.0;
    CHECK(r.param_value > p_prev);
    h_prev = r.hypergraph;
    p_prev = r.param_value;
  }
}

TEST_CASE("single-point H5 sweep reproduces the worked value") {
  SweepConfig cfg;
  cfg.hypergraphs = {5};
  cfg.param_steps = 2;
  const std::vector<SweepRow> rows = run_sweep(cfg);
  REQUIRE(rows.size() == 2);
  // p = 0 row: measured value 69/729 (docs/KNOWN_DEVIATIONS.md #3)
  CHECK(*rows[0].f_closed == doctest::Approx(69.0 / 729.0).epsilon(1e-13));
  CHECK(*rows[1].f_closed == doctest::Approx(50.0 / 729.0).epsilon(1e-13));
}

TEST_CASE("sweep output is deterministic") {
  SweepConfig cfg;
  cfg.channel = "depolarizing";
  cfg.state = "linked";
  cfg.theta2_steps = 5;
  cfg.param_steps = 7;
  const std::string a = csv_of(cfg);
  const std::string b = csv_of(cfg);
  CHECK(a == b);
  CHECK(a.substr(0, a.find('\n')) ==
        "channel,hypergraph,theta1,theta2,param_name,param_value,F_sim,F_closed,abs_err");

  // 5 hypergraphs x 5 theta2 x 7 params + header
  const std::size_t lines = static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n'));
  CHECK(lines == 5 * 5 * 7 + 1);
}

TEST_CASE("csv numbers round-trip at full precision") {
  SweepConfig cfg;
  cfg.hypergraphs = {2};
  cfg.param_steps = 2;
  const std::vector<SweepRow> rows = run_sweep(cfg);
  const std::string text = csv_of(cfg);

  // pull F_sim of the first data row back out of the text
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // header
  std::getline(is, line);
  std::size_t pos = 0;
  for (int comma = 0; comma < 6; ++comma) pos = line.find(',', pos) + 1;
  const std::string f_sim_text = line.substr(pos, line.find(',', pos) - pos);
  CHECK(std::strtod(f_sim_text.c_str(), nullptr) == *rows[0].f_sim);
}

TEST_CASE("mode controls which columns are populated") {
  SweepConfig cfg;
  cfg.hypergraphs = {1};
  cfg.param_steps = 2;

  cfg.mode = SweepMode::Simulate;
  for (const SweepRow& r : run_sweep(cfg)) {
    CHECK(r.f_sim.has_value());
    CHECK_FALSE(r.f_closed.has_value());
    CHECK_FALSE(r.abs_err.has_value());
  }

  cfg.mode = SweepMode::ClosedForm;
  for (const SweepRow& r : run_sweep(cfg)) {
    CHECK_FALSE(r.f_sim.has_value());
    CHECK(r.f_closed.has_value());
  }
}

TEST_CASE("teleporting |0> is hypergraph-independent at every damping time") {
  SweepConfig cfg;
  cfg.channel = "ad-nonmarkov";
  cfg.state = "zero";
  cfg.param_stop = 5.0;
  cfg.param_steps = 11;
  const std::vector<SweepRow> rows = run_sweep(cfg);
  REQUIRE(rows.size() == 55);
  // same t -> same F for all five hypergraphs (F itself varies with t: the
  // damping drives Bob's qutrit toward |0>, which here is the target)
  for (const SweepRow& r : rows) {
    const SweepRow& h1_row = rows[static_cast<std::size_t>(
        (r.param_value - cfg.param_start) / 0.5 + 0.5)];
    CHECK(h1_row.param_value == doctest::Approx(r.param_value));
    CHECK(*r.f_sim == doctest::Approx(*h1_row.f_sim).epsilon(1e-12));
  }
}

TEST_CASE("teleporting |0> is flat across the qutrit-flip p grid") {
  SweepConfig cfg;
  cfg.state = "zero";
  cfg.hypergraphs = {3};
  const std::vector<SweepRow> rows = run_sweep(cfg);
  const double f0 = *rows[0].f_sim;
  CHECK(f0 == doctest::Approx(4.0 / 81.0).epsilon(1e-12));
  for (const SweepRow& r : rows) CHECK(*r.f_sim == doctest::Approx(f0).epsilon(1e-12));
}

TEST_CASE("usage errors") {
  SweepConfig cfg;
  cfg.param_steps = 1;
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);

  cfg = SweepConfig{};
  cfg.channel = "nonsense";
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);

  cfg = SweepConfig{};
  cfg.param_start = 0.5;
  cfg.param_stop = 0.25;
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);

  cfg = SweepConfig{};
  cfg.param_stop = 1.5;  // probability grid beyond [0,1]
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);

  cfg = SweepConfig{};
  cfg.hypergraphs = {7};
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);

  cfg = SweepConfig{};
  cfg.state = "bogus";
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);

  CHECK_THROWS_AS(sweep_mode_from_name("fast"), UsageError);
}

TEST_CASE("kappa leaving [0,1] inside a sweep is a numerical failure with context") {
  SweepConfig cfg;
  cfg.channel = "dephasing-nonmarkov";
  cfg.param_steps = 11;  // hits p = 0.8 where kappa = 1.48
  try {
    run_sweep(cfg);
    FAIL("expected SweepEvaluationError");
  } catch (const SweepEvaluationError& e) {
    CHECK(e.context.find("dephasing-nonmarkov") != std::string::npos);
    CHECK(e.context.find("p=0.8") != std::string::npos);
  }
}

TEST_CASE("config file entries") {
  SweepConfig cfg;
  std::istringstream in(
      "# comment line\n"
      "channel = depolarizing\n"
      "state=zero2\n"
      "hypergraph = H2, 4\n"
      "steps = 4\n"
      "param-stop = 0.9   # trailing comment\n"
      "mode = simulate\n"
      "\n"
      "out = /tmp/x.csv\n");
  apply_config_stream(cfg, in);
  CHECK(cfg.channel == "depolarizing");
  CHECK(cfg.state == "zero2");
  CHECK(cfg.hypergraphs == std::vector<int>{2, 4});
  CHECK(cfg.param_steps == 4);
  CHECK(cfg.param_stop == 0.9);
  CHECK(cfg.mode == SweepMode::Simulate);
  CHECK(cfg.out == "/tmp/x.csv");

  SweepConfig linked;
  std::istringstream in2("linked = true\ntheta2-steps = 7\n");
  apply_config_stream(linked, in2);
  CHECK(linked.state == "linked");
  CHECK(linked.theta2_steps == 7);

  SweepConfig expl;
  std::istringstream in3("theta1 = 0.7\ntheta2 = 0.3\n");
  apply_config_stream(expl, in3);
  CHECK(expl.state == "explicit");
  CHECK(expl.theta1 == 0.7);

  SweepConfig bad;
  std::istringstream unknown("velocity = 3\n");
  CHECK_THROWS_AS(apply_config_stream(bad, unknown), UsageError);
  std::istringstream noeq("channel depolarizing\n");
  CHECK_THROWS_AS(apply_config_stream(bad, noeq), UsageError);
  std::istringstream notnum("steps = many\n");
  CHECK_THROWS_AS(apply_config_stream(bad, notnum), UsageError);
  std::istringstream badh("hypergraph = H7\n");
  CHECK_THROWS_AS(apply_config_stream(bad, badh), UsageError);
}

TEST_CASE("verify engine") {
  const VerifyReport report = run_verify(/*seed=*/424243, /*draws_per_key=*/3);
  CHECK(report.passed);
  CHECK(report.results.size() == 40);
  for (const VerifyKeyResult& r : report.results) {
    CHECK(r.draws == 3);
    CHECK(r.max_abs_err <= 1e-9);
  }

  std::ostringstream a, b;
  print_report(report, a);
  print_report(run_verify(424243, 3), b);
  CHECK(a.str() == b.str());  // deterministic for a fixed seed
  CHECK(a.str().find("VERIFY PASS") != std::string::npos);
}
