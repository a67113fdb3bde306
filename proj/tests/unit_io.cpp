#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "couples/json_io.hpp"
#include "couples/verify.hpp"

using namespace couples;

TEST_CASE("rational json uses exact strings") {
  CHECK(rat_to_json(rat(9, 8)) == json("9/8"));
  CHECK(rat_from_json(json("9/8")) == rat(9, 8));
  CHECK(rat_from_json(json(5)) == Rat(5));
  CHECK_THROWS_AS(rat_from_json(json(1.5)), parse_error);
}

TEST_CASE("step functions round trip through json") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    StepParams sp;
    sp.whole_line = (k % 2) == 0;
    const StepFunction f = random_step(rng, sp);
    CHECK(step_from_json(step_to_json(f)) == f);
  }
}

TEST_CASE("step json validates its fields") {
  json j = step_to_json(StepFunction::indicator(Rat(1), Rat(2)));
  j["breakpoints"] = json::array({"2", "1"});
  CHECK_THROWS_AS(step_from_json(j), parse_error);
  json k = step_to_json(StepFunction::indicator(Rat(1), Rat(2)));
  k.erase("tail");
  CHECK_THROWS_AS(step_from_json(k), parse_error);
  json m = step_to_json(StepFunction::indicator(Rat(1), Rat(2)));
  m["values"] = json::array({"1"});
  CHECK_THROWS_AS(step_from_json(m), parse_error);
}

TEST_CASE("measures round trip through json") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    const BorelMeasure m = random_measure(rng);
    const BorelMeasure back = measure_from_json(measure_to_json(m));
    CHECK(back.atoms.size() == m.atoms.size());
    CHECK(back.segments.size() == m.segments.size());
    CHECK(Lambda(back, Rat(100)) == Lambda(m, Rat(100)));
    CHECK(measure_to_json(back) == measure_to_json(m));
  }
}

TEST_CASE("grid operators round trip through json") {
  const GridSpec g{{Rat(0), Rat(1), Rat(3), Rat(4)}};
  const GridOperator T = discretize_operator(
      [](const StepFunction& h) { return scale(rat(1, 2), h); }, g, g);
  const GridOperator back = grid_operator_from_json(grid_operator_to_json(T));
  CHECK(back.matrix == T.matrix);
  CHECK(back.in == T.in);
  json j = grid_operator_to_json(T);
  j["matrix"].erase(0);
  CHECK_THROWS_AS(grid_operator_from_json(j), parse_error);
}

TEST_CASE("certificates serialize both modes") {
  const Certificate c = solve_extremal(
      build_exm_lp(extremal_instance(), default_extremal_grid()),
      SolveMode::rational);
  const json j = certificate_to_json(c);
  CHECK(j["exact"] == true);
  CHECK(j["optimum"] == "9/8");
  CHECK(grid_operator_from_json(j["operator"]).matrix == c.op.matrix);
}

TEST_CASE("reports serialize failures and stats") {
  Report r;
  r.suite = "demo";
  r.seed = 7;
  r.trials = 3;
  r.failures.push_back({1, "check", "witness"});
  r.stats.push_back({"note", "value"});
  const json j = report_to_json(r);
  CHECK(j["suite"] == "demo");
  CHECK(j["failures"][0]["trial"] == 1);
  CHECK(j["stats"]["note"] == "value");
  CHECK_FALSE(r.ok());
}

TEST_CASE("verification suites run clean at small sizes") {
  CHECK(suite_kfnls(1, 50).ok());
  CHECK(suite_s_bounds(1, 50).ok());
  CHECK(suite_projections(1, 50).ok());
  CHECK(suite_transfer(1, 30, 5).ok());
  CHECK(suite_degenerate(10, 1, 30).ok());
  CHECK(suite_kdiv(1, 20).ok());
}

TEST_CASE("suites are reproducible and parallel-stable") {
  const Report a = suite_projections(9, 40);
  const Report b = suite_projections(9, 40);
  CHECK(report_to_json(a) == report_to_json(b));
  const Report c = suite_projections(9, 40, 4);
  CHECK(report_to_json(a) == report_to_json(c));
}
