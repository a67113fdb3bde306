#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "couples/extremal.hpp"
#include "couples/simplex.hpp"

using namespace couples;

TEST_CASE("simplex solves a textbook program exactly") {
  // minimize -3x - 5y st x <= 4, 2y <= 12, 3x + 2y <= 18
  LPProblem p;
  const auto x = p.add_var("x", Rat(-3));
  const auto y = p.add_var("y", Rat(-5));
  p.add_con({{x, Rat(1)}}, Rel::LE, Rat(4));
  p.add_con({{y, Rat(2)}}, Rel::LE, Rat(12));
  p.add_con({{x, Rat(3)}, {y, Rat(2)}}, Rel::LE, Rat(18));
  const auto r = lp_solve<Rat>(p);
  CHECK(r.optimum == -36);
  CHECK(r.primal == std::vector<Rat>{Rat(2), Rat(6)});
  // strong duality: b.y equals the optimum
  Rat by(0);
  by += Rat(4) * r.dual[0] + Rat(12) * r.dual[1] + Rat(18) * r.dual[2];
  CHECK(by == r.optimum);
  const auto rf = lp_solve<double>(p);
  CHECK(std::abs(rf.optimum + 36.0) < 1e-9);
}

TEST_CASE("simplex handles equalities, GE rows and negative rhs") {
  // minimize x + y st x + y >= 2, x - y = 1  ->  x = 3/2, y = 1/2
  LPProblem p;
  const auto x = p.add_var("x", Rat(1));
  const auto y = p.add_var("y", Rat(1));
  p.add_con({{x, Rat(1)}, {y, Rat(1)}}, Rel::GE, Rat(2));
  p.add_con({{x, Rat(1)}, {y, Rat(-1)}}, Rel::EQ, Rat(1));
  CHECK(lp_solve<Rat>(p).optimum == 2);
  // same feasible set written with a negative rhs
  LPProblem q;
  const auto u = q.add_var("u", Rat(1));
  q.add_con({{u, Rat(-1)}}, Rel::LE, Rat(-3));  // u >= 3
  CHECK(lp_solve<Rat>(q).optimum == 3);
}

TEST_CASE("simplex reports infeasible and unbounded programs") {
  LPProblem p;
  const auto x = p.add_var("x", Rat(1));
  p.add_con({{x, Rat(1)}}, Rel::LE, Rat(1));
  p.add_con({{x, Rat(1)}}, Rel::GE, Rat(2));
  CHECK_THROWS_AS(lp_solve<Rat>(p), solver_error);
  LPProblem q;
  const auto y = q.add_var("y", Rat(-1));
  q.add_con({{y, Rat(0)}}, Rel::LE, Rat(1));
  CHECK_THROWS_AS(lp_solve<Rat>(q), solver_error);
}

TEST_CASE("exm certifies 9/8 exactly on the default grid") {
  const auto b = build_exm_lp(extremal_instance(), default_extremal_grid());
  const Certificate c = solve_extremal(b, SolveMode::rational);
  REQUIRE(c.exact);
  CHECK(c.optimum == rat(9, 8));
  CHECK(c.optimum >= rat(9, 8));
  CHECK(c.optimum <= 4);
  for (const auto& line : exm_chain_report(c.op, c.optimum)) CHECK(line.holds);
  // the certified operator is feasible for its own norm bounds
  const GridOperatorNorms n = grid_operator_norms(c.op);
  CHECK(n.linf_linf <= c.optimum);
  CHECK(n.l1_l1tilde <= c.optimum);
  const StepFunction g = extremal_instance();
  CHECK(c.op.apply_fn(least_decreasing_majorant(g)) == g);
}

TEST_CASE("exn certifies 9/8 exactly on the default grid") {
  const auto b = build_exn_lp(extremal_instance(), default_extremal_grid());
  const Certificate c = solve_extremal(b, SolveMode::rational);
  REQUIRE(c.exact);
  CHECK(c.optimum == rat(9, 8));
  CHECK(c.optimum <= 2);
  for (const auto& line : exn_chain_report(c.op, c.optimum)) CHECK(line.holds);
  const GridOperatorNorms n = grid_operator_norms(c.op);
  CHECK(n.l1_l1 <= c.optimum);
  CHECK(n.linflevel_linf <= c.optimum);
  const StepFunction f = extremal_instance();
  CHECK(c.op.apply_fn(f) == level_function(f));
}

TEST_CASE("rank-one instance needs no dilation") {
  const StepFunction g = StepFunction::indicator(Rat(0), Rat(1));
  const GridSpec grid{{Rat(0), Rat(1), Rat(2)}};
  const Certificate c =
      solve_extremal(build_exm_lp(g, grid), SolveMode::rational);
  CHECK(c.optimum == 1);
}

TEST_CASE("one refinement keeps the optimum at 9/8") {
  const auto certs = refine_and_resolve(
      [](const GridSpec& g) { return build_exm_lp(extremal_instance(), g); },
      default_extremal_grid(), 1, SolveMode::rational);
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].optimum == rat(9, 8));
  CHECK(certs[1].optimum == rat(9, 8));
  CHECK(certs[1].optimum <= certs[0].optimum);
}

TEST_CASE("float mode lands on the rational optimum") {
  const auto b = build_exn_lp(extremal_instance(), default_extremal_grid());
  const Certificate c = solve_extremal(b, SolveMode::floating);
  CHECK_FALSE(c.exact);
  CHECK(std::abs(c.optimum_f - 1.125) < 1e-7);
}
