#include <catch2/catch_amalgamated.hpp>

#include "couples/piecewise_linear.hpp"
#include "couples/rational.hpp"
#include "couples/step_function.hpp"

using namespace couples;

TEST_CASE("rational parsing and printing round trip") {
  CHECK(to_string(rat(3, 4)) == "3/4");
  CHECK(to_string(Rat(-2)) == "-2");
  CHECK(parse_rat("9/8") == rat(9, 8));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("6/4") == rat(3, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rat("x"), parse_error);
}

TEST_CASE("extended values order and combine") {
  const Ext a(rat(1, 2));
  const Ext b = Ext::inf();
  CHECK(a < b);
  CHECK((a + b) == b);
  CHECK(a + Ext(rat(1, 2)) == Ext(Rat(1)));
  CHECK(Rat(0) * b == Ext(Rat(0)));
  CHECK(Rat(3) * b == b);
  CHECK(pow2(-3) == rat(1, 8));
  CHECK(floor_log2(rat(5, 2)) == 1);
  CHECK(floor_log2(rat(1, 3)) == -2);
}

TEST_CASE("step functions canonicalize and evaluate") {
  StepFunction f = StepFunction::from_pieces(Rat(0), {Rat(1), Rat(2), Rat(3)},
                                             {Rat(2), Rat(2), Rat(1)}, Rat(1));
  CHECK(f.breakpoints == std::vector<Rat>{Rat(2)});
  CHECK(f.values == std::vector<Rat>{Rat(2)});
  CHECK(f.tail == 1);
  CHECK(f.eval(rat(3, 2)) == 2);
  CHECK(f.eval(Rat(2)) == 1);

  const StepFunction g = StepFunction::indicator(Rat(1), Rat(3));
  CHECK(g.eval(Rat(0)) == 0);
  CHECK(g.eval(Rat(1)) == 1);
  CHECK(g.eval(Rat(3)) == 0);
}

TEST_CASE("step arithmetic is pointwise") {
  const StepFunction f = StepFunction::from_pieces(
      Rat(0), {Rat(1), Rat(3)}, {Rat(2), Rat(-1)}, Rat(0));
  const StepFunction g = StepFunction::indicator(Rat(2), Rat(4));
  const StepFunction s = f + g;
  for (const Rat x : {rat(1, 2), rat(3, 2), rat(5, 2), rat(7, 2), Rat(5)})
    CHECK(s.eval(x) == f.eval(x) + g.eval(x));
  CHECK(abs(f).eval(Rat(2)) == 1);
  CHECK(mul(f, g).eval(rat(5, 2)) == -1);
  CHECK(pointwise_max(f, g).eval(rat(5, 2)) == 1);
  CHECK(pointwise_min(f, g).eval(rat(5, 2)) == -1);
  CHECK(step_leq(pointwise_min(f, g), f));
  CHECK_FALSE(step_leq(f, g));
}

TEST_CASE("div0 treats 0/0 as 0 and rejects x/0") {
  const StepFunction num = StepFunction::indicator(Rat(0), Rat(1));
  const StepFunction den = StepFunction::indicator(Rat(0), Rat(1));
  CHECK(div0(num, den) == den);
  const StepFunction wide = StepFunction::indicator(Rat(0), Rat(2));
  CHECK_THROWS_AS(div0(wide, den), division_error);
}

TEST_CASE("piecewise linear evaluation and slopes") {
  const PiecewiseLinear p({{Rat(0), Rat(0)}, {Rat(2), Rat(2)}, {Rat(4), Rat(3)}},
                          Rat(0));
  CHECK(p.eval(Rat(1)) == 1);
  CHECK(p.eval(Rat(3)) == rat(5, 2));
  CHECK(p.eval(Rat(10)) == 3);
  CHECK(p.slopes() == std::vector<Rat>{Rat(1), rat(1, 2), Rat(0)});
  CHECK(p.is_nondecreasing());
  CHECK(p.is_concave());
  CHECK_THROWS_AS(p.eval(Rat(-1)), domain_mismatch);
}

TEST_CASE("piecewise linear canonicalization drops aligned vertices") {
  const PiecewiseLinear p({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}},
                          Rat(1));
  CHECK(p.vertices.size() == 1);
  CHECK(p.final_slope == 1);
}

TEST_CASE("pl_min inserts crossings including final rays") {
  const PiecewiseLinear f({{Rat(0), Rat(0)}}, Rat(1));        // t
  const PiecewiseLinear g({{Rat(0), Rat(3)}}, Rat(0));        // 3
  const PiecewiseLinear m = pl_min(f, g);                     // min(t, 3)
  CHECK(m.eval(Rat(2)) == 2);
  CHECK(m.eval(Rat(3)) == 3);
  CHECK(m.eval(Rat(7)) == 3);
  CHECK(m.vertices.back() == PLPoint{Rat(3), Rat(3)});
  CHECK(pl_leq(m, f));
  CHECK(pl_leq(m, g));
}

TEST_CASE("pl_add and pl_scale agree with evaluation") {
  const PiecewiseLinear f({{Rat(0), Rat(0)}, {Rat(1), Rat(2)}}, rat(1, 2));
  const PiecewiseLinear g({{Rat(0), Rat(1)}, {Rat(3), Rat(1)}}, Rat(1));
  const PiecewiseLinear s = pl_add(f, g);
  for (const Rat x : {Rat(0), rat(1, 2), Rat(2), Rat(5)})
    CHECK(s.eval(x) == f.eval(x) + g.eval(x));
  CHECK(pl_scale(rat(2, 3), f).eval(Rat(1)) == rat(4, 3));
}

TEST_CASE("pl_derivative recovers the slopes as a step function") {
  const PiecewiseLinear p({{Rat(0), Rat(0)}, {Rat(2), Rat(2)}, {Rat(4), Rat(3)}},
                          Rat(0));
  const StepFunction d = pl_derivative(p);
  CHECK(d.eval(Rat(1)) == 1);
  CHECK(d.eval(Rat(3)) == rat(1, 2));
  CHECK(d.eval(Rat(9)) == 0);
  CHECK(*d.origin == 0);
}
