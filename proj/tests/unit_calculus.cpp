#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "couples/calculus.hpp"
#include "couples/constructions.hpp"
#include "couples/verify.hpp"

using namespace couples;

namespace {

// m{ |f| > s } computed directly from the super-level pieces of f
Ext dist_oracle(const StepFunction& f, const BorelMeasure& m, const Rat& s) {
  Ext total{Rat(0)};
  for (const auto& p : pieces_of(f)) {
    const Rat a = p.value < 0 ? Rat(-p.value) : p.value;
    if (a > s) total += measure_of(m, p.lo, p.hi);
  }
  return total;
}

}  // namespace

TEST_CASE("distribution of the two-block instance") {
  const StepFunction g = StepFunction::from_pieces(Rat(0), {Rat(1), Rat(3)},
                                                   {Rat(2), Rat(1)}, Rat(0));
  const DistFn d = distribution(g, lebesgue_halfline());
  CHECK(d.eval(rat(1, 2)) == Ext(Rat(3)));
  CHECK(d.eval(Rat(1)) == Ext(Rat(1)));
  CHECK(d.eval(rat(3, 2)) == Ext(Rat(1)));
  CHECK(d.eval(Rat(2)) == Ext(Rat(0)));
  CHECK(d.cuts == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
}

TEST_CASE("distribution agrees with the super-level oracle") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    StepParams sp;
    sp.whole_line = true;
    const StepFunction f = random_step(rng, sp);
    const BorelMeasure m = random_measure(rng);
    const DistFn d = distribution(f, m);
    std::vector<Rat> probes = d.cuts;
    for (const Rat& c : d.cuts) probes.push_back(c + rat(1, 7));
    for (const Rat& s : probes) CHECK(d.eval(s) == dist_oracle(f, m, s));
  }
}

TEST_CASE("rearrangement of indicators and blocks") {
  const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
  CHECK(rearrange(b, lebesgue_halfline()) ==
        StepFunction::indicator(Rat(0), Rat(2)));
  const StepFunction g = StepFunction::from_pieces(Rat(0), {Rat(1), Rat(3)},
                                                   {Rat(2), Rat(1)}, Rat(0));
  CHECK(rearrange(g, lebesgue_halfline()) ==
        StepFunction::from_pieces(Rat(0), {Rat(1), Rat(3)}, {Rat(2), Rat(1)},
                                  Rat(0)));
}

TEST_CASE("rearrangement is decreasing and equimeasurable") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    StepParams sp;
    sp.whole_line = true;
    const StepFunction f = random_step(rng, sp);
    const BorelMeasure m = random_measure(rng);
    const StepFunction fs = rearrange(f, m);
    CHECK(step_nonincreasing(fs));
    CHECK(distribution(f, m) == distribution(fs, lebesgue_halfline()));
  }
}

TEST_CASE("rearrangement with an everywhere-positive tail") {
  StepFunction f;  // 3 on (0, 1), 1 beyond: f* = f, infinite sublevel mass
  f.origin = Rat(0);
  f.breakpoints = {Rat(1)};
  f.values = {Rat(3)};
  f.tail = 1;
  CHECK(rearrange(f, lebesgue_halfline()) == f);
}

TEST_CASE("primitive matches interval integration") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const StepFunction f = random_step(rng);
    const PiecewiseLinear F = primitive(f);
    for (const Rat x : {rat(1, 3), Rat(1), rat(7, 2), Rat(20)})
      CHECK(F.eval(x) == lebesgue_integral_on(abs(f), Rat(0), x));
    CHECK(F.eval(Rat(0)) == 0);
    CHECK(F.is_nondecreasing());
  }
}

TEST_CASE("lambda primitive lives in the Lambda parameter") {
  BorelMeasure m;
  m.atoms = {{Rat(2), Rat(3)}};
  m.segments = {{Rat(0), Rat(1), Rat(1)}};
  StepFunction f;
  f.origin = std::nullopt;
  f.breakpoints = {Rat(2)};
  f.values = {Rat(1)};
  f.tail = 5;
  const PiecewiseLinear F = primitive(f, m);
  // segment [0,1) mass 1 at |f| = 1, then the atom: mass 3 at |f| = 5
  CHECK(F.eval(Rat(1)) == 1);
  CHECK(F.eval(Rat(4)) == 16);
  CHECK(F.final_slope == 0);
}

TEST_CASE("least concave majorant characterization") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const StepFunction f = random_step(rng);
    const PiecewiseLinear F = primitive(f);
    const PiecewiseLinear H = least_concave_majorant(F);
    CHECK(H.is_concave());
    CHECK(pl_leq(F, H));
    // minimality: every hull vertex touches F
    for (const auto& v : H.vertices) CHECK(v.y == F.eval(v.x));
    CHECK(H.final_slope == F.final_slope);
    CHECK(concavity_witness(H) == std::nullopt);
  }
}

TEST_CASE("concavity witness flags a convex kink") {
  const PiecewiseLinear V({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(2)}},
                          Rat(2));
  const auto w = concavity_witness(V);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 0);
  CHECK((*w)[1] == 1);
}

TEST_CASE("level function of the paper block") {
  const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
  CHECK(level_function(b) == StepFunction::from_pieces(Rat(0), {Rat(3)},
                                                       {rat(2, 3)}, Rat(0)));
}

TEST_CASE("majorant of the paper block") {
  const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
  CHECK(least_decreasing_majorant(b) == StepFunction::indicator(Rat(0), Rat(3)));
}

TEST_CASE("lambda level function against the transfer path") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    StepParams sp;
    sp.whole_line = true;
    const StepFunction f = random_step(rng, sp);
    const BorelMeasure m = random_measure(rng);
    CHECK(level_function(f, m) == level_function_transfer(f, m));
  }
}

TEST_CASE("star_star is the running average of the rearrangement") {
  const StepFunction g = StepFunction::indicator(Rat(0), Rat(1));
  CHECK(star_star(g, lebesgue_halfline(), rat(1, 2)) == 1);
  CHECK(star_star(g, lebesgue_halfline(), Rat(2)) == rat(1, 2));
  CHECK_THROWS_AS(star_star(g, lebesgue_halfline(), Rat(0)), domain_mismatch);
}
