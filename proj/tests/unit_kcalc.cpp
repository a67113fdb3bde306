#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "couples/kcalc.hpp"
#include "couples/verify.hpp"

using namespace couples;

namespace {

const CoupleTag kL1Linf{CoupleKind::L1_Linf, lebesgue_halfline()};
const CoupleTag kTilde{CoupleKind::L1tilde_Linf, lebesgue_halfline()};
const CoupleTag kLevel{CoupleKind::L1_LinfLevel, lebesgue_halfline()};

// midpoint quadrature of (t^-theta K(t))^q dt/t on a geometric grid per
// linear piece (the integrand is power-like, so log-uniform cells behave),
// plus the exact tail integral where K is constant
double quad_oracle(const PiecewiseLinear& K, double theta, long q) {
  double total = 0;
  auto integrand = [&](double t, double a, double b) {
    return std::pow(a + b * t, double(q)) * std::pow(t, -theta * double(q) - 1);
  };
  const auto slopes = K.slopes();
  for (std::size_t i = 0; i + 1 < K.vertices.size(); ++i) {
    const double x0 = to_double(K.vertices[i].x);
    const double x1 = to_double(K.vertices[i + 1].x);
    const double b = to_double(slopes[i]);
    const double a = to_double(K.vertices[i].y) - b * x0;
    const double lo = x0 == 0 ? x1 * 1e-9 : x0;
    const int n = 40000;
    const double r = std::pow(x1 / lo, 1.0 / n);
    double left = lo;
    for (int k = 0; k < n; ++k) {
      const double right = k + 1 == n ? x1 : left * r;
      total += integrand(std::sqrt(left * right), a, b) * (right - left);
      left = right;
    }
    if (x0 == 0) {
      // below the clip the piece is b t: the sliver integrates in closed form
      const double e = double(q) - theta * double(q);
      total += std::pow(b, double(q)) * std::pow(lo, e) / e;
    }
  }
  const double xn = to_double(K.vertices.back().x);
  const double yn = to_double(K.vertices.back().y);
  if (yn > 0 && xn > 0)
    total += std::pow(yn, double(q)) * std::pow(xn, -theta * double(q)) /
             (theta * double(q));
  return std::pow(total, 1.0 / double(q));
}

}  // namespace

TEST_CASE("space norms of the paper block") {
  const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
  CHECK(space_norm(b, SpaceKind::L1) == Ext(Rat(2)));
  CHECK(space_norm(b, SpaceKind::Linf) == Ext(Rat(1)));
  CHECK(space_norm(b, SpaceKind::L1tilde) == Ext(Rat(3)));
  CHECK(space_norm(b, SpaceKind::LinfLevel) == Ext(rat(2, 3)));
}

TEST_CASE("K-profiles of the paper block in all three couples") {
  const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
  const PiecewiseLinear p1 = k_profile(b, kL1Linf);   // min(t, 2)
  const PiecewiseLinear p2 = k_profile(b, kTilde);    // min(t, 3)
  const PiecewiseLinear p3 = k_profile(b, kLevel);    // (2/3) min(t, 3)
  for (const Rat t : {Rat(0), Rat(1), Rat(2), Rat(3), Rat(10)}) {
    CHECK(p1.eval(t) == std::min(t, Rat(2)));
    CHECK(p2.eval(t) == std::min(t, Rat(3)));
    CHECK(p3.eval(t) == rat(2, 3) * std::min(t, Rat(3)));
  }
  CHECK(k_functional(rat(5, 2), b, kL1Linf) == 2);
  CHECK_THROWS_AS(k_functional(Rat(-1), b, kL1Linf), domain_mismatch);
}

TEST_CASE("optimal split attains the K-functional") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    const StepFunction f = random_step(rng);
    const Rat t = rat(1 + int(k % 7), 2);
    const auto [f0, f1] = optimal_split(t, f, kL1Linf);
    CHECK(f0 + f1 == f);
    const Ext l1 = space_norm(f0, SpaceKind::L1);
    REQUIRE(l1.finite());
    CHECK(l1.value() + t * space_norm(f1, SpaceKind::Linf).value() ==
          k_functional(t, f, kL1Linf));
  }
  CHECK_THROWS_AS(optimal_split(Rat(1), StepFunction::constant(Rat(0)), kTilde),
                  domain_mismatch);
}

TEST_CASE("discrete sup K-method norm is exact") {
  const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
  PhiSpec phi;
  phi.kind = PhiSpec::Kind::discrete_sup;
  phi.points = {{Rat(1), Rat(2)}, {Rat(4), rat(1, 2)}};
  const KMethodNorm n = k_method_norm(b, kL1Linf, phi);
  CHECK(n.exact);
  CHECK(n.exact_value == 2);  // max(2 K(1), K(4)/2) = max(2, 1)
}

TEST_CASE("power weight spot value sqrt(2)") {
  const StepFunction g = StepFunction::indicator(Rat(0), Rat(1));
  PhiSpec phi;
  phi.kind = PhiSpec::Kind::power_weight;
  phi.theta = rat(1, 2);
  phi.q = 2;
  const KMethodNorm n = k_method_norm(g, kL1Linf, phi);
  CHECK_FALSE(n.exact);
  CHECK(std::abs(n.value - std::sqrt(2.0)) < 1e-12 * std::sqrt(2.0));
  const double o = quad_oracle(k_profile(g, kL1Linf), 0.5, 2);
  CHECK(std::abs(n.value - o) < 1e-9);
}

TEST_CASE("power weight agrees with quadrature on random functions") {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 20; ++k) {
    const StepFunction f = random_step(rng);
    if (space_norm(f, SpaceKind::L1) == Ext(Rat(0))) continue;
    PhiSpec phi;
    phi.kind = PhiSpec::Kind::power_weight;
    phi.theta = rat(1 + int(k % 3), 4);
    phi.q = 1 + long(k % 4);
    const KMethodNorm n = k_method_norm(f, kL1Linf, phi);
    const double o = quad_oracle(k_profile(f, kL1Linf), to_double(phi.theta),
                                 *phi.q);
    CHECK(std::abs(n.value - o) <= 1e-5 * (1 + std::abs(o)));
  }
}

TEST_CASE("power weight q = infinity takes the sup") {
  const StepFunction g = StepFunction::indicator(Rat(0), Rat(1));
  PhiSpec phi;
  phi.kind = PhiSpec::Kind::power_weight;
  phi.theta = rat(1, 2);
  // sup t^-1/2 min(t, 1) = 1 at t = 1
  CHECK(std::abs(k_method_norm(g, kL1Linf, phi).value - 1.0) < 1e-12);
}

TEST_CASE("power weight diverges on a linearly growing profile") {
  StepFunction f;
  f.origin = Rat(0);
  f.tail = 1;
  PhiSpec phi;
  phi.kind = PhiSpec::Kind::power_weight;
  phi.theta = rat(1, 2);
  phi.q = 2;
  CHECK_THROWS_AS(k_method_norm(f, kL1Linf, phi), not_integrable);
}

TEST_CASE("phi validation") {
  PhiSpec phi;
  phi.kind = PhiSpec::Kind::discrete_sup;
  CHECK_THROWS_AS(phi.validate(), couples_error);
  phi.kind = PhiSpec::Kind::power_weight;
  phi.theta = Rat(1);
  CHECK_THROWS_AS(phi.validate(), couples_error);
  phi.theta = rat(1, 2);
  phi.q = 0;
  CHECK_THROWS_AS(phi.validate(), couples_error);
}

TEST_CASE("kdiv extraction on the identity family") {
  const StepFunction g = StepFunction::from_pieces(Rat(0), {Rat(1), Rat(3)},
                                                   {Rat(2), Rat(1)}, Rat(0));
  const PiecewiseLinear K = k_profile(g, kTilde);
  const auto fs = kdiv_extract({K}, g);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0] == least_decreasing_majorant(g));
}

TEST_CASE("kdiv extraction rejects a family below the profile") {
  const StepFunction g = StepFunction::indicator(Rat(0), Rat(2));
  const PiecewiseLinear K = k_profile(g, kTilde);
  try {
    kdiv_extract({pl_scale(rat(1, 2), K)}, g);
    FAIL("expected domination_error");
  } catch (const domination_error& e) {
    CHECK(K.eval(e.witness) > pl_scale(rat(1, 2), K).eval(e.witness));
  }
}

TEST_CASE("kdiv extraction rejects a non-concave phi") {
  const StepFunction g = StepFunction::indicator(Rat(0), Rat(2));
  const PiecewiseLinear bad({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}, Rat(5));
  CHECK_THROWS_AS(kdiv_extract({bad}, g), domain_mismatch);
}
