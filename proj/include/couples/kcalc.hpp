#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "couples/calculus.hpp"
#include "couples/constructions.hpp"
#include "couples/measure.hpp"
#include "couples/piecewise_linear.hpp"
#include "couples/rational.hpp"
#include "couples/step_function.hpp"

namespace couples {

enum class SpaceKind { L1, Linf, L1tilde, LinfLevel };
enum class CoupleKind { L1_Linf, L1tilde_Linf, L1_LinfLevel };

struct CoupleTag {
  CoupleKind kind = CoupleKind::L1_Linf;
  BorelMeasure measure = lebesgue_halfline();
};

// ---------------------------------------------------------------------------
// Space norms

inline Ext space_norm(const StepFunction& f, SpaceKind space,
                      const BorelMeasure& m) {
  switch (space) {
    case SpaceKind::L1:
      return integrate_abs(f, m);
    case SpaceKind::Linf:
      return Ext(ess_sup_abs(f, m));
    case SpaceKind::L1tilde:
      return integrate_abs(least_decreasing_majorant(f, m), m);
    case SpaceKind::LinfLevel: {
      // sup over x of (integral of |f| up to x) / Lambda(x), taken in the
      // Lambda parameter where the primitive is piecewise linear from (0,0)
      const PiecewiseLinear F = primitive(f, m);
      Rat best(0);
      const auto s = F.slopes();
      if (!s.empty() && s.front() > best) best = s.front();
      if (F.final_slope > best) best = F.final_slope;
      for (const auto& p : F.vertices) {
        if (p.x <= 0) continue;
        const Rat r = p.y / p.x;
        if (r > best) best = r;
      }
      return Ext(best);
    }
  }
  throw couples_error("unknown space");
}

inline Ext space_norm(const StepFunction& f, SpaceKind space) {
  return space_norm(f, space, lebesgue_halfline());
}

// ---------------------------------------------------------------------------
// K-functionals

// the decreasing projection whose plain (L1, Linf) profile computes the
// couple's K-functional
inline StepFunction couple_projection(const StepFunction& f,
                                      const CoupleTag& couple) {
  switch (couple.kind) {
    case CoupleKind::L1_Linf:
      return f;
    case CoupleKind::L1tilde_Linf:
      return least_decreasing_majorant(f, couple.measure);
    case CoupleKind::L1_LinfLevel:
      return level_function(f, couple.measure);
  }
  throw couples_error("unknown couple");
}

// K(t, f) for all t at once: the primitive of the decreasing rearrangement of
// the projected function.  Nonnegative, nondecreasing, concave, K(0) = 0.
inline PiecewiseLinear k_profile(const StepFunction& f,
                                 const CoupleTag& couple) {
  const StepFunction proj = couple_projection(f, couple);
  return primitive(rearrange(proj, couple.measure));
}

inline Rat k_functional(const Rat& t, const StepFunction& f,
                        const CoupleTag& couple) {
  if (t < 0) throw domain_mismatch("K-functional needs t >= 0");
  return k_profile(f, couple).eval(t);
}

// Optimal decomposition f = f0 + f1 attaining K(t, f; L1, Linf): truncate at
// the height s = f*(t).
inline std::pair<StepFunction, StepFunction> optimal_split(
    const Rat& t, const StepFunction& f, const CoupleTag& couple) {
  if (couple.kind != CoupleKind::L1_Linf)
    throw domain_mismatch("optimal_split only splits the (L1, Linf) couple");
  if (t < 0) throw domain_mismatch("optimal_split needs t >= 0");
  if (t == 0) return {StepFunction::constant(Rat(0), f.origin), f};
  const Rat s = rearrange(f, couple.measure).eval(t);
  const StepFunction f1 = detail::map(f, [&](const Rat& v) {
    const Rat a = v < 0 ? Rat(-v) : v;
    const Rat c = a < s ? a : s;
    return v < 0 ? Rat(-c) : c;
  });
  return {f - f1, f1};
}

// ---------------------------------------------------------------------------
// K-method norms

struct PhiSpec {
  enum class Kind { discrete_sup, power_weight };
  Kind kind = Kind::discrete_sup;
  std::vector<std::pair<Rat, Rat>> points;  // discrete_sup: (t_i, w_i), w_i > 0
  Rat theta;                                // power_weight: 0 < theta < 1
  std::optional<long> q;                    // power_weight: nullopt = infinity

  void validate() const {
    if (kind == Kind::discrete_sup) {
      if (points.empty()) throw couples_error("empty discrete parameter");
      for (const auto& [t, w] : points)
        if (t <= 0 || w <= 0)
          throw couples_error("discrete parameter needs t, w > 0");
    } else {
      if (!(theta > 0 && theta < 1))
        throw couples_error("power weight needs 0 < theta < 1");
      if (q && *q < 1) throw couples_error("power weight needs q >= 1");
    }
  }
};

struct KMethodNorm {
  bool exact = false;
  Rat exact_value;  // set when exact
  double value = 0;
};

namespace detail {

inline double binom(long n, long k) {
  double r = 1;
  for (long i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
  return r;
}

// integral of (alpha + beta t)^q t^(-theta q - 1) over [lo, hi], 0 < lo < hi
inline double power_piece_integral(double alpha, double beta, long q,
                                   double theta, double lo, double hi) {
  double total = 0;
  for (long k = 0; k <= q; ++k) {
    double coef = binom(q, k);
    if (alpha == 0 && k < q) continue;
    if (beta == 0 && k > 0) continue;
    coef *= std::pow(alpha, double(q - k)) * std::pow(beta, double(k));
    if (coef == 0) continue;
    const double e = double(k) - theta * double(q);  // exponent after +1
    if (e == 0)
      total += coef * (std::log(hi) - std::log(lo));
    else
      total += coef * (std::pow(hi, e) - std::pow(lo, e)) / e;
  }
  return total;
}

}  // namespace detail

inline KMethodNorm k_method_norm(const StepFunction& f, const CoupleTag& couple,
                                 const PhiSpec& phi) {
  phi.validate();
  const PiecewiseLinear K = k_profile(f, couple);
  KMethodNorm out;
  if (phi.kind == PhiSpec::Kind::discrete_sup) {
    Rat best(0);
    for (const auto& [t, w] : phi.points) {
      const Rat v = w * K.eval(t);
      if (v > best) best = v;
    }
    out.exact = true;
    out.exact_value = best;
    out.value = to_double(best);
    return out;
  }

  const double theta = to_double(phi.theta);
  const auto slopes = K.slopes();
  if (K.final_slope > 0)
    throw not_integrable("K-profile grows linearly; power-weight norm diverges");

  if (!phi.q) {
    // sup of t^(-theta) K(t); on each piece the extrema sit at the endpoints
    // or at the interior critical point
    double best = 0;
    for (std::size_t i = 0; i + 1 < K.vertices.size(); ++i) {
      const double x0 = to_double(K.vertices[i].x);
      const double x1 = to_double(K.vertices[i + 1].x);
      const double b = to_double(slopes[i]);
      const double a = to_double(K.vertices[i].y) - b * x0;
      auto val = [&](double t) { return (a + b * t) * std::pow(t, -theta); };
      if (x0 > 0) best = std::max(best, val(x0));
      best = std::max(best, val(x1));
      if (b > 0) {
        const double tc = theta * a / (b * (1 - theta));
        if (tc > x0 && tc < x1) best = std::max(best, val(tc));
      }
    }
    {
      const double xn = to_double(K.vertices.back().x);
      const double yn = to_double(K.vertices.back().y);
      if (xn > 0) best = std::max(best, yn * std::pow(xn, -theta));
    }
    out.value = best;
    return out;
  }

  const long q = *phi.q;
  double total = 0;
  for (std::size_t i = 0; i + 1 < K.vertices.size(); ++i) {
    const double x0 = to_double(K.vertices[i].x);
    const double x1 = to_double(K.vertices[i + 1].x);
    const double b = to_double(slopes[i]);
    const double a = to_double(K.vertices[i].y) - b * x0;
    total += detail::power_piece_integral(a, b, q, theta, x0 == 0 ? 0.0 : x0,
                                          x1);
  }
  // first piece starts at t = 0 with K(0) = 0: the k = q term integrates to
  // b^q x1^(q - theta q) / (q - theta q), which power_piece_integral handles
  // as long as lo = 0 contributes nothing; pow(0, e) = 0 for e > 0
  {
    const double xn = to_double(K.vertices.back().x);
    const double yn = to_double(K.vertices.back().y);
    if (yn > 0) {
      if (xn <= 0)
        throw not_integrable("constant K-profile; power-weight norm diverges");
      total += std::pow(yn, double(q)) * std::pow(xn, -theta * double(q)) /
               (theta * double(q));
    }
  }
  out.value = std::pow(total, 1.0 / double(q));
  return out;
}

// ---------------------------------------------------------------------------
// K-divisibility extraction (couple (L1tilde, Linf), Lebesgue)

inline std::vector<StepFunction> kdiv_extract(
    const std::vector<PiecewiseLinear>& phis, const StepFunction& g) {
  const PiecewiseLinear K =
      k_profile(g, CoupleTag{CoupleKind::L1tilde_Linf, lebesgue_halfline()});
  std::vector<PiecewiseLinear> clipped;
  for (const auto& phi : phis) {
    if (phi.domain_start() != 0 || phi.eval(Rat(0)) != 0)
      throw domain_mismatch("each phi must start from (0, 0)");
    if (!phi.is_concave() || !phi.is_nondecreasing())
      throw domain_mismatch("each phi must be nonnegative and concave");
    clipped.push_back(pl_min(K, phi));
  }
  // the clipped family still dominates: at any t, either every phi_j sits at
  // or below K and the original sum bound applies, or some clipped value
  // equals K(t) outright
  PiecewiseLinear sum(std::vector<PLPoint>{{Rat(0), Rat(0)}}, Rat(0));
  for (const auto& c : clipped) sum = pl_add(sum, c);
  for (const Rat& x : detail::merged_xs(K, sum))
    if (K.eval(x) > sum.eval(x))
      throw domination_error("phi family does not dominate the K-profile", x);
  if (sum.final_slope < K.final_slope) {
    Rat x = detail::merged_xs(K, sum).back() + 1;
    while (K.eval(x) <= sum.eval(x)) x += x;
    throw domination_error("phi family does not dominate the K-profile", x);
  }
  std::vector<StepFunction> out;
  for (const auto& c : clipped) out.push_back(pl_derivative(c));
  return out;
}

}  // namespace couples
