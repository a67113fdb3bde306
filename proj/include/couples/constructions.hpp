#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "couples/calculus.hpp"
#include "couples/measure.hpp"
#include "couples/piecewise_linear.hpp"
#include "couples/rational.hpp"
#include "couples/step_function.hpp"

namespace couples {

inline bool step_nonincreasing(const StepFunction& f) {
  for (std::size_t i = 0; i + 1 < f.values.size(); ++i)
    if (f.values[i] < f.values[i + 1]) return false;
  if (!f.values.empty() && f.values.back() < f.tail) return false;
  return true;
}

namespace detail {

// Canonical step function taking vals[i] on the region of items[i], with the
// left-fill convention: each value persists to the right until the next item,
// zero before the first item.
inline StepFunction from_item_values(const std::vector<MassItem>& items,
                                     const std::vector<Rat>& vals,
                                     std::optional<Rat> origin) {
  StepFunction out;
  out.origin = std::move(origin);
  Rat cur(0);
  bool any = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Rat& v = vals[i];
    const MassItem& it = items[i];
    if (any && v == cur) continue;
    if (!out.breakpoints.empty() && out.breakpoints.back() == it.x) {
      if (v != cur)
        throw not_representable(
            "measure class not representable as a right-continuous step "
            "function (atom adjacent to a segment start)");
      continue;
    }
    if (!(!any && out.origin && *out.origin == it.x)) {
      out.breakpoints.push_back(it.x);
      out.values.push_back(cur);
    }
    cur = v;
    any = true;
  }
  out.tail = cur;
  out.canonicalize();
  return out;
}

}  // namespace detail

// Least decreasing majorant of |f| for Lebesgue measure on (0, oo):
// the running maximum of |f| over [x, oo).
inline StepFunction least_decreasing_majorant(const StepFunction& f) {
  if (!f.origin || *f.origin != 0)
    throw domain_mismatch("least_decreasing_majorant expects (0, oo)");
  StepFunction g = abs(f);
  Rat cur = g.tail;
  for (std::size_t i = g.values.size(); i-- > 0;) {
    if (g.values[i] < cur) g.values[i] = cur;
    cur = g.values[i];
  }
  g.canonicalize();
  return g;
}

// Least decreasing majorant of |f| up to m-null sets: the m-essential
// supremum of |f| over [x, oo), as a canonical left-fill representative.
inline StepFunction least_decreasing_majorant(const StepFunction& f,
                                              const BorelMeasure& m) {
  const auto items = mass_items(m, f.breakpoints);
  if (items.empty()) return StepFunction::constant(Rat(0), f.origin);
  std::vector<Rat> vals(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    Rat v = detail::item_value(f, items[i]);
    vals[i] = v < 0 ? Rat(-v) : v;
  }
  for (std::size_t i = items.size() - 1; i-- > 0;)
    if (vals[i] < vals[i + 1]) vals[i] = vals[i + 1];
  return detail::from_item_values(items, vals, f.origin);
}

// Least concave majorant of a piecewise linear function on its domain.
inline PiecewiseLinear least_concave_majorant(const PiecewiseLinear& F) {
  auto slope = [](const PLPoint& a, const PLPoint& b) {
    return (b.y - a.y) / (b.x - a.x);
  };
  std::vector<PLPoint> h;
  for (const PLPoint& p : F.vertices) {
    while (h.size() >= 2 &&
           slope(h[h.size() - 2], h.back()) <= slope(h.back(), p))
      h.pop_back();
    h.push_back(p);
  }
  // the majorant must dominate the final ray of slope F.final_slope, and the
  // least one ends with exactly that slope
  while (h.size() >= 2 && slope(h[h.size() - 2], h.back()) <= F.final_slope)
    h.pop_back();
  return PiecewiseLinear(std::move(h), F.final_slope);
}

// Level function of f for Lebesgue measure on (0, oo): the derivative of the
// least concave majorant of the primitive of |f|.
inline StepFunction level_function(const StepFunction& f) {
  return pl_derivative(least_concave_majorant(primitive(f)));
}

namespace detail {

struct LambdaItems {
  std::vector<MassItem> items;
  std::vector<Rat> offsets;  // cumulative mass at the left end of each item
};

inline LambdaItems lambda_items(const BorelMeasure& m,
                                const std::vector<Rat>& cuts) {
  LambdaItems li;
  li.items = mass_items(m, cuts);
  Rat t(0);
  for (const auto& it : li.items) {
    li.offsets.push_back(t);
    const Ext mass = it.mass();
    if (!mass.finite()) break;
    t += mass.value();
  }
  return li;
}

}  // namespace detail

// Level function with respect to m, built directly: concave hull of the
// primitive in the Lambda parameter, slopes mapped back to the line.
inline StepFunction level_function(const StepFunction& f,
                                   const BorelMeasure& m) {
  const auto li = detail::lambda_items(m, f.breakpoints);
  if (li.items.empty()) return StepFunction::constant(Rat(0), f.origin);
  const PiecewiseLinear G = least_concave_majorant(primitive(f, m));
  // hull vertices sit at item boundaries, so the derivative of G is constant
  // on the Lambda image of every item
  std::vector<Rat> vals(li.items.size());
  const StepFunction g = pl_derivative(G);
  for (std::size_t i = 0; i < li.items.size(); ++i)
    vals[i] = g.eval(li.offsets[i]);
  return detail::from_item_values(li.items, vals, f.origin);
}

// Level function via the retract: push forward, take the Lebesgue level
// function, pull back.  Agrees with the direct construction.
inline StepFunction level_function_transfer(const StepFunction& f,
                                            const BorelMeasure& m) {
  return E_lambda_inverse(m, level_function(E_lambda(m, abs(f))));
}

// Check concavity of F in its own parameter by the three-point definition:
// every vertex must lie on or above the chord of its neighbours, including a
// probe point on the final ray.  Returns a violating triple of abscissae.
inline std::optional<std::array<Rat, 3>> concavity_witness(
    const PiecewiseLinear& F) {
  std::vector<PLPoint> pts = F.vertices;
  pts.push_back({pts.back().x + 1, pts.back().y + F.final_slope});
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const Rat lhs =
            (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
        const Rat rhs =
            (pts[k].y - pts[i].y) * (pts[j].x - pts[i].x);
        if (lhs < rhs) return std::array<Rat, 3>{pts[i].x, pts[j].x, pts[k].x};
      }
  return std::nullopt;
}

// f is lambda-concave when its primitive with respect to m is concave as a
// function of the Lambda parameter.
inline std::optional<std::array<Rat, 3>> lambda_concavity_witness(
    const StepFunction& f, const BorelMeasure& m) {
  return concavity_witness(primitive(f, m));
}

// f**(t) = (1/t) integral of f* over (0, t)
inline Rat star_star(const StepFunction& f, const BorelMeasure& m,
                     const Rat& t) {
  if (t <= 0) throw domain_mismatch("star_star needs t > 0");
  return primitive(rearrange(f, m)).eval(t) / t;
}

}  // namespace couples
