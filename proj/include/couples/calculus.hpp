#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "couples/measure.hpp"
#include "couples/piecewise_linear.hpp"
#include "couples/rational.hpp"
#include "couples/step_function.hpp"

namespace couples {

// The distribution function s -> m{ |f| > s }: a decreasing, right-continuous
// step map on [0, oo) whose values may be infinite.
struct DistFn {
  std::vector<Rat> cuts;    // cuts[0] = 0, strictly increasing
  std::vector<Ext> masses;  // masses[i] on [cuts[i], cuts[i+1}); last to +oo

  Ext eval(const Rat& s) const {
    if (s < 0) throw domain_mismatch("distribution argument below 0");
    auto it = std::upper_bound(cuts.begin(), cuts.end(), s);
    return masses[static_cast<std::size_t>(it - cuts.begin()) - 1];
  }

  friend bool operator==(const DistFn& a, const DistFn& b) {
    return a.cuts == b.cuts && a.masses == b.masses;
  }
};

inline DistFn distribution(const StepFunction& f, const BorelMeasure& m) {
  const auto items = mass_items(m, f.breakpoints);
  std::vector<Rat> levels{Rat(0)};
  for (const auto& it : items) {
    Rat v = detail::item_value(f, it);
    if (v < 0) v = -v;
    if (v > 0) levels.push_back(v);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  DistFn d;
  for (const Rat& s : levels) {
    Ext mass{Rat(0)};
    for (const auto& it : items) {
      Rat v = detail::item_value(f, it);
      if (v < 0) v = -v;
      if (v > s) mass += it.mass();
    }
    if (!d.masses.empty() && d.masses.back() == mass) continue;
    d.cuts.push_back(s);
    d.masses.push_back(mass);
  }
  if (d.cuts.empty() || d.cuts[0] != 0) {
    // f vanishes m-a.e.
    d.cuts.insert(d.cuts.begin(), Rat(0));
    d.masses.insert(d.masses.begin(), Ext(Rat(0)));
  }
  return d;
}

// Decreasing rearrangement of f with respect to m, as a step function on
// (0, oo) equimeasurable (against Lebesgue measure) with f.
inline StepFunction rearrange(const StepFunction& f, const BorelMeasure& m) {
  const DistFn d = distribution(f, m);
  // level s_k occupies positions [M_k, M_{k-1}), M_{-1} = +oo; walking k from
  // the top level down yields the pieces of f* left to right
  StepFunction out;
  out.origin = Rat(0);
  out.tail = Rat(0);
  for (std::size_t k = d.cuts.size(); k-- > 0;) {
    const Ext hi = k == 0 ? Ext::inf() : d.masses[k - 1];
    const Ext& lo = d.masses[k];
    if (!(lo < hi)) continue;
    if (!hi.finite()) {
      out.tail = d.cuts[k];
      break;
    }
    out.breakpoints.push_back(hi.value());
    out.values.push_back(d.cuts[k]);
  }
  out.canonicalize();
  return out;
}

// Primitive x -> integral of |f| over (0, x) with respect to Lebesgue measure
// on the half line; continuous piecewise linear.
inline PiecewiseLinear primitive(const StepFunction& f) {
  if (!f.origin || *f.origin != 0)
    throw domain_mismatch("primitive expects a function on (0, oo)");
  std::vector<PLPoint> v{{Rat(0), Rat(0)}};
  Rat acc(0);
  Rat prev(0);
  for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
    const Rat& val = f.values[i];
    acc += (val < 0 ? Rat(-val) : val) * (f.breakpoints[i] - prev);
    prev = f.breakpoints[i];
    v.push_back({prev, acc});
  }
  const Rat fs = f.tail < 0 ? Rat(-f.tail) : f.tail;
  return PiecewiseLinear(std::move(v), fs);
}

// Primitive of |f| with respect to m, in Lambda-parameter form: the value at
// t = Lambda(x) is the integral of |f| over (-inf, x].  Piecewise linear and
// continuous in t; atoms of m become segments of slope |f(atom)|.
inline PiecewiseLinear primitive(const StepFunction& f, const BorelMeasure& m) {
  return primitive(E_lambda(m, abs(f)));
}

}  // namespace couples
