#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "couples/rational.hpp"

namespace couples {

// A function with finitely many constant pieces and a constant tail.
//
// The domain starts at `origin` (nullopt = the whole real line).  With
// breakpoints x_1 < ... < x_n, values[i] is taken on [x_{i-1}, x_i) and
// `tail` on [x_n, oo).  Canonical form merges adjacent equal values, so
// functions that agree off a finite set of points compare equal.
struct StepFunction {
  std::optional<Rat> origin;   // nullopt = -infinity
  std::vector<Rat> breakpoints;
  std::vector<Rat> values;     // one per breakpoint
  Rat tail;

  StepFunction() : origin(Rat(0)), tail(0) {}

  static StepFunction constant(Rat c, std::optional<Rat> org = Rat(0)) {
    StepFunction f;
    f.origin = std::move(org);
    f.tail = std::move(c);
    return f;
  }

  // indicator of [a, b) on the given domain
  static StepFunction indicator(const Rat& a, const Rat& b,
                                std::optional<Rat> org = Rat(0)) {
    return scaled_indicator(Rat(1), a, b, std::move(org));
  }

  static StepFunction scaled_indicator(const Rat& c, const Rat& a, const Rat& b,
                                       std::optional<Rat> org = Rat(0)) {
    if (b <= a) throw couples_error("indicator with b <= a");
    if (org && a < *org) throw couples_error("indicator starts before origin");
    StepFunction f;
    f.origin = std::move(org);
    if (!f.origin || a > *f.origin) {
      f.breakpoints.push_back(a);
      f.values.push_back(Rat(0));
    }
    f.breakpoints.push_back(b);
    f.values.push_back(c);
    f.tail = 0;
    f.canonicalize();
    return f;
  }

  static StepFunction from_pieces(std::optional<Rat> org,
                                  std::vector<Rat> cuts, std::vector<Rat> vals,
                                  Rat tail_value) {
    if (cuts.size() != vals.size())
      throw couples_error("breakpoint/value count mismatch");
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      if (!(cuts[i] < cuts[i + 1]))
        throw couples_error("breakpoints not strictly increasing");
    if (org && !cuts.empty() && !(*org < cuts.front()))
      throw couples_error("first breakpoint not beyond origin");
    StepFunction f;
    f.origin = std::move(org);
    f.breakpoints = std::move(cuts);
    f.values = std::move(vals);
    f.tail = std::move(tail_value);
    f.canonicalize();
    return f;
  }

  void canonicalize() {
    std::vector<Rat> bs, vs;
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
      const Rat& next = i + 1 < breakpoints.size() ? values[i + 1] : tail;
      if (values[i] == next) continue;  // merge into the following piece
      bs.push_back(breakpoints[i]);
      vs.push_back(values[i]);
    }
    breakpoints = std::move(bs);
    values = std::move(vs);
  }

  bool is_constant() const { return breakpoints.empty(); }

  Rat eval(const Rat& x) const {
    if (origin && x < *origin) throw domain_mismatch("evaluation below origin");
    // first breakpoint strictly greater than x
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - breakpoints.begin());
    return i < breakpoints.size() ? values[i] : tail;
  }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.origin == b.origin && a.breakpoints == b.breakpoints &&
           a.values == b.values && a.tail == b.tail;
  }
  friend bool operator!=(const StepFunction& a, const StepFunction& b) {
    return !(a == b);
  }
};

// A maximal interval of constancy.  lo == nullopt means -infinity,
// hi == nullopt means +infinity.
struct Piece {
  std::optional<Rat> lo, hi;
  Rat value;
};

inline std::vector<Piece> pieces_of(const StepFunction& f) {
  std::vector<Piece> out;
  std::optional<Rat> lo = f.origin;
  for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
    out.push_back({lo, f.breakpoints[i], f.values[i]});
    lo = f.breakpoints[i];
  }
  out.push_back({lo, std::nullopt, f.tail});
  return out;
}

namespace detail {

inline StepFunction zip(const StepFunction& f, const StepFunction& g,
                        const std::function<Rat(const Rat&, const Rat&)>& op) {
  if (f.origin != g.origin)
    throw domain_mismatch("step functions on different domains");
  StepFunction r;
  r.origin = f.origin;
  std::vector<Rat> cuts;
  cuts.reserve(f.breakpoints.size() + g.breakpoints.size());
  std::merge(f.breakpoints.begin(), f.breakpoints.end(), g.breakpoints.begin(),
             g.breakpoints.end(), std::back_inserter(cuts));
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::size_t i = 0, j = 0;
  for (const Rat& c : cuts) {
    // value of f and g just below c
    const Rat& fv = i < f.values.size() ? f.values[i] : f.tail;
    const Rat& gv = j < g.values.size() ? g.values[j] : g.tail;
    r.breakpoints.push_back(c);
    r.values.push_back(op(fv, gv));
    if (i < f.breakpoints.size() && f.breakpoints[i] == c) ++i;
    if (j < g.breakpoints.size() && g.breakpoints[j] == c) ++j;
  }
  r.tail = op(f.tail, g.tail);
  r.canonicalize();
  return r;
}

inline StepFunction map(const StepFunction& f,
                        const std::function<Rat(const Rat&)>& op) {
  StepFunction r = f;
  for (Rat& v : r.values) v = op(v);
  r.tail = op(r.tail);
  r.canonicalize();
  return r;
}

}  // namespace detail

inline StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  return detail::zip(f, g, [](const Rat& a, const Rat& b) { return a + b; });
}
inline StepFunction operator-(const StepFunction& f, const StepFunction& g) {
  return detail::zip(f, g, [](const Rat& a, const Rat& b) { return a - b; });
}
inline StepFunction mul(const StepFunction& f, const StepFunction& g) {
  return detail::zip(f, g, [](const Rat& a, const Rat& b) { return a * b; });
}
inline StepFunction abs(const StepFunction& f) {
  return detail::map(f, [](const Rat& v) { return v < 0 ? Rat(-v) : v; });
}
inline StepFunction scale(const Rat& c, const StepFunction& f) {
  return detail::map(f, [&](const Rat& v) { return c * v; });
}
inline StepFunction pointwise_min(const StepFunction& f, const StepFunction& g) {
  return detail::zip(f, g,
                     [](const Rat& a, const Rat& b) { return a < b ? a : b; });
}
inline StepFunction pointwise_max(const StepFunction& f, const StepFunction& g) {
  return detail::zip(f, g,
                     [](const Rat& a, const Rat& b) { return a < b ? b : a; });
}

// pointwise f/g with the convention 0/0 = 0; g may vanish only where f does
inline StepFunction div0(const StepFunction& f, const StepFunction& g) {
  return detail::zip(f, g, [](const Rat& a, const Rat& b) {
    if (b == 0) {
      if (a == 0) return Rat(0);
      throw division_error("denominator vanishes where numerator does not");
    }
    return Rat(a / b);
  });
}

// f <= g pointwise (everywhere on the common domain)
inline bool step_leq(const StepFunction& f, const StepFunction& g) {
  bool ok = true;
  detail::zip(f, g, [&](const Rat& a, const Rat& b) {
    if (a > b) ok = false;
    return Rat(0);
  });
  return ok;
}

}  // namespace couples
