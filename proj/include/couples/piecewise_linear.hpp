#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "couples/rational.hpp"
#include "couples/step_function.hpp"

namespace couples {

struct PLPoint {
  Rat x, y;
  friend bool operator==(const PLPoint& a, const PLPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// A continuous piecewise-linear function on [x_0, oo): straight segments
// between vertices, then a ray of slope `final_slope` beyond the last vertex.
struct PiecewiseLinear {
  std::vector<PLPoint> vertices;  // strictly increasing x, at least one
  Rat final_slope;

  PiecewiseLinear() : vertices{{Rat(0), Rat(0)}}, final_slope(0) {}
  PiecewiseLinear(std::vector<PLPoint> v, Rat fs)
      : vertices(std::move(v)), final_slope(std::move(fs)) {
    if (vertices.empty()) throw couples_error("piecewise linear needs a vertex");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
      if (!(vertices[i].x < vertices[i + 1].x))
        throw couples_error("vertex x's not strictly increasing");
    canonicalize();
  }

  const Rat& domain_start() const { return vertices.front().x; }

  Rat eval(const Rat& x) const {
    if (x < vertices.front().x)
      throw domain_mismatch("evaluation before domain start");
    if (x >= vertices.back().x)
      return vertices.back().y + final_slope * (x - vertices.back().x);
    auto it = std::upper_bound(
        vertices.begin(), vertices.end(), x,
        [](const Rat& v, const PLPoint& p) { return v < p.x; });
    const PLPoint& b = *it;
    const PLPoint& a = *(it - 1);
    return a.y + (b.y - a.y) / (b.x - a.x) * (x - a.x);
  }

  // slopes of the segments, final slope last; size = vertices.size()
  std::vector<Rat> slopes() const {
    std::vector<Rat> s;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
      s.push_back((vertices[i + 1].y - vertices[i].y) /
                  (vertices[i + 1].x - vertices[i].x));
    s.push_back(final_slope);
    return s;
  }

  bool is_nondecreasing() const {
    for (const Rat& s : slopes())
      if (s < 0) return false;
    return true;
  }

  // slopes nonincreasing, final slope included
  bool is_concave() const {
    const auto s = slopes();
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] < s[i + 1]) return false;
    return true;
  }

  // drop interior vertices where the slope does not change
  void canonicalize() {
    if (vertices.size() < 2) return;
    std::vector<PLPoint> out;
    out.push_back(vertices.front());
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
      const PLPoint& p = out.back();
      const PLPoint& q = vertices[i];
      const PLPoint& r = vertices[i + 1];
      const Rat s1 = (q.y - p.y) / (q.x - p.x);
      const Rat s2 = (r.y - q.y) / (r.x - q.x);
      if (s1 != s2) out.push_back(q);
    }
    {
      const PLPoint& p = out.back();
      const PLPoint& q = vertices.back();
      const Rat s1 = (q.y - p.y) / (q.x - p.x);
      if (s1 != final_slope) out.push_back(q);
    }
    vertices = std::move(out);
  }

  friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return a.vertices == b.vertices && a.final_slope == b.final_slope;
  }
  friend bool operator!=(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return !(a == b);
  }
};

namespace detail {

inline std::vector<Rat> merged_xs(const PiecewiseLinear& f,
                                  const PiecewiseLinear& g) {
  std::vector<Rat> xs;
  for (const auto& p : f.vertices) xs.push_back(p.x);
  for (const auto& p : g.vertices) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace detail

// f(x) <= g(x) for all x in the common domain
inline bool pl_leq(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  if (f.domain_start() != g.domain_start())
    throw domain_mismatch("piecewise linear domains differ");
  for (const Rat& x : detail::merged_xs(f, g))
    if (f.eval(x) > g.eval(x)) return false;
  return f.final_slope <= g.final_slope;
}

inline PiecewiseLinear pl_add(const PiecewiseLinear& f,
                              const PiecewiseLinear& g) {
  if (f.domain_start() != g.domain_start())
    throw domain_mismatch("piecewise linear domains differ");
  std::vector<PLPoint> v;
  for (const Rat& x : detail::merged_xs(f, g))
    v.push_back({x, f.eval(x) + g.eval(x)});
  return PiecewiseLinear(std::move(v), f.final_slope + g.final_slope);
}

inline PiecewiseLinear pl_scale(const Rat& c, const PiecewiseLinear& f) {
  std::vector<PLPoint> v = f.vertices;
  for (auto& p : v) p.y = c * p.y;
  return PiecewiseLinear(std::move(v), c * f.final_slope);
}

// pointwise minimum; inserts crossing points, handles crossing final rays
inline PiecewiseLinear pl_min(const PiecewiseLinear& f,
                              const PiecewiseLinear& g) {
  if (f.domain_start() != g.domain_start())
    throw domain_mismatch("piecewise linear domains differ");
  const std::vector<Rat> xs = detail::merged_xs(f, g);
  std::vector<PLPoint> v;
  auto push = [&](const Rat& x) {
    const Rat fy = f.eval(x), gy = g.eval(x);
    v.push_back({x, fy < gy ? fy : gy});
  };
  push(xs[0]);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat df0 = f.eval(xs[i]) - g.eval(xs[i]);
    const Rat df1 = f.eval(xs[i + 1]) - g.eval(xs[i + 1]);
    if ((df0 < 0 && df1 > 0) || (df0 > 0 && df1 < 0)) {
      // crossing strictly inside the interval
      const Rat x = xs[i] + (xs[i + 1] - xs[i]) * (-df0) / (df1 - df0);
      push(x);
    }
    push(xs[i + 1]);
  }
  // beyond the last merged vertex both are rays
  const Rat& xe = xs.back();
  const Rat dfe = f.eval(xe) - g.eval(xe);
  const Rat ds = f.final_slope - g.final_slope;
  if ((dfe < 0 && ds > 0) || (dfe > 0 && ds < 0)) {
    const Rat x = xe + (-dfe) / ds;
    if (x > xe) push(x);
  }
  // whichever ray is eventually lower has the smaller slope
  Rat fs = f.final_slope < g.final_slope ? f.final_slope : g.final_slope;
  return PiecewiseLinear(std::move(v), std::move(fs));
}

// derivative of a piecewise linear function as a step function on its domain
inline StepFunction pl_derivative(const PiecewiseLinear& f) {
  StepFunction d;
  d.origin = f.domain_start();
  const auto s = f.slopes();
  for (std::size_t i = 0; i + 1 < f.vertices.size(); ++i) {
    d.breakpoints.push_back(f.vertices[i + 1].x);
    d.values.push_back(s[i]);
  }
  d.tail = f.final_slope;
  d.canonicalize();
  return d;
}

}  // namespace couples
