#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "couples/calculus.hpp"
#include "couples/constructions.hpp"
#include "couples/kcalc.hpp"
#include "couples/measure.hpp"
#include "couples/rational.hpp"
#include "couples/simplex.hpp"
#include "couples/step_function.hpp"

namespace couples {

using StepOp = std::function<StepFunction(const StepFunction&)>;

// Dyadic averaging operator: on [2^j, 2^(j+1)) the value is the average of h
// over [2^(j-1), 2^j).
inline StepFunction S_op(const StepFunction& h) {
  if (!h.origin || *h.origin != 0)
    throw domain_mismatch("S expects a function on (0, oo)");
  if (h.breakpoints.empty()) return h;
  const long j_lo = floor_log2(h.breakpoints.front());
  long j_hi = floor_log2(h.breakpoints.back());
  if (pow2(j_hi) < h.breakpoints.back()) ++j_hi;  // ceil
  // value h.values[0] up to 2^(j_lo+1); averages on cells j_lo+1 .. j_hi;
  // the tail average from 2^(j_hi+1) on
  StepFunction out;
  out.origin = Rat(0);
  Rat edge = pow2(j_lo + 1);
  out.breakpoints.push_back(edge);
  out.values.push_back(h.values.front());
  for (long j = j_lo + 1; j <= j_hi; ++j) {
    const Rat lo = pow2(j - 1), hi = pow2(j);
    const Rat avg = lebesgue_integral_on(h, lo, hi) / (hi - lo);
    out.breakpoints.push_back(pow2(j + 1));
    out.values.push_back(avg);
  }
  out.tail = h.tail;
  out.canonicalize();
  return out;
}

struct SNormRatios {
  Rat linf_linf, l1_l1, l1_l1tilde, linflevel_linf;
};

inline SNormRatios s_norm_ratios(const StepFunction& h) {
  const StepFunction sh = S_op(h);
  const Ext n1 = space_norm(h, SpaceKind::L1);
  const Ext ninf = space_norm(h, SpaceKind::Linf);
  const Ext nlev = space_norm(h, SpaceKind::LinfLevel);
  if (!n1.finite() || n1.value() == 0 || ninf.value() == 0 ||
      nlev.value() == 0)
    throw couples_error("s_norm_ratios needs finite nonzero input norms");
  SNormRatios r;
  r.linf_linf = space_norm(sh, SpaceKind::Linf).value() / ninf.value();
  r.l1_l1 = space_norm(sh, SpaceKind::L1).value() / n1.value();
  r.l1_l1tilde = space_norm(sh, SpaceKind::L1tilde).value() / n1.value();
  r.linflevel_linf = space_norm(sh, SpaceKind::Linf).value() / nlev.value();
  return r;
}

// psi -> (g / g~) psi; sends g~ to g, contracts pointwise
inline StepOp multiplier_W3(const StepFunction& g) {
  const StepFunction ratio = div0(g, least_decreasing_majorant(g));
  return [ratio](const StepFunction& psi) { return mul(ratio, psi); };
}

// psi -> (g / S g~) S psi; sends g~ to g with norm at most 4
inline StepOp mbar(const StepFunction& g) {
  const StepFunction ratio = div0(g, S_op(least_decreasing_majorant(g)));
  return [ratio](const StepFunction& psi) { return mul(ratio, S_op(psi)); };
}

// the checkable fragment of the level-function majorization: f's level
// function is dominated by its own S-average
inline bool level_majorization_witness(const StepFunction& f) {
  const StepFunction lvl = level_function(f);
  if (lvl.is_constant()) return lvl.tail <= S_op(lvl).tail;
  return step_leq(lvl, S_op(lvl));
}

// ---------------------------------------------------------------------------
// Grids and grid operators

struct GridSpec {
  std::vector<Rat> cuts;  // 0 = y_0 < y_1 < ... < y_N

  void validate() const {
    if (cuts.size() < 2) throw couples_error("grid needs at least one cell");
    if (cuts.front() != 0) throw couples_error("grid must start at 0");
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      if (!(cuts[i] < cuts[i + 1]))
        throw couples_error("grid cuts not strictly increasing");
  }

  std::size_t cells() const { return cuts.size() - 1; }
  Rat width(std::size_t i) const { return cuts[i + 1] - cuts[i]; }

  GridSpec refined() const {
    GridSpec g;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      g.cuts.push_back(cuts[i]);
      g.cuts.push_back((cuts[i] + cuts[i + 1]) / 2);
    }
    g.cuts.push_back(cuts.back());
    return g;
  }

  StepFunction to_function(const std::vector<Rat>& coeffs) const {
    if (coeffs.size() != cells())
      throw domain_mismatch("coefficient count does not match the grid");
    StepFunction f;
    f.origin = Rat(0);
    for (std::size_t i = 0; i < cells(); ++i) {
      f.breakpoints.push_back(cuts[i + 1]);
      f.values.push_back(coeffs[i]);
    }
    f.tail = 0;
    f.canonicalize();
    return f;
  }

  // coefficients of a step function constant on every cell and zero beyond
  std::vector<Rat> coefficients(const StepFunction& f) const {
    std::vector<Rat> c(cells());
    for (std::size_t i = 0; i < cells(); ++i) {
      const Rat lo = cuts[i];
      c[i] = f.eval(lo);
      for (const Rat& b : f.breakpoints)
        if (b > lo && b < cuts[i + 1] && f.eval(b) != c[i])
          throw not_representable("function not constant on a grid cell");
    }
    for (const Rat& b : f.breakpoints)
      if (b > cuts.back() && f.eval(b) != 0)
        throw not_representable("function not zero beyond the grid");
    if (f.tail != 0)
      throw not_representable("function not zero beyond the grid");
    if (f.eval(cuts.back()) != 0)
      throw not_representable("function not zero beyond the grid");
    return c;
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.cuts == b.cuts;
  }
};

struct GridOperator {
  GridSpec in, out;
  std::vector<std::vector<Rat>> matrix;  // matrix[i][j]: in cell j -> out cell i

  std::vector<Rat> apply(const std::vector<Rat>& c) const {
    if (c.size() != in.cells())
      throw domain_mismatch("coefficient count does not match the grid");
    std::vector<Rat> r(out.cells(), Rat(0));
    for (std::size_t i = 0; i < out.cells(); ++i)
      for (std::size_t j = 0; j < in.cells(); ++j) r[i] += matrix[i][j] * c[j];
    return r;
  }

  StepFunction apply_fn(const StepFunction& f) const {
    return out.to_function(apply(in.coefficients(f)));
  }
};

// Matrix of a linear operator on grid functions.  The image of every cell
// indicator must be constant on each output cell; values beyond the output
// grid are discarded (mass may escape rightward).
inline GridOperator discretize_operator(const StepOp& op, const GridSpec& in,
                                        const GridSpec& out) {
  in.validate();
  out.validate();
  GridOperator T{in, out, {}};
  T.matrix.assign(out.cells(), std::vector<Rat>(in.cells(), Rat(0)));
  for (std::size_t j = 0; j < in.cells(); ++j) {
    const StepFunction img = op(StepFunction::indicator(in.cuts[j],
                                                        in.cuts[j + 1]));
    for (std::size_t i = 0; i < out.cells(); ++i) {
      const Rat lo = out.cuts[i], hi = out.cuts[i + 1];
      const Rat v = img.eval(lo);
      for (const Rat& b : img.breakpoints)
        if (b > lo && b < hi && img.eval(b) != v)
          throw not_representable("operator image not constant on a grid cell");
      T.matrix[i][j] = v;
    }
  }
  return T;
}

struct GridOperatorNorms {
  Rat l1_l1, linf_linf, l1_l1tilde, linflevel_linf;
};

// largest |T psi| coordinate over the grid (Linf-level) unit ball, for one
// output row r: maximize sum_j |r_j| u_j with sum_{j<=i} w_j u_j <= y_i
inline Rat row_norm_against_level_ball(const GridSpec& in,
                                       const std::vector<Rat>& row) {
  LPProblem p;
  std::vector<std::size_t> u;
  for (std::size_t j = 0; j < in.cells(); ++j) {
    const Rat r = row[j] < 0 ? Rat(-row[j]) : row[j];
    u.push_back(p.add_var("u" + std::to_string(j), -r));
  }
  for (std::size_t i = 0; i < in.cells(); ++i) {
    std::vector<std::pair<std::size_t, Rat>> terms;
    for (std::size_t j = 0; j <= i; ++j) terms.push_back({u[j], in.width(j)});
    p.add_con(std::move(terms), Rel::LE, in.cuts[i + 1]);
  }
  return -lp_solve<Rat>(p).optimum;
}

inline GridOperatorNorms grid_operator_norms(const GridOperator& T) {
  GridOperatorNorms n{Rat(0), Rat(0), Rat(0), Rat(0)};
  const std::size_t m = T.out.cells(), k = T.in.cells();
  for (std::size_t j = 0; j < k; ++j) {
    Rat col(0), tilde(0), suffix(0);
    for (std::size_t i = m; i-- > 0;) {
      Rat a = T.matrix[i][j];
      if (a < 0) a = -a;
      col += T.out.width(i) * a;
      if (a > suffix) suffix = a;
      tilde += T.out.width(i) * suffix;
    }
    const Rat w = T.in.width(j);
    if (col / w > n.l1_l1) n.l1_l1 = col / w;
    if (tilde / w > n.l1_l1tilde) n.l1_l1tilde = tilde / w;
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rat rowsum(0);
    for (std::size_t j = 0; j < k; ++j) {
      const Rat& a = T.matrix[i][j];
      rowsum += a < 0 ? Rat(-a) : a;
    }
    if (rowsum > n.linf_linf) n.linf_linf = rowsum;
    const Rat lev = row_norm_against_level_ball(T.in, T.matrix[i]);
    if (lev > n.linflevel_linf) n.linflevel_linf = lev;
  }
  return n;
}

}  // namespace couples
