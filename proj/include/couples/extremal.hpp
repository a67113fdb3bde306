#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "couples/constructions.hpp"
#include "couples/measure.hpp"
#include "couples/operators.hpp"
#include "couples/rational.hpp"
#include "couples/simplex.hpp"
#include "couples/step_function.hpp"

namespace couples {

// LP searching for the smallest joint norm C of a grid operator subject to an
// interpolation constraint, with the variable layout kept for extraction.
struct ExtremalBuild {
  LPProblem lp;
  GridSpec grid;
  std::size_t c_var = 0;
  std::vector<std::vector<std::size_t>> pos, neg;  // [out cell][in cell]
};

namespace detail {

inline void add_entry_vars(ExtremalBuild& b, const char* prefix) {
  const std::size_t k = b.grid.cells();
  b.pos.assign(k, std::vector<std::size_t>(k));
  b.neg.assign(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::string tag =
          std::string(prefix) + std::to_string(i) + "_" + std::to_string(j);
      b.pos[i][j] = b.lp.add_var("p" + tag);
      b.neg[i][j] = b.lp.add_var("n" + tag);
    }
}

}  // namespace detail

// Operators M with M g~ = g, minimizing the larger of the Linf->Linf and
// L1->L1tilde norms.
inline ExtremalBuild build_exm_lp(const StepFunction& g, const GridSpec& grid) {
  grid.validate();
  const std::vector<Rat> cg = grid.coefficients(g);
  const std::vector<Rat> cgt = grid.coefficients(least_decreasing_majorant(g));
  ExtremalBuild b;
  b.grid = grid;
  b.c_var = b.lp.add_var("C", Rat(1));
  detail::add_entry_vars(b, "M");
  const std::size_t k = grid.cells();
  for (std::size_t i = 0; i < k; ++i) {
    // interpolation constraint M g~ = g, row by row
    std::vector<std::pair<std::size_t, Rat>> eq;
    for (std::size_t j = 0; j < k; ++j) {
      if (cgt[j] == 0) continue;
      eq.push_back({b.pos[i][j], cgt[j]});
      eq.push_back({b.neg[i][j], -cgt[j]});
    }
    b.lp.add_con(std::move(eq), Rel::EQ, cg[i]);
    // Linf -> Linf: absolute row sum at most C
    std::vector<std::pair<std::size_t, Rat>> row;
    for (std::size_t j = 0; j < k; ++j) {
      row.push_back({b.pos[i][j], Rat(1)});
      row.push_back({b.neg[i][j], Rat(1)});
    }
    row.push_back({b.c_var, Rat(-1)});
    b.lp.add_con(std::move(row), Rel::LE, Rat(0));
  }
  // L1 -> L1tilde, column by column: the weighted suffix maximum of the
  // column is linearized through auxiliaries m_i decreasing in i
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> aux;
    for (std::size_t i = 0; i < k; ++i)
      aux.push_back(b.lp.add_var("m" + std::to_string(i) + "_" +
                                 std::to_string(j)));
    for (std::size_t i = 0; i < k; ++i) {
      if (i + 1 < k)
        b.lp.add_con({{aux[i], Rat(1)}, {aux[i + 1], Rat(-1)}}, Rel::GE,
                     Rat(0));
      b.lp.add_con({{aux[i], Rat(1)},
                    {b.pos[i][j], Rat(-1)},
                    {b.neg[i][j], Rat(-1)}},
                   Rel::GE, Rat(0));
    }
    std::vector<std::pair<std::size_t, Rat>> bound;
    for (std::size_t i = 0; i < k; ++i) bound.push_back({aux[i], grid.width(i)});
    bound.push_back({b.c_var, -grid.width(j)});
    b.lp.add_con(std::move(bound), Rel::LE, Rat(0));
  }
  return b;
}

// Operators N with N f = f°, minimizing the larger of the L1->L1 and
// LinfLevel->Linf norms.
inline ExtremalBuild build_exn_lp(const StepFunction& f, const GridSpec& grid) {
  grid.validate();
  const std::vector<Rat> cf = grid.coefficients(f);
  const std::vector<Rat> cfo = grid.coefficients(level_function(f));
  ExtremalBuild b;
  b.grid = grid;
  b.c_var = b.lp.add_var("C", Rat(1));
  detail::add_entry_vars(b, "N");
  const std::size_t k = grid.cells();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::pair<std::size_t, Rat>> eq;
    for (std::size_t j = 0; j < k; ++j) {
      if (cf[j] == 0) continue;
      eq.push_back({b.pos[i][j], cf[j]});
      eq.push_back({b.neg[i][j], -cf[j]});
    }
    b.lp.add_con(std::move(eq), Rel::EQ, cfo[i]);
  }
  // L1 -> L1, column by column
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::pair<std::size_t, Rat>> col;
    for (std::size_t i = 0; i < k; ++i) {
      col.push_back({b.pos[i][j], grid.width(i)});
      col.push_back({b.neg[i][j], grid.width(i)});
    }
    col.push_back({b.c_var, -grid.width(j)});
    b.lp.add_con(std::move(col), Rel::LE, Rat(0));
  }
  // LinfLevel -> Linf, row by row: dual encoding of the (Linf-level) unit
  // ball; a feasible y certifies the row functional is at most C on the ball
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> y;
    for (std::size_t l = 0; l < k; ++l)
      y.push_back(b.lp.add_var("y" + std::to_string(i) + "_" +
                               std::to_string(l)));
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::pair<std::size_t, Rat>> dom;
      for (std::size_t l = j; l < k; ++l) dom.push_back({y[l], grid.width(j)});
      dom.push_back({b.pos[i][j], Rat(-1)});
      dom.push_back({b.neg[i][j], Rat(-1)});
      b.lp.add_con(std::move(dom), Rel::GE, Rat(0));
    }
    std::vector<std::pair<std::size_t, Rat>> cost;
    for (std::size_t l = 0; l < k; ++l) cost.push_back({y[l], grid.cuts[l + 1]});
    cost.push_back({b.c_var, Rat(-1)});
    b.lp.add_con(std::move(cost), Rel::LE, Rat(0));
  }
  return b;
}

struct Certificate {
  bool exact = true;
  Rat optimum;        // meaningful when exact
  double optimum_f = 0;
  GridOperator op;
  std::vector<Rat> dual;       // when exact
  std::vector<double> dual_f;  // always
  GridSpec grid;
};

namespace detail {

inline Rat rat_from_double(double x) {
  const double scaled = x * 1099511627776.0;  // 2^40
  const std::int64_t n = static_cast<std::int64_t>(std::llround(scaled));
  return Rat(Int(n), Int(1) << 40);
}

}  // namespace detail

enum class SolveMode { automatic, rational, floating };

inline Certificate solve_extremal(const ExtremalBuild& b, SolveMode mode) {
  const std::size_t k = b.grid.cells();
  const bool exact = mode == SolveMode::rational ||
                     (mode == SolveMode::automatic && k <= 6);
  Certificate c;
  c.exact = exact;
  c.grid = b.grid;
  c.op.in = c.op.out = b.grid;
  c.op.matrix.assign(k, std::vector<Rat>(k, Rat(0)));
  if (exact) {
    const SimplexResult<Rat> r = lp_solve<Rat>(b.lp);
    c.optimum = r.optimum;
    c.optimum_f = to_double(r.optimum);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        c.op.matrix[i][j] = r.primal[b.pos[i][j]] - r.primal[b.neg[i][j]];
    c.dual = r.dual;
    for (const Rat& d : r.dual) c.dual_f.push_back(to_double(d));
  } else {
    const SimplexResult<double> r = lp_solve<double>(b.lp);
    c.optimum_f = r.optimum;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        c.op.matrix[i][j] = detail::rat_from_double(r.primal[b.pos[i][j]] -
                                                    r.primal[b.neg[i][j]]);
    c.dual_f = r.dual;
  }
  return c;
}

// Solve on the base grid and on `levels` successive midpoint refinements.
// Optima are nonincreasing: every coarse operator embeds in the refined class.
inline std::vector<Certificate> refine_and_resolve(
    const std::function<ExtremalBuild(const GridSpec&)>& builder,
    const GridSpec& base, std::size_t levels, SolveMode mode) {
  std::vector<Certificate> out;
  GridSpec g = base;
  for (std::size_t l = 0; l <= levels; ++l) {
    out.push_back(solve_extremal(builder(g), mode));
    g = g.refined();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution of a solved operator into the published inequality chains

struct ChainLine {
  std::string text;
  Rat lhs, rhs;
  bool holds = false;
};

namespace detail {

inline ChainLine le_line(std::string text, Rat lhs, Rat rhs) {
  ChainLine l{std::move(text), std::move(lhs), std::move(rhs), false};
  l.holds = l.lhs <= l.rhs;
  return l;
}

inline ChainLine eq_line(std::string text, Rat lhs, Rat rhs) {
  ChainLine l{std::move(text), std::move(lhs), std::move(rhs), false};
  l.holds = l.lhs == l.rhs;
  return l;
}

}  // namespace detail

// Feasible M with M g~ = g for g = 2a + b, a = [0,1), b = [1,3): substitute
// the solved integrals into the inequality chain forcing C >= 9/8.
inline std::vector<ChainLine> exm_chain_report(const GridOperator& M,
                                               const Rat& C) {
  const StepFunction a = StepFunction::indicator(Rat(0), Rat(1));
  const StepFunction Ma = M.apply_fn(a);
  const Rat i01 = lebesgue_integral_on(Ma, Rat(0), Rat(1));
  const Rat i13 = lebesgue_integral_on(Ma, Rat(1), Rat(3));
  const Rat i03 = i01 + i13;
  std::vector<ChainLine> out;
  out.push_back(detail::le_line("2 - int_0^1 Ma <= C", 2 - i01, C));
  out.push_back(
      detail::le_line("1 - int_1^3 Ma <= (2/3)C", 1 - i13, rat(2, 3) * C));
  out.push_back(
      detail::le_line("3 - (5/3)C <= int_0^3 Ma", 3 - rat(5, 3) * C, i03));
  out.push_back(detail::le_line("int_0^3 Ma <= C", i03, C));
  out.push_back(detail::le_line("9/8 <= C", rat(9, 8), C));
  return out;
}

// Feasible N with N f = f° for f = 2a + b: substitute into the chain of the
// companion lower bound.
inline std::vector<ChainLine> exn_chain_report(const GridOperator& N,
                                               const Rat& C) {
  const StepFunction a = StepFunction::indicator(Rat(0), Rat(1));
  const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
  const StepFunction Na = N.apply_fn(a);
  const StepFunction Nb = N.apply_fn(b);
  const StepFunction Nab = Na + Nb;
  const Rat na_01 = lebesgue_integral_on(Na, Rat(0), Rat(1));
  const Rat na_13 = lebesgue_integral_on(Na, Rat(1), Rat(3));
  const Rat nb_13 = lebesgue_integral_on(Nb, Rat(1), Rat(3));
  const Rat nab_01 = lebesgue_integral_on(Nab, Rat(0), Rat(1));
  std::vector<ChainLine> out;
  out.push_back(detail::le_line("int_0^1 N(a+b) + int_0^3 Na <= 2C",
                                nab_01 + na_01 + na_13, 2 * C));
  out.push_back(detail::le_line("int_1^3 Na <= 2C - 2", na_13, 2 * C - 2));
  out.push_back(
      detail::eq_line("int_1^3 N(2a+b) = 2", 2 * na_13 + nb_13, Rat(2)));
  out.push_back(
      detail::le_line("2 <= (16/3)C - 4", Rat(2), rat(16, 3) * C - 4));
  out.push_back(detail::le_line("9/8 <= C", rat(9, 8), C));
  return out;
}

inline GridSpec default_extremal_grid() {
  return GridSpec{{Rat(0), Rat(1), Rat(3), Rat(4)}};
}

inline StepFunction extremal_instance() {  // g = f = 2a + b
  return StepFunction::from_pieces(Rat(0), {Rat(1), Rat(3)}, {Rat(2), Rat(1)},
                                   Rat(0));
}

}  // namespace couples
