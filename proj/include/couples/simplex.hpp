#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "couples/rational.hpp"

namespace couples {

// Linear program: minimize c.x over x >= 0 subject to linear constraints.
enum class Rel { LE, GE, EQ };

struct LinCon {
  std::vector<std::pair<std::size_t, Rat>> terms;
  Rel rel = Rel::LE;
  Rat rhs;
};

struct LPProblem {
  std::vector<std::string> names;
  std::vector<Rat> obj;
  std::vector<LinCon> cons;

  std::size_t add_var(std::string name, Rat cost = Rat(0)) {
    names.push_back(std::move(name));
    obj.push_back(std::move(cost));
    return names.size() - 1;
  }

  void add_con(std::vector<std::pair<std::size_t, Rat>> terms, Rel rel,
               Rat rhs) {
    cons.push_back({std::move(terms), rel, std::move(rhs)});
  }
};

template <class T>
struct SimplexResult {
  T optimum{};
  std::vector<T> primal;  // one per structural variable
  std::vector<T> dual;    // one per constraint, sign as stated
};

namespace detail {

template <class T>
struct lp_traits;

template <>
struct lp_traits<Rat> {
  static Rat from(const Rat& r) { return r; }
  static Rat tol() { return Rat(0); }
  static Rat feas_tol() { return Rat(0); }
  static constexpr std::size_t refresh_every = 0;  // exact updates never drift
};

template <>
struct lp_traits<double> {
  static double from(const Rat& r) { return to_double(r); }
  static double tol() { return 1e-9; }
  static double feas_tol() { return 1e-7; }
  static constexpr std::size_t refresh_every = 512;
};

}  // namespace detail

// Dense two-phase simplex with Bland's rule.  Exact with T = Rat; with
// T = double the tolerances of lp_traits apply.
template <class T>
class SimplexSolver {
 public:
  explicit SimplexSolver(const LPProblem& p) : n_(p.obj.size()) {
    using tr = detail::lp_traits<T>;
    const std::size_t m = p.cons.size();
    sign_.assign(m, 1);
    // columns: structural | one slack or surplus per inequality | artificials
    std::size_t ncols = n_;
    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i)
      if (p.cons[i].rel != Rel::EQ) slack_col[i] = ncols++;
    id_col_.assign(m, SIZE_MAX);
    basis_.assign(m, SIZE_MAX);
    std::vector<bool> needs_art(m, false);
    // a first pass decides row signs so that every rhs is nonnegative
    std::vector<Rel> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
      rel[i] = p.cons[i].rel;
      if (p.cons[i].rhs < 0) {
        sign_[i] = -1;
        if (rel[i] == Rel::LE)
          rel[i] = Rel::GE;
        else if (rel[i] == Rel::GE)
          rel[i] = Rel::LE;
      }
      if (rel[i] != Rel::LE) needs_art[i] = true;
    }
    art_begin_ = ncols;
    for (std::size_t i = 0; i < m; ++i)
      if (needs_art[i]) ncols++;
    cols_ = ncols;
    tab_.assign(m, std::vector<T>(cols_ + 1, T(0)));
    std::size_t art = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = p.cons[i];
      for (const auto& [v, coef] : c.terms)
        tab_[i][v] += T(sign_[i]) * tr::from(coef);
      tab_[i][cols_] = T(sign_[i]) * tr::from(c.rhs);
      if (c.rel != Rel::EQ)
        tab_[i][slack_col[i]] = rel[i] == Rel::LE ? T(1) : T(-1);
      if (needs_art[i]) {
        tab_[i][art] = T(1);
        id_col_[i] = art;
        basis_[i] = art++;
      } else {
        id_col_[i] = slack_col[i];
        basis_[i] = slack_col[i];
      }
    }
    obj_.assign(cols_, T(0));
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = tr::from(p.obj[j]);
  }

  SimplexResult<T> solve() {
    using tr = detail::lp_traits<T>;
    // phase 1: minimize the sum of artificials
    if (art_begin_ < cols_) {
      std::vector<T> cost(cols_, T(0));
      for (std::size_t j = art_begin_; j < cols_; ++j) cost[j] = T(1);
      const T p1 = optimize(cost, /*allow_art=*/true);
      if (p1 > tr::feas_tol())
        throw solver_error("linear program infeasible");
      drive_out_artificials();
    }
    const T opt = optimize(obj_, /*allow_art=*/false);
    SimplexResult<T> out;
    out.optimum = opt;
    out.primal.assign(n_, T(0));
    for (std::size_t i = 0; i < tab_.size(); ++i)
      if (basis_[i] < n_) out.primal[basis_[i]] = tab_[i][cols_];
    // y = c_B B^{-1}; the initial identity column of row i (its slack or
    // artificial, always with coefficient +1) now holds B^{-1} e_i
    out.dual.assign(tab_.size(), T(0));
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      T y(0);
      for (std::size_t r = 0; r < tab_.size(); ++r) {
        const std::size_t b = basis_[r];
        if (obj_[b] != T(0)) y += obj_[b] * tab_[r][id_col_[i]];
      }
      out.dual[i] = T(sign_[i]) * y;
    }
    return out;
  }

 private:
  std::size_t n_, cols_ = 0, art_begin_ = 0;
  std::vector<std::vector<T>> tab_;
  std::vector<std::size_t> basis_, id_col_;
  std::vector<int> sign_;
  std::vector<T> obj_;

  void pivot(std::size_t row, std::size_t col) {
    const T piv = tab_[row][col];
    for (auto& v : tab_[row]) v = v / piv;
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      if (r == row) continue;
      const T f = tab_[r][col];
      if (f == T(0)) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        tab_[r][j] -= f * tab_[row][j];
    }
    basis_[row] = col;
  }

  T optimize(const std::vector<T>& cost, bool allow_art) {
    using tr = detail::lp_traits<T>;
    const std::size_t limit = allow_art ? cols_ : art_begin_;
    std::vector<T> red(limit, T(0));
    T z(0);
    auto refresh = [&] {
      for (std::size_t j = 0; j < limit; ++j) red[j] = cost[j];
      z = T(0);
      for (std::size_t r = 0; r < tab_.size(); ++r) {
        const T cb = cost[basis_[r]];
        if (cb == T(0)) continue;
        for (std::size_t j = 0; j < limit; ++j) red[j] -= cb * tab_[r][j];
        z += cb * tab_[r][cols_];
      }
    };
    refresh();
    // Dantzig pricing at first; Bland's rule beyond the threshold makes
    // termination unconditional
    const std::size_t bland_after = 5000;
    for (std::size_t iter = 0; iter < 2000000; ++iter) {
      if (tr::refresh_every && iter && iter % tr::refresh_every == 0) refresh();
      std::size_t enter = SIZE_MAX;
      if (iter < bland_after) {
        T best = T(0) - tr::tol();
        for (std::size_t j = 0; j < limit; ++j)
          if (red[j] < best) {
            best = red[j];
            enter = j;
          }
      } else {
        for (std::size_t j = 0; j < limit; ++j)
          if (red[j] < -tr::tol()) {
            enter = j;
            break;
          }
      }
      if (enter == SIZE_MAX) return z;
      std::size_t leave = SIZE_MAX;
      for (std::size_t r = 0; r < tab_.size(); ++r) {
        if (!(tab_[r][enter] > tr::tol())) continue;
        if (leave == SIZE_MAX) {
          leave = r;
          continue;
        }
        const T lhs = tab_[r][cols_] * tab_[leave][enter];
        const T rhs = tab_[leave][cols_] * tab_[r][enter];
        if (lhs < rhs || (lhs == rhs && basis_[r] < basis_[leave])) leave = r;
      }
      if (leave == SIZE_MAX)
        throw solver_error("linear program unbounded");
      const T re = red[enter];
      pivot(leave, enter);
      for (std::size_t j = 0; j < limit; ++j) red[j] -= re * tab_[leave][j];
      z += re * tab_[leave][cols_];
    }
    throw solver_error("simplex iteration limit exceeded");
  }

  void drive_out_artificials() {
    using tr = detail::lp_traits<T>;
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      if (basis_[r] < art_begin_) continue;
      std::size_t col = SIZE_MAX;
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (tab_[r][j] > tr::tol() || tab_[r][j] < -tr::tol()) {
          col = j;
          break;
        }
      if (col != SIZE_MAX) pivot(r, col);
      // otherwise the row is redundant; the artificial stays basic at zero
    }
  }
};

template <class T>
inline SimplexResult<T> lp_solve(const LPProblem& p) {
  SimplexSolver<T> s(p);
  return s.solve();
}

}  // namespace couples
