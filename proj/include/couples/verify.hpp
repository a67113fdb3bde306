#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "couples/calculus.hpp"
#include "couples/constructions.hpp"
#include "couples/kcalc.hpp"
#include "couples/measure.hpp"
#include "couples/operators.hpp"
#include "couples/rational.hpp"
#include "couples/step_function.hpp"

namespace couples {

// ---------------------------------------------------------------------------
// Deterministic random instances

struct StepParams {
  std::size_t max_pieces = 5;
  long value_range = 8;   // numerators in [-range, range]
  long point_range = 12;  // breakpoints within this many units of 0
  bool whole_line = false;
  bool nonneg = false;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline Rat rand_rat(std::mt19937_64& g, long range, long den_max,
                    bool nonneg = false) {
  std::uniform_int_distribution<long> num(nonneg ? 0 : -range, range);
  std::uniform_int_distribution<long> den(1, den_max);
  return Rat(Int(num(g)), Int(den(g)));
}

}  // namespace detail

inline StepFunction random_step(std::mt19937_64& g, const StepParams& p = {}) {
  std::uniform_int_distribution<std::size_t> npieces(1, p.max_pieces);
  const std::size_t n = npieces(g);
  std::vector<Rat> cuts;
  while (cuts.size() < n) {
    Rat x = detail::rand_rat(g, p.point_range, 4, !p.whole_line);
    if (!p.whole_line && x <= 0) continue;
    cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  }
  std::vector<Rat> vals;
  for (std::size_t i = 0; i < cuts.size(); ++i)
    vals.push_back(detail::rand_rat(g, p.value_range, 3, p.nonneg));
  StepFunction f;
  f.origin = p.whole_line ? std::optional<Rat>{} : std::optional<Rat>{Rat(0)};
  f.breakpoints = std::move(cuts);
  f.values = std::move(vals);
  f.tail = 0;
  f.canonicalize();
  return f;
}

// Atoms and segments kept apart: no atom inside a segment or at its left
// endpoint, so every lambda-class in play has a step representative.
inline BorelMeasure random_measure(std::mt19937_64& g, std::size_t max_atoms = 8,
                                   std::size_t max_segments = 3) {
  BorelMeasure m;
  std::uniform_int_distribution<std::size_t> nseg(0, max_segments);
  std::uniform_int_distribution<std::size_t> natom(0, max_atoms);
  std::uniform_int_distribution<int> coin(0, 9);
  const std::size_t ns = nseg(g);
  std::vector<Rat> ends;
  while (ends.size() < 2 * ns) {
    Rat x = detail::rand_rat(g, 10, 2);
    ends.push_back(x);
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  }
  for (std::size_t s = 0; s < ns; ++s) {
    MeasureSegment seg;
    seg.a = ends[2 * s];
    seg.b = ends[2 * s + 1];
    if (s + 1 == ns && coin(g) == 0) seg.b = std::nullopt;
    seg.density = detail::rand_rat(g, 3, 2, true) + rat(1, 4);
    m.segments.push_back(seg);
  }
  auto inside_segment = [&](const Rat& x) {
    for (const auto& s : m.segments) {
      if (x >= s.a && (!s.b || x < *s.b)) return true;
      if (x == s.a) return true;
    }
    return false;
  };
  std::size_t want = natom(g);
  if (ns == 0 && want == 0) want = 1;
  std::vector<Rat> locs;
  for (int guard = 0; guard < 200 && locs.size() < want; ++guard) {
    Rat x = detail::rand_rat(g, 12, 2);
    if (inside_segment(x)) continue;
    locs.push_back(x);
    std::sort(locs.begin(), locs.end());
    locs.erase(std::unique(locs.begin(), locs.end()), locs.end());
  }
  for (const Rat& x : locs)
    m.atoms.push_back({x, detail::rand_rat(g, 3, 4, true) + rat(1, 8)});
  if (m.atoms.empty() && m.segments.empty())
    m.segments.push_back({Rat(0), Rat(1), Rat(1)});
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// Reports

struct Failure {
  std::size_t trial = 0;
  std::string check;
  std::string witness;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<Failure> failures;
  std::vector<std::pair<std::string, std::string>> stats;

  bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string describe(const StepFunction& f) {
  std::string s = "step{origin=";
  s += f.origin ? to_string(*f.origin) : std::string("-inf");
  s += ";bp=[";
  for (std::size_t i = 0; i < f.breakpoints.size(); ++i)
    s += (i ? "," : "") + to_string(f.breakpoints[i]);
  s += "];v=[";
  for (std::size_t i = 0; i < f.values.size(); ++i)
    s += (i ? "," : "") + to_string(f.values[i]);
  s += "];tail=" + to_string(f.tail) + "}";
  return s;
}

inline std::string describe(const BorelMeasure& m) {
  std::string s = "measure{atoms=[";
  for (std::size_t i = 0; i < m.atoms.size(); ++i)
    s += (i ? ";" : "") + to_string(m.atoms[i].x) + ":" +
         to_string(m.atoms[i].w);
  s += "];segments=[";
  for (std::size_t i = 0; i < m.segments.size(); ++i) {
    const auto& g = m.segments[i];
    s += (i ? ";" : "") + to_string(g.a) + ".." +
         (g.b ? to_string(*g.b) : std::string("inf")) + ":" +
         to_string(g.density);
  }
  return s + "]}";
}

// run trials, optionally across threads; failure order is by trial index
inline Report run_trials(
    std::string suite, std::uint64_t seed, std::size_t trials, unsigned jobs,
    const std::function<std::vector<Failure>(std::mt19937_64&, std::size_t)>&
        one) {
  Report rep;
  rep.suite = std::move(suite);
  rep.seed = seed;
  rep.trials = trials;
  std::vector<std::vector<Failure>> buckets(trials);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      std::mt19937_64 rng(mix_seed(seed, i));
      try {
        buckets[i] = one(rng, i);
      } catch (const std::exception& e) {
        buckets[i].push_back({i, "exception", e.what()});
      }
    }
  };
  if (jobs <= 1 || trials < 2) {
    work(0, trials);
  } else {
    const unsigned nt = std::min<unsigned>(jobs, std::thread::hardware_concurrency()
                                                     ? std::thread::hardware_concurrency()
                                                     : 2);
    std::vector<std::thread> pool;
    const std::size_t chunk = (trials + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
      const std::size_t lo = t * chunk, hi = std::min(trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  for (auto& b : buckets)
    rep.failures.insert(rep.failures.end(), b.begin(), b.end());
  return rep;
}

// exact infimum over truncation heights of |f0|_1 + t |f1|_inf for a
// decreasing step d (the convex cost has its kinks at the values of d)
inline Rat truncation_oracle(const StepFunction& d, const Rat& t) {
  std::vector<Rat> heights{Rat(0)};
  for (const Rat& v : d.values) heights.push_back(v);
  heights.push_back(d.tail);
  Rat best(-1);
  for (const Rat& s : heights) {
    const StepFunction low = detail::map(
        d, [&](const Rat& v) { return v < s ? Rat(0) : Rat(v - s); });
    const Ext l1 = integrate_abs(low, lebesgue_halfline());
    if (!l1.finite()) continue;
    const Rat cost = l1.value() + t * s;
    if (best < 0 || cost < best) best = cost;
  }
  return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

// Exact K-functional identities, ordering chain, concavity, attainment
inline Report suite_kfnls(std::uint64_t seed, std::size_t trials,
                          unsigned jobs = 1) {
  const BorelMeasure leb = lebesgue_halfline();
  return detail::run_trials(
      "kfnls", seed, trials, jobs,
      [leb](std::mt19937_64& rng, std::size_t i) {
        std::vector<Failure> bad;
        const StepFunction f = random_step(rng);
        const std::string w = detail::describe(f);
        auto fail = [&](const char* check) { bad.push_back({i, check, w}); };
        const PiecewiseLinear p1 = k_profile(f, {CoupleKind::L1_Linf, leb});
        const PiecewiseLinear p2 =
            k_profile(f, {CoupleKind::L1tilde_Linf, leb});
        const PiecewiseLinear p3 =
            k_profile(f, {CoupleKind::L1_LinfLevel, leb});
        const StepFunction ft = least_decreasing_majorant(f);
        const StepFunction fo = level_function(f);
        if (p2 != k_profile(ft, {CoupleKind::L1_Linf, leb}))
          fail("K_tilde(f) = K(f~)");
        if (p3 != k_profile(fo, {CoupleKind::L1_Linf, leb}))
          fail("K_level(f) = K(f°)");
        if (!pl_leq(p3, p1) || !pl_leq(p1, p2)) fail("K ordering chain");
        for (const PiecewiseLinear* p : {&p1, &p2, &p3}) {
          if (!p->is_concave() || !p->is_nondecreasing() ||
              p->eval(Rat(0)) != 0)
            fail("profile shape");
        }
        if (p1 != k_profile(rearrange(f, leb), {CoupleKind::L1_Linf, leb}))
          fail("K(f*) = K(f)");
        for (const auto& v : p1.vertices) {
          if (v.x == 0) continue;
          if (detail::truncation_oracle(rearrange(f, leb), v.x) != v.y)
            fail("truncation oracle (L1, Linf)");
          auto [f0, f1] = optimal_split(v.x, f, {CoupleKind::L1_Linf, leb});
          if (f0 + f1 != f) fail("split sums back");
          const Ext c0 = space_norm(f0, SpaceKind::L1);
          if (!c0.finite() ||
              c0.value() + v.x * space_norm(f1, SpaceKind::Linf).value() !=
                  v.y)
            fail("split attains K");
        }
        for (const auto& v : p2.vertices)
          if (v.x > 0 && detail::truncation_oracle(ft, v.x) != v.y)
            fail("truncation oracle (L1tilde, Linf)");
        return bad;
      });
}

// Lemma-style dyadic averaging bounds and the tight witness
inline Report suite_s_bounds(std::uint64_t seed, std::size_t trials,
                             unsigned jobs = 1) {
  return detail::run_trials(
      "s_bounds", seed, trials, jobs,
      [](std::mt19937_64& rng, std::size_t i) {
        std::vector<Failure> bad;
        StepFunction h = random_step(rng);
        if (integrate_abs(h, lebesgue_halfline()) == Ext(Rat(0)))
          h = h + StepFunction::indicator(Rat(1), Rat(2));
        const std::string w = detail::describe(h);
        auto fail = [&](const char* check) { bad.push_back({i, check, w}); };
        const SNormRatios r = s_norm_ratios(h);
        if (r.linf_linf > 1) fail("S norm Linf->Linf <= 1");
        if (r.l1_l1 > 2) fail("S norm L1->L1 <= 2");
        if (r.l1_l1tilde > 4) fail("S norm L1->L1tilde <= 4");
        if (r.linflevel_linf > 2) fail("S norm LinfLevel->Linf <= 2");
        const StepFunction d = least_decreasing_majorant(h);
        if (!step_leq(d, S_op(d))) fail("decreasing h <= Sh");
        if (i == 0) {
          const SNormRatios t = s_norm_ratios(
              StepFunction::indicator(Rat(1), Rat(2)));
          if (t.l1_l1 != 2 || t.l1_l1tilde != 4 || t.linflevel_linf != 2)
            fail("witness attains (2, 4, 2)");
        }
        return bad;
      });
}

// Projection laws of the two decreasing projections
inline Report suite_projections(std::uint64_t seed, std::size_t trials,
                                unsigned jobs = 1) {
  return detail::run_trials(
      "projections", seed, trials, jobs,
      [](std::mt19937_64& rng, std::size_t i) {
        std::vector<Failure> bad;
        const StepFunction f = random_step(rng);
        const StepFunction g = random_step(rng);
        const std::string w = detail::describe(f) + " " + detail::describe(g);
        auto fail = [&](const char* check) { bad.push_back({i, check, w}); };
        const StepFunction ft = least_decreasing_majorant(f);
        const StepFunction gt = least_decreasing_majorant(g);
        const StepFunction fo = level_function(f);
        if (least_decreasing_majorant(ft) != ft) fail("tilde idempotent");
        if (!step_leq(abs(f), ft)) fail("|f| <= f~");
        if (!step_nonincreasing(ft)) fail("f~ decreasing");
        if (!step_leq(least_decreasing_majorant(f + g), ft + gt))
          fail("tilde sublinear");
        if (least_decreasing_majorant(ft + gt) != ft + gt)
          fail("sum of decreasing is decreasing");
        if (level_function(fo) != fo) fail("level idempotent");
        if (!step_nonincreasing(fo) || fo.tail < 0 ||
            (fo.values.size() && fo.values[0] < 0))
          fail("f° nonneg decreasing");
        if (!pl_leq(primitive(f), primitive(fo)))
          fail("primitive(f) <= primitive(f°)");
        if (!pl_leq(primitive(level_function(f + g)),
                    pl_add(primitive(fo), primitive(level_function(g)))))
          fail("level superadditive integrals");
        const StepFunction fs = rearrange(f, lebesgue_halfline());
        if (least_decreasing_majorant(fs) != fs) fail("f* = (f*)~");
        if (level_function(fs) != fs) fail("f* = (f*)°");
        if (rearrange(gt, lebesgue_halfline()) != gt) fail("g~* = g~");
        if (ft == abs(f) && level_function(abs(f)) != abs(f))
          fail("decreasing fixed point of level");
        const Ext l1 = integrate_abs(f, lebesgue_halfline());
        if (l1.finite() &&
            integrate_abs(fo, lebesgue_halfline()) != l1)
          fail("level preserves the integral");
        if (space_norm(f, SpaceKind::LinfLevel) >
            space_norm(f, SpaceKind::Linf))
          fail("level norm below sup norm");
        if (Ext(space_norm(f, SpaceKind::L1)) >
            space_norm(f, SpaceKind::L1tilde))
          fail("L1 norm below tilde norm");
        return bad;
      });
}

// Retract of a general Borel measure onto the half line; trials cycle through
// a pool of `measures` random measures
inline Report suite_transfer(std::uint64_t seed, std::size_t trials,
                             std::size_t measures = 8, unsigned jobs = 1) {
  const BorelMeasure leb = lebesgue_halfline();
  std::vector<BorelMeasure> pool;
  {
    std::mt19937_64 mg(detail::mix_seed(seed, 0x6d656173));
    for (std::size_t k = 0; k < std::max<std::size_t>(measures, 1); ++k)
      pool.push_back(random_measure(mg));
  }
  return detail::run_trials(
      "transfer", seed, trials, jobs,
      [leb, pool](std::mt19937_64& rng, std::size_t i) {
        std::vector<Failure> bad;
        const BorelMeasure& lam = pool[i % pool.size()];
        StepParams sp;
        sp.whole_line = true;
        const StepFunction f = random_step(rng, sp);
        const std::string w =
            detail::describe(f) + " " + detail::describe(lam);
        auto fail = [&](const char* check) { bad.push_back({i, check, w}); };
        const StepFunction ef = E_lambda(lam, f);
        if (A_lambda(lam, ef) != ef) fail("A E = E");
        if (distribution(f, lam) != distribution(ef, leb))
          fail("E equimeasurable");
        for (SpaceKind s : {SpaceKind::L1, SpaceKind::Linf, SpaceKind::L1tilde,
                            SpaceKind::LinfLevel})
          if (space_norm(ef, s, leb) != space_norm(f, s, lam))
            fail("E isometric in all four norms");
        const StepFunction h = random_step(rng);
        const StepFunction ah = A_lambda(lam, h);
        for (SpaceKind s : {SpaceKind::L1, SpaceKind::Linf, SpaceKind::L1tilde,
                            SpaceKind::LinfLevel})
          if (space_norm(ah, s, leb) > space_norm(h, s, leb))
            fail("A contraction in all four norms");
        // transfer of the three K-profiles, and the projected-function forms
        if (k_profile(f, {CoupleKind::L1_Linf, lam}) !=
            k_profile(ef, {CoupleKind::L1_Linf, leb}))
          fail("K transfer (L1, Linf)");
        if (k_profile(f, {CoupleKind::L1tilde_Linf, lam}) !=
            k_profile(ef, {CoupleKind::L1tilde_Linf, leb}))
          fail("K transfer (L1tilde, Linf)");
        if (k_profile(f, {CoupleKind::L1_LinfLevel, lam}) !=
            k_profile(ef, {CoupleKind::L1_LinfLevel, leb}))
          fail("K transfer (L1, LinfLevel)");
        if (k_profile(f, {CoupleKind::L1tilde_Linf, lam}) !=
            k_profile(least_decreasing_majorant(f, lam),
                      {CoupleKind::L1_Linf, lam}))
          fail("K(f~) form (lambda)");
        if (k_profile(f, {CoupleKind::L1_LinfLevel, lam}) !=
            k_profile(level_function(f, lam), {CoupleKind::L1_Linf, lam}))
          fail("K(f°) form (lambda)");
        if (level_function(f, lam) != level_function_transfer(f, lam))
          fail("dual-path level functions agree");
        if (E_lambda(leb, h) != h) fail("Lebesgue transfer is the identity");
        return bad;
      });
}

// the probability measure with atoms 2^{-k} at k, truncated at K_max with a
// remainder atom keeping total mass exactly 1
inline BorelMeasure degenerate_measure(std::size_t k_max) {
  BorelMeasure m;
  for (std::size_t k = 1; k <= k_max; ++k)
    m.atoms.push_back({Rat(long(k)), pow2(-long(k))});
  m.atoms.push_back({Rat(long(k_max + 1)), pow2(-long(k_max))});
  m.validate();
  return m;
}

inline Report suite_degenerate(std::size_t k_max, std::uint64_t seed,
                               std::size_t trials, unsigned jobs = 1) {
  const BorelMeasure lam = degenerate_measure(k_max);
  return detail::run_trials(
      "degenerate", seed, trials, jobs,
      [lam, k_max](std::mt19937_64& rng, std::size_t i) {
        std::vector<Failure> bad;
        if (i == 0) {
          auto fail0 = [&](const char* check) {
            bad.push_back({0, check, "k_max=" + std::to_string(k_max)});
          };
          const StepFunction one = StepFunction::constant(Rat(1), std::nullopt);
          const StepFunction chi1 = StepFunction::from_pieces(
              std::nullopt, {Rat(1), Rat(2)}, {Rat(0), Rat(1)}, Rat(0));
          for (std::size_t k = 0; k <= k_max + 1; ++k) {
            const Rat x = k == 0 ? rat(1, 2) : Rat(long(k));
            const Rat lhs1 = star_star(one, lam, x);
            const Rat want1 = x <= 1 ? Rat(1) : Rat(1 / x);
            if (lhs1 != want1) fail0("1** = min(1, 1/x)");
            const Rat lhs2 = star_star(chi1, lam, x);
            const Rat want2 = 2 * x <= 1 ? Rat(1) : Rat(1 / (2 * x));
            if (lhs2 != want2) fail0("chi_{1}** = min(1, 1/(2x))");
            if (lhs1 > 2 * lhs2) fail0("1** <= 2 chi**");
          }
        }
        StepParams sp;
        sp.whole_line = true;
        const StepFunction f = random_step(rng, sp);
        const std::string w = detail::describe(f);
        auto fail = [&](const char* check) { bad.push_back({i, check, w}); };
        const Rat sup = ess_sup_abs(f, lam);
        const Ext tn = space_norm(f, SpaceKind::L1tilde, lam);
        if (!tn.finite() || 2 * tn.value() < sup || tn.value() > sup)
          fail("(1/2)|f|_inf <= |f|_tilde <= |f|_inf");
        const Ext l1 = space_norm(f, SpaceKind::L1, lam);
        const StepFunction fo = level_function(f, lam);
        const Rat fo1 = fo.eval(Rat(1));
        if (integrate_abs(fo, lam) != l1) fail("|f°|_1 = |f|_1");
        if (Ext(fo1) < l1 || Ext(fo1) > 2 * l1)
          fail("|f|_1 <= f°(1) <= 2|f|_1");
        return bad;
      });
}

// K-divisibility with constant one: extraction and tail convergence
inline Report suite_kdiv(std::uint64_t seed, std::size_t trials,
                         unsigned jobs = 1) {
  const BorelMeasure leb = lebesgue_halfline();
  return detail::run_trials(
      "kdiv", seed, trials, jobs,
      [leb](std::mt19937_64& rng, std::size_t i) {
        std::vector<Failure> bad;
        StepFunction g = random_step(rng);
        if (integrate_abs(g, leb) == Ext(Rat(0)))
          g = g + StepFunction::indicator(Rat(0), Rat(2));
        const std::string w = detail::describe(g);
        auto fail = [&](const char* check) { bad.push_back({i, check, w}); };
        const CoupleTag couple{CoupleKind::L1tilde_Linf, leb};
        const PiecewiseLinear K = k_profile(g, couple);
        const StepFunction gt = least_decreasing_majorant(g);
        // a single phi equal to the profile extracts g~ itself
        {
          const auto fs = kdiv_extract({K}, g);
          if (fs.size() != 1 || fs[0] != gt) fail("single phi yields g~");
        }
        // random dominating family: scaled copies of K plus concave bumps
        {
          std::vector<PiecewiseLinear> phis;
          std::uniform_int_distribution<int> cnum(0, 4);
          Rat covered(0);
          for (int j = 0; j < 5; ++j) {
            Rat c = j == 4 ? Rat(1) - covered : Rat(cnum(rng)) / 8;
            if (c < 0) c = 0;
            covered += c;
            PiecewiseLinear phi = pl_scale(c, K);
            const Rat d(cnum(rng) + 1);
            phi = pl_add(phi, PiecewiseLinear({{Rat(0), Rat(0)}, {d, d}},
                                              Rat(0)));
            phis.push_back(phi);
          }
          const auto fs = kdiv_extract(phis, g);
          PiecewiseLinear sum(std::vector<PLPoint>{{Rat(0), Rat(0)}}, Rat(0));
          for (std::size_t j = 0; j < fs.size(); ++j) {
            if (!step_nonincreasing(fs[j]) ||
                (fs[j].values.size() && fs[j].values[0] < 0) ||
                fs[j].tail < 0)
              fail("extracted f_j nonneg decreasing");
            sum = pl_add(sum, primitive(fs[j]));
            if (primitive(fs[j]) != pl_min(K, phis[j]))
              fail("integral of f_j is clipped phi_j");
          }
          if (!pl_leq(K, sum)) fail("extraction dominates K");
        }
        // geometric family: phi_j = 2^{-(j-1)} K plus an exact remainder
        {
          std::vector<PiecewiseLinear> phis;
          Rat covered(0);
          for (int j = 0; j <= 20; ++j) {
            phis.push_back(pl_scale(pow2(-(j + 1)), K));
            covered += pow2(-(j + 1));
          }
          phis.push_back(pl_scale(Rat(1) - covered, K));
          const auto fs = kdiv_extract(phis, g);
          StepFunction partial = StepFunction::constant(Rat(0));
          for (int j = 0; j <= 20; ++j) partial = partial + fs[j];
          const StepFunction residual = gt - partial;
          const Rat res = k_functional(Rat(1), residual, couple);
          if (!(res <= pow2(-10))) fail("geometric tail residual <= 2^-10");
        }
        return bad;
      });
}

inline std::vector<Report> suite_all(std::uint64_t seed, unsigned jobs = 1) {
  std::vector<Report> out;
  out.push_back(suite_kfnls(seed, 1000, jobs));
  out.push_back(suite_s_bounds(seed, 1000, jobs));
  out.push_back(suite_projections(seed, 1000, jobs));
  out.push_back(suite_transfer(seed, 200, 8, jobs));
  out.push_back(suite_degenerate(20, seed, 200, jobs));
  out.push_back(suite_kdiv(seed, 200, jobs));
  return out;
}

}  // namespace couples
