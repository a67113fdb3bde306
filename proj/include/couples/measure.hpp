#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "couples/rational.hpp"
#include "couples/step_function.hpp"

namespace couples {

// A Borel measure on the line given by finitely many atoms and finitely many
// constant-density segments.  Lambda(x) = measure of (-inf, x] is finite for
// every x; the total mass may be infinite only through a final unbounded
// segment.
struct MeasureAtom {
  Rat x, w;  // w > 0
};

struct MeasureSegment {
  Rat a;
  std::optional<Rat> b;  // nullopt = +infinity
  Rat density;           // > 0
};

struct BorelMeasure {
  std::vector<MeasureAtom> atoms;       // strictly increasing locations
  std::vector<MeasureSegment> segments; // disjoint, sorted

  void validate() const {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].w <= 0) throw couples_error("atom with non-positive weight");
      if (i && !(atoms[i - 1].x < atoms[i].x))
        throw couples_error("atom locations not strictly increasing");
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const auto& s = segments[i];
      if (s.density <= 0) throw couples_error("segment with non-positive density");
      if (s.b && !(s.a < *s.b)) throw couples_error("empty segment");
      if (!s.b && i + 1 != segments.size())
        throw couples_error("unbounded segment must be last");
      if (i) {
        const auto& p = segments[i - 1];
        if (!p.b || *p.b > s.a) throw couples_error("segments overlap");
      }
    }
  }
};

inline BorelMeasure lebesgue_halfline() {
  BorelMeasure m;
  m.segments.push_back({Rat(0), std::nullopt, Rat(1)});
  return m;
}

inline bool is_lebesgue_halfline(const BorelMeasure& m) {
  return m.atoms.empty() && m.segments.size() == 1 &&
         m.segments[0].a == 0 && !m.segments[0].b && m.segments[0].density == 1;
}

// ---------------------------------------------------------------------------
// Mass items: the measure cut into elementary pieces, ordered left to right.
// An atom at x sorts before a segment piece starting at x.

struct MassItem {
  bool is_atom;
  Rat x;                  // atom location / piece start
  std::optional<Rat> end; // piece end (atoms: unused); nullopt = +infinity
  Rat weight;             // atom weight / segment density

  Ext mass() const {
    if (is_atom) return Ext(weight);
    if (!end) return Ext::inf();
    return Ext(weight * (*end - x));
  }
};

// Elementary decomposition of the measure, with segments additionally split
// at the given cut points (typically the breakpoints of a step function).
inline std::vector<MassItem> mass_items(const BorelMeasure& m,
                                        const std::vector<Rat>& extra_cuts = {}) {
  std::vector<Rat> cuts = extra_cuts;
  for (const auto& a : m.atoms) cuts.push_back(a.x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<MassItem> items;
  for (const auto& a : m.atoms) items.push_back({true, a.x, std::nullopt, a.w});
  for (const auto& s : m.segments) {
    Rat lo = s.a;
    for (const Rat& c : cuts) {
      if (c <= lo) continue;
      if (s.b && c >= *s.b) break;
      items.push_back({false, lo, c, s.density});
      lo = c;
    }
    items.push_back({false, lo, s.b, s.density});
  }
  std::sort(items.begin(), items.end(), [](const MassItem& p, const MassItem& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.is_atom && !q.is_atom;
  });
  return items;
}

// Lambda(x) = m(-inf, x]
inline Rat Lambda(const BorelMeasure& m, const Rat& x) {
  Rat t(0);
  for (const auto& a : m.atoms)
    if (a.x <= x) t += a.w;
  for (const auto& s : m.segments) {
    if (s.a >= x) continue;
    const Rat hi = (s.b && *s.b < x) ? *s.b : x;
    t += s.density * (hi - s.a);
  }
  return t;
}

// Lambda(x-) = m(-inf, x)
inline Rat Lambda_left(const BorelMeasure& m, const Rat& x) {
  Rat t = Lambda(m, x);
  for (const auto& a : m.atoms)
    if (a.x == x) t -= a.w;
  return t;
}

inline Ext total_mass(const BorelMeasure& m) {
  Ext t{Rat(0)};
  for (const auto& it : mass_items(m)) t += it.mass();
  return t;
}

// measure of [lo, hi) (nullopt bounds = infinite)
inline Ext measure_of(const BorelMeasure& m, const std::optional<Rat>& lo,
                      const std::optional<Rat>& hi) {
  Ext t{Rat(0)};
  for (const auto& a : m.atoms) {
    if (lo && a.x < *lo) continue;
    if (hi && a.x >= *hi) continue;
    t += Ext(a.w);
  }
  for (const auto& s : m.segments) {
    Rat a = s.a;
    if (lo && *lo > a) a = *lo;
    std::optional<Rat> b = s.b;
    if (hi && (!b || *hi < *b)) b = hi;
    if (b && *b <= a) continue;
    if (!b) { t += Ext::inf(); continue; }
    t += Ext(s.density * (*b - a));
  }
  return t;
}

namespace detail {

// value of f on the (elementary) item; f is constant there when the items
// were built with f's breakpoints as extra cuts
inline Rat item_value(const StepFunction& f, const MassItem& it) {
  if (f.origin && f.origin > it.x)
    throw domain_mismatch("function not defined on the measure's support");
  if (it.is_atom) return f.eval(it.x);
  if (it.end) return f.eval((it.x + *it.end) / 2);
  return f.eval(it.x + 1);
}

}  // namespace detail

// exact integral of |f| dm
inline Ext integrate_abs(const StepFunction& f, const BorelMeasure& m) {
  Ext t{Rat(0)};
  for (const auto& it : mass_items(m, f.breakpoints)) {
    Rat v = detail::item_value(f, it);
    if (v < 0) v = -v;
    if (v == 0) continue;
    t += v * it.mass();
  }
  return t;
}

// m-essential supremum of |f| (finite for step functions)
inline Rat ess_sup_abs(const StepFunction& f, const BorelMeasure& m) {
  Rat s(0);
  for (const auto& it : mass_items(m, f.breakpoints)) {
    Rat v = detail::item_value(f, it);
    if (v < 0) v = -v;
    if (v > s) s = v;
  }
  return s;
}

// integral of |f| dm over (-inf, x] (include_x) or (-inf, x)
inline Rat integral_upto(const StepFunction& f, const BorelMeasure& m,
                         const Rat& x, bool include_x = true) {
  Rat t(0);
  for (const auto& it : mass_items(m, f.breakpoints)) {
    if (it.x > x) continue;
    if (it.is_atom) {
      if (it.x == x && !include_x) continue;
      Rat v = detail::item_value(f, it);
      t += (v < 0 ? Rat(-v) : v) * it.weight;
    } else {
      Rat hi = x;
      if (it.end && *it.end < x) hi = *it.end;
      if (hi <= it.x) continue;
      Rat v = detail::item_value(f, it);
      t += (v < 0 ? Rat(-v) : v) * it.weight * (hi - it.x);
    }
  }
  return t;
}

// exact signed Lebesgue integral of h over the bounded interval [a, b]
inline Rat lebesgue_integral_on(const StepFunction& h, const Rat& a,
                                const Rat& b) {
  if (b < a) throw couples_error("integration over empty interval");
  if (h.origin && a < *h.origin)
    throw domain_mismatch("integration below domain origin");
  Rat t(0);
  for (const auto& p : pieces_of(h)) {
    Rat lo = a;
    if (p.lo && *p.lo > lo) lo = *p.lo;
    Rat hi = b;
    if (p.hi && *p.hi < hi) hi = *p.hi;
    if (hi > lo) t += p.value * (hi - lo);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Retract of (R, m) into ((0, L), Lebesgue): Omega, phi, atom images.

struct AtomImage {
  Rat lo, hi;    // the interval (Lambda(y-), Lambda(y)]
  Rat location;  // y
};

struct RetractData {
  Ext total;              // L; Omega = (0, L), closed at L iff attained
  bool attained = false;  // sup Lambda reached (no unbounded segment)
  std::vector<AtomImage> atom_images;
  std::vector<MassItem> items;  // with cumulative start offsets below
  std::vector<Rat> offsets;     // Lambda at the left end of each item

  // phi(t) = inf{ y : t <= Lambda(y) }, 0 < t <= L
  Rat phi(const Rat& t) const {
    if (t <= 0 || Ext(t) > total || (Ext(t) == total && !attained))
      throw domain_mismatch("phi argument outside Omega");
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& it = items[i];
      const Ext m = it.mass();
      if (!m.finite()) return it.x + (t - offsets[i]) / it.weight;
      if (t <= offsets[i] + m.value())
        return it.is_atom ? it.x : it.x + (t - offsets[i]) / it.weight;
    }
    throw couples_error("phi: unreachable");
  }
};

inline RetractData retract(const BorelMeasure& m) {
  RetractData r;
  r.items = mass_items(m);
  Rat t(0);
  bool open_end = false;
  for (const auto& it : r.items) {
    r.offsets.push_back(t);
    const Ext mass = it.mass();
    if (!mass.finite()) { open_end = true; break; }
    if (it.is_atom)
      r.atom_images.push_back({t, t + mass.value(), it.x});
    t += mass.value();
  }
  r.total = open_end ? Ext::inf() : Ext(t);
  r.attained = !open_end && !r.items.empty();
  return r;
}

// E_m f = (f o phi) chi_Omega as a step function on (0, oo)
inline StepFunction E_lambda(const BorelMeasure& m, const StepFunction& f) {
  StepFunction r;
  r.origin = Rat(0);
  Rat t(0);
  bool unbounded = false;
  Rat last_value(0);
  for (const auto& it : mass_items(m, f.breakpoints)) {
    const Rat v = detail::item_value(f, it);
    const Ext mass = it.mass();
    if (!mass.finite()) {
      unbounded = true;
      last_value = v;
      break;
    }
    t += mass.value();
    r.breakpoints.push_back(t);
    r.values.push_back(v);
  }
  r.tail = unbounded ? last_value : Rat(0);
  r.canonicalize();
  return r;
}

// replace h on [a, b) by the constant v
inline StepFunction replace_on(const StepFunction& h, const Rat& a, const Rat& b,
                               const Rat& v) {
  StepFunction ind = StepFunction::indicator(a, b, h.origin);
  StepFunction keep = detail::zip(h, ind, [](const Rat& hv, const Rat& iv) {
    return iv == 1 ? Rat(0) : hv;
  });
  return keep + scale(v, ind);
}

// A_m h: average h over each atom image, keep it elsewhere on Omega,
// zero outside Omega
inline StepFunction A_lambda(const BorelMeasure& m, const StepFunction& h) {
  if (!h.origin || *h.origin != 0)
    throw domain_mismatch("A_lambda expects a function on (0, oo)");
  const RetractData r = retract(m);
  StepFunction out = h;
  for (const auto& img : r.atom_images) {
    const Rat avg = lebesgue_integral_on(h, img.lo, img.hi) / (img.hi - img.lo);
    out = replace_on(out, img.lo, img.hi, avg);
  }
  if (r.total.finite()) {
    if (r.total.value() == 0) return StepFunction::constant(Rat(0));
    // zero outside Omega
    StepFunction ind = StepFunction::indicator(Rat(0), r.total.value());
    out = detail::zip(out, ind, [](const Rat& v, const Rat& in_omega) {
      return in_omega == 1 ? v : Rat(0);
    });
  }
  return out;
}

// Canonical representative of the m-equivalence class of f: the value at each
// atom persists to the right until the next support point, segments keep their
// values, everything left of the support is zero.  Functions equal m-a.e. get
// identical representatives.
inline StepFunction canon_lambda(const StepFunction& f, const BorelMeasure& m) {
  StepFunction out;
  out.origin = f.origin;
  Rat cur(0);
  bool any = false;
  for (const auto& it : mass_items(m, f.breakpoints)) {
    const Rat v = detail::item_value(f, it);
    if (any && v == cur) continue;
    if (!out.breakpoints.empty() && out.breakpoints.back() == it.x) {
      // an atom immediately followed by a segment starting at the same point
      if (v != cur)
        throw not_representable(
            "measure class not representable as a right-continuous step "
            "function (atom adjacent to a segment start)");
      continue;
    }
    if (!(any == false && out.origin && *out.origin == it.x)) {
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

// m-a.e. equality
inline bool ae_equal(const StepFunction& f, const StepFunction& g,
                     const BorelMeasure& m) {
  for (const auto& it : mass_items(m, [&] {
         std::vector<Rat> cuts = f.breakpoints;
         cuts.insert(cuts.end(), g.breakpoints.begin(), g.breakpoints.end());
         return cuts;
       }())) {
    if (detail::item_value(f, it) != detail::item_value(g, it)) return false;
  }
  return true;
}

// inverse of E_m on its range: u must be constant on every atom image
inline StepFunction E_lambda_inverse(const BorelMeasure& m,
                                     const StepFunction& u) {
  if (!u.origin || *u.origin != 0)
    throw domain_mismatch("E_lambda_inverse expects a function on (0, oo)");
  const RetractData r = retract(m);
  StepFunction out;
  out.origin = std::nullopt;
  Rat cur(0);
  bool any = false;
  auto emit = [&](const Rat& x, const Rat& v) {
    if (any && v == cur) return;
    if (!out.breakpoints.empty() && out.breakpoints.back() == x) {
      if (v != cur)
        throw not_representable(
            "measure class not representable as a right-continuous step "
            "function (atom adjacent to a segment start)");
      return;
    }
    out.breakpoints.push_back(x);
    out.values.push_back(cur);
    cur = v;
    any = true;
  };
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    const auto& it = r.items[i];
    const Rat t0 = r.offsets[i];
    if (it.is_atom) {
      for (const Rat& b : u.breakpoints)
        if (t0 < b && Ext(b) < Ext(t0) + it.mass())
          throw not_representable("function not constant on an atom image");
      emit(it.x, u.eval(t0));
    } else {
      // pull u's breakpoints inside the image back through Lambda
      emit(it.x, u.eval(t0));
      const Ext mass = it.mass();
      for (const Rat& b : u.breakpoints) {
        if (b <= t0) continue;
        if (mass.finite() && b >= t0 + mass.value()) continue;
        emit(it.x + (b - t0) / it.weight, u.eval(b));
      }
    }
  }
  out.tail = cur;
  out.canonicalize();
  return canon_lambda(out, m);
}

// view a function on (0, oo) as a function on the whole line, zero below 0
inline StepFunction on_real_line(const StepFunction& f) {
  if (!f.origin) return f;
  StepFunction out;
  out.origin = std::nullopt;
  out.breakpoints.push_back(*f.origin);
  out.values.push_back(Rat(0));
  out.breakpoints.insert(out.breakpoints.end(), f.breakpoints.begin(),
                         f.breakpoints.end());
  out.values.insert(out.values.end(), f.values.begin(), f.values.end());
  out.tail = f.tail;
  out.canonicalize();
  return out;
}

}  // namespace couples
