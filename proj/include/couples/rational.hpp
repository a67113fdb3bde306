#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace couples {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct couples_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input could not be parsed (bad JSON, bad rational string, ...)
struct parse_error : couples_error {
  using couples_error::couples_error;
};

// operands live on different domains
struct domain_mismatch : couples_error {
  using couples_error::couples_error;
};

// pointwise division with a denominator vanishing where the numerator does not
struct division_error : couples_error {
  using couples_error::couples_error;
};

// an operation that needs a finite integral met a non-integrable tail
struct not_integrable : couples_error {
  using couples_error::couples_error;
};

// operator output does not fit the requested grid / range
struct not_representable : couples_error {
  using couples_error::couples_error;
};

// a domination hypothesis failed; carries a witness point
struct domination_error : couples_error {
  Rat witness;
  domination_error(const std::string& msg, Rat t)
      : couples_error(msg), witness(std::move(t)) {}
};

struct solver_error : couples_error {
  using couples_error::couples_error;
};

inline Rat rat(long long n, long long d = 1) {
  if (d == 0) throw division_error("rational with zero denominator");
  return Rat(Int(n), Int(d));
}

inline std::string to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat parse_rat(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in \"" + s + "\"");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw parse_error("bad rational \"" + s + "\"");
  }
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

// 2^e for any integer e
inline Rat pow2(long e) {
  Int p = Int(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rat(p) : Rat(Int(1), p);
}

// largest j with 2^j <= x, x > 0
inline long floor_log2(const Rat& x) {
  if (x <= 0) throw couples_error("floor_log2 of non-positive value");
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  long j = static_cast<long>(boost::multiprecision::msb(num)) -
           static_cast<long>(boost::multiprecision::msb(den));
  while (pow2(j) > x) --j;
  while (pow2(j + 1) <= x) ++j;
  return j;
}

// A nonnegative extended value: a rational or +infinity.  Used for measures
// of sets, norms and distribution functions, all of which may diverge.
struct Ext {
  bool is_inf = false;
  Rat v;

  Ext() = default;
  Ext(Rat r) : v(std::move(r)) {}        // NOLINT(google-explicit-constructor)
  static Ext inf() { return Ext{true, Rat(0)}; }

  bool finite() const { return !is_inf; }
  const Rat& value() const {
    if (is_inf) throw couples_error("infinite value used where finite required");
    return v;
  }

  Ext& operator+=(const Ext& o) {
    if (o.is_inf) is_inf = true;
    if (!is_inf) v += o.v;
    return *this;
  }
  friend Ext operator+(Ext a, const Ext& b) { return a += b; }
  friend Ext operator*(const Rat& c, const Ext& a) {
    if (a.is_inf) {
      if (c == 0) return Ext(Rat(0));
      if (c < 0) throw couples_error("negative scale of +infinity");
      return inf();
    }
    return Ext(c * a.v);
  }
  friend bool operator==(const Ext& a, const Ext& b) {
    if (a.is_inf || b.is_inf) return a.is_inf == b.is_inf;
    return a.v == b.v;
  }
  friend bool operator<(const Ext& a, const Ext& b) {
    if (a.is_inf) return false;
    if (b.is_inf) return true;
    return a.v < b.v;
  }
  friend bool operator<=(const Ext& a, const Ext& b) { return a < b || a == b; }
  friend bool operator>(const Ext& a, const Ext& b) { return b < a; }
  friend bool operator>=(const Ext& a, const Ext& b) { return b <= a; }

  std::string str() const { return is_inf ? "inf" : couples::to_string(v); }

private:
  Ext(bool i, Rat r) : is_inf(i), v(std::move(r)) {}
};

}  // namespace couples
