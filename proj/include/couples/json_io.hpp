#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "couples/extremal.hpp"
#include "couples/measure.hpp"
#include "couples/operators.hpp"
#include "couples/rational.hpp"
#include "couples/step_function.hpp"
#include "couples/verify.hpp"

namespace couples {

using json = nlohmann::json;

// Rationals travel as strings "p/q" (or plain integer strings).
inline json rat_to_json(const Rat& r) { return to_string(r); }

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw parse_error("expected a rational string");
  return parse_rat(j.get<std::string>());
}

inline json rat_list_to_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(rat_to_json(r));
  return a;
}

inline std::vector<Rat> rat_list_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("expected an array of rationals");
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

// ---------------------------------------------------------------------------
// Step functions

inline json step_to_json(const StepFunction& f) {
  json j;
  j["origin"] = f.origin ? to_string(*f.origin) : std::string("-inf");
  j["breakpoints"] = rat_list_to_json(f.breakpoints);
  j["values"] = rat_list_to_json(f.values);
  j["tail"] = rat_to_json(f.tail);
  return j;
}

inline StepFunction step_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("expected a step-function object");
  StepFunction f;
  if (!j.contains("origin") || !j.contains("breakpoints") ||
      !j.contains("values") || !j.contains("tail"))
    throw parse_error("step function needs origin, breakpoints, values, tail");
  if (j["origin"].is_string() && j["origin"].get<std::string>() == "-inf")
    f.origin = std::nullopt;
  else
    f.origin = rat_from_json(j["origin"]);
  f.breakpoints = rat_list_from_json(j["breakpoints"]);
  f.values = rat_list_from_json(j["values"]);
  f.tail = rat_from_json(j["tail"]);
  if (f.breakpoints.size() != f.values.size())
    throw parse_error("breakpoints and values must have equal length");
  for (std::size_t i = 0; i + 1 < f.breakpoints.size(); ++i)
    if (!(f.breakpoints[i] < f.breakpoints[i + 1]))
      throw parse_error("breakpoints not strictly increasing");
  if (f.origin && !f.breakpoints.empty() && !(*f.origin < f.breakpoints[0]))
    throw parse_error("origin must precede the first breakpoint");
  f.canonicalize();
  return f;
}

// ---------------------------------------------------------------------------
// Measures

inline json measure_to_json(const BorelMeasure& m) {
  json j;
  j["atoms"] = json::array();
  for (const auto& a : m.atoms)
    j["atoms"].push_back({{"x", rat_to_json(a.x)}, {"w", rat_to_json(a.w)}});
  j["segments"] = json::array();
  for (const auto& s : m.segments) {
    json seg;
    seg["a"] = rat_to_json(s.a);
    seg["b"] = s.b ? json(to_string(*s.b)) : json("inf");
    seg["density"] = rat_to_json(s.density);
    j["segments"].push_back(seg);
  }
  return j;
}

inline BorelMeasure measure_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("expected a measure object");
  BorelMeasure m;
  for (const auto& a : j.value("atoms", json::array()))
    m.atoms.push_back({rat_from_json(a.at("x")), rat_from_json(a.at("w"))});
  for (const auto& s : j.value("segments", json::array())) {
    MeasureSegment seg;
    seg.a = rat_from_json(s.at("a"));
    if (s.at("b").is_string() && s.at("b").get<std::string>() == "inf")
      seg.b = std::nullopt;
    else
      seg.b = rat_from_json(s.at("b"));
    seg.density = rat_from_json(s.at("density"));
    m.segments.push_back(seg);
  }
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// Grid operators and certificates

inline json grid_operator_to_json(const GridOperator& T) {
  json j;
  j["in_grid"] = rat_list_to_json(T.in.cuts);
  j["out_grid"] = rat_list_to_json(T.out.cuts);
  j["matrix"] = json::array();
  for (const auto& row : T.matrix) j["matrix"].push_back(rat_list_to_json(row));
  return j;
}

inline GridOperator grid_operator_from_json(const json& j) {
  GridOperator T;
  T.in.cuts = rat_list_from_json(j.at("in_grid"));
  T.out.cuts = rat_list_from_json(j.at("out_grid"));
  T.in.validate();
  T.out.validate();
  for (const auto& row : j.at("matrix"))
    T.matrix.push_back(rat_list_from_json(row));
  if (T.matrix.size() != T.out.cells())
    throw parse_error("matrix row count does not match the output grid");
  for (const auto& row : T.matrix)
    if (row.size() != T.in.cells())
      throw parse_error("matrix column count does not match the input grid");
  return T;
}

inline json certificate_to_json(const Certificate& c) {
  json j;
  j["exact"] = c.exact;
  if (c.exact) {
    j["optimum"] = rat_to_json(c.optimum);
    j["dual"] = rat_list_to_json(c.dual);
  }
  j["optimum_f"] = c.optimum_f;
  j["dual_f"] = c.dual_f;
  j["operator"] = grid_operator_to_json(c.op);
  j["grid"] = rat_list_to_json(c.grid.cuts);
  return j;
}

inline json chain_to_json(const std::vector<ChainLine>& chain) {
  json a = json::array();
  for (const auto& l : chain)
    a.push_back({{"line", l.text},
                 {"lhs", rat_to_json(l.lhs)},
                 {"rhs", rat_to_json(l.rhs)},
                 {"holds", l.holds}});
  return a;
}

// ---------------------------------------------------------------------------
// Verification reports

inline json report_to_json(const Report& r) {
  json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["failures"] = json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back(
        {{"trial", f.trial}, {"check", f.check}, {"witness", f.witness}});
  j["stats"] = json::object();
  for (const auto& [k, v] : r.stats) j["stats"][k] = v;
  return j;
}

}  // namespace couples
