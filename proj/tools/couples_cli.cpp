#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "couples/couples.hpp"

namespace {

using namespace couples;

// exit codes: 0 ok, 1 check failure, 2 malformed input, 3 domain error,
// 4 solver failure

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream o(out);
    if (!o) throw couples_error("cannot write " + out);
    o << text;
    if (!text.empty() && text.back() != '\n') o << "\n";
  }
}

std::uint64_t default_seed() {
  if (const char* e = std::getenv("COUPLES_SEED")) {
    try {
      return std::stoull(e);
    } catch (...) {
      throw parse_error("COUPLES_SEED is not an integer");
    }
  }
  return 20260101;
}

CoupleKind parse_couple(const std::string& s) {
  if (s == "l1-linf") return CoupleKind::L1_Linf;
  if (s == "l1tilde-linf") return CoupleKind::L1tilde_Linf;
  if (s == "l1-linflevel") return CoupleKind::L1_LinfLevel;
  throw parse_error("unknown couple " + s);
}

SpaceKind parse_space(const std::string& s) {
  if (s == "l1") return SpaceKind::L1;
  if (s == "linf") return SpaceKind::Linf;
  if (s == "l1tilde") return SpaceKind::L1tilde;
  if (s == "linf-level") return SpaceKind::LinfLevel;
  throw parse_error("unknown space " + s);
}

SolveMode parse_mode(const std::string& s) {
  if (s == "auto") return SolveMode::automatic;
  if (s == "rational") return SolveMode::rational;
  if (s == "float") return SolveMode::floating;
  throw parse_error("unknown mode " + s);
}

std::string fmt_rat(const Rat& r, int decimal) {
  if (decimal <= 0) return to_string(r);
  std::ostringstream os;
  os.precision(decimal);
  os << to_double(r);
  return os.str();
}

Rat dyadic(double x) {
  const double s = std::ldexp(x, 30);
  return Rat(Int(static_cast<long long>(std::llround(s))), Int(1) << 30);
}

std::string profile_csv(const PiecewiseLinear& K, int samples, int decimal) {
  std::vector<Rat> ts;
  for (const auto& v : K.vertices) ts.push_back(v.x);
  if (samples > 0) {
    double lo = 0, hi = 0;
    for (const auto& v : K.vertices)
      if (v.x > 0) {
        const double x = to_double(v.x);
        if (lo == 0 || x < lo) lo = x;
        if (x > hi) hi = x;
      }
    if (lo == 0) lo = 0.0625;
    if (hi <= lo) hi = lo * 16;
    for (int k = 0; k < samples; ++k) {
      const double u = samples == 1 ? 0.5 : double(k) / double(samples - 1);
      Rat t = dyadic(lo * std::pow(hi / lo, u));
      if (t > 0) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  }
  std::string csv = "t,K\n";
  for (const Rat& t : ts)
    csv += fmt_rat(t, decimal) + "," + fmt_rat(K.eval(t), decimal) + "\n";
  return csv;
}

struct ComputeArgs {
  std::string fn_file, measure_file, out;
  std::string couple = "l1-linf", space = "linf";
  std::string x = "1";
  int samples = 0, decimal = 0;
  bool csv = false;
};

int run_compute(const std::string& what, const ComputeArgs& a) {
  const StepFunction f = step_from_json(load_json(a.fn_file));
  const BorelMeasure m = a.measure_file.empty()
                             ? lebesgue_halfline()
                             : measure_from_json(load_json(a.measure_file));
  if (what == "majorant") {
    emit(a.out, step_to_json(least_decreasing_majorant(f, m)).dump(2));
  } else if (what == "level") {
    emit(a.out, step_to_json(level_function(f, m)).dump(2));
  } else if (what == "rearrange") {
    emit(a.out, step_to_json(rearrange(f, m)).dump(2));
  } else if (what == "kprofile") {
    const PiecewiseLinear K = k_profile(f, {parse_couple(a.couple), m});
    if (a.csv) {
      emit(a.out, profile_csv(K, a.samples, a.decimal));
    } else {
      json j;
      j["vertices"] = json::array();
      for (const auto& v : K.vertices)
        j["vertices"].push_back({rat_to_json(v.x), rat_to_json(v.y)});
      j["final_slope"] = rat_to_json(K.final_slope);
      emit(a.out, j.dump(2));
    }
  } else if (what == "norm") {
    const Ext n = space_norm(f, parse_space(a.space), m);
    emit(a.out, n.finite() ? fmt_rat(n.value(), a.decimal)
                           : std::string("inf"));
  } else if (what == "star2") {
    emit(a.out, fmt_rat(star_star(f, m, parse_rat(a.x)), a.decimal));
  }
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t kmax = 20;
  std::size_t measures = 8;
  unsigned jobs = 1;
  std::string out;
};

int run_verify(const std::string& which, const VerifyArgs& a) {
  std::vector<Report> reports;
  if (which == "kfnls") reports.push_back(suite_kfnls(a.seed, a.trials, a.jobs));
  else if (which == "s_bounds")
    reports.push_back(suite_s_bounds(a.seed, a.trials, a.jobs));
  else if (which == "projections")
    reports.push_back(suite_projections(a.seed, a.trials, a.jobs));
  else if (which == "transfer")
    reports.push_back(suite_transfer(a.seed, a.trials, a.measures, a.jobs));
  else if (which == "degenerate")
    reports.push_back(suite_degenerate(a.kmax, a.seed, a.trials, a.jobs));
  else if (which == "kdiv")
    reports.push_back(suite_kdiv(a.seed, a.trials, a.jobs));
  else if (which == "all")
    reports = suite_all(a.seed, a.jobs);
  json j = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    j.push_back(report_to_json(r));
    ok = ok && r.ok();
  }
  emit(a.out, (reports.size() == 1 ? j[0] : j).dump(2));
  return ok ? 0 : 1;
}

struct ExtremalArgs {
  std::string g_file, out;
  std::size_t refine = 0;
  std::string mode = "auto";
};

int run_extremal(const std::string& which, const ExtremalArgs& a) {
  const GridSpec grid = default_extremal_grid();
  const StepFunction inst =
      which == "custom" ? step_from_json(load_json(a.g_file))
                        : extremal_instance();
  std::function<ExtremalBuild(const GridSpec&)> builder;
  if (which == "exn")
    builder = [&](const GridSpec& g) { return build_exn_lp(inst, g); };
  else
    builder = [&](const GridSpec& g) { return build_exm_lp(inst, g); };
  const std::vector<Certificate> certs =
      refine_and_resolve(builder, grid, a.refine, parse_mode(a.mode));
  const Certificate& c = certs.front();
  std::cout << "optimum: "
            << (c.exact ? to_string(c.optimum) : std::to_string(c.optimum_f))
            << "\n";
  bool ok = true;
  if (which != "custom") {
    const Rat bound = rat(9, 8);
    const bool above =
        c.exact ? c.optimum >= bound : c.optimum_f >= to_double(bound) - 1e-9;
    std::cout << "bound 9/8: " << (above ? "holds" : "VIOLATED") << "\n";
    ok = ok && above;
    const auto chain = c.exact
                           ? (which == "exm" ? exm_chain_report(c.op, c.optimum)
                                             : exn_chain_report(c.op, c.optimum))
                           : std::vector<ChainLine>{};
    for (const auto& l : chain) {
      std::cout << l.text << "  [" << to_string(l.lhs)
                << (l.text.find('=') != std::string::npos &&
                            l.text.find("<=") == std::string::npos
                        ? " = "
                        : " <= ")
                << to_string(l.rhs) << "]  "
                << (l.holds ? "holds" : "VIOLATED") << "\n";
      ok = ok && l.holds;
    }
  }
  for (std::size_t l = 1; l < certs.size(); ++l) {
    std::cout << "refined optimum (level " << l << "): "
              << (certs[l].exact ? to_string(certs[l].optimum)
                                 : std::to_string(certs[l].optimum_f))
              << "\n";
  }
  json j = json::array();
  for (const auto& cert : certs) j.push_back(certificate_to_json(cert));
  if (!a.out.empty()) emit(a.out, (certs.size() == 1 ? j[0] : j).dump(2));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact step-function calculus for couples of function spaces"};
  app.require_subcommand(1);

  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand("compute", "constructions and norms");
  compute->require_subcommand(1);
  std::vector<CLI::App*> csubs;
  for (const char* name :
       {"majorant", "level", "rearrange", "kprofile", "norm", "star2"}) {
    CLI::App* s = compute->add_subcommand(name);
    s->add_option("-f,--function", ca.fn_file, "step function JSON")
        ->required();
    s->add_option("--measure", ca.measure_file, "measure JSON");
    s->add_option("--out", ca.out, "output file");
    s->add_option("--decimal", ca.decimal, "decimal digits instead of p/q");
    csubs.push_back(s);
  }
  csubs[3]->add_option("--couple", ca.couple,
                       "l1-linf | l1tilde-linf | l1-linflevel");
  csubs[3]->add_flag("--csv", ca.csv, "CSV profile output");
  csubs[3]->add_option("--samples", ca.samples, "extra log-spaced samples");
  csubs[4]->add_option("--space", ca.space, "l1 | linf | l1tilde | linf-level");
  csubs[5]->add_option("--x", ca.x, "evaluation point")->required();

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "property suites");
  verify->require_subcommand(1);
  for (const char* name : {"kfnls", "s_bounds", "projections", "transfer",
                           "degenerate", "kdiv", "all"}) {
    CLI::App* s = verify->add_subcommand(name);
    s->add_option("--seed", va.seed, "rng seed");
    s->add_option("--trials", va.trials, "trial count");
    s->add_option("--kmax", va.kmax, "degenerate measure depth");
    s->add_option("--measures", va.measures, "transfer measure pool size");
    s->add_option("--jobs", va.jobs, "parallel trial workers");
    s->add_option("--out", va.out, "report file");
  }

  ExtremalArgs ea;
  CLI::App* extremal = app.add_subcommand("extremal", "LP lower bounds");
  extremal->require_subcommand(1);
  for (const char* name : {"exm", "exn", "custom"}) {
    CLI::App* s = extremal->add_subcommand(name);
    s->add_option("--refine", ea.refine, "dyadic refinement levels");
    s->add_option("--mode", ea.mode, "auto | rational | float");
    s->add_option("--out", ea.out, "certificate file");
    if (std::string(name) == "custom")
      s->add_option("--g", ea.g_file, "instance JSON")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return run_compute(compute->get_subcommands().front()->get_name(), ca);
    if (verify->parsed()) {
      CLI::App* s = verify->get_subcommands().front();
      if (!s->count("--seed")) va.seed = default_seed();
      return run_verify(s->get_name(), va);
    }
    if (extremal->parsed())
      return run_extremal(extremal->get_subcommands().front()->get_name(), ea);
  } catch (const solver_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 4;
  } catch (const parse_error& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const domain_mismatch& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const not_integrable& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const not_representable& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const domination_error& e) {
    std::cerr << "domain error: " << e.what() << " (witness "
              << to_string(e.witness) << ")\n";
    return 3;
  } catch (const division_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const couples_error& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
