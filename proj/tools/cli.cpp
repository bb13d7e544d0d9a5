#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "relloc/elementary.hpp"
#include "relloc/io.hpp"
#include "relloc/localisation.hpp"
#include "relloc/obsexpr.hpp"
#include "relloc/verify.hpp"

namespace relloc::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::optional<double> c;
  std::string format = "csv";
};

SystemState load_state(const std::string& path, const Globals& g) {
  return system_state_from_json(read_json_file(path), g.c);
}

struct TauRange {
  double a = 0.0;
  double b = 0.0;
  int n = 1;
};

/// "a:b:n", n inclusive sample points.
TauRange parse_tau(const std::string& text) {
  TauRange r;
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  if (!(in >> r.a >> c1 >> r.b >> c2 >> r.n) || c1 != ':' || c2 != ':' || !in.eof())
    throw std::invalid_argument("--tau expects a:b:n, got '" + text + "'");
  if (r.n < 1) throw std::invalid_argument("--tau needs n >= 1");
  return r;
}

SSCChoice parse_choice(const std::string& name) {
  if (name == "nw") return SSCChoice::newton_wigner();
  if (name == "ce") return SSCChoice::centre_of_energy();
  if (name == "ci") return SSCChoice::centre_of_inertia();
  throw std::invalid_argument("--choice must be one of nw, ce, ci");
}

/// Accepts any future timelike vector and normalises it.
FourVector unit_normal(const std::vector<double>& u) {
  const FourVector v(u[0], u[1], u[2], u[3]);
  if (!is_future_timelike(v)) throw std::invalid_argument("--u must be a future-directed timelike vector");
  return v / std::sqrt(-inner(v, v));
}

int cmd_eval(const Globals& g, const std::string& path, const std::string& text, std::ostream& out) {
  const auto [sys, st] = load_state(path, g);
  const double v = evaluate(parse(text, observable_aliases(sys)), sys, st);
  if (g.format == "json") {
    json j{{"schema", kSchema}, {"expression", text}, {"value", v}};
    out << j.dump(2) << "\n";
  } else {
    out << format_double(v) << "\n";
  }
  return kOk;
}

int cmd_bracket(const Globals& g, const std::string& path, const std::string& f_text, const std::string& g_text,
                bool symbolic, std::ostream& out) {
  const auto [sys, st] = load_state(path, g);
  const AliasMap aliases = observable_aliases(sys);
  const Expression b = poisson_bracket(parse(f_text, aliases), parse(g_text, aliases));
  const double v = evaluate(b, sys, st);
  if (g.format == "json") {
    json j{{"schema", kSchema}, {"f", f_text}, {"g", g_text}, {"value", v}};
    if (symbolic) j["symbolic"] = b.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << format_double(v) << "\n";
    if (symbolic) out << b.to_string() << "\n";
  }
  return kOk;
}

int cmd_worldline(const Globals& g, const std::string& path, const std::string& choice_name,
                  const std::vector<double>& u_in, const std::string& tau_text, std::ostream& out) {
  const auto [sys, st] = load_state(path, g);
  const SSCChoice choice = parse_choice(choice_name);
  const FourVector u = unit_normal(u_in);
  const TauRange range = parse_tau(tau_text);
  const MomentumValue mv = momenta(sys, st);
  json rows = json::array();
  if (g.format != "json") out << "tau,x0,x1,x2,x3\n";
  for (int k = 0; k < range.n; ++k) {
    const double tau = range.n == 1 ? range.a : range.a + (range.b - range.a) * k / (range.n - 1);
    const FourVector x = ssc_position(mv, choice, Hyperplane(u, tau));
    if (g.format == "json") {
      rows.push_back({{"tau", tau}, {"x", x.c}});
    } else {
      out << format_double(tau);
      for (int mu = 0; mu < 4; ++mu) out << "," << format_double(x[mu]);
      out << "\n";
    }
  }
  if (g.format == "json") {
    json j{{"schema", kSchema}, {"choice", choice_name}, {"u", u.c}, {"rows", rows}};
    out << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_moller(const Globals& g, const std::string& path, std::ostream& out) {
  const auto [sys, st] = load_state(path, g);
  const MomentumValue mv = momenta(sys, st);
  const FourVector n = mv.momentum() / mv.mass_c();
  const Hyperplane sigma(n / std::sqrt(-inner(n, n)), 0.0);
  const MollerDisc disc = moller_disc(mv, sigma);
  if (g.format == "csv") {
    out << "radius,centre0,centre1,centre2,centre3,normal0,normal1,normal2,normal3\n" << format_double(disc.radius);
    for (int mu = 0; mu < 4; ++mu) out << "," << format_double(disc.centre[mu]);
    for (int mu = 0; mu < 4; ++mu) out << "," << format_double(disc.normal[mu]);
    out << "\n";
    return kOk;
  }
  json j = to_json(disc);
  j["hyperplane"] = to_json(sigma);
  j["spin"] = spin_magnitude(mv);
  j["diagnostics"] = {{"centre_dot_W", inner(disc.centre, disc.normal)},
                      {"u_dot_centre_plus_tau", inner(sigma.u(), disc.centre) + sigma.tau()},
                      {"P_dot_W", inner(mv.momentum(), disc.normal)}};
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite, RunConfig cfg, const std::vector<std::string>& tols,
               std::ostream& out, std::ostream& err) {
  cfg.format = g.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (g.c) cfg.c = *g.c;
  for (const auto& t : tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--tol expects suite=value, got '" + t + "'");
    const std::string name = t.substr(0, eq);
    if (!has_suite(name)) throw std::invalid_argument("--tol names unknown suite '" + name + "'");
    cfg.tolerance_overrides[name] = std::stod(t.substr(eq + 1));
  }
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else if (has_suite(suite)) {
    suites = {suite};
  } else {
    err << "unknown suite '" << suite << "'; available: all";
    for (const auto& n : suite_names()) err << " " << n;
    err << "\n";
    return kUsage;
  }
  bool ok = true;
  json all = json::array();
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const Report r = run_suite(suites[i], cfg);
    ok = ok && r.passed();
    if (cfg.format == OutputFormat::Json) {
      all.push_back(json::parse(r.to_json()));
    } else {
      std::string csv = r.to_csv();
      if (i > 0) csv = csv.substr(csv.find('\n') + 1);
      out << csv;
    }
  }
  if (cfg.format == OutputFormat::Json) out << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton-Wigner localisation toolkit for classical elementary systems", "relloc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  double c_value = 0.0;
  auto* c_opt = app.add_option("--c", c_value, "Speed of light, overriding the state file")->check(CLI::PositiveNumber);
  auto* format_opt = app.add_option("--format", g.format, "Output format (moller defaults to json)")->check(CLI::IsMember({"csv", "json"}));

  std::string state_path, expr_text, f_text, g_text, choice = "nw", tau = "0:1:2", suite;
  bool symbolic = false;
  std::vector<double> u{1.0, 0.0, 0.0, 0.0};
  RunConfig cfg;
  std::vector<std::string> tols;

  auto* eval = app.add_subcommand("eval", "Evaluate an observable at a state");
  eval->add_option("state", state_path, "State JSON file")->required();
  eval->add_option("expr", expr_text, "Observable expression")->required();

  auto* bracket = app.add_subcommand("bracket", "Poisson bracket {f, g} at a state");
  bracket->add_option("state", state_path, "State JSON file")->required();
  bracket->add_option("f", f_text, "First observable")->required();
  bracket->add_option("g", g_text, "Second observable")->required();
  bracket->add_flag("--symbolic", symbolic, "Also print the bracket expression");

  auto* worldline = app.add_subcommand("worldline", "SSC positions on the hyperplanes (u, tau)");
  worldline->add_option("state", state_path, "State JSON file")->required();
  worldline->add_option("--choice", choice, "SSC choice")->check(CLI::IsMember({"nw", "ce", "ci"}));
  worldline->add_option("--u", u, "Hyperplane normal (4 reals, normalised)")->expected(4);
  worldline->add_option("--tau", tau, "a:b:n, n evenly spaced values from a to b inclusive");

  auto* verify = app.add_subcommand("verify", "Run a verification suite (or 'all')");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--samples", cfg.samples, "Number of random samples")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tols, "suite=value: replace the suite's error thresholds");

  auto* moller = app.add_subcommand("moller", "Moller disc on the rest hyperplane of P through the origin");
  moller->add_option("state", state_path, "State JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (*c_opt) g.c = c_value;

  try {
    if (*eval) return cmd_eval(g, state_path, expr_text, out);
    if (*bracket) return cmd_bracket(g, state_path, f_text, g_text, symbolic, out);
    if (*worldline) return cmd_worldline(g, state_path, choice, u, tau, out);
    if (*verify) return cmd_verify(g, suite, cfg, tols, out, err);
    if (*moller) {
      if (!*format_opt) g.format = "json";
      return cmd_moller(g, state_path, out);
    }
  } catch (const ParseError& e) {
    err << "relloc: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "relloc: domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "relloc: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace relloc::cli
