#include "relloc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "relloc/elementary.hpp"
#include "relloc/localisation.hpp"
#include "relloc/lorentz.hpp"
#include "relloc/obsexpr.hpp"
#include "relloc/sampling.hpp"

namespace relloc {

namespace {

/// Running maximum that keeps NaN once seen.
class Worst {
 public:
  void add(double v) {
    if (std::isnan(v) || std::isnan(value_))
      value_ = std::numeric_limits<double>::quiet_NaN();
    else
      value_ = std::max(value_, v);
  }
  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Running minimum, NaN-sticky.
class Least {
 public:
  void add(double v) {
    if (std::isnan(v) || std::isnan(value_))
      value_ = std::numeric_limits<double>::quiet_NaN();
    else
      value_ = std::min(value_, v);
  }
  double value() const { return value_; }

 private:
  double value_ = std::numeric_limits<double>::infinity();
};

class Recorder {
 public:
  Recorder(Report& report, const RunConfig& cfg) : report_(report) {
    if (auto it = cfg.tolerance_overrides.find(report.suite); it != cfg.tolerance_overrides.end())
      override_ = it->second;
  }

  void at_most(const std::string& name, double value, double threshold) {
    report_.checks.push_back({name, value, override_ > 0.0 ? override_ : threshold, Check::Bound::AtMost});
  }
  void at_least(const std::string& name, double value, double threshold) {
    report_.checks.push_back({name, value, threshold, Check::Bound::AtLeast});
  }

 private:
  Report& report_;
  double override_ = 0.0;
};

ElementarySystem spinning_system(const RunConfig& cfg) { return ElementarySystem(1.0, 1.0, cfg.c); }
ElementarySystem spinless_system(const RunConfig& cfg) { return ElementarySystem(1.0, 0.0, cfg.c); }

double rel(double err, double scale) { return err / std::max(1.0, std::abs(scale)); }

// ---------------------------------------------------------------------------
// algebra

/// Generator i in the order P0..P3, J01, J02, J03, J12, J13, J23.
struct GeneratorIndex {
  bool is_p;
  int mu;
  int nu;
};

std::vector<GeneratorIndex> generator_list() {
  std::vector<GeneratorIndex> out;
  for (int mu = 0; mu < 4; ++mu) out.push_back({true, mu, 0});
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) out.push_back({false, mu, nu});
  return out;
}

const Expression& generator_expr(const Generators& g, const GeneratorIndex& i) {
  return i.is_p ? g.P(i.mu) : g.J(i.mu, i.nu);
}

/// Right-hand side of the Poincare relations, from numeric P_mu and J_{mu nu}.
double expected_bracket(const GeneratorIndex& a, const GeneratorIndex& b, const MomentumValue& mv) {
  auto P = [&](int mu) { return mv.p.slot(static_cast<std::size_t>(mu)); };
  auto J = [&](int mu, int nu) { return mv.j({mu, nu}); };
  auto eta = [](int mu, int nu) { return metric(mu, nu); };
  if (a.is_p && b.is_p) return 0.0;
  if (!a.is_p && b.is_p) {
    const int mu = a.mu, nu = a.nu, rho = b.mu;
    return eta(mu, rho) * P(nu) - eta(nu, rho) * P(mu);
  }
  if (a.is_p && !b.is_p) {
    const int mu = b.mu, nu = b.nu, rho = a.mu;
    return -(eta(mu, rho) * P(nu) - eta(nu, rho) * P(mu));
  }
  const int mu = a.mu, nu = a.nu, rho = b.mu, sigma = b.nu;
  return eta(mu, rho) * J(nu, sigma) - eta(nu, rho) * J(mu, sigma) - eta(mu, sigma) * J(nu, rho) +
         eta(nu, sigma) * J(mu, rho);
}

double poincare_relations_error(const ElementarySystem& sys, Sampler& sampler, int samples) {
  const Generators gen = generators(sys);
  const auto list = generator_list();
  struct Pair {
    std::size_t i, j;
    CompiledExpression bracket;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      pairs.push_back({i, j, CompiledExpression(poisson_bracket(generator_expr(gen, list[i]), generator_expr(gen, list[j])))});
  Worst worst;
  for (int n = 0; n < samples; ++n) {
    const State st = sampler.state(sys);
    const Valuation v = valuation(sys, st);
    const MomentumValue mv = momenta(sys, st);
    for (const auto& pr : pairs) {
      const double expected = expected_bracket(list[pr.i], list[pr.j], mv);
      worst.add(rel(std::abs(pr.bracket(v) - expected), expected));
    }
  }
  return worst.value();
}

void suite_algebra(const RunConfig& cfg, Recorder& rec) {
  Sampler sampler(cfg.seed);
  rec.at_most("spin-S: 45 generator brackets, max rel error",
              poincare_relations_error(spinning_system(cfg), sampler, cfg.samples), 1e-9);
  rec.at_most("spin-0: 45 generator brackets, max rel error",
              poincare_relations_error(spinless_system(cfg), sampler, cfg.samples), 1e-9);
}

// ---------------------------------------------------------------------------
// equivariance

double state_difference(const State& a, const State& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) {
    d = std::max({d, std::abs(a.x[i] - b.x[i]), std::abs(a.p[i] - b.p[i])});
    if (a.s_hat && b.s_hat) d = std::max(d, std::abs((*a.s_hat)[i] - (*b.s_hat)[i]));
  }
  return d;
}

double momentum_scale(const MomentumValue& mv) { return std::max(mv.p.max_abs(), mv.j.max_abs()); }

void suite_equivariance(const RunConfig& cfg, Recorder& rec) {
  Sampler sampler(cfg.seed);
  for (const auto& sys : {spinning_system(cfg), spinless_system(cfg)}) {
    const std::string tag = sys.spinning() ? "spin-S: " : "spin-0: ";
    Worst coadjoint, action, mass, spin;
    for (int n = 0; n < cfg.samples; ++n) {
      const State st = sampler.state(sys);
      const PoincareTransform g1 = sampler.poincare();
      const PoincareTransform g2 = sampler.poincare();
      const MomentumValue lhs = momenta(sys, poincare_act(sys, g1, st));
      const MomentumValue rhs = coadjoint_transform(g1, momenta(sys, st));
      coadjoint.add(rel(max_abs_difference(lhs, rhs), momentum_scale(rhs)));

      const State twice = poincare_act(sys, g1, poincare_act(sys, g2, st));
      const State once = poincare_act(sys, compose(g1, g2), st);
      action.add(state_difference(twice, once));

      const MomentumValue mv = momenta(sys, st);
      mass.add(rel(std::abs(rhs.momentum_square() - mv.momentum_square()), mv.momentum_square()));
      const FourVector w0 = pauli_lubanski(mv), w1 = pauli_lubanski(rhs);
      spin.add(rel(std::abs(inner(w1, w1) - inner(w0, w0)), inner(w0, w0)));
    }
    rec.at_most(tag + "momenta(Phi_g state) vs coadjoint transform, max rel error", coadjoint.value(), 1e-9);
    rec.at_most(tag + "action property, max abs error", action.value(), 1e-8);
    rec.at_most(tag + "P.P preserved, max rel error", mass.value(), 1e-9);
    rec.at_most(tag + "W.W preserved, max rel error", spin.value(), 1e-9);
  }
}

// ---------------------------------------------------------------------------
// nw-theorem

void suite_nw_theorem(const RunConfig& cfg, Recorder& rec) {
  Sampler sampler(cfg.seed);
  for (const auto& sys : {spinning_system(cfg), spinless_system(cfg)}) {
    const std::string tag = sys.spinning() ? "spin-S: " : "spin-0: ";
    const AliasMap alias = observable_aliases(sys);
    std::array<Expression, 3> x, p;
    for (int a = 0; a < 3; ++a) {
      x[a] = alias.at("X" + std::to_string(a + 1));
      p[a] = alias.at("P" + std::to_string(a + 1));
    }
    const Expression j[3] = {alias.at("J23"), alias.at("J31"), alias.at("J12")};  // J_{a+1, a+2}

    std::vector<std::pair<CompiledExpression, std::function<double(const Valuation&, const Vec3&)>>> commuting,
        canonical, rotation;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        commuting.emplace_back(CompiledExpression(poisson_bracket(x[a], x[b])),
                               [](const Valuation&, const Vec3&) { return 0.0; });
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        canonical.emplace_back(CompiledExpression(poisson_bracket(x[a], p[b])),
                               [a, b](const Valuation&, const Vec3&) { return a == b ? 1.0 : 0.0; });
    // {J_ab, X_c} = delta_ac X_b - delta_bc X_a
    for (int k = 0; k < 3; ++k) {
      const int a = (k + 1) % 3, b = (k + 2) % 3;
      for (int c = 0; c < 3; ++c)
        rotation.emplace_back(CompiledExpression(poisson_bracket(j[k], x[c])),
                              [a, b, c](const Valuation&, const Vec3& xv) {
                                return (a == c ? xv[b] : 0.0) - (b == c ? xv[a] : 0.0);
                              });
    }

    Worst w_comm, w_canon, w_rot, w_time, w_coords, w_ssc, w_closed;
    for (int n = 0; n < cfg.samples; ++n) {
      const State st = sampler.state(sys);
      const Valuation v = valuation(sys, st);
      const Vec3 xnw = nw_position_coords(sys, st);
      auto run = [&](auto& list, Worst& w) {
        for (auto& [expr, expected] : list) {
          const double e = expected(v, xnw);
          w.add(rel(std::abs(expr(v) - e), e));
        }
      };
      run(commuting, w_comm);
      run(canonical, w_canon);
      run(rotation, w_rot);

      const Vec3 xt = nw_position_coords(sys, time_reversal(st));
      const MomentumValue mv = momenta(sys, st);
      const FourVector chi = ssc_position(mv, SSCChoice::newton_wigner(), Hyperplane::standard());
      for (int a = 0; a < 3; ++a) {
        w_time.add(std::abs(xt[a] - xnw[a]));
        w_coords.add(std::abs(xnw[a] - st.x[a]));
        w_ssc.add(std::abs(chi[a + 1] - xnw[a]));
      }
      w_ssc.add(std::abs(chi[0]));

      const Hyperplane sigma = sampler.hyperplane();
      for (const auto& choice :
           {SSCChoice::centre_of_energy(), SSCChoice::centre_of_inertia(), SSCChoice::newton_wigner()})
        w_closed.add(max_abs_difference(ssc_position(mv, choice, sigma), ssc_position_closed_form(mv, choice, sigma)));
    }
    rec.at_most(tag + "{X^a, X^b} = 0, max error", w_comm.value(), 1e-9);
    rec.at_most(tag + "{X^a, P_b} = delta^a_b, max error", w_canon.value(), 1e-9);
    rec.at_most(tag + "{J_ab, X^c} rotation law, max error", w_rot.value(), 1e-9);
    rec.at_most(tag + "X(T state) = X(state), max error", w_time.value(), 1e-9);
    rec.at_most(tag + "X = x on explicit phase space, max error", w_coords.value(), 1e-10);
    rec.at_most(tag + "X = spatial part of NW SSC position on (e0, 0), max error", w_ssc.value(), 1e-10);
    rec.at_most(tag + "SSC position: intersection vs closed form, max error", w_closed.value(), 1e-10);
  }
}

// ---------------------------------------------------------------------------
// centre-of-spin

/// Frame u with |u.W| > 1e-6 |W| (Euclidean component norm).
FourVector generic_frame(Sampler& sampler, const FourVector& w) {
  const double wn = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3]);
  for (;;) {
    const FourVector u = sampler.unit_timelike(1.5);
    if (std::abs(inner(u, w)) > 1e-6 * wn) return u;
  }
}

void suite_centre_of_spin(const RunConfig& cfg, Recorder& rec) {
  Sampler sampler(cfg.seed);
  const ElementarySystem sys = spinning_system(cfg);
  const double unit = sys.mc() * sys.spin();
  Worst nw, shifted;
  int ce_generic = 0, ci_generic = 0;
  for (int n = 0; n < cfg.samples; ++n) {
    const State st = sampler.state(sys);
    const MomentumValue mv = momenta(sys, st);
    const FourVector u = generic_frame(sampler, pauli_lubanski(mv));
    const Hyperplane sigma(u, sampler.uniform(-2.0, 2.0));
    const FourVector x_nw = ssc_position(mv, SSCChoice::newton_wigner(), sigma);
    nw.add(centre_of_spin_residual(mv, x_nw, u) / unit);
    const FourVector moved = x_nw + sampler.uniform(-2.0, 2.0) * u + sampler.uniform(-2.0, 2.0) * (mv.momentum() / sys.mc());
    shifted.add(centre_of_spin_residual(mv, moved, u) / unit);
    if (centre_of_spin_residual(mv, ssc_position(mv, SSCChoice::centre_of_energy(), sigma), u) / unit > 1e-3)
      ++ce_generic;
    if (centre_of_spin_residual(mv, ssc_position(mv, SSCChoice::centre_of_inertia(), sigma), u) / unit > 1e-3)
      ++ci_generic;
  }
  const double total = static_cast<double>(cfg.samples);
  rec.at_most("NW position residual / (mc S), max", nw.value(), 1e-10);
  rec.at_most("NW position shifted within span{u, P}: residual / (mc S), max", shifted.value(), 1e-10);
  rec.at_least("CE position: fraction with residual / (mc S) > 1e-3", ce_generic / total, 0.95);
  rec.at_least("CI position: fraction with residual / (mc S) > 1e-3", ci_generic / total, 0.95);
}

// ---------------------------------------------------------------------------
// moller

void suite_moller(const RunConfig& cfg, Recorder& rec) {
  Sampler sampler(cfg.seed);
  const ElementarySystem sys = spinning_system(cfg);
  const int states = std::clamp(cfg.samples / 10, 1, 10);
  constexpr int kDirections = 1000;
  Worst outside, tilt, radius_error, off_plane;
  Least reach;
  for (int n = 0; n < states; ++n) {
    const State st = sampler.state(sys);
    const MomentumValue mv = momenta(sys, st);
    const double mc = mv.mass_c();
    const FourVector rest = mv.momentum() / mc;
    const Hyperplane sigma(rest, 0.0);
    const MollerDisc disc = moller_disc(mv, sigma);
    const double r_expected = sys.spin() / sys.mc();
    radius_error.add(std::abs(disc.radius - r_expected));
    const double w_norm = std::sqrt(inner(disc.normal, disc.normal));
    const LorentzTransform to_lab = boost_to(rest, FourVector(mc, 0.0, 0.0, 0.0), mc);
    double farthest = 0.0;
    for (int k = 0; k < kDirections; ++k) {
      const FourVector f = to_lab * sampler.unit_timelike(8.0);
      const SSCChoice choice = SSCChoice::custom([f](const Hyperplane&, const MomentumValue&) { return f; });
      const FourVector chi = ssc_position(mv, choice, sigma);
      const FourVector d = chi - disc.centre;
      const double dist = std::sqrt(std::max(0.0, inner(d, d)));
      farthest = std::max(farthest, dist);
      outside.add(std::max(0.0, dist - r_expected));
      tilt.add(std::abs(inner(d, disc.normal)) / w_norm);
      off_plane.add(sigma.membership_defect(chi));
    }
    reach.add(farthest / r_expected);
  }
  rec.at_most("radius - S/(mc), max abs", radius_error.value(), 1e-9);
  rec.at_most("distance beyond S/(mc) from CI centre, max", outside.value(), 1e-9);
  rec.at_most("component along W of offset from centre, max", tilt.value(), 1e-9);
  rec.at_most("distance of SSC positions from the hyperplane, max", off_plane.value(), 1e-9);
  rec.at_least("sup distance / (S/(mc)), min over states", reach.value(), 0.99);
}

// ---------------------------------------------------------------------------
// covariance

void suite_covariance(const RunConfig& cfg, Recorder& rec) {
  Sampler sampler(cfg.seed);
  for (const auto& sys : {spinning_system(cfg), spinless_system(cfg)}) {
    const std::string tag = sys.spinning() ? "spin-S: " : "spin-0: ";
    for (const auto& choice :
         {SSCChoice::centre_of_energy(), SSCChoice::centre_of_inertia(), SSCChoice::newton_wigner()}) {
      Worst w;
      for (int n = 0; n < cfg.samples; ++n) {
        const State st = sampler.state(sys);
        const PoincareTransform g = sampler.poincare();
        const Hyperplane sigma = sampler.hyperplane();
        w.add(covariance_check(sys, choice, g, sigma, st));
      }
      rec.at_most(tag + choice.name() + " covariance, max error", w.value(), 1e-9);
    }
  }
  const ElementarySystem sys = spinning_system(cfg);
  const SSCChoice frozen = SSCChoice::custom(
      [](const Hyperplane&, const MomentumValue&) { return FourVector::basis(0); }, "frozen e0");
  Worst w;
  for (int n = 0; n < cfg.samples; ++n) {
    const State st = sampler.state(sys);
    const PoincareTransform g = sampler.poincare();
    const Hyperplane sigma = sampler.hyperplane();
    w.add(covariance_check(sys, frozen, g, sigma, st));
  }
  rec.at_least("spin-S: frozen f = e0 covariance error, max", w.value(), 1e-3);
}

// ---------------------------------------------------------------------------
// hodge

template <int K>
void hodge_checks(Worst& relation, Worst& double_dual) {
  const FourForm eps = volume_form();
  // ** = (-1)^{K(4-K)} s with s = -1 for Lorentzian signature.
  const double sign = ((K * (4 - K)) % 2 == 0) ? -1.0 : 1.0;
  for (std::size_t i = 0; i < Form<K>::size; ++i) {
    const Form<K> beta = Form<K>::basis(i);
    const Form<4 - K> star = hodge(beta);
    for (std::size_t k = 0; k < Form<K>::size; ++k) {
      const Form<K> alpha = Form<K>::basis(k);
      relation.add(max_abs_difference(wedge(alpha, star), form_inner(alpha, beta) * eps));
    }
    double_dual.add(max_abs_difference(hodge(star), sign * beta));
  }
}

void suite_hodge(const RunConfig& cfg, Recorder& rec) {
  Worst relation, double_dual;
  hodge_checks<0>(relation, double_dual);
  hodge_checks<1>(relation, double_dual);
  hodge_checks<2>(relation, double_dual);
  hodge_checks<3>(relation, double_dual);
  hodge_checks<4>(relation, double_dual);
  rec.at_most("alpha ^ *beta = eta(alpha, beta) eps on all basis pairs, max error", relation.value(), 1e-14);
  rec.at_most("** = (-1)^{K(4-K)+1} on all basis forms, max error", double_dual.value(), 1e-14);

  Worst spatial;
  const ThreeForm eps3 = spatial_volume_form(FourVector::basis(0));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) spatial.add(std::abs(eps3({a + 1, b + 1, c + 1}) - levi_civita3(a, b, c)));
  rec.at_most("i_{e0} eps = 3-dim Levi-Civita symbol, max error", spatial.value(), 1e-14);

  Sampler sampler(cfg.seed);
  const ElementarySystem sys = spinning_system(cfg);
  Worst routes, metric_compat, w_perp;
  for (int n = 0; n < cfg.samples; ++n) {
    const MomentumValue mv = momenta(sys, sampler.state(sys));
    const FourVector w_hodge = pauli_lubanski(mv);
    const FourVector w_comp = pauli_lubanski_components(mv);
    routes.add(rel(max_abs_difference(w_hodge, w_comp), max_abs(w_comp)));
    w_perp.add(rel(std::abs(inner(w_hodge, mv.momentum())), max_abs(w_hodge) * max_abs(mv.momentum())));
    FourVector v, w;
    for (int mu = 0; mu < 4; ++mu) {
      v[mu] = sampler.uniform(-2.0, 2.0);
      w[mu] = sampler.uniform(-2.0, 2.0);
    }
    metric_compat.add(std::abs(inner(v, w) - apply(lower(v), w)));
  }
  rec.at_most("Pauli-Lubanski: Hodge route vs component formula, max rel error", routes.value(), 1e-12);
  rec.at_most("W.P = 0, max rel error", w_perp.value(), 1e-12);
  rec.at_most("inner(v, w) = v^flat(w), max error", metric_compat.value(), 1e-14);
}

// ---------------------------------------------------------------------------
// exponentials

void suite_exponentials(const RunConfig& cfg, Recorder& rec) {
  Sampler sampler(cfg.seed);
  Worst series, algebra, square;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      std::vector<double> alphas{-3.0, 0.0, 3.0};
      for (int n = 0; n < cfg.samples; ++n) alphas.push_back(sampler.uniform(-3.0, 3.0));
      for (double alpha : alphas)
        series.add(max_abs_difference(exp_generator(a, b, alpha).matrix(), exp_series(generator(a, b), alpha)));
      // (B_ab)^2 = -eps_ab Pr_ab
      Mat4 pr{};
      pr[a][a] = pr[b][b] = 1.0;
      const Mat4 bm = generator(a, b).matrix();
      square.add(max_abs_difference(bm * bm, (-metric(a, a) * metric(b, b)) * pr));
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const Mat4 expected = metric(b, c) * generator(a, d).matrix() + metric(a, d) * generator(b, c).matrix() -
                                metric(a, c) * generator(b, d).matrix() - metric(b, d) * generator(a, c).matrix();
          algebra.add(max_abs_difference(commutator(generator(a, b), generator(c, d)).matrix(), expected));
        }
    }
  rec.at_most("exp_generator vs power series, |alpha| <= 3, max error", series.value(), 1e-10);
  rec.at_most("[B_ab, B_cd] relations, max error", algebra.value(), 1e-14);
  rec.at_most("(B_ab)^2 = -eps_ab Pr_ab, max error", square.value(), 1e-14);

  Worst maps, fixes, isometry, proper;
  for (int n = 0; n < cfg.samples; ++n) {
    const FourVector u = sampler.unit_timelike(2.0);
    const double mc = sampler.uniform(0.5, 2.0);
    const FourVector p = mc * sampler.unit_timelike(2.0);
    const FourVector nvec = p / mc;
    const LorentzTransform bt = boost_to(u, p, mc);
    maps.add(rel(max_abs_difference(bt * nvec, u), max_abs(u)));
    isometry.add(bt.isometry_defect() / std::max(1.0, max_abs(u) * max_abs(nvec)));
    proper.add((bt.is_proper_orthochronous() && std::abs(bt.det() - 1.0) < 1e-9) ? 0.0 : 1.0);
    // A vector orthogonal to span{P/mc, u}.
    FourVector v;
    for (int mu = 0; mu < 4; ++mu) v[mu] = sampler.uniform(-1.0, 1.0);
    v = v + inner(v, nvec) * nvec;
    const FourVector e = u + inner(u, nvec) * nvec;
    if (inner(e, e) > 1e-12) v = v - (inner(v, e) / inner(e, e)) * e;
    fixes.add(rel(max_abs_difference(bt * v, v), max_abs(v)));
  }
  rec.at_most("boost_to maps P/mc to u, max rel error", maps.value(), 1e-12);
  rec.at_most("boost_to fixes the plane orthogonal to P and u, max rel error", fixes.value(), 1e-12);
  rec.at_most("boost_to isometry defect, max", isometry.value(), 1e-12);
  rec.at_most("boost_to proper orthochronous, failures", proper.value(), 0.5);
}

// ---------------------------------------------------------------------------
// bracket-engine

Expression random_expression(Sampler& s, int depth, const std::vector<Symbol>& pool) {
  if (depth == 0 || s.uniform(0.0, 1.0) < 0.25) {
    if (s.uniform(0.0, 1.0) < 0.75) return Expression(pool[static_cast<std::size_t>(s.uniform_int(0, static_cast<int>(pool.size()) - 1))]);
    return Expression(std::round(s.uniform(-3.0, 3.0) * 4.0) / 4.0);
  }
  const Expression a = random_expression(s, depth - 1, pool);
  switch (s.uniform_int(0, 5)) {
    case 0:
      return a + random_expression(s, depth - 1, pool);
    case 1:
      return a - random_expression(s, depth - 1, pool);
    case 2:
      return a * random_expression(s, depth - 1, pool);
    case 3:
      return a / (Expression(2.0) + pow(random_expression(s, depth - 1, pool), 2));
    case 4:
      return pow(a, s.uniform_int(2, 3));
    default:
      return sqrt(Expression(1.0) + pow(a, 2));
  }
}

std::vector<Symbol> coordinate_symbols() {
  std::vector<Symbol> out;
  for (int a = 0; a < 3; ++a) {
    out.push_back(position_symbol(a));
    out.push_back(momentum_symbol(a));
    out.push_back(spin_symbol(a));
  }
  return out;
}

/// Central difference with h = 1e-6 max(1, |coordinate|).
double finite_difference(const Expression& f, Valuation v, Symbol s) {
  const double x = v[s];
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  v[s] = x + h;
  const double up = evaluate(f, v);
  v[s] = x - h;
  const double down = evaluate(f, v);
  return (up - down) / (2.0 * h);
}

struct BracketErrors {
  Worst antisymmetry, leibniz, jacobi, derivative;
};

void check_triple(const Expression& f, const Expression& g, const Expression& h, const Valuation& v,
                  BracketErrors& out) {
  const Expression fg = poisson_bracket(f, g), gf = poisson_bracket(g, f);
  const double a = evaluate(fg, v), b = evaluate(gf, v);
  out.antisymmetry.add(std::abs(a + b) / (1.0 + std::abs(a) + std::abs(b)));

  const double lhs = evaluate(poisson_bracket(f, g * h), v);
  const double t1 = a * evaluate(h, v), t2 = evaluate(g, v) * evaluate(poisson_bracket(f, h), v);
  out.leibniz.add(std::abs(lhs - t1 - t2) / (1.0 + std::abs(lhs) + std::abs(t1) + std::abs(t2)));

  const double j1 = evaluate(poisson_bracket(f, poisson_bracket(g, h)), v);
  const double j2 = evaluate(poisson_bracket(g, poisson_bracket(h, f)), v);
  const double j3 = evaluate(poisson_bracket(h, fg), v);
  out.jacobi.add(std::abs(j1 + j2 + j3) / (1.0 + std::abs(j1) + std::abs(j2) + std::abs(j3)));
}

void suite_bracket_engine(const RunConfig& cfg, Recorder& rec) {
  Sampler sampler(cfg.seed);
  const ElementarySystem sys = spinning_system(cfg);
  const auto pool = coordinate_symbols();
  BracketErrors random_err;
  for (int n = 0; n < cfg.samples; ++n) {
    const Expression f = random_expression(sampler, 3, pool);
    const Expression g = random_expression(sampler, 3, pool);
    const Expression h = random_expression(sampler, 3, pool);
    const Valuation v = valuation(sys, sampler.state(sys));
    check_triple(f, g, h, v, random_err);
    for (const Symbol s : pool) {
      const double d = evaluate(differentiate(f, s), v);
      const double fd = finite_difference(f, v, s);
      random_err.derivative.add(std::abs(d - fd) / std::max({1.0, std::abs(d), std::abs(fd)}));
    }
  }
  rec.at_most("random expressions: antisymmetry, max rel error", random_err.antisymmetry.value(), 1e-8);
  rec.at_most("random expressions: Leibniz rule, max rel error", random_err.leibniz.value(), 1e-8);
  rec.at_most("random expressions: Jacobi identity, max rel error", random_err.jacobi.value(), 1e-8);
  rec.at_most("random expressions: derivative vs central difference, max rel error",
              random_err.derivative.value(), 1e-6);

  // Generator triples: every triple of the ten generators at a few states.
  const Generators gen = generators(sys);
  const auto list = generator_list();
  BracketErrors gen_err;
  const int states = std::clamp(cfg.samples / 20, 1, 5);
  std::vector<Valuation> vals;
  for (int n = 0; n < states; ++n) vals.push_back(valuation(sys, sampler.state(sys)));
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      for (std::size_t k = j + 1; k < list.size(); ++k) {
        const Expression& f = generator_expr(gen, list[i]);
        const Expression& g = generator_expr(gen, list[j]);
        const Expression& h = generator_expr(gen, list[k]);
        const CompiledExpression j1(poisson_bracket(f, poisson_bracket(g, h)));
        const CompiledExpression j2(poisson_bracket(g, poisson_bracket(h, f)));
        const CompiledExpression j3(poisson_bracket(h, poisson_bracket(f, g)));
        for (const auto& v : vals) {
          const double a = j1(v), b = j2(v), c = j3(v);
          gen_err.jacobi.add(std::abs(a + b + c) / (1.0 + std::abs(a) + std::abs(b) + std::abs(c)));
        }
      }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto& v : vals)
      for (const Symbol s : pool) {
        const Expression& f = generator_expr(gen, list[i]);
        const double d = evaluate(differentiate(f, s), v);
        const double fd = finite_difference(f, v, s);
        gen_err.derivative.add(std::abs(d - fd) / std::max({1.0, std::abs(d), std::abs(fd)}));
      }
  rec.at_most("generator triples: Jacobi identity, max rel error", gen_err.jacobi.value(), 1e-8);
  rec.at_most("generators: derivative vs central difference, max rel error", gen_err.derivative.value(), 1e-6);

  // Brackets of functions of s alone do not see s.s - S^2 added to f.
  const std::vector<Symbol> spin_pool{Symbol::S1, Symbol::S2, Symbol::S3};
  const Expression casimir = pow(Expression(Symbol::S1), 2) + pow(Expression(Symbol::S2), 2) +
                             pow(Expression(Symbol::S3), 2) - pow(Expression(Symbol::Spin), 2);
  Worst extension;
  for (int n = 0; n < cfg.samples; ++n) {
    const Expression f = random_expression(sampler, 3, spin_pool);
    const Expression g = random_expression(sampler, 3, spin_pool);
    const Expression k = random_expression(sampler, 2, spin_pool);
    const Valuation v = valuation(sys, sampler.state(sys));
    const double plain = evaluate(poisson_bracket(f, g), v);
    const double extended = evaluate(poisson_bracket(f + k * casimir, g), v);
    extension.add(std::abs(plain - extended) / (1.0 + std::abs(plain)));
  }
  rec.at_most("spin bracket independent of off-sphere extension, max rel error", extension.value(), 1e-10);
}

// ---------------------------------------------------------------------------

using SuiteFn = void (*)(const RunConfig&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"algebra", suite_algebra},
      {"equivariance", suite_equivariance},
      {"covariance", suite_covariance},
      {"nw-theorem", suite_nw_theorem},
      {"centre-of-spin", suite_centre_of_spin},
      {"moller", suite_moller},
      {"hodge", suite_hodge},
      {"exponentials", suite_exponentials},
      {"bracket-engine", suite_bracket_engine},
  };
  return r;
}

std::string format_value(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << v;
  return os.str();
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "suite,check,value,bound,threshold,status\n";
  for (const auto& c : checks)
    os << suite << ",\"" << c.name << "\"," << format_value(c.value) << ","
       << (c.bound == Check::Bound::AtMost ? "<=" : ">=") << "," << format_value(c.threshold) << ","
       << (c.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["schema"] = "relloc/1";
  j["suite"] = suite;
  j["seed"] = seed;
  j["samples"] = samples;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"value", c.value},
                           {"bound", c.bound == Check::Bound::AtMost ? "<=" : ">="},
                           {"threshold", c.threshold},
                           {"passed", c.passed()}});
  return j.dump(2) + "\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool has_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report run_suite(const std::string& name, const RunConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (!(config.c > 0.0)) throw std::invalid_argument("c must be positive");
  for (const auto& [suite, tol] : config.tolerance_overrides)
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance for " + suite + " must be positive");
  for (const auto& [suite_name, fn] : registry()) {
    if (suite_name != name) continue;
    Report report;
    report.suite = name;
    report.seed = config.seed;
    report.samples = config.samples;
    Recorder rec(report, config);
    fn(config, rec);
    return report;
  }
  std::string msg = "unknown suite '" + name + "'; available:";
  for (const auto& n : suite_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

}  // namespace relloc
