#include "relloc/elementary.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "relloc/lorentz.hpp"

namespace relloc {

ElementarySystem::ElementarySystem(double m, double spin, double c) : m_(m), spin_(spin), c_(c) {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("mass m must be positive");
  if (!(spin >= 0.0) || !std::isfinite(spin)) throw std::invalid_argument("spin S must be non-negative");
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("speed of light c must be positive");
}

Vec3 State::spin_vector(const ElementarySystem& sys) const {
  if (!sys.spinning() || !s_hat) return {};
  const Vec3& n = *s_hat;
  return {sys.spin() * n[0], sys.spin() * n[1], sys.spin() * n[2]};
}

void validate(const ElementarySystem& sys, const State& state) {
  if (sys.spinning()) {
    if (!state.s_hat) throw std::invalid_argument("spinning system requires a spin direction s_hat");
    const double n = norm(*state.s_hat);
    if (std::abs(n - 1.0) > 1e-12) {
      std::ostringstream os;
      os.precision(17);
      os << "s_hat must be a unit vector (|s_hat| = " << n << ")";
      throw std::invalid_argument(os.str());
    }
  } else if (state.s_hat) {
    throw std::invalid_argument("spin-zero system takes no spin direction");
  }
}

Generators generators(const ElementarySystem& sys) {
  const Expression m(Symbol::Mass), c(Symbol::Light);
  std::array<Expression, 3> x, p, s;
  for (int a = 0; a < 3; ++a) {
    x[a] = Expression(position_symbol(a));
    p[a] = Expression(momentum_symbol(a));
    s[a] = sys.spinning() ? Expression(spin_symbol(a)) : Expression(0.0);
  }
  Generators g;
  g.p[0] = -sqrt(pow(m, 2) * pow(c, 2) + pow(p[0], 2) + pow(p[1], 2) + pow(p[2], 2));
  for (int a = 0; a < 3; ++a) g.p[a + 1] = p[a];

  const Expression denom = m * c - g.p[0];
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      Expression jab = x[a] * p[b] - x[b] * p[a];
      for (int k = 0; k < 3; ++k)
        if (const double e = levi_civita3(a, b, k); e != 0.0) jab = jab + e * s[k];
      g.j[a + 1][b + 1] = jab;
    }
    // (p x s)_a
    Expression pxs;
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k)
        if (const double e = levi_civita3(a, b, k); e != 0.0) pxs = pxs + e * p[b] * s[k];
    const Expression ja0 = g.p[0] * x[a] - pxs / denom;
    g.j[a + 1][0] = ja0;
    g.j[0][a + 1] = -ja0;
  }
  return g;
}

std::array<Expression, 4> pauli_lubanski_expressions(const Generators& gen) {
  std::array<Expression, 4> w;
  for (int mu = 0; mu < 4; ++mu) {
    std::vector<Expression> terms;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sigma = rho + 1; sigma < 4; ++sigma) {
          const double e = levi_civita(mu, nu, rho, sigma);
          if (e == 0.0) continue;
          // P^nu J^{rho sigma}, raised with the diagonal metric; the factor
          // 1/2 cancels against the restriction rho < sigma.
          const double sign = -e * metric(nu, nu) * metric(rho, rho) * metric(sigma, sigma);
          terms.push_back(Expression::product({Expression(sign), gen.P(nu), gen.J(rho, sigma)}));
        }
    w[static_cast<std::size_t>(mu)] = Expression::sum(std::move(terms));
  }
  return w;
}

std::array<Expression, 3> newton_wigner_expressions(const Generators& gen) {
  const Expression mc = Expression(Symbol::Mass) * Expression(Symbol::Light);
  const Expression& p0 = gen.P(0);
  const Expression d = mc * (mc - p0);
  std::array<Expression, 3> out;
  for (int a = 1; a <= 3; ++a) {
    Expression jp, jbp;
    for (int b = 1; b <= 3; ++b) {
      if (b != a) jp = jp + gen.J(a, b) * gen.P(b);
      jbp = jbp + gen.J(b, 0) * gen.P(b);
    }
    out[static_cast<std::size_t>(a - 1)] = -(gen.J(a, 0) / mc) - jp / d - (jbp * gen.P(a)) / (p0 * d);
  }
  return out;
}

AliasMap observable_aliases(const ElementarySystem& sys) {
  const Generators g = generators(sys);
  AliasMap aliases;
  for (int mu = 0; mu < 4; ++mu) aliases.emplace("P" + std::to_string(mu), g.P(mu));
  const int pairs[][2] = {{1, 2}, {2, 3}, {3, 1}, {1, 0}, {2, 0}, {3, 0}};
  for (const auto& pr : pairs)
    aliases.emplace("J" + std::to_string(pr[0]) + std::to_string(pr[1]), g.J(pr[0], pr[1]));
  const auto w = pauli_lubanski_expressions(g);
  for (int mu = 0; mu < 4; ++mu) aliases.emplace("W" + std::to_string(mu), w[static_cast<std::size_t>(mu)]);
  const auto x = newton_wigner_expressions(g);
  for (int a = 0; a < 3; ++a) aliases.emplace("X" + std::to_string(a + 1), x[static_cast<std::size_t>(a)]);
  return aliases;
}

Valuation valuation(const ElementarySystem& sys, const State& state) {
  Valuation v;
  const Vec3 s = state.spin_vector(sys);
  for (int a = 0; a < 3; ++a) {
    v[position_symbol(a)] = state.x[a];
    v[momentum_symbol(a)] = state.p[a];
    v[spin_symbol(a)] = s[a];
  }
  v[Symbol::Mass] = sys.m();
  v[Symbol::Spin] = sys.spin();
  v[Symbol::Light] = sys.c();
  return v;
}

double evaluate(const Expression& f, const ElementarySystem& sys, const State& state) {
  return evaluate(f, valuation(sys, state));
}

State time_reversal(const State& state) {
  State out = state;
  for (auto& v : out.p) v = -v;
  if (out.s_hat)
    for (auto& v : *out.s_hat) v = -v;
  return out;
}

State time_reversal(const ElementarySystem& sys, const Hyperplane& sigma, const State& state) {
  // g = (B, tau u) with B e_0 = u maps (e_0, 0) to (u, tau).
  const PoincareTransform g{boost_to(sigma.u(), FourVector::basis(0), 1.0), sigma.tau() * sigma.u()};
  return poincare_act(sys, g, time_reversal(poincare_act(sys, inverse(g), state)));
}

MomentumValue momenta(const ElementarySystem& sys, const State& state) {
  const double mc = sys.mc();
  const Vec3& x = state.x;
  const Vec3& p = state.p;
  const Vec3 s = state.spin_vector(sys);
  const double p0 = -std::sqrt(mc * mc + dot(p, p));
  const double denom = mc - p0;
  if (!(denom >= 2.0 * mc * (1.0 - 1e-15))) throw std::logic_error("mc - P_0 fell below 2mc");
  const Vec3 pxs = cross(p, s);

  MomentumValue mv;
  mv.p.slot(0) = p0;
  for (int a = 0; a < 3; ++a) mv.p.slot(static_cast<std::size_t>(a + 1)) = p[a];
  for (int a = 0; a < 3; ++a) {
    mv.j += two_form(a + 1, 0, p0 * x[a] - pxs[a] / denom);
    for (int b = a + 1; b < 3; ++b) {
      double jab = x[a] * p[b] - x[b] * p[a];
      for (int k = 0; k < 3; ++k) jab += levi_civita3(a, b, k) * s[k];
      mv.j += two_form(a + 1, b + 1, jab);
    }
  }
  return mv;
}

Vec3 newton_wigner_coordinates(const MomentumValue& mv) {
  const double mc = mv.mass_c();
  const double p0 = mv.p.slot(0);
  const double d = mc * (mc - p0);
  auto pl = [&](int mu) { return mv.p.slot(static_cast<std::size_t>(mu)); };
  double jbp = 0.0;
  for (int b = 1; b <= 3; ++b) jbp += mv.j({b, 0}) * pl(b);
  Vec3 x{};
  for (int a = 1; a <= 3; ++a) {
    double jp = 0.0;
    for (int b = 1; b <= 3; ++b) jp += mv.j({a, b}) * pl(b);
    x[a - 1] = -mv.j({a, 0}) / mc - jp / d - jbp * pl(a) / (p0 * d);
  }
  return x;
}

State reconstruct(const ElementarySystem& sys, const MomentumValue& mv, double tol) {
  const FourVector pv = mv.momentum();
  if (!is_future_timelike(pv)) {
    std::ostringstream os;
    os << "momentum " << pv << " is not future-directed timelike";
    throw std::invalid_argument(os.str());
  }
  const double mc = mv.mass_c();
  if (std::abs(mc - sys.mc()) > tol * sys.mc()) {
    std::ostringstream os;
    os.precision(17);
    os << "mass Casimir mismatch: momentum gives mc = " << mc << ", system has mc = " << sys.mc();
    throw std::invalid_argument(os.str());
  }
  State st;
  for (int a = 0; a < 3; ++a) st.p[a] = mv.p.slot(static_cast<std::size_t>(a + 1));

  st.x = newton_wigner_coordinates(mv);

  Vec3 s{};
  double scale = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      const double orbital = st.x[a] * st.p[b] - st.x[b] * st.p[a];
      scale = std::max({scale, std::abs(mv.j({a + 1, b + 1})), std::abs(orbital)});
      for (int k = 0; k < 3; ++k) s[k] += 0.5 * levi_civita3(a, b, k) * (mv.j({a + 1, b + 1}) - orbital);
    }
  const double s_norm = norm(s);
  if (std::abs(s_norm - sys.spin()) > tol * std::max({1.0, sys.spin(), scale})) {
    std::ostringstream os;
    os.precision(17);
    os << "spin Casimir mismatch: momenta give |s| = " << s_norm << ", system has S = " << sys.spin();
    throw std::invalid_argument(os.str());
  }
  if (sys.spinning()) st.s_hat = Vec3{s[0] / s_norm, s[1] / s_norm, s[2] / s_norm};
  return st;
}

State poincare_act(const ElementarySystem& sys, const PoincareTransform& g, const State& state) {
  if (!g.lambda.is_proper_orthochronous())
    throw std::invalid_argument("poincare_act requires a proper orthochronous Lorentz transformation");
  return reconstruct(sys, coadjoint_transform(g, momenta(sys, state)));
}

}  // namespace relloc
