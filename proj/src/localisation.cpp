#include "relloc/localisation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "relloc/lorentz.hpp"

namespace relloc {

namespace {

void require_future_timelike(const FourVector& f, const char* what) {
  if (!is_future_timelike(f)) {
    std::ostringstream os;
    os << what << " " << f << " is not future-directed timelike";
    throw std::invalid_argument(os.str());
  }
}

/// J_{mu rho} f^rho as a one-form.
OneForm contract(const TwoForm& j, const FourVector& f) { return -interior(f, j); }

}  // namespace

FourVector pauli_lubanski(const MomentumValue& mv) { return raise(hodge(wedge(mv.p, mv.j))); }

FourVector pauli_lubanski_components(const MomentumValue& mv) {
  const FourVector p = mv.momentum();
  OneForm w;
  for (int mu = 0; mu < 4; ++mu) {
    double s = 0.0;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sigma = 0; sigma < 4; ++sigma) {
          const double e = levi_civita(mu, nu, rho, sigma);
          if (e == 0.0) continue;
          s += e * p[nu] * metric(rho, rho) * metric(sigma, sigma) * mv.j({rho, sigma});
        }
    w.slot(static_cast<std::size_t>(mu)) = -0.5 * s;
  }
  return raise(w);
}

double spin_magnitude(const MomentumValue& mv) {
  const FourVector w = pauli_lubanski(mv);
  return std::sqrt(std::max(0.0, inner(w, w))) / mv.mass_c();
}

FourVector spin_vector(const MomentumValue& mv, const FourVector& u) {
  const double mc = mv.mass_c();
  return boost_to(u, mv.momentum(), mc) * (pauli_lubanski(mv) / mc);
}

TwoForm spin_tensor(const MomentumValue& mv, const FourVector& x) { return mv.j - wedge(lower(x), mv.p); }

WorldLine ssc_worldline(const MomentumValue& mv, const FourVector& f) {
  require_future_timelike(f, "SSC vector f =");
  const FourVector p = mv.momentum();
  return {raise(contract(mv.j, f)) / inner(f, p), p};
}

FourVector SSCChoice::f(const Hyperplane& sigma, const MomentumValue& mv) const {
  FourVector f;
  switch (kind_) {
    case Kind::CentreOfEnergy:
      f = sigma.u();
      break;
    case Kind::CentreOfInertia:
      f = mv.momentum();
      break;
    case Kind::NewtonWigner:
      f = sigma.u() + mv.momentum() / mv.mass_c();
      break;
    case Kind::Custom:
      f = rule_(sigma, mv);
      break;
  }
  require_future_timelike(f, ("SSC vector f (" + name_ + ") =").c_str());
  return f;
}

FourVector ssc_position(const MomentumValue& mv, const SSCChoice& choice, const Hyperplane& sigma) {
  const WorldLine line = ssc_worldline(mv, choice.f(sigma, mv));
  const FourVector& u = sigma.u();
  // u.(b + lambda P) = -tau
  const double lambda = -(sigma.tau() + inner(u, line.base)) / inner(u, line.direction);
  return line.at(lambda);
}

FourVector ssc_position_closed_form(const MomentumValue& mv, const SSCChoice& choice, const Hyperplane& sigma) {
  const FourVector f = choice.f(sigma, mv);
  const FourVector& u = sigma.u();
  const FourVector p = mv.momentum();
  const double fp = inner(f, p);
  const double up = inner(u, p);
  const double juf = apply(contract(mv.j, f), u);  // J_{lambda rho} u^lambda f^rho
  OneForm chi = (1.0 / fp) * contract(mv.j, f) + (sigma.tau() / -up) * mv.p - (juf / -fp / -up) * mv.p;
  return raise(chi);
}

Vec3 nw_position_coords(const ElementarySystem& sys, const State& state) {
  return newton_wigner_coordinates(momenta(sys, state));
}

MollerDisc moller_disc(const MomentumValue& mv, const Hyperplane& sigma, double tol) {
  const double mc = mv.mass_c();
  if (!(mc > 0.0)) throw std::invalid_argument("Moller disc requires timelike momentum");
  const FourVector n = mv.momentum() / mc;
  if (max_abs_difference(n, sigma.u()) > tol * std::max(1.0, max_abs(n))) {
    std::ostringstream os;
    os << "Moller disc requires a hyperplane orthogonal to P: u = " << sigma.u() << ", P/mc = " << n;
    throw std::invalid_argument(os.str());
  }
  MollerDisc d;
  d.centre = ssc_position(mv, SSCChoice::centre_of_inertia(), sigma);
  d.normal = pauli_lubanski(mv);
  d.radius = spin_magnitude(mv) / mc;
  return d;
}

double centre_of_spin_residual(const MomentumValue& mv, const FourVector& x, const FourVector& u) {
  const double mc = mv.mass_c();
  const OneForm i_s = interior(u + mv.momentum() / mc, spin_tensor(mv, x));
  return wedge(wedge(lower(u), mv.p), i_s).component_norm();
}

double covariance_check(const ElementarySystem& sys, const SSCChoice& choice, const PoincareTransform& g,
                        const Hyperplane& sigma, const State& state) {
  const FourVector lhs =
      ssc_position(momenta(sys, poincare_act(sys, g, state)), choice, act_hyperplane(g, sigma));
  const FourVector rhs = act_point(g, ssc_position(momenta(sys, state), choice, sigma));
  return max_abs_difference(lhs, rhs);
}

}  // namespace relloc
