#ifndef RELLOC_LOCALISATION_HPP
#define RELLOC_LOCALISATION_HPP

// Position observables built from the momentum map: Pauli-Lubanski vector,
// spin vector and spin tensor, SSC worldlines and their intersections with
// spacelike hyperplanes, the Moller disc and the centre-of-spin condition.

#include <functional>
#include <string>

#include "relloc/elementary.hpp"
#include "relloc/minkowski.hpp"
#include "relloc/poincare.hpp"

namespace relloc {

/// W = (*(P^flat ^ J))^sharp.
FourVector pauli_lubanski(const MomentumValue& mv);
/// Same vector from W_mu = -1/2 eps_{mu nu rho sigma} P^nu J^{rho sigma}.
FourVector pauli_lubanski_components(const MomentumValue& mv);

/// S = sqrt(W.W)/(mc).
double spin_magnitude(const MomentumValue& mv);

/// s(u) = B(u) W/(mc).
FourVector spin_vector(const MomentumValue& mv, const FourVector& u);

/// S_{mu nu}(x) = J_{mu nu} - x_mu P_nu + x_nu P_mu.
TwoForm spin_tensor(const MomentumValue& mv, const FourVector& x);

struct WorldLine {
  FourVector base;
  FourVector direction;

  FourVector at(double lambda) const { return base + lambda * direction; }
};

/// Solutions of S_{mu nu}(x) f^nu = 0: x_mu = J_{mu rho} f^rho/(f.P) + lambda P_mu.
/// Throws std::invalid_argument unless f is future timelike.
WorldLine ssc_worldline(const MomentumValue& mv, const FourVector& f);

class SSCChoice {
 public:
  enum class Kind { CentreOfEnergy, CentreOfInertia, NewtonWigner, Custom };
  using Rule = std::function<FourVector(const Hyperplane&, const MomentumValue&)>;

  /// f = u
  static SSCChoice centre_of_energy() { return SSCChoice(Kind::CentreOfEnergy, {}, "ce"); }
  /// f = P
  static SSCChoice centre_of_inertia() { return SSCChoice(Kind::CentreOfInertia, {}, "ci"); }
  /// f = u + P/(mc)
  static SSCChoice newton_wigner() { return SSCChoice(Kind::NewtonWigner, {}, "nw"); }
  static SSCChoice custom(Rule rule, std::string name = "custom") {
    return SSCChoice(Kind::Custom, std::move(rule), std::move(name));
  }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// The vector f for this hyperplane and momentum value; throws
  /// std::invalid_argument if it is not future timelike.
  FourVector f(const Hyperplane& sigma, const MomentumValue& mv) const;

 private:
  SSCChoice(Kind k, Rule r, std::string n) : kind_(k), rule_(std::move(r)), name_(std::move(n)) {}
  Kind kind_;
  Rule rule_;
  std::string name_;
};

/// Intersection of the SSC worldline with sigma.
FourVector ssc_position(const MomentumValue& mv, const SSCChoice& choice, const Hyperplane& sigma);

/// chi_mu = J_{mu rho} f^rho/(f.P) + tau P_mu/(-u.P)
///          - J_{lambda rho} u^lambda f^rho/(-f.P) P_mu/(-u.P).
FourVector ssc_position_closed_form(const MomentumValue& mv, const SSCChoice& choice, const Hyperplane& sigma);

/// Newton-Wigner coordinates on (e_0, 0) from the generator formula.
Vec3 nw_position_coords(const ElementarySystem& sys, const State& state);

struct MollerDisc {
  FourVector centre;
  double radius = 0.0;
  FourVector normal;
};

/// Disc of all SSC positions on a hyperplane orthogonal to P: centred at the
/// centre of inertia, radius S/(mc), orthogonal to W. Throws
/// std::invalid_argument unless sigma.u() = P/mc to tol.
MollerDisc moller_disc(const MomentumValue& mv, const Hyperplane& sigma, double tol = 1e-9);

/// Euclidean component norm of u^flat ^ P ^ i_{u + P/mc} S(x); zero exactly
/// when x is a centre-of-spin position for the frame u.
double centre_of_spin_residual(const MomentumValue& mv, const FourVector& x, const FourVector& u);

/// max |chi(g.sigma)(Phi_g state) - g.chi(sigma)(state)| over components.
double covariance_check(const ElementarySystem& sys, const SSCChoice& choice, const PoincareTransform& g,
                        const Hyperplane& sigma, const State& state);

}  // namespace relloc

#endif  // RELLOC_LOCALISATION_HPP
