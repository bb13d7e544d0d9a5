#ifndef RELLOC_POINCARE_HPP
#define RELLOC_POINCARE_HPP

#include "relloc/lorentz.hpp"
#include "relloc/minkowski.hpp"

namespace relloc {

/// (Lambda, a) acting on M = V (origin at the zero vector) by x -> Lambda x + a.
struct PoincareTransform {
  LorentzTransform lambda;
  FourVector a;

  static PoincareTransform identity() { return {}; }
  static PoincareTransform translation(const FourVector& a) { return {LorentzTransform::identity(), a}; }
  static PoincareTransform homogeneous(const LorentzTransform& l) { return {l, FourVector{}}; }
};

/// (L1, a1)(L2, a2) = (L1 L2, a1 + L1 a2).
PoincareTransform compose(const PoincareTransform& g1, const PoincareTransform& g2);
/// (L, a)^{-1} = (L^{-1}, -L^{-1} a).
PoincareTransform inverse(const PoincareTransform& g);

FourVector act_point(const PoincareTransform& g, const FourVector& x);

/// Spacelike hyperplane {x : u.x = -tau}, u its unit future-directed normal.
class Hyperplane {
 public:
  /// Throws std::invalid_argument unless u is unit, timelike and
  /// future-directed (to 1e-12).
  Hyperplane(const FourVector& u, double tau);

  /// The rest hyperplane of e_0 through the origin.
  static Hyperplane standard() { return Hyperplane(FourVector::basis(0), 0.0); }

  const FourVector& u() const { return u_; }
  double tau() const { return tau_; }

  /// |u.x + tau|.
  double membership_defect(const FourVector& x) const { return std::abs(inner(u_, x) + tau_); }

 private:
  FourVector u_;
  double tau_;
};

/// (Lambda, a).(u, tau) = (Lambda u, tau - Lambda u . a).
Hyperplane act_hyperplane(const PoincareTransform& g, const Hyperplane& sigma);

/// Values of the momentum map at a state: P_mu (a one-form) and J_{mu nu}.
struct MomentumValue {
  OneForm p;
  TwoForm j;

  /// P^sharp.
  FourVector momentum() const { return raise(p); }
  /// mc = sqrt(-eta^{-1}(P, P)); NaN if P is not timelike.
  double mass_c() const;
  double momentum_square() const { return form_inner(p, p); }
};

double max_abs_difference(const MomentumValue& a, const MomentumValue& b);

/// Momentum value of the actively transformed state:
///   P'_mu = (L^-1)^nu_mu P_nu,
///   J'_{mu nu} = (L^-1)^rho_mu (L^-1)^sigma_nu J_{rho sigma}
///                + a_mu (L^-1)^rho_nu P_rho - a_nu (L^-1)^rho_mu P_rho.
MomentumValue coadjoint_transform(const PoincareTransform& g, const MomentumValue& mv);

}  // namespace relloc

#endif  // RELLOC_POINCARE_HPP
