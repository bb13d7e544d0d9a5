#ifndef RELLOC_LORENTZ_HPP
#define RELLOC_LORENTZ_HPP

#include <optional>
#include <utility>

#include "relloc/minkowski.hpp"

namespace relloc {

/// An element of the Lie algebra of the Lorentz group: an endomorphism X of V
/// that is anti-self-adjoint, eta(v, Xw) = -eta(Xv, w).
class LorentzGenerator {
 public:
  LorentzGenerator() = default;

  /// Validates anti-self-adjointness to tol (relative to the largest entry).
  static LorentzGenerator from_matrix(const Mat4& m, double tol = 1e-12);

  const Mat4& matrix() const { return m_; }
  const std::optional<std::pair<int, int>>& labels() const { return labels_; }

  FourVector operator()(const FourVector& v) const { return m_ * v; }

  /// Coefficients omega^{mu nu} = X^mu_rho eta^{rho nu}; antisymmetric.
  Mat4 coefficients() const;

  friend LorentzGenerator operator+(const LorentzGenerator& a, const LorentzGenerator& b);
  friend LorentzGenerator operator-(const LorentzGenerator& a, const LorentzGenerator& b);
  friend LorentzGenerator operator*(double s, const LorentzGenerator& a);

 private:
  friend LorentzGenerator generator(int a, int b);
  LorentzGenerator(const Mat4& m, std::optional<std::pair<int, int>> labels) : m_(m), labels_(labels) {}

  Mat4 m_{};
  std::optional<std::pair<int, int>> labels_;
};

/// B_ab = e_a (x) e_b^flat - e_b (x) e_a^flat. B_aa is the zero generator.
LorentzGenerator generator(int a, int b);

/// Matrix commutator [X, Y] = XY - YX.
LorentzGenerator commutator(const LorentzGenerator& x, const LorentzGenerator& y);

/// The Lie algebra element with coefficients omega^{mu nu}, i.e. the
/// endomorphism (1/2) omega^{mu nu} B_{mu nu} = -(1/2) omega^{mu nu} J_{mu nu}
/// with J_{mu nu} = -B_{mu nu}. Its components satisfy
/// omega^mu_rho eta^{rho nu} = omega^{mu nu}. Throws std::invalid_argument if
/// the array is not antisymmetric.
LorentzGenerator lorentz_lie_element(const Mat4& omega_upper, double tol = 1e-12);

/// A linear isometry Lambda^mu_nu of (V, eta).
class LorentzTransform {
 public:
  LorentzTransform() : m_(identity_matrix()) {}

  /// Checks Lambda^T eta Lambda = eta to tol; throws std::invalid_argument.
  static LorentzTransform from_matrix(const Mat4& m, double tol = 1e-10);
  static LorentzTransform identity() { return LorentzTransform(); }

  const Mat4& matrix() const { return m_; }
  double operator()(int mu, int nu) const { return m_[mu][nu]; }

  FourVector operator*(const FourVector& v) const { return m_ * v; }
  LorentzTransform operator*(const LorentzTransform& o) const { return LorentzTransform(m_ * o.m_); }

  /// Lambda^{-1} = eta Lambda^T eta.
  LorentzTransform inverse() const;

  double det() const { return determinant(m_); }
  bool is_proper() const { return det() > 0.0; }
  bool is_orthochronous() const { return m_[0][0] >= 1.0 - 1e-12; }
  bool is_proper_orthochronous() const { return is_proper() && is_orthochronous(); }

  /// Max entry of |Lambda^T eta Lambda - eta|.
  double isometry_defect() const;

  /// alpha o Lambda^{-1}, the induced action on one-forms.
  OneForm act(const OneForm& alpha) const;
  /// ((Lambda^{-1})^T (x) (Lambda^{-1})^T) J.
  TwoForm act(const TwoForm& j) const;

 private:
  explicit LorentzTransform(const Mat4& m) : m_(m) {}
  friend LorentzTransform exp_generator(int a, int b, double alpha);
  friend LorentzTransform boost_to(const FourVector& u, const FourVector& p, double mc);

  Mat4 m_;
};

/// exp(alpha B_ab) in closed form: rotation by alpha (both indices spatial)
/// or boost by rapidity alpha (one index temporal) in the e_a-e_b plane.
/// Requires a != b.
LorentzTransform exp_generator(int a, int b, double alpha);

/// Truncated power series sum_{k<terms} (alpha X)^k / k!. Reference route for
/// the closed forms.
Mat4 exp_series(const LorentzGenerator& x, double alpha, int terms = 60);

/// The boost in the plane of P/mc and u that maps P/mc to u and fixes the
/// spacelike plane orthogonal to both. Requires u unit timelike
/// future-directed and P timelike future-directed with eta(P,P) = -(mc)^2.
LorentzTransform boost_to(const FourVector& u, const FourVector& p, double mc);

/// Convenience: rotation about a unit axis (right-handed) by angle, and pure
/// boost with the given rapidity along a unit spatial direction.
LorentzTransform rotation(const Vec3& axis, double angle);
LorentzTransform pure_boost(const Vec3& direction, double rapidity);

}  // namespace relloc

#endif  // RELLOC_LORENTZ_HPP
