#ifndef RELLOC_ELEMENTARY_HPP
#define RELLOC_ELEMENTARY_HPP

// Classical elementary systems with timelike momentum: phase space
// T*R^3 x S^2 (or T*R^3 for spin zero) in the coordinates (x, p, s_hat).

#include <array>
#include <optional>

#include "relloc/minkowski.hpp"
#include "relloc/obsexpr.hpp"
#include "relloc/poincare.hpp"

namespace relloc {

class ElementarySystem {
 public:
  /// Throws std::invalid_argument unless m > 0, S >= 0 and c > 0.
  ElementarySystem(double m, double spin, double c);

  double m() const { return m_; }
  double spin() const { return spin_; }
  double c() const { return c_; }
  double mc() const { return m_ * c_; }
  bool spinning() const { return spin_ > 0.0; }

 private:
  double m_;
  double spin_;
  double c_;
};

struct State {
  Vec3 x{};
  Vec3 p{};
  /// Unit spin direction; absent for spin-zero systems.
  std::optional<Vec3> s_hat;

  /// s = S s_hat (zero when the system has no spin).
  Vec3 spin_vector(const ElementarySystem& sys) const;
};

/// Throws std::invalid_argument if s_hat is missing, present for S = 0, or
/// not of unit length (1e-12).
void validate(const ElementarySystem& sys, const State& state);

/// The ten momentum-map components as observables:
///   P_0 = -sqrt(m^2 c^2 + p^2),  P_a = p_a,
///   J_ab = x_a p_b - x_b p_a + eps_abc s_c,
///   J_a0 = P_0 x_a - (p x s)_a / (mc - P_0).
/// Spin terms are omitted when S = 0.
struct Generators {
  std::array<Expression, 4> p;
  std::array<std::array<Expression, 4>, 4> j;

  const Expression& P(int mu) const { return p[static_cast<std::size_t>(mu)]; }
  const Expression& J(int mu, int nu) const { return j[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]; }
};

Generators generators(const ElementarySystem& sys);

/// Pauli-Lubanski components W_mu = -1/2 eps_{mu nu rho sigma} P^nu J^{rho sigma}.
std::array<Expression, 4> pauli_lubanski_expressions(const Generators& gen);

/// Newton-Wigner coordinates X_a in terms of the generators.
std::array<Expression, 3> newton_wigner_expressions(const Generators& gen);

/// P0..P3, J12, J23, J31, J10, J20, J30, W0..W3 (lower index) and X1..X3.
AliasMap observable_aliases(const ElementarySystem& sys);

Valuation valuation(const ElementarySystem& sys, const State& state);
double evaluate(const Expression& f, const ElementarySystem& sys, const State& state);

/// T : (x, p, s_hat) -> (x, -p, -s_hat), the time reversal for the
/// hyperplane (e_0, 0).
State time_reversal(const State& state);

/// Time reversal for an arbitrary hyperplane, conjugating T by a Poincare
/// transformation taking (e_0, 0) to sigma.
State time_reversal(const ElementarySystem& sys, const Hyperplane& sigma, const State& state);

/// Numeric value of the momentum map.
MomentumValue momenta(const ElementarySystem& sys, const State& state);

/// X_a = -J_a0/mc - J_ab P^b/(mc(mc - P_0)) - J_b0 P^b P_a/(P_0 mc(mc - P_0)),
/// with mc taken from P.
Vec3 newton_wigner_coordinates(const MomentumValue& mv);

/// Inverse of momenta: p_a = P_a, x from the Newton-Wigner formula and
/// s^d = 1/2 eps^{abd} (J_ab - x_a p_b + x_b p_a). Throws std::invalid_argument
/// if P is not future timelike or either Casimir disagrees with the system.
State reconstruct(const ElementarySystem& sys, const MomentumValue& mv, double tol = 1e-9);

/// Phi_g(state), realised through momenta, the co-adjoint transform and
/// reconstruct. Throws std::invalid_argument unless Lambda is proper and
/// orthochronous.
State poincare_act(const ElementarySystem& sys, const PoincareTransform& g, const State& state);

}  // namespace relloc

#endif  // RELLOC_ELEMENTARY_HPP
