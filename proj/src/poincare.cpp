#include "relloc/poincare.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace relloc {

PoincareTransform compose(const PoincareTransform& g1, const PoincareTransform& g2) {
  return {g1.lambda * g2.lambda, g1.a + g1.lambda * g2.a};
}

PoincareTransform inverse(const PoincareTransform& g) {
  const LorentzTransform inv = g.lambda.inverse();
  return {inv, -(inv * g.a)};
}

FourVector act_point(const PoincareTransform& g, const FourVector& x) { return g.lambda * x + g.a; }

Hyperplane::Hyperplane(const FourVector& u, double tau) : u_(u), tau_(tau) {
  if (!is_unit_future_timelike(u, 1e-12)) {
    std::ostringstream os;
    os << "hyperplane normal " << u << " is not unit, timelike and future-directed (u.u = " << inner(u, u)
       << ")";
    throw std::invalid_argument(os.str());
  }
  if (!std::isfinite(tau)) throw std::invalid_argument("hyperplane tau must be finite");
}

Hyperplane act_hyperplane(const PoincareTransform& g, const Hyperplane& sigma) {
  FourVector lu = g.lambda * sigma.u();
  // Re-project onto the unit hyperboloid to absorb round-off from large boosts.
  lu = lu / std::sqrt(-inner(lu, lu));
  return Hyperplane(lu, sigma.tau() - inner(lu, g.a));
}

double MomentumValue::mass_c() const {
  const double p2 = momentum_square();
  if (!(p2 < 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(-p2);
}

double max_abs_difference(const MomentumValue& a, const MomentumValue& b) {
  return std::max(max_abs_difference(a.p, b.p), max_abs_difference(a.j, b.j));
}

MomentumValue coadjoint_transform(const PoincareTransform& g, const MomentumValue& mv) {
  MomentumValue out;
  out.p = g.lambda.act(mv.p);
  out.j = g.lambda.act(mv.j) + wedge(lower(g.a), out.p);
  return out;
}

}  // namespace relloc
