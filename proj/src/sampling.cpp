#include "relloc/sampling.hpp"

#include <cmath>
#include <numbers>

namespace relloc {

Vec3 Sampler::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Vec3 Sampler::box(double half_width) {
  Vec3 v;
  for (auto& c : v) c = uniform(-half_width, half_width);
  return v;
}

State Sampler::state(const ElementarySystem& sys) {
  State st;
  st.x = box(2.0);
  st.p = box(2.0);
  for (auto& c : st.p) c *= sys.mc();
  if (sys.spinning()) st.s_hat = unit_vector();
  return st;
}

LorentzTransform Sampler::rotation() {
  const Vec3 axis = unit_vector();
  return relloc::rotation(axis, uniform(0.0, 2.0 * std::numbers::pi));
}

LorentzTransform Sampler::lorentz(double max_rapidity) {
  const LorentzTransform r1 = rotation();
  const Vec3 dir = unit_vector();
  const LorentzTransform b = pure_boost(dir, uniform(0.0, max_rapidity));
  const LorentzTransform r2 = rotation();
  return r1 * b * r2;
}

PoincareTransform Sampler::poincare(double max_rapidity, double max_translation) {
  PoincareTransform g;
  g.lambda = lorentz(max_rapidity);
  for (int mu = 0; mu < 4; ++mu) g.a[mu] = uniform(-max_translation, max_translation);
  return g;
}

FourVector Sampler::unit_timelike(double max_rapidity) {
  const Vec3 dir = unit_vector();
  const double eta = uniform(0.0, max_rapidity);
  const double sh = std::sinh(eta);
  return FourVector{std::cosh(eta), sh * dir[0], sh * dir[1], sh * dir[2]};
}

Hyperplane Sampler::hyperplane(double max_rapidity, double max_tau) {
  const FourVector u = unit_timelike(max_rapidity);
  return Hyperplane(u, uniform(-max_tau, max_tau));
}

}  // namespace relloc
