#ifndef RELLOC_SAMPLING_HPP
#define RELLOC_SAMPLING_HPP

// Seeded random inputs for the verification suites and tests.

#include <cstdint>
#include <random>

#include "relloc/elementary.hpp"
#include "relloc/lorentz.hpp"
#include "relloc/poincare.hpp"

namespace relloc {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  /// Uniform on the unit sphere.
  Vec3 unit_vector();
  Vec3 box(double half_width);

  /// x and p components uniform in [-2, 2] (p in units of mc), s_hat uniform
  /// on the sphere for spinning systems.
  State state(const ElementarySystem& sys);

  LorentzTransform rotation();
  /// Rotation, boost of rapidity uniform in [0, max_rapidity], rotation.
  LorentzTransform lorentz(double max_rapidity = 1.0);
  /// Random proper orthochronous (Lambda, a) with a components in
  /// [-max_translation, max_translation].
  PoincareTransform poincare(double max_rapidity = 1.0, double max_translation = 2.0);

  /// Unit future timelike vector with rapidity uniform in [0, max_rapidity]
  /// in a uniformly random direction.
  FourVector unit_timelike(double max_rapidity = 1.0);
  Hyperplane hyperplane(double max_rapidity = 1.0, double max_tau = 2.0);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace relloc

#endif  // RELLOC_SAMPLING_HPP
