#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "relloc/lorentz.hpp"
#include "relloc/sampling.hpp"

using namespace relloc;

namespace {

const FourVector e0 = FourVector::basis(0);
const FourVector e1 = FourVector::basis(1);
const FourVector e2 = FourVector::basis(2);

}  // namespace

TEST(Lorentz, GeneratorB12RotatesE1TowardsMinusE2) {
  const LorentzGenerator b12 = generator(1, 2);
  EXPECT_LT(max_abs_difference(b12(e1), -e2), 1e-15);
  EXPECT_LT(max_abs_difference(b12(e2), e1), 1e-15);
  EXPECT_LT(max_abs_difference(generator(2, 1).matrix(), (-1.0) * b12.matrix()), 1e-15);
  EXPECT_EQ(max_abs_difference(generator(3, 3).matrix(), zero_matrix()), 0.0);
}

TEST(Lorentz, GeneratorB10FromDefinition) {
  // (e_1 (x) e_0^flat - e_0 (x) e_1^flat)(v) = e_1 eta(e_0, v) - e_0 eta(e_1, v)
  for (int k = 0; k < 4; ++k) {
    const FourVector v = FourVector::basis(k);
    const FourVector expected = inner(e0, v) * e1 - inner(e1, v) * e0;
    EXPECT_LT(max_abs_difference(generator(1, 0)(v), expected), 1e-15);
  }
  EXPECT_LT(max_abs_difference(generator(1, 0)(e1), -e0), 1e-15);
}

TEST(Lorentz, GeneratorsAreAntiSelfAdjoint) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const FourVector v = FourVector::basis(i), w = FourVector::basis(j);
          const LorentzGenerator x = generator(a, b);
          EXPECT_EQ(inner(v, x(w)), -inner(x(v), w));
        }
  Mat4 sym{};
  sym[0][1] = 1.0;
  sym[1][0] = -1.0;  // eta X symmetric
  EXPECT_THROW(LorentzGenerator::from_matrix(sym), std::invalid_argument);
}

TEST(Lorentz, CommutatorExample) {
  const Mat4 c = commutator(generator(1, 2), generator(2, 3)).matrix();
  EXPECT_LT(max_abs_difference(c, generator(1, 3).matrix()), 1e-15);
}

TEST(Lorentz, LieElementFollowsHalfOmegaB) {
  Mat4 omega{};
  omega[1][2] = 1.0;
  omega[2][1] = -1.0;
  EXPECT_LT(max_abs_difference(lorentz_lie_element(omega).matrix(), generator(1, 2).matrix()), 1e-15);
  EXPECT_EQ(max_abs_difference(lorentz_lie_element(Mat4{}).matrix(), zero_matrix()), 0.0);
  omega[2][1] = 0.5;
  EXPECT_THROW(lorentz_lie_element(omega), std::invalid_argument);
}

TEST(Lorentz, LieElementCoefficientRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Mat4 omega{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      omega[mu][nu] = d(rng);
      omega[nu][mu] = -omega[mu][nu];
    }
  // Coefficients X^mu_rho eta^{rho nu} recover omega^{mu nu}.
  EXPECT_LT(max_abs_difference(lorentz_lie_element(omega).coefficients(), omega), 1e-15);
}

TEST(Lorentz, ClosedFormExponential) {
  const LorentzTransform r = exp_generator(1, 2, std::numbers::pi / 2);
  EXPECT_LT(max_abs_difference(r * e2, e1), 1e-15);
  EXPECT_LT(max_abs_difference(exp_generator(0, 3, 0.0).matrix(), identity_matrix()), 1e-15);
  EXPECT_THROW(exp_generator(2, 2, 1.0), std::invalid_argument);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      for (double alpha : {-3.0, -1.0, 0.3, 1.0, 3.0}) {
        EXPECT_LT(max_abs_difference(exp_generator(a, b, alpha).matrix(), exp_series(generator(a, b), alpha)), 1e-10);
        EXPECT_LT(max_abs_difference(exp_generator(a, b, alpha).matrix(), exp_series(generator(a, b), alpha, 20)),
                  std::abs(alpha) <= 1.0 ? 1e-12 : 1e-3);
      }
      EXPECT_TRUE(exp_generator(a, b, 0.7).is_proper_orthochronous());
    }
}

TEST(Lorentz, BoostToMapsMomentumDirectionToU) {
  Sampler s(7);
  for (int n = 0; n < 50; ++n) {
    const FourVector u = s.unit_timelike(2.0);
    const double mc = s.uniform(0.5, 3.0);
    const FourVector p = mc * s.unit_timelike(2.0);
    const LorentzTransform b = boost_to(u, p, mc);
    EXPECT_LT(max_abs_difference(b * (p / mc), u), 1e-12 * max_abs(u));
    EXPECT_LT(b.isometry_defect(), 1e-12 * max_abs(u) * max_abs(p / mc));
    EXPECT_NEAR(b.det(), 1.0, 1e-10);
    EXPECT_TRUE(b.is_orthochronous());
  }
  const FourVector p(2.0, 0.3, -0.1, 0.4);
  const double mc = std::sqrt(-inner(p, p));
  EXPECT_LT(max_abs_difference(boost_to(p / mc, p, mc).matrix(), identity_matrix()), 1e-14);
}

TEST(Lorentz, BoostToRejectsBadInput) {
  const FourVector p(2.0, 0.0, 0.0, 0.0);
  EXPECT_THROW(boost_to(FourVector(2, 0, 0, 0), p, 2.0), std::invalid_argument);
  EXPECT_THROW(boost_to(e0, FourVector(1, 2, 0, 0), 1.0), std::invalid_argument);
  EXPECT_THROW(boost_to(e0, FourVector(-2, 0, 0, 0), 2.0), std::invalid_argument);
  EXPECT_THROW(boost_to(e0, p, 1.0), std::invalid_argument);
  EXPECT_THROW(boost_to(e0, p, 0.0), std::invalid_argument);
}

TEST(Lorentz, FromMatrixChecksIsometry) {
  Mat4 m = identity_matrix();
  m[0][1] = 0.1;
  EXPECT_THROW(LorentzTransform::from_matrix(m), std::invalid_argument);
  const LorentzTransform t = LorentzTransform::from_matrix(metric_matrix());
  EXPECT_FALSE(t.is_orthochronous());
  EXPECT_FALSE(t.is_proper());
}

TEST(Lorentz, RotationAndBoostHelpers) {
  const LorentzTransform r = rotation({0, 0, 1}, std::numbers::pi / 2);
  EXPECT_LT(max_abs_difference(r * e1, e2), 1e-15);
  const LorentzTransform b = pure_boost({1, 0, 0}, 0.5);
  EXPECT_NEAR((b * e0)[1], std::sinh(0.5), 1e-15);
  EXPECT_LT(max_abs_difference(b.matrix(), exp_generator(0, 1, 0.5).matrix()), 1e-15);
  EXPECT_LT(max_abs_difference((b * b.inverse()).matrix(), identity_matrix()), 1e-14);
}

TEST(Lorentz, ActionOnFormsIsPullbackByInverse) {
  Sampler s(8);
  const LorentzTransform l = s.lorentz(1.0);
  const FourVector v(0.3, -1.0, 2.0, 0.5), w(1.0, 0.2, 0.0, -0.7);
  const OneForm a = lower(FourVector(1.0, 2.0, -1.0, 0.5));
  EXPECT_NEAR(apply(l.act(a), l * v), apply(a, v), 1e-13);
  const TwoForm j = two_form(0, 1, 1.5) + two_form(2, 3, -0.5) + two_form(1, 3, 0.25);
  EXPECT_NEAR(apply(interior(l * v, l.act(j)), l * w), apply(interior(v, j), w), 1e-13);
}
