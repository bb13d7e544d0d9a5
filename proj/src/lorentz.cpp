#include "relloc/lorentz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace relloc {

namespace {

double max_entry(const Mat4& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (double v : row) s = std::max(s, std::abs(v));
  return s;
}

void check_index(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("Lorentz index out of range 0..3");
}

}  // namespace

LorentzGenerator LorentzGenerator::from_matrix(const Mat4& m, double tol) {
  // eta X must be antisymmetric.
  const Mat4 lowered = metric_matrix() * m;
  const double scale = std::max(max_entry(m), 1e-300);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(lowered[i][j] + lowered[j][i]) > tol * scale)
        throw std::invalid_argument("endomorphism is not anti-self-adjoint with respect to eta");
  return LorentzGenerator(m, std::nullopt);
}

Mat4 LorentzGenerator::coefficients() const { return m_ * metric_matrix(); }

LorentzGenerator operator+(const LorentzGenerator& a, const LorentzGenerator& b) {
  return LorentzGenerator(a.m_ + b.m_, std::nullopt);
}

LorentzGenerator operator-(const LorentzGenerator& a, const LorentzGenerator& b) {
  return LorentzGenerator(a.m_ - b.m_, std::nullopt);
}

LorentzGenerator operator*(double s, const LorentzGenerator& a) {
  return LorentzGenerator(s * a.m_, std::nullopt);
}

LorentzGenerator generator(int a, int b) {
  check_index(a);
  check_index(b);
  Mat4 m{};
  if (a != b) {
    // (e_a (x) e_b^flat)^mu_nu = delta^mu_a eta_{b nu}
    m[a][b] += metric(b, b);
    m[b][a] -= metric(a, a);
  }
  return LorentzGenerator(m, std::make_pair(a, b));
}

LorentzGenerator commutator(const LorentzGenerator& x, const LorentzGenerator& y) {
  return LorentzGenerator::from_matrix(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

LorentzGenerator lorentz_lie_element(const Mat4& omega_upper, double tol) {
  const double scale = std::max(max_entry(omega_upper), 1e-300);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(omega_upper[i][j] + omega_upper[j][i]) > tol * scale)
        throw std::invalid_argument("Lie algebra coefficients omega^{mu nu} must be antisymmetric");
  Mat4 m{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (mu != nu) m = m + (0.5 * omega_upper[mu][nu]) * generator(mu, nu).matrix();
  return LorentzGenerator::from_matrix(m);
}

LorentzTransform LorentzTransform::from_matrix(const Mat4& m, double tol) {
  LorentzTransform t(m);
  const double defect = t.isometry_defect();
  if (!(defect <= tol * std::max(1.0, max_entry(m) * max_entry(m)))) {
    std::ostringstream os;
    os << "matrix is not a Lorentz isometry (|L^T eta L - eta| = " << defect << ")";
    throw std::invalid_argument(os.str());
  }
  return t;
}

LorentzTransform LorentzTransform::inverse() const {
  return LorentzTransform(metric_matrix() * transpose(m_) * metric_matrix());
}

double LorentzTransform::isometry_defect() const {
  return max_abs_difference(transpose(m_) * metric_matrix() * m_, metric_matrix());
}

OneForm LorentzTransform::act(const OneForm& alpha) const {
  // (alpha o Lambda^{-1})_mu = alpha_nu (Lambda^{-1})^nu_mu
  const Mat4 inv = inverse().matrix();
  OneForm out;
  for (int mu = 0; mu < 4; ++mu) {
    double s = 0.0;
    for (int nu = 0; nu < 4; ++nu) s += alpha.slot(static_cast<std::size_t>(nu)) * inv[nu][mu];
    out.slot(static_cast<std::size_t>(mu)) = s;
  }
  return out;
}

TwoForm LorentzTransform::act(const TwoForm& j) const {
  const Mat4 inv = inverse().matrix();
  const Mat4 jm = to_matrix(j);
  // J'_{mu nu} = (L^-1)^rho_mu (L^-1)^sigma_nu J_{rho sigma} = (inv^T J inv)_{mu nu}
  const Mat4 out = transpose(inv) * jm * inv;
  TwoForm f;
  for (std::size_t i = 0; i < TwoForm::size; ++i) {
    const auto mask = TwoForm::mask_of_slot(i);
    const int mu = std::countr_zero(static_cast<unsigned>(mask));
    const int nu = 31 - std::countl_zero(static_cast<unsigned>(mask));
    f.slot(i) = 0.5 * (out[mu][nu] - out[nu][mu]);
  }
  return f;
}

LorentzTransform exp_generator(int a, int b, double alpha) {
  check_index(a);
  check_index(b);
  if (a == b) throw std::invalid_argument("exp_generator requires a != b");
  const Mat4 gen = generator(a, b).matrix();
  Mat4 proj{};
  proj[a][a] = 1.0;
  proj[b][b] = 1.0;
  const double eps = metric(a, a) * metric(b, b);
  const double even = eps > 0 ? std::cos(alpha) : std::cosh(alpha);
  const double odd = eps > 0 ? std::sin(alpha) : std::sinh(alpha);
  const Mat4 block = (even * identity_matrix() + odd * gen) * proj;
  return LorentzTransform((identity_matrix() - proj) + block);
}

Mat4 exp_series(const LorentzGenerator& x, double alpha, int terms) {
  const Mat4 ax = alpha * x.matrix();
  Mat4 term = identity_matrix();
  Mat4 sum = identity_matrix();
  for (int k = 1; k < terms; ++k) {
    term = (1.0 / k) * (term * ax);
    sum = sum + term;
  }
  return sum;
}

LorentzTransform boost_to(const FourVector& u, const FourVector& p, double mc) {
  if (!(mc > 0.0)) throw std::invalid_argument("boost_to: mc must be positive");
  if (!is_unit_future_timelike(u, 1e-10)) {
    std::ostringstream os;
    os << "boost_to: u = " << u << " is not a unit future-directed timelike vector (u.u = " << inner(u, u)
       << ")";
    throw std::invalid_argument(os.str());
  }
  if (!is_future_timelike(p)) {
    std::ostringstream os;
    os << "boost_to: P = " << p << " is not future-directed timelike";
    throw std::invalid_argument(os.str());
  }
  const double pp = inner(p, p);
  if (std::abs(pp + mc * mc) > 1e-9 * mc * mc) {
    std::ostringstream os;
    os << "boost_to: P.P = " << pp << " does not match -(mc)^2 = " << -mc * mc;
    throw std::invalid_argument(os.str());
  }
  const FourVector n1 = p / mc;
  const FourVector sum = n1 + u;
  // Two future-directed unit timelike vectors have u.n1 <= -1.
  const double denom = 1.0 - inner(u, n1);
  if (!(denom >= 2.0 - 1e-9)) throw std::logic_error("boost_to: denominator below 2");
  const OneForm sum_flat = lower(sum);
  const OneForm n1_flat = lower(n1);
  Mat4 m = identity_matrix();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      m[mu][nu] += sum[mu] * sum_flat.slot(static_cast<std::size_t>(nu)) / denom -
                   2.0 * u[mu] * n1_flat.slot(static_cast<std::size_t>(nu));
  return LorentzTransform(m);
}

LorentzTransform rotation(const Vec3& axis, double angle) {
  const double n = norm(axis);
  if (!(n > 0.0)) throw std::invalid_argument("rotation axis must be non-zero");
  const Vec3 k{axis[0] / n, axis[1] / n, axis[2] / n};
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat4 m = identity_matrix();
  // Rodrigues: R = c I + s [k]_x + (1 - c) k k^T
  const double kx[3][3] = {{0, -k[2], k[1]}, {k[2], 0, -k[0]}, {-k[1], k[0], 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i + 1][j + 1] = (i == j ? c : 0.0) + s * kx[i][j] + (1.0 - c) * k[i] * k[j];
  return LorentzTransform::from_matrix(m);
}

LorentzTransform pure_boost(const Vec3& direction, double rapidity) {
  const double n = norm(direction);
  if (!(n > 0.0)) {
    if (rapidity == 0.0) return LorentzTransform::identity();
    throw std::invalid_argument("boost direction must be non-zero");
  }
  const Vec3 d{direction[0] / n, direction[1] / n, direction[2] / n};
  const double ch = std::cosh(rapidity);
  const double sh = std::sinh(rapidity);
  Mat4 m = identity_matrix();
  m[0][0] = ch;
  for (int i = 0; i < 3; ++i) {
    m[0][i + 1] = sh * d[i];
    m[i + 1][0] = sh * d[i];
    for (int j = 0; j < 3; ++j) m[i + 1][j + 1] += (ch - 1.0) * d[i] * d[j];
  }
  return LorentzTransform::from_matrix(m);
}

}  // namespace relloc
