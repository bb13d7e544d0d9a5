#include "relloc/minkowski.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>

namespace relloc {

Mat4 identity_matrix() {
  Mat4 m = zero_matrix();
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

Mat4 zero_matrix() { return Mat4{}; }

Mat4 metric_matrix() {
  Mat4 m = zero_matrix();
  for (int i = 0; i < 4; ++i) m[i][i] = kMetricDiagonal[i];
  return m;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (int j = 0; j < 4; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

Mat4 operator*(double s, const Mat4& a) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = s * a[i][j];
  return r;
}

Mat4 transpose(const Mat4& a) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
  return r;
}

double determinant(const Mat4& a) {
  // Laplace expansion along the first row using 3x3 minors.
  auto minor3 = [&](int skip_col) {
    int cols[3];
    for (int j = 0, n = 0; j < 4; ++j)
      if (j != skip_col) cols[n++] = j;
    const auto& r1 = a[1];
    const auto& r2 = a[2];
    const auto& r3 = a[3];
    return r1[cols[0]] * (r2[cols[1]] * r3[cols[2]] - r2[cols[2]] * r3[cols[1]]) -
           r1[cols[1]] * (r2[cols[0]] * r3[cols[2]] - r2[cols[2]] * r3[cols[0]]) +
           r1[cols[2]] * (r2[cols[0]] * r3[cols[1]] - r2[cols[1]] * r3[cols[0]]);
  };
  double det = 0.0;
  for (int j = 0; j < 4; ++j) det += ((j % 2 == 0) ? 1.0 : -1.0) * a[0][j] * minor3(j);
  return det;
}

double max_abs_difference(const Mat4& a, const Mat4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

FourVector operator+(const FourVector& a, const FourVector& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
FourVector operator-(const FourVector& a, const FourVector& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
FourVector operator-(const FourVector& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
FourVector operator*(double s, const FourVector& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }
FourVector operator*(const FourVector& a, double s) { return s * a; }
FourVector operator/(const FourVector& a, double s) { return {a[0] / s, a[1] / s, a[2] / s, a[3] / s}; }

FourVector operator*(const Mat4& m, const FourVector& v) {
  FourVector r;
  for (int i = 0; i < 4; ++i)
    r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] + m[i][3] * v[3];
  return r;
}

std::ostream& operator<<(std::ostream& os, const FourVector& v) {
  return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ')';
}

double inner(const FourVector& v, const FourVector& w) {
  return -v[0] * w[0] + v[1] * w[1] + v[2] * w[2] + v[3] * w[3];
}

double max_abs_difference(const FourVector& a, const FourVector& b) { return max_abs(a - b); }

double max_abs(const FourVector& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), std::abs(v[3])});
}

CausalType classify(const FourVector& v, double tol) {
  const double n2 = inner(v, v);
  const double scale = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
  if (std::abs(n2) <= tol * scale) return CausalType::Null;
  return n2 < 0.0 ? CausalType::Timelike : CausalType::Spacelike;
}

bool is_future_timelike(const FourVector& v, double tol) {
  return classify(v, tol) == CausalType::Timelike && v[0] > 0.0;
}

bool is_unit_future_timelike(const FourVector& u, double tol) {
  return is_future_timelike(u, tol) && std::abs(inner(u, u) + 1.0) <= tol * std::max(1.0, u[0] * u[0]);
}

double apply(const OneForm& alpha, const FourVector& v) {
  double s = 0.0;
  for (int mu = 0; mu < 4; ++mu) s += alpha.slot(static_cast<std::size_t>(mu)) * v[mu];
  return s;
}

OneForm lower(const FourVector& v) { return OneForm({-v[0], v[1], v[2], v[3]}); }

FourVector raise(const OneForm& alpha) {
  return {-alpha.slot(0), alpha.slot(1), alpha.slot(2), alpha.slot(3)};
}

Mat4 to_matrix(const TwoForm& f) {
  Mat4 m{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) m[mu][nu] = f({mu, nu});
  return m;
}

TwoForm two_form_from_matrix(const Mat4& a, double tol) {
  double scale = 0.0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::abs(v));
  TwoForm f;
  for (std::size_t i = 0; i < TwoForm::size; ++i) {
    const auto mask = TwoForm::mask_of_slot(i);
    const int mu = std::countr_zero(static_cast<unsigned>(mask));
    const int nu = 31 - std::countl_zero(static_cast<unsigned>(mask));
    if (std::abs(a[mu][nu] + a[nu][mu]) > tol * std::max(scale, 1e-300))
      throw std::invalid_argument("two-form components are not antisymmetric");
    f.slot(i) = 0.5 * (a[mu][nu] - a[nu][mu]);
  }
  for (int mu = 0; mu < 4; ++mu)
    if (std::abs(a[mu][mu]) > tol * std::max(scale, 1e-300))
      throw std::invalid_argument("two-form components have a non-zero diagonal");
  return f;
}

TwoForm two_form(int mu, int nu, double value) {
  if (mu == nu) return TwoForm{};
  const auto mask = static_cast<std::uint8_t>((1u << mu) | (1u << nu));
  TwoForm f;
  f.slot(static_cast<std::size_t>(detail::slot_of_mask<2>(mask))) = (mu < nu) ? value : -value;
  return f;
}

FourForm volume_form() { return FourForm({1.0}); }

double levi_civita(int mu, int nu, int rho, int sigma) { return volume_form()({mu, nu, rho, sigma}); }

double levi_civita3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  // even permutations of (0,1,2)
  if ((a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 0)) return 1.0;
  return -1.0;
}

ThreeForm spatial_volume_form(const FourVector& u) { return interior(u, volume_form()); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

}  // namespace relloc
