#ifndef RELLOC_MINKOWSKI_HPP
#define RELLOC_MINKOWSKI_HPP

// Linear algebra and exterior calculus on 4-dimensional Minkowski space with
// the mostly-plus signature (-+++). Components always refer to a fixed,
// positively oriented orthonormal basis e_0..e_3 with e_0 timelike and
// future-directed; the volume form has epsilon_{0123} = +1.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>

namespace relloc {

inline constexpr int kDim = 4;

using Vec3 = std::array<double, 3>;
using Mat4 = std::array<std::array<double, 4>, 4>;

/// Diagonal entries of the metric, eta_{mu mu}. Also equal to eta^{mu mu}.
inline constexpr std::array<double, 4> kMetricDiagonal{-1.0, 1.0, 1.0, 1.0};

inline constexpr double metric(int mu, int nu) { return mu == nu ? kMetricDiagonal[mu] : 0.0; }

// ---------------------------------------------------------------------------
// 4x4 matrices

Mat4 identity_matrix();
Mat4 zero_matrix();
Mat4 metric_matrix();
Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(double s, const Mat4& a);
Mat4 transpose(const Mat4& a);
double determinant(const Mat4& a);
double max_abs_difference(const Mat4& a, const Mat4& b);

// ---------------------------------------------------------------------------
// Vectors

struct FourVector {
  std::array<double, 4> c{};

  constexpr FourVector() = default;
  constexpr FourVector(double v0, double v1, double v2, double v3) : c{v0, v1, v2, v3} {}
  constexpr explicit FourVector(const std::array<double, 4>& comps) : c(comps) {}

  constexpr double operator[](int mu) const { return c[mu]; }
  constexpr double& operator[](int mu) { return c[mu]; }

  /// Spatial part (v^1, v^2, v^3).
  Vec3 spatial() const { return {c[1], c[2], c[3]}; }

  static constexpr FourVector basis(int mu) {
    FourVector e;
    e.c[mu] = 1.0;
    return e;
  }
};

FourVector operator+(const FourVector& a, const FourVector& b);
FourVector operator-(const FourVector& a, const FourVector& b);
FourVector operator-(const FourVector& a);
FourVector operator*(double s, const FourVector& a);
FourVector operator*(const FourVector& a, double s);
FourVector operator/(const FourVector& a, double s);
FourVector operator*(const Mat4& m, const FourVector& v);
std::ostream& operator<<(std::ostream& os, const FourVector& v);

/// eta(v, w) = -v^0 w^0 + sum_a v^a w^a.
double inner(const FourVector& v, const FourVector& w);

/// Largest absolute component difference.
double max_abs_difference(const FourVector& a, const FourVector& b);
double max_abs(const FourVector& v);

enum class CausalType { Timelike, Null, Spacelike };

/// Classifies by the sign of eta(v,v); |eta(v,v)| <= tol * (sum of squared
/// components) counts as null.
CausalType classify(const FourVector& v, double tol = 1e-12);

bool is_future_timelike(const FourVector& v, double tol = 1e-12);

/// Future-directed timelike with eta(u,u) = -1 up to tol.
bool is_unit_future_timelike(const FourVector& u, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Exterior forms

namespace detail {

constexpr std::size_t binomial4(int k) {
  constexpr std::array<std::size_t, 5> table{1, 4, 6, 4, 1};
  return (k >= 0 && k <= 4) ? table[static_cast<std::size_t>(k)] : 0;
}

/// Index sets of size k as 4-bit masks, ordered lexicographically by their
/// ascending index tuples.
template <int K>
constexpr std::array<std::uint8_t, binomial4(K)> index_masks() {
  std::array<std::uint8_t, binomial4(K)> out{};
  if constexpr (binomial4(K) > 0) {
    std::size_t n = 0;
    // Enumerate tuples lexicographically.
    std::array<int, 4> idx{};
    for (int i = 0; i < K; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint8_t mask = 0;
      for (int i = 0; i < K; ++i) mask |= static_cast<std::uint8_t>(1u << idx[static_cast<std::size_t>(i)]);
      out[n++] = mask;
      int pos = K - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == 4 - K + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < K; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

template <int K>
constexpr int slot_of_mask(std::uint8_t mask) {
  constexpr auto masks = index_masks<K>();
  for (std::size_t i = 0; i < masks.size(); ++i)
    if (masks[i] == mask) return static_cast<int>(i);
  return -1;
}

/// Sign of the permutation sorting the concatenation (I, J) of two disjoint
/// ascending index sets.
constexpr double shuffle_sign(std::uint8_t i_mask, std::uint8_t j_mask) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    if (!(i_mask & (1u << i))) continue;
    for (int j = 0; j < i; ++j)
      if (j_mask & (1u << j)) ++inversions;
  }
  return (inversions % 2 == 0) ? 1.0 : -1.0;
}

constexpr double metric_sign(std::uint8_t mask) {
  double s = 1.0;
  for (int i = 0; i < 4; ++i)
    if (mask & (1u << i)) s *= kMetricDiagonal[static_cast<std::size_t>(i)];
  return s;
}

}  // namespace detail

/// A K-form on V, stored by its components alpha_{i1...iK} for ascending
/// index tuples. Forms of degree above four have no components; they are the
/// zero form.
template <int K>
class Form {
 public:
  static constexpr int degree = K;
  static constexpr std::size_t size = detail::binomial4(K);

  constexpr Form() = default;
  constexpr explicit Form(const std::array<double, size>& comps) : c_(comps) {}

  /// Component alpha_{idx...} for an arbitrary index tuple, antisymmetry
  /// applied. Repeated indices give zero.
  double operator()(const std::array<int, static_cast<std::size_t>(K > 0 ? K : 0)>& idx) const
    requires(K >= 1 && K <= 4)
  {
    std::uint8_t mask = 0;
    int inversions = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto bit = static_cast<std::uint8_t>(1u << idx[i]);
      if (mask & bit) return 0.0;
      mask |= bit;
      for (std::size_t j = 0; j < i; ++j)
        if (idx[j] > idx[i]) ++inversions;
    }
    const double v = c_[static_cast<std::size_t>(detail::slot_of_mask<K>(mask))];
    return (inversions % 2 == 0) ? v : -v;
  }

  /// Component by slot (ascending-tuple order).
  constexpr double slot(std::size_t i) const { return c_[i]; }
  constexpr double& slot(std::size_t i) { return c_[i]; }
  constexpr const std::array<double, size>& components() const { return c_; }

  /// The basis form theta^{i1} ^ ... ^ theta^{iK} for the index set at slot i.
  static Form basis(std::size_t i) {
    Form f;
    f.c_[i] = 1.0;
    return f;
  }

  static constexpr std::uint8_t mask_of_slot(std::size_t i) { return detail::index_masks<K>()[i]; }

  Form& operator+=(const Form& o) {
    for (std::size_t i = 0; i < size; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Form& operator-=(const Form& o) {
    for (std::size_t i = 0; i < size; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Form& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= -1.0; }
  friend Form operator*(double s, Form a) { return a *= s; }
  friend Form operator*(Form a, double s) { return a *= s; }

  /// Euclidean norm of the independent components (a diagnostic scale).
  double component_norm() const {
    double s = 0.0;
    for (double v : c_) s += v * v;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::array<double, size> c_{};
};

using ZeroForm = Form<0>;
using OneForm = Form<1>;
using TwoForm = Form<2>;
using ThreeForm = Form<3>;
using FourForm = Form<4>;

template <int K>
double max_abs_difference(const Form<K>& a, const Form<K>& b) {
  return (a - b).max_abs();
}

/// Components of a one-form as an array alpha_0..alpha_3.
inline std::array<double, 4> as_array(const OneForm& a) { return a.components(); }

/// alpha(v) = alpha_mu v^mu.
double apply(const OneForm& alpha, const FourVector& v);

/// v^flat, components v_mu = eta_{mu nu} v^nu.
OneForm lower(const FourVector& v);
/// alpha^sharp, the inverse of lower.
FourVector raise(const OneForm& alpha);

/// Antisymmetric 4x4 array J_{mu nu} of a two-form.
Mat4 to_matrix(const TwoForm& f);
/// Builds a two-form from an antisymmetric array; throws std::invalid_argument
/// if |a_{mu nu} + a_{nu mu}| exceeds tol * max|a|.
TwoForm two_form_from_matrix(const Mat4& a, double tol = 1e-12);
/// Two-form with the single independent entry J_{mu nu} = value (mu != nu).
TwoForm two_form(int mu, int nu, double value);

/// eta(alpha, beta) on K-forms: (1/K!) alpha_{I} beta^{I}.
template <int K>
double form_inner(const Form<K>& a, const Form<K>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < Form<K>::size; ++i)
    s += detail::metric_sign(Form<K>::mask_of_slot(i)) * a.slot(i) * b.slot(i);
  return s;
}

/// Exterior product, normalised so that (theta^0 ^ theta^1)_{01} = 1. A
/// result of degree above four is the (componentless) zero form.
template <int P, int Q>
Form<P + Q> wedge(const Form<P>& a, const Form<Q>& b) {
  Form<P + Q> out;
  if constexpr (Form<P + Q>::size > 0) {
    for (std::size_t i = 0; i < Form<P>::size; ++i) {
      const auto mi = Form<P>::mask_of_slot(i);
      for (std::size_t j = 0; j < Form<Q>::size; ++j) {
        const auto mj = Form<Q>::mask_of_slot(j);
        if (mi & mj) continue;
        const int k = detail::slot_of_mask<P + Q>(static_cast<std::uint8_t>(mi | mj));
        out.slot(static_cast<std::size_t>(k)) += detail::shuffle_sign(mi, mj) * a.slot(i) * b.slot(j);
      }
    }
  }
  return out;
}

/// Interior product: contraction of v into the first slot.
template <int K>
  requires(K >= 1)
Form<K - 1> interior(const FourVector& v, const Form<K>& a) {
  Form<K - 1> out;
  if constexpr (K <= 4) {
    for (std::size_t i = 0; i < Form<K>::size; ++i) {
      const auto mask = Form<K>::mask_of_slot(i);
      for (int j = 0; j < 4; ++j) {
        if (!(mask & (1u << j))) continue;
        const auto rest = static_cast<std::uint8_t>(mask & ~(1u << j));
        // alpha_{j rest} = (-1)^{#(rest below j)} alpha_{sorted}
        const int below = std::popcount(static_cast<unsigned>(rest & ((1u << j) - 1u)));
        const double sign = (below % 2 == 0) ? 1.0 : -1.0;
        const int k = detail::slot_of_mask<K - 1>(rest);
        out.slot(static_cast<std::size_t>(k)) += sign * v[j] * a.slot(i);
      }
    }
  }
  return out;
}

/// Hodge dual, fixed by alpha ^ *beta = eta(alpha, beta) epsilon.
template <int K>
  requires(K >= 0 && K <= 4)
Form<4 - K> hodge(const Form<K>& b) {
  Form<4 - K> out;
  for (std::size_t j = 0; j < Form<4 - K>::size; ++j) {
    const auto mj = Form<4 - K>::mask_of_slot(j);
    const auto mi = static_cast<std::uint8_t>(0xF & ~mj);
    const int i = detail::slot_of_mask<K>(mi);
    out.slot(j) = detail::shuffle_sign(mi, mj) * detail::metric_sign(mi) * b.slot(static_cast<std::size_t>(i));
  }
  return out;
}

/// The volume form epsilon, epsilon_{0123} = +1.
FourForm volume_form();

/// Totally antisymmetric symbol with epsilon_{0123} = +1 (indices 0..3).
double levi_civita(int mu, int nu, int rho, int sigma);

/// Three-dimensional antisymmetric symbol on spatial indices 0..2
/// (representing e_1..e_3), epsilon_{012} = +1.
double levi_civita3(int a, int b, int c);

/// The spatial volume form iota_u epsilon of the frame u.
ThreeForm spatial_volume_form(const FourVector& u);

Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

}  // namespace relloc

#endif  // RELLOC_MINKOWSKI_HPP
