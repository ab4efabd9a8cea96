#pragma once

// Exterior and tensor algebra over an oriented 4-dimensional Euclidean space.
// Frame indices are 0-based in code (e_1 is index 0).

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "grayform/scalar.hpp"

namespace grayform {

inline constexpr int kDim = 4;

template <class T>
using Vec4 = std::array<T, 4>;

template <class T>
Vec4<T> zero_vec() {
  return {T(0), T(0), T(0), T(0)};
}

template <class T>
Vec4<T> unit_vec(int i) {
  Vec4<T> v = zero_vec<T>();
  v[i] = T(1);
  return v;
}

template <class T>
T dot(const Vec4<T>& a, const Vec4<T>& b) {
  T s(0);
  for (int i = 0; i < kDim; ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vec4<T> operator+(const Vec4<T>& a, const Vec4<T>& b) {
  Vec4<T> r;
  for (int i = 0; i < kDim; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T>
Vec4<T> operator-(const Vec4<T>& a, const Vec4<T>& b) {
  Vec4<T> r;
  for (int i = 0; i < kDim; ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T>
Vec4<T> operator*(const T& s, const Vec4<T>& a) {
  Vec4<T> r;
  for (int i = 0; i < kDim; ++i) r[i] = s * a[i];
  return r;
}

/// Dense 4x4 matrix, row-major. As a linear map, column j is the image of e_j.
template <class T>
struct Mat4 {
  std::array<T, 16> m{};

  static Mat4 zero() {
    Mat4 r;
    r.m.fill(T(0));
    return r;
  }
  static Mat4 identity() {
    Mat4 r = zero();
    for (int i = 0; i < kDim; ++i) r(i, i) = T(1);
    return r;
  }

  T& operator()(int i, int j) { return m[4 * i + j]; }
  const T& operator()(int i, int j) const { return m[4 * i + j]; }

  Vec4<T> apply(const Vec4<T>& v) const {
    Vec4<T> r;
    for (int i = 0; i < kDim; ++i) {
      T s(0);
      for (int j = 0; j < kDim; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
  Mat4 transpose() const {
    Mat4 r;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r = zero();
    for (int i = 0; i < kDim; ++i)
      for (int k = 0; k < kDim; ++k)
        for (int j = 0; j < kDim; ++j) r(i, j) += a(i, k) * b(k, j);
    return r;
  }
  friend Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
  }
  friend Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
  }
  friend Mat4 operator*(const T& s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
    return r;
  }
  friend bool operator==(const Mat4& a, const Mat4& b) { return a.m == b.m; }
};

template <class T>
T frobenius2(const Mat4<T>& a) {
  T s(0);
  for (const T& x : a.m) s += x * x;
  return s;
}

/// Inverse via Gauss-Jordan; throws InvalidInput when singular.
template <class T>
Mat4<T> inverse(const Mat4<T>& a, Tol tol = {}) {
  Mat4<T> l = a, r = Mat4<T>::identity();
  for (int col = 0; col < kDim; ++col) {
    int piv = -1;
    double best = -1.0;
    for (int row = col; row < kDim; ++row) {
      double mag = std::fabs(to_double(l(row, col)));
      if (!is_zero(l(row, col), tol) && mag > best) {
        best = mag;
        piv = row;
      }
    }
    if (piv < 0) throw Error(ErrorKind::InvalidInput, "singular matrix");
    for (int j = 0; j < kDim; ++j) {
      std::swap(l(col, j), l(piv, j));
      std::swap(r(col, j), r(piv, j));
    }
    T inv = T(1) / l(col, col);
    for (int j = 0; j < kDim; ++j) {
      l(col, j) *= inv;
      r(col, j) *= inv;
    }
    for (int row = 0; row < kDim; ++row) {
      if (row == col || is_zero(l(row, col))) continue;
      T f = l(row, col);
      for (int j = 0; j < kDim; ++j) {
        l(row, j) -= f * l(col, j);
        r(row, j) -= f * r(col, j);
      }
    }
  }
  return r;
}

/// Sign (+1 or -1) relative to the reference volume form e^1 ^ e^2 ^ e^3 ^ e^4.
struct Orientation {
  int sign = 1;
  static Orientation positive() { return {1}; }
  static Orientation negative() { return {-1}; }
  friend bool operator==(Orientation, Orientation) = default;
};

namespace detail {

// Increasing index tuples of {0,1,2,3}, grouped by degree, as bitmasks.
struct FormIndex {
  std::array<std::array<std::uint8_t, 6>, 5> masks{};
  std::array<int, 5> count{};
  std::array<int, 16> slot_of_mask{};

  constexpr FormIndex() {
    for (auto& c : count) c = 0;
    for (int mask = 0; mask < 16; ++mask) {
      int deg = __builtin_popcount(mask);
      slot_of_mask[mask] = count[deg];
      masks[deg][count[deg]++] = static_cast<std::uint8_t>(mask);
    }
    // Within a degree, masks appear in increasing numeric order; reorder to
    // lexicographic order of the index tuples.
    for (int deg = 0; deg <= 4; ++deg) {
      for (int a = 0; a < count[deg]; ++a)
        for (int b = a + 1; b < count[deg]; ++b)
          if (lex_less(masks[deg][b], masks[deg][a])) {
            auto t = masks[deg][a];
            masks[deg][a] = masks[deg][b];
            masks[deg][b] = t;
          }
      for (int a = 0; a < count[deg]; ++a) slot_of_mask[masks[deg][a]] = a;
    }
  }

  static constexpr bool lex_less(int x, int y) {
    for (int i = 0; i < 4; ++i) {
      bool bx = (x >> i) & 1, by = (y >> i) & 1;
      if (bx != by) return bx;
    }
    return false;
  }
};

inline constexpr FormIndex kFormIndex{};

/// Sign of the shuffle taking (A, B) into increasing order, for disjoint masks.
constexpr int shuffle_sign(int a, int b) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    if ((a >> i) & 1)
      for (int j = 0; j < i; ++j)
        if ((b >> j) & 1) ++inversions;
  return (inversions % 2) ? -1 : 1;
}

}  // namespace detail

/// Exterior k-form with coefficients on increasing index tuples.
/// 2-form slots are ordered {12, 13, 14, 23, 24, 34}.
template <class T>
class KForm {
 public:
  KForm() : degree_(0), c_(1, T(0)) {}
  explicit KForm(int degree) : degree_(check(degree)), c_(count(degree), T(0)) {}

  static int count(int degree) { return detail::kFormIndex.count[degree]; }

  /// Monomial e^{i1} ^ ... ^ e^{ik} (0-based, any order; sign applied).
  static KForm monomial(std::initializer_list<int> idx, T coeff = T(1)) {
    KForm f(static_cast<int>(idx.size()));
    std::vector<int> v(idx);
    int sign = sort_sign(v);
    if (sign == 0) return f;
    f.at_mask(mask_of(v)) = sign > 0 ? coeff : T(-coeff);
    return f;
  }

  static KForm scalar(T value) {
    KForm f(0);
    f.c_[0] = value;
    return f;
  }

  /// The 1-form with the given frame components.
  static KForm one_form(const Vec4<T>& v) {
    KForm f(1);
    for (int i = 0; i < kDim; ++i) f.c_[i] = v[i];
    return f;
  }

  int degree() const { return degree_; }
  std::size_t size() const { return c_.size(); }
  T& operator[](std::size_t slot) { return c_[slot]; }
  const T& operator[](std::size_t slot) const { return c_[slot]; }
  int mask(std::size_t slot) const { return detail::kFormIndex.masks[degree_][slot]; }

  T& at_mask(int mask) { return c_[detail::kFormIndex.slot_of_mask[mask]]; }
  const T& at_mask(int mask) const { return c_[detail::kFormIndex.slot_of_mask[mask]]; }

  /// Value on frame vectors e_{i1},...,e_{ik} (antisymmetric evaluation).
  T eval(std::span<const int> idx) const {
    std::vector<int> v(idx.begin(), idx.end());
    int sign = sort_sign(v);
    if (sign == 0) return T(0);
    const T& x = at_mask(mask_of(v));
    return sign > 0 ? x : T(-x);
  }
  T eval(std::initializer_list<int> idx) const {
    return eval(std::span<const int>(idx.begin(), idx.size()));
  }
  T operator()(int i, int j) const { return eval({i, j}); }

  /// Components of a 1-form as a vector (orthonormal frame: sharp is trivial).
  Vec4<T> vec() const {
    Vec4<T> v;
    for (int i = 0; i < kDim; ++i) v[i] = c_[i];
    return v;
  }

  KForm& operator+=(const KForm& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  KForm& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend KForm operator*(const T& s, KForm a) { return a *= s; }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }

  bool is_zero(Tol tol = {}) const {
    for (const auto& x : c_)
      if (!grayform::is_zero(x, tol)) return false;
    return true;
  }

  static int sort_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
        if (v[j] == v[j + 1]) return 0;
        if (v[j] > v[j + 1]) {
          std::swap(v[j], v[j + 1]);
          sign = -sign;
        }
      }
    for (std::size_t j = 0; j + 1 < v.size(); ++j)
      if (v[j] == v[j + 1]) return 0;
    return sign;
  }
  static int mask_of(const std::vector<int>& v) {
    int m = 0;
    for (int i : v) m |= 1 << i;
    return m;
  }

 private:
  static int check(int degree) {
    if (degree < 0 || degree > 4)
      throw Error(ErrorKind::InvalidInput, "form degree out of range");
    return degree;
  }

  int degree_;
  std::vector<T> c_;
};

template <class T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b) {
  if (a.degree() + b.degree() > kDim)
    throw Error(ErrorKind::InvalidInput, "wedge degree overflow");
  KForm<T> r(a.degree() + b.degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    int ma = a.mask(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      int mb = b.mask(j);
      if (ma & mb) continue;
      int sign = detail::shuffle_sign(ma, mb);
      T prod = a[i] * b[j];
      if (sign > 0)
        r.at_mask(ma | mb) += prod;
      else
        r.at_mask(ma | mb) -= prod;
    }
  }
  return r;
}

template <class T>
KForm<T> hodge(const KForm<T>& a, Orientation orient) {
  KForm<T> r(kDim - a.degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int m = a.mask(i);
    int mc = 15 & ~m;
    int sign = detail::shuffle_sign(m, mc) * orient.sign;
    r.at_mask(mc) = sign > 0 ? a[i] : T(-a[i]);
  }
  return r;
}

/// Contraction in the first slot.
template <class T>
KForm<T> interior(const Vec4<T>& v, const KForm<T>& a) {
  if (a.degree() < 1)
    throw Error(ErrorKind::InvalidInput, "interior product of a 0-form");
  KForm<T> r(a.degree() - 1);
  for (std::size_t s = 0; s < a.size(); ++s) {
    int m = a.mask(s);
    int pos = 0;
    for (int i = 0; i < kDim; ++i) {
      if (!((m >> i) & 1)) continue;
      T term = v[i] * a[s];
      if (pos % 2)
        r.at_mask(m & ~(1 << i)) -= term;
      else
        r.at_mask(m & ~(1 << i)) += term;
      ++pos;
    }
  }
  return r;
}

/// Inner product in which increasing monomials are orthonormal.
template <class T>
T form_inner(const KForm<T>& a, const KForm<T>& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorKind::InvalidInput, "inner product of forms of different degree");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T norm2(const KForm<T>& a) {
  return form_inner(a, a);
}

template <class T>
struct SdSplit {
  KForm<T> plus;
  KForm<T> minus;
};

template <class T>
SdSplit<T> sd_split(const KForm<T>& psi, Orientation orient) {
  if (psi.degree() != 2) throw Error(ErrorKind::InvalidInput, "sd_split needs a 2-form");
  KForm<T> star = hodge(psi, orient);
  T half = sfrac<T>(1, 2);
  return {half * (psi + star), half * (psi - star)};
}

template <class T>
KForm<T> volume_form(Orientation orient = Orientation::positive()) {
  return KForm<T>::monomial({0, 1, 2, 3}, T(orient.sign));
}

/// Top-degree coefficient relative to e^1^e^2^e^3^e^4.
template <class T>
T top_coefficient(const KForm<T>& a) {
  if (a.degree() != 4) throw Error(ErrorKind::InvalidInput, "not a 4-form");
  return a[0];
}

template <class T>
KForm<T> wedge(const Vec4<T>& a, const Vec4<T>& b) {
  return wedge(KForm<T>::one_form(a), KForm<T>::one_form(b));
}

/// Dense covariant tensor of rank r over the frame, 4^r entries, first index slowest.
template <class T>
class Tensor {
 public:
  Tensor() : rank_(0), v_(1, T(0)) {}
  explicit Tensor(int rank) : rank_(rank), v_(std::size_t(1) << (2 * rank), T(0)) {}

  int rank() const { return rank_; }
  std::size_t size() const { return v_.size(); }
  T& operator[](std::size_t i) { return v_[i]; }
  const T& operator[](std::size_t i) const { return v_[i]; }

  template <class... I>
  T& operator()(I... idx) {
    return v_[linear(idx...)];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return v_[linear(idx...)];
  }

  Tensor& operator+=(const Tensor& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Tensor& operator*=(const T& s) {
    for (auto& x : v_) x *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const T& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.rank_ == b.rank_ && a.v_ == b.v_;
  }

  /// Squared Frobenius norm: sum over all index tuples.
  T norm2() const {
    T s(0);
    for (const auto& x : v_) s += x * x;
    return s;
  }
  bool is_zero(Tol tol = {}) const {
    for (const auto& x : v_)
      if (!grayform::is_zero(x, tol)) return false;
    return true;
  }

 private:
  template <class... I>
  std::size_t linear(I... idx) const {
    std::size_t l = 0;
    ((l = 4 * l + static_cast<std::size_t>(idx)), ...);
    return l;
  }

  int rank_;
  std::vector<T> v_;
};

/// Full antisymmetric tensor of a form: t(i1..ik) = a(e_i1,...,e_ik).
template <class T>
Tensor<T> to_tensor(const KForm<T>& a) {
  const int k = a.degree();
  Tensor<T> t(k);
  std::vector<int> idx(k);
  for (std::size_t l = 0; l < t.size(); ++l) {
    std::size_t rem = l;
    for (int p = k - 1; p >= 0; --p) {
      idx[p] = static_cast<int>(rem % 4);
      rem /= 4;
    }
    t[l] = a.eval(std::span<const int>(idx));
  }
  return t;
}

/// Reads the increasing-tuple components of an (assumed antisymmetric) tensor.
template <class T>
KForm<T> to_form(const Tensor<T>& t) {
  const int k = t.rank();
  KForm<T> a(k);
  for (std::size_t s = 0; s < a.size(); ++s) {
    int m = a.mask(s);
    std::size_t l = 0;
    for (int i = 0; i < kDim; ++i)
      if ((m >> i) & 1) l = 4 * l + i;
    a[s] = t[l];
  }
  return a;
}

/// Form whose value on e_I is scale * sum_sigma sgn(sigma) t(e_sigma(I)).
template <class T>
KForm<T> alternate(const Tensor<T>& t, T scale = T(1)) {
  const int k = t.rank();
  KForm<T> a(k);
  std::vector<int> base(k), perm(k);
  for (std::size_t s = 0; s < a.size(); ++s) {
    int m = a.mask(s);
    int p = 0;
    for (int i = 0; i < kDim; ++i)
      if ((m >> i) & 1) base[p++] = i;
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    T sum(0);
    do {
      std::vector<int> v(k);
      for (int i = 0; i < k; ++i) v[i] = order[i];
      int sign = KForm<T>::sort_sign(v);
      std::size_t l = 0;
      for (int i = 0; i < k; ++i) l = 4 * l + base[order[i]];
      if (sign > 0)
        sum += t[l];
      else
        sum -= t[l];
    } while (std::next_permutation(order.begin(), order.end()));
    a[s] = scale * sum;
  }
  return a;
}

/// A 2-form as the antisymmetric matrix psi(e_i, e_j).
template <class T>
Mat4<T> to_matrix(const KForm<T>& psi) {
  Mat4<T> r = Mat4<T>::zero();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r(i, j) = psi(i, j);
  return r;
}

template <class T>
KForm<T> from_matrix(const Mat4<T>& m) {
  KForm<T> psi(2);
  for (std::size_t s = 0; s < psi.size(); ++s) {
    int mk = psi.mask(s);
    int i = __builtin_ctz(mk);
    int j = 31 - __builtin_clz(mk);
    psi[s] = m(i, j);
  }
  return psi;
}

/// The 1-form psi(X, .) as a vector.
template <class T>
Vec4<T> contract_first(const KForm<T>& psi, const Vec4<T>& x) {
  return interior(x, psi).vec();
}

}  // namespace grayform
