#pragma once

// A left-invariant almost Hermitian structure on a metric Lie algebra with all
// derived data computed once at construction.

#include <optional>

#include "grayform/algebra.hpp"
#include "grayform/calculus.hpp"
#include "grayform/curvature.hpp"

namespace grayform {

template <class T>
class Structure {
 public:
  /// Validates the algebra. Without an explicit gauge, default_gauge(J) is used.
  Structure(LieAlgebra4<T> alg, AcsJ<T> J, std::optional<Gauge<T>> gauge = std::nullopt,
            Tol tol = {});

  const LieAlgebra4<T>& alg() const { return alg_; }
  const AcsJ<T>& J() const { return J_; }
  const Gauge<T>& gauge() const { return gauge_; }
  Tol tol() const { return tol_; }
  bool unimodular() const { return unimodular_; }
  Orientation orient() const { return orient_; }

  const Tensor<T>& gamma() const { return gamma_; }
  const CurvTensor<T>& R() const { return R_; }
  const CurvOperator<T>& op() const { return op_; }
  const RicciData<T>& ricci() const { return ricci_; }
  const U2Curv<T>& u2() const { return u2_; }

  const KForm<T>& omega() const { return omega_; }
  /// X -> nabla_X omega.
  const TwoFormField<T>& nabla_omega() const { return nabla_omega_; }
  const KForm<T>& d_omega() const { return d_omega_; }
  const KForm<T>& delta_omega() const { return delta_omega_; }
  /// Lee form J delta omega.
  const KForm<T>& theta() const { return theta_; }
  const KForm<T>& j_theta() const { return j_theta_; }
  /// X -> N_X from the bracket formula.
  const TwoFormField<T>& nijenhuis() const { return nij_; }
  /// Sum over the frame of |N_X|^2.
  const T& nijenhuis_norm2() const { return nij_norm2_; }
  /// (nabla theta)(A, B) = (nabla_A theta)(B).
  const Mat4<T>& nabla_theta() const { return nabla_theta_; }
  const T& delta_theta() const { return delta_theta_; }

  /// Vector N(A, B) with <N(A,B), X> = N_X(A, B).
  Vec4<T> nijenhuis_vector(const Vec4<T>& a, const Vec4<T>& b) const;
  /// N_X for a general vector X.
  KForm<T> nijenhuis_at(const Vec4<T>& x) const { return at(nij_, x); }

  // Calculus shortcuts.
  KForm<T> d(const KForm<T>& a) const { return ext_d(alg_, a); }
  KForm<T> delta(const KForm<T>& a) const { return codiff(alg_, a); }
  Tensor<T> nabla(const Tensor<T>& t) const { return covariant_derivative(gamma_, t); }
  /// X -> nabla_X psi for an invariant 2-form.
  TwoFormField<T> nabla_form(const KForm<T>& psi) const { return slices(nabla(to_tensor(psi))); }
  KForm<T> star(const KForm<T>& a) const { return hodge(a, orient_); }
  KForm<T> J1(const KForm<T>& alpha) const { return j_one_form(J_, alpha); }
  KForm<T> J2(const KForm<T>& psi) const { return j_two_form(J_, psi); }
  Vec4<T> Jv(const Vec4<T>& v) const { return J_.apply(v); }

  /// Converts the structure to another scalar backend (the gauge is carried along).
  template <class U>
  Structure<U> convert(Tol tol = {}) const {
    Mat4<U> m;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) m(i, j) = scalar_cast<U>(J_.matrix()(i, j));
    Gauge<U> g{convert_form<U>(gauge_.phi), convert_form<U>(gauge_.jphi)};
    LieAlgebra4<U> a = alg_.template convert<U>();
    a.name = alg_.name;
    return Structure<U>(a, AcsJ<U>(m, tol), g, tol);
  }

 private:
  template <class U>
  static KForm<U> convert_form(const KForm<T>& f) {
    KForm<U> r(f.degree());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = scalar_cast<U>(f[i]);
    return r;
  }

  LieAlgebra4<T> alg_;
  AcsJ<T> J_;
  Gauge<T> gauge_;
  Tol tol_;
  bool unimodular_ = true;
  Orientation orient_;

  Tensor<T> gamma_;
  CurvTensor<T> R_;
  CurvOperator<T> op_;
  RicciData<T> ricci_;
  U2Curv<T> u2_;

  KForm<T> omega_;
  TwoFormField<T> nabla_omega_;
  KForm<T> d_omega_;
  KForm<T> delta_omega_;
  KForm<T> theta_;
  KForm<T> j_theta_;
  TwoFormField<T> nij_;
  T nij_norm2_;
  Mat4<T> nabla_theta_;
  T delta_theta_;
};

/// Nijenhuis form from the bracket: N_X(A,B) = <[JA,JB] - [A,B] - J[JA,B] - J[A,JB], X>.
template <class T>
TwoFormField<T> nijenhuis_bracket(const LieAlgebra4<T>& alg, const AcsJ<T>& J);

/// N_X = J(nabla_X omega) - nabla_{JX} omega.
template <class T>
TwoFormField<T> nijenhuis_from_nabla_omega(const Structure<T>& st);

/// Sum over the frame of squared form norms of a 2-form valued 1-form.
template <class T>
T field_norm2(const TwoFormField<T>& f) {
  T s(0);
  for (const auto& x : f) s += norm2(x);
  return s;
}

template <class T>
TwoFormField<T> field_minus(const TwoFormField<T>& a, const TwoFormField<T>& b) {
  TwoFormField<T> r;
  for (int i = 0; i < kDim; ++i) r[i] = a[i] - b[i];
  return r;
}

/// Matrix of a 2-tensor applied to a vector in its first slot: b(x, .).
template <class T>
KForm<T> tensor_slot(const Mat4<T>& b, const Vec4<T>& x) {
  KForm<T> r(1);
  for (int j = 0; j < kDim; ++j) {
    T s(0);
    for (int i = 0; i < kDim; ++i) s += x[i] * b(i, j);
    r[j] = s;
  }
  return r;
}

/// u (x) v as a matrix.
template <class T>
Mat4<T> tensor_product(const KForm<T>& u, const KForm<T>& v) {
  Mat4<T> m;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m(i, j) = u[i] * v[j];
  return m;
}

/// Trace-free part of a symmetric 2-tensor.
template <class T>
Mat4<T> trace_free(const Mat4<T>& b) {
  T tr(0);
  for (int i = 0; i < kDim; ++i) tr += b(i, i);
  Mat4<T> r = b;
  T q = tr / T(kDim);
  for (int i = 0; i < kDim; ++i) r(i, i) -= q;
  return r;
}

template <class T>
Mat4<T> symmetric_part(const Mat4<T>& b) {
  Mat4<T> r;
  T half = sfrac<T>(1, 2);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r(i, j) = half * (b(i, j) + b(j, i));
  return r;
}

}  // namespace grayform
