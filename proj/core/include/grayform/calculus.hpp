#pragma once

// Levi-Civita calculus on left-invariant tensors of a metric Lie algebra whose
// frame is orthonormal. Every invariant tensor has constant frame components,
// so derivatives reduce to algebra on the connection coefficients.

#include <array>

#include "grayform/algebra.hpp"
#include "grayform/curvature.hpp"

namespace grayform {

/// Gamma(a, b, l) = <nabla_{e_a} e_b, e_l> from the Koszul formula.
template <class T>
Tensor<T> levi_civita(const LieAlgebra4<T>& alg);

/// Sum of squares of (Gamma(a,b,l) + Gamma(a,l,b)).
template <class T>
T metric_defect(const Tensor<T>& gamma);

/// Sum of squares of (nabla_a e_b - nabla_b e_a - [e_a, e_b]).
template <class T>
T torsion_defect(const LieAlgebra4<T>& alg, const Tensor<T>& gamma);

/// (nabla t)(a, j1..jr) = (nabla_{e_a} t)(e_j1..e_jr); the derivative index comes first.
template <class T>
Tensor<T> covariant_derivative(const Tensor<T>& gamma, const Tensor<T>& t);

template <class T>
CurvTensor<T> riemann(const LieAlgebra4<T>& alg, const Tensor<T>& gamma);

/// Chevalley-Eilenberg differential of an invariant form.
template <class T>
KForm<T> ext_d(const LieAlgebra4<T>& alg, const KForm<T>& a);

/// d a(X0..Xk) = sum_i (-1)^i (nabla_{Xi} a)(X0..^Xi..Xk).
template <class T>
KForm<T> ext_d_nabla(const Tensor<T>& gamma, const KForm<T>& a);

/// delta = -*d*.
template <class T>
KForm<T> codiff(const LieAlgebra4<T>& alg, const KForm<T>& a);

/// delta a = -sum_i iota_{e_i} nabla_{e_i} a.
template <class T>
KForm<T> codiff_nabla(const Tensor<T>& gamma, const KForm<T>& a);

/// (delta b)(X) = -sum_i (nabla_{e_i} b)(e_i, X) for a 2-tensor b.
template <class T>
KForm<T> divergence(const Tensor<T>& gamma, const Mat4<T>& b);

template <class T>
Tensor<T> mat_to_tensor(const Mat4<T>& m) {
  Tensor<T> t(2);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) t(i, j) = m(i, j);
  return t;
}

template <class T>
Mat4<T> tensor_to_mat(const Tensor<T>& t) {
  Mat4<T> m;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m(i, j) = t(i, j);
  return m;
}

/// The k-form obtained by fixing the first index of a rank-(k+1) tensor.
template <class T>
KForm<T> slice_form(const Tensor<T>& t, int first) {
  const int k = t.rank() - 1;
  Tensor<T> s(k);
  std::size_t stride = s.size();
  for (std::size_t l = 0; l < stride; ++l) s[l] = t[first * stride + l];
  return to_form(s);
}

/// A 2-form valued 1-form X -> F_X, stored per frame vector.
template <class T>
using TwoFormField = std::array<KForm<T>, 4>;

template <class T>
TwoFormField<T> slices(const Tensor<T>& t) {
  TwoFormField<T> f;
  for (int a = 0; a < kDim; ++a) f[a] = slice_form(t, a);
  return f;
}

template <class T>
Tensor<T> stack(const TwoFormField<T>& f) {
  Tensor<T> t(3);
  for (int a = 0; a < kDim; ++a)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) t(a, i, j) = f[a](i, j);
  return t;
}

/// F_X for a general vector X.
template <class T>
KForm<T> at(const TwoFormField<T>& f, const Vec4<T>& x) {
  KForm<T> r(2);
  for (int a = 0; a < kDim; ++a)
    if (!is_zero(x[a])) r += x[a] * f[a];
  return r;
}

}  // namespace grayform
