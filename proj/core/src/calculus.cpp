#include "grayform/calculus.hpp"

namespace grayform {

template <class T>
Tensor<T> levi_civita(const LieAlgebra4<T>& alg) {
  Tensor<T> g(3);
  T half = sfrac<T>(1, 2);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        g(i, j, k) = half * (alg.c(i, j, k) - alg.c(j, k, i) + alg.c(k, i, j));
  return g;
}

template <class T>
T metric_defect(const Tensor<T>& gamma) {
  T d(0);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int l = 0; l < kDim; ++l) {
        T x = gamma(a, b, l) + gamma(a, l, b);
        d += x * x;
      }
  return d;
}

template <class T>
T torsion_defect(const LieAlgebra4<T>& alg, const Tensor<T>& gamma) {
  T d(0);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int l = 0; l < kDim; ++l) {
        T x = gamma(a, b, l) - gamma(b, a, l) - alg.c(a, b, l);
        d += x * x;
      }
  return d;
}

template <class T>
Tensor<T> covariant_derivative(const Tensor<T>& gamma, const Tensor<T>& t) {
  const int r = t.rank();
  Tensor<T> out(r + 1);
  const std::size_t n = t.size();
  std::vector<std::size_t> pw(r);
  for (int m = 0; m < r; ++m) pw[m] = std::size_t(1) << (2 * (r - 1 - m));
  for (int a = 0; a < kDim; ++a)
    for (std::size_t lin = 0; lin < n; ++lin) {
      T s(0);
      for (int m = 0; m < r; ++m) {
        int jm = static_cast<int>((lin / pw[m]) % 4);
        std::size_t base = lin - jm * pw[m];
        for (int l = 0; l < kDim; ++l) {
          const T& g = gamma(a, jm, l);
          if (is_zero(g)) continue;
          s -= g * t[base + l * pw[m]];
        }
      }
      out[a * n + lin] = s;
    }
  return out;
}

template <class T>
CurvTensor<T> riemann(const LieAlgebra4<T>& alg, const Tensor<T>& G) {
  CurvTensor<T> R;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c)
        for (int m = 0; m < kDim; ++m) {
          T s(0);
          for (int l = 0; l < kDim; ++l)
            s += G(b, c, l) * G(a, l, m) - G(a, c, l) * G(b, l, m) - alg.c(a, b, l) * G(l, c, m);
          // s = <R(e_a, e_b) e_c, e_m>; stored as R_{a b m c}
          R(a, b, m, c) = s;
        }
  return R;
}

namespace {

std::vector<int> indices_of(int mask) {
  std::vector<int> v;
  for (int i = 0; i < kDim; ++i)
    if ((mask >> i) & 1) v.push_back(i);
  return v;
}

}  // namespace

template <class T>
KForm<T> ext_d(const LieAlgebra4<T>& alg, const KForm<T>& a) {
  const int k = a.degree();
  if (k >= kDim) throw Error(ErrorKind::InvalidInput, "d of a top-degree form");
  KForm<T> r(k + 1);
  if (k == 0) return r;
  for (std::size_t s = 0; s < r.size(); ++s) {
    std::vector<int> x = indices_of(r.mask(s));
    T sum(0);
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        std::vector<int> rest;
        for (int m = 0; m <= k; ++m)
          if (m != i && m != j) rest.push_back(x[m]);
        T term(0);
        for (int l = 0; l < kDim; ++l) {
          const T& cl = alg.c(x[i], x[j], l);
          if (is_zero(cl)) continue;
          std::vector<int> args{l};
          args.insert(args.end(), rest.begin(), rest.end());
          term += cl * a.eval(std::span<const int>(args));
        }
        if ((i + j) % 2)
          sum -= term;
        else
          sum += term;
      }
    r[s] = sum;
  }
  return r;
}

template <class T>
KForm<T> ext_d_nabla(const Tensor<T>& gamma, const KForm<T>& a) {
  const int k = a.degree();
  if (k >= kDim) throw Error(ErrorKind::InvalidInput, "d of a top-degree form");
  KForm<T> r(k + 1);
  if (k == 0) return r;
  Tensor<T> na = covariant_derivative(gamma, to_tensor(a));
  for (std::size_t s = 0; s < r.size(); ++s) {
    std::vector<int> x = indices_of(r.mask(s));
    T sum(0);
    for (int i = 0; i <= k; ++i) {
      std::size_t lin = x[i];
      for (int m = 0; m <= k; ++m)
        if (m != i) lin = 4 * lin + x[m];
      if (i % 2)
        sum -= na[lin];
      else
        sum += na[lin];
    }
    r[s] = sum;
  }
  return r;
}

template <class T>
KForm<T> codiff(const LieAlgebra4<T>& alg, const KForm<T>& a) {
  if (a.degree() == 0) throw Error(ErrorKind::InvalidInput, "codifferential of a function");
  Orientation o = Orientation::positive();
  return -hodge(ext_d(alg, hodge(a, o)), o);
}

template <class T>
KForm<T> codiff_nabla(const Tensor<T>& gamma, const KForm<T>& a) {
  if (a.degree() == 0) throw Error(ErrorKind::InvalidInput, "codifferential of a function");
  Tensor<T> na = covariant_derivative(gamma, to_tensor(a));
  KForm<T> r(a.degree() - 1);
  for (int i = 0; i < kDim; ++i) r -= interior(unit_vec<T>(i), slice_form(na, i));
  return r;
}

template <class T>
KForm<T> divergence(const Tensor<T>& gamma, const Mat4<T>& b) {
  Tensor<T> nb = covariant_derivative(gamma, mat_to_tensor(b));
  KForm<T> r(1);
  for (int x = 0; x < kDim; ++x) {
    T s(0);
    for (int i = 0; i < kDim; ++i) s -= nb(i, i, x);
    r[x] = s;
  }
  return r;
}

#define GRAYFORM_INSTANTIATE(T)                                                  \
  template Tensor<T> levi_civita(const LieAlgebra4<T>&);                         \
  template T metric_defect(const Tensor<T>&);                                    \
  template T torsion_defect(const LieAlgebra4<T>&, const Tensor<T>&);            \
  template Tensor<T> covariant_derivative(const Tensor<T>&, const Tensor<T>&);   \
  template CurvTensor<T> riemann(const LieAlgebra4<T>&, const Tensor<T>&);       \
  template KForm<T> ext_d(const LieAlgebra4<T>&, const KForm<T>&);               \
  template KForm<T> ext_d_nabla(const Tensor<T>&, const KForm<T>&);              \
  template KForm<T> codiff(const LieAlgebra4<T>&, const KForm<T>&);              \
  template KForm<T> codiff_nabla(const Tensor<T>&, const KForm<T>&);             \
  template KForm<T> divergence(const Tensor<T>&, const Mat4<T>&);

GRAYFORM_INSTANTIATE(Rational)
GRAYFORM_INSTANTIATE(double)

}  // namespace grayform
