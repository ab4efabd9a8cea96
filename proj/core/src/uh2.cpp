#include "grayform/uh2.hpp"

#include <cmath>

namespace grayform {

template <class T>
AcsJ<T>::AcsJ(const Mat4<T>& m, Tol tol) : m_(m) {
  Mat4<T> sq = m * m + Mat4<T>::identity();
  Mat4<T> orth = m.transpose() * m - Mat4<T>::identity();
  for (int i = 0; i < 16; ++i)
    if (!is_zero(sq.m[i], tol) || !is_zero(orth.m[i], tol))
      throw Error(ErrorKind::InvalidInput, "J must satisfy J^2 = -Id and J^T J = Id");
}

template <class T>
AcsJ<T> AcsJ<T>::from_pairs(int a, int b, int c, int d, int sign) {
  Mat4<T> m = Mat4<T>::zero();
  m(b, a) = T(1);
  m(a, b) = T(-1);
  m(d, c) = T(sign);
  m(c, d) = T(-sign);
  return AcsJ(m);
}

template <class T>
AcsJ<T> AcsJ<T>::negated() const {
  AcsJ r = *this;
  for (auto& x : r.m_.m) x = -x;
  return r;
}

template <class T>
KForm<T> fundamental_form(const AcsJ<T>& J) {
  // omega_ij = <J e_i, e_j> = m(j, i)
  KForm<T> w(2);
  for (std::size_t s = 0; s < w.size(); ++s) {
    int mk = w.mask(s);
    int i = __builtin_ctz(mk);
    int j = 31 - __builtin_clz(mk);
    w[s] = J.matrix()(j, i);
  }
  return w;
}

template <class T>
KForm<T> j_one_form(const AcsJ<T>& J, const KForm<T>& alpha) {
  if (alpha.degree() != 1) throw Error(ErrorKind::InvalidInput, "j_one_form needs a 1-form");
  KForm<T> r(1);
  for (int j = 0; j < kDim; ++j) {
    T s(0);
    for (int i = 0; i < kDim; ++i) s -= alpha[i] * J.matrix()(i, j);
    r[j] = s;
  }
  return r;
}

template <class T>
KForm<T> j_conjugate(const AcsJ<T>& J, const KForm<T>& psi) {
  const Mat4<T>& m = J.matrix();
  return from_matrix(m.transpose() * to_matrix(psi) * m);
}

template <class T>
KForm<T> j_two_form(const AcsJ<T>& J, const KForm<T>& psi) {
  // (J psi)(e_a, e_b) = -psi(J e_a, e_b) = -sum_i m(i, a) psi(i, b)
  const Mat4<T>& m = J.matrix();
  Mat4<T> p = to_matrix(psi);
  Mat4<T> r = m.transpose() * p;
  Mat4<T> out = Mat4<T>::zero();
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) out(a, b) = -r(a, b);
  return from_matrix(out);
}

template <class T>
KForm<T> invariant_part(const AcsJ<T>& J, const KForm<T>& psi) {
  return sfrac<T>(1, 2) * (psi + j_conjugate(J, psi));
}

template <class T>
KForm<T> anti_part(const AcsJ<T>& J, const KForm<T>& psi) {
  return sfrac<T>(1, 2) * (psi - j_conjugate(J, psi));
}

template <class T>
Orientation j_orientation(const AcsJ<T>& J) {
  KForm<T> w = fundamental_form(J);
  T top = top_coefficient(wedge(w, w));
  return to_double(top) > 0 ? Orientation::positive() : Orientation::negative();
}

template <class T>
U2SplitOf2Form<T> split_two_form(const KForm<T>& psi, const AcsJ<T>& J) {
  KForm<T> w = fundamental_form(J);
  T tr = form_inner(psi, w);
  KForm<T> inv = invariant_part(J, psi);
  KForm<T> inv0 = inv - (tr / T(2)) * w;
  return {tr, inv0, anti_part(J, psi)};
}

template <class T>
KForm<T> push_forward(const Mat4<T>& o, const KForm<T>& psi) {
  return from_matrix(o * to_matrix(psi) * o.transpose());
}

template <class T>
Gauge<T> make_gauge(const AcsJ<T>& J, const KForm<T>& seed, Tol tol) {
  KForm<T> anti = anti_part(J, seed);
  T n2 = norm2(anti);
  if (is_zero(n2, tol))
    throw Error(ErrorKind::GaugeDegenerate, "seed has no [[Lambda^{0,2}]] component");
  auto scale = ScalarOps<T>::sqrt(T(2) / n2);
  if (!scale)
    throw Error(ErrorKind::GaugeIrrational, "gauge normalization is not rational");
  KForm<T> phi = *scale * anti;
  return {phi, j_two_form(J, phi)};
}

template <class T>
Gauge<T> default_gauge(const AcsJ<T>& J, Tol tol) {
  std::vector<KForm<T>> seeds = {KForm<T>::monomial({0, 2}), KForm<T>::monomial({0, 1}),
                                 KForm<T>::monomial({0, 3})};
  if constexpr (ScalarOps<T>::exact) {
    for (auto idx : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
      seeds.push_back(KForm<T>::monomial({idx.first, idx.second}));
    // Sums of two monomials reach further rational points of the gauge circle.
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b) {
        KForm<T> s(2);
        s[a] = T(1);
        s[b] = T(1);
        seeds.push_back(s);
        s[b] = T(-1);
        seeds.push_back(s);
      }
  }
  bool irrational = false;
  for (const auto& seed : seeds) {
    KForm<T> anti = anti_part(J, seed);
    T n2 = norm2(anti);
    if constexpr (ScalarOps<T>::exact) {
      if (is_zero(n2)) continue;
    } else {
      if (n2 <= 0.25) continue;
    }
    try {
      return make_gauge(J, seed, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GaugeIrrational) throw;
      irrational = true;
    }
  }
  if (irrational)
    throw Error(ErrorKind::GaugeIrrational, "no rational gauge among the default seeds");
  throw Error(ErrorKind::GaugeDegenerate, "no usable gauge seed");
}

template <class T>
T gauge_defect(const AcsJ<T>& J, const Gauge<T>& g) {
  KForm<T> w = fundamental_form(J);
  T d(0);
  T a = norm2(g.phi) - T(2);
  T b = norm2(g.jphi) - T(2);
  T c = form_inner(g.phi, g.jphi);
  T e = form_inner(g.phi, w);
  d += a * a + b * b + c * c + e * e;
  d += norm2(g.jphi - j_two_form(J, g.phi));
  d += norm2(invariant_part(J, g.phi));
  return d;
}

#define GRAYFORM_INSTANTIATE(T)                                                  \
  template class AcsJ<T>;                                                        \
  template KForm<T> fundamental_form(const AcsJ<T>&);                            \
  template KForm<T> j_one_form(const AcsJ<T>&, const KForm<T>&);                 \
  template KForm<T> j_conjugate(const AcsJ<T>&, const KForm<T>&);                \
  template KForm<T> j_two_form(const AcsJ<T>&, const KForm<T>&);                 \
  template KForm<T> invariant_part(const AcsJ<T>&, const KForm<T>&);             \
  template KForm<T> anti_part(const AcsJ<T>&, const KForm<T>&);                  \
  template Orientation j_orientation(const AcsJ<T>&);                            \
  template U2SplitOf2Form<T> split_two_form(const KForm<T>&, const AcsJ<T>&);    \
  template KForm<T> push_forward(const Mat4<T>&, const KForm<T>&);               \
  template Gauge<T> make_gauge(const AcsJ<T>&, const KForm<T>&, Tol);            \
  template Gauge<T> default_gauge(const AcsJ<T>&, Tol);                          \
  template T gauge_defect(const AcsJ<T>&, const Gauge<T>&);

GRAYFORM_INSTANTIATE(Rational)
GRAYFORM_INSTANTIATE(double)

}  // namespace grayform
