#include "grayform/structure.hpp"

namespace grayform {

template <class T>
TwoFormField<T> nijenhuis_bracket(const LieAlgebra4<T>& alg, const AcsJ<T>& J) {
  TwoFormField<T> f;
  for (auto& x : f) x = KForm<T>(2);
  for (std::size_t s = 0; s < 6; ++s) {
    int mk = f[0].mask(s);
    int a = __builtin_ctz(mk);
    int b = 31 - __builtin_clz(mk);
    Vec4<T> ea = unit_vec<T>(a), eb = unit_vec<T>(b);
    Vec4<T> ja = J.apply(ea), jb = J.apply(eb);
    Vec4<T> n = alg.bracket(ja, jb) - alg.bracket(ea, eb) - J.apply(alg.bracket(ja, eb)) -
                J.apply(alg.bracket(ea, jb));
    for (int x = 0; x < kDim; ++x) f[x][s] = n[x];
  }
  return f;
}

template <class T>
Structure<T>::Structure(LieAlgebra4<T> alg, AcsJ<T> J, std::optional<Gauge<T>> gauge, Tol tol)
    : alg_(std::move(alg)), J_(std::move(J)), tol_(tol) {
  unimodular_ = validate(alg_, tol_).unimodular;
  gauge_ = gauge ? *gauge : default_gauge(J_, tol_);
  orient_ = j_orientation(J_);

  gamma_ = levi_civita(alg_);
  R_ = riemann(alg_, gamma_);
  op_ = operator_from_tensor(R_, tol_);
  ricci_ = ricci_extract(R_, J_);
  u2_ = u2_decompose(op_, J_, gauge_);

  omega_ = fundamental_form(J_);
  nabla_omega_ = nabla_form(omega_);
  d_omega_ = ext_d(alg_, omega_);
  delta_omega_ = codiff(alg_, omega_);
  theta_ = j_one_form(J_, delta_omega_);
  j_theta_ = j_one_form(J_, theta_);
  nij_ = nijenhuis_bracket(alg_, J_);
  nij_norm2_ = field_norm2(nij_);
  nabla_theta_ = tensor_to_mat(nabla(to_tensor(theta_)));
  delta_theta_ = codiff(alg_, theta_)[0];
}

template <class T>
Vec4<T> Structure<T>::nijenhuis_vector(const Vec4<T>& a, const Vec4<T>& b) const {
  Vec4<T> v;
  for (int x = 0; x < kDim; ++x) {
    T s(0);
    for (int i = 0; i < kDim; ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; j < kDim; ++j) {
        if (is_zero(b[j])) continue;
        s += a[i] * b[j] * nij_[x](i, j);
      }
    }
    v[x] = s;
  }
  return v;
}

template <class T>
TwoFormField<T> nijenhuis_from_nabla_omega(const Structure<T>& st) {
  TwoFormField<T> f;
  for (int x = 0; x < kDim; ++x) {
    Vec4<T> jx = st.Jv(unit_vec<T>(x));
    f[x] = st.J2(st.nabla_omega()[x]) - at(st.nabla_omega(), jx);
  }
  return f;
}

template class Structure<Rational>;
template class Structure<double>;
template TwoFormField<Rational> nijenhuis_bracket(const LieAlgebra4<Rational>&,
                                                  const AcsJ<Rational>&);
template TwoFormField<double> nijenhuis_bracket(const LieAlgebra4<double>&, const AcsJ<double>&);
template TwoFormField<Rational> nijenhuis_from_nabla_omega(const Structure<Rational>&);
template TwoFormField<double> nijenhuis_from_nabla_omega(const Structure<double>&);

}  // namespace grayform
