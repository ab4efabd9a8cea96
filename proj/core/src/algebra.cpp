#include "grayform/algebra.hpp"

#include <functional>
#include <map>

namespace grayform {

template <class T>
void LieAlgebra4<T>::set(int i, int j, int k, const T& value) {
  if (i == j) {
    if (!is_zero(value)) throw Error(ErrorKind::InvalidAlgebra, "[e_i, e_i] must vanish");
    return;
  }
  c_(i, j, k) = value;
  c_(j, i, k) = -value;
}

template <class T>
Vec4<T> LieAlgebra4<T>::bracket(int i, int j) const {
  Vec4<T> v;
  for (int k = 0; k < kDim; ++k) v[k] = c_(i, j, k);
  return v;
}

template <class T>
Vec4<T> LieAlgebra4<T>::bracket(const Vec4<T>& x, const Vec4<T>& y) const {
  Vec4<T> v = zero_vec<T>();
  for (int i = 0; i < kDim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < kDim; ++j) {
      if (is_zero(y[j])) continue;
      T xy = x[i] * y[j];
      for (int k = 0; k < kDim; ++k) v[k] += xy * c_(i, j, k);
    }
  }
  return v;
}

template <class T>
T LieAlgebra4<T>::trace_ad(int i) const {
  T s(0);
  for (int k = 0; k < kDim; ++k) s += c_(i, k, k);
  return s;
}

template <class T>
LieAlgebra4<T> LieAlgebra4<T>::change_basis(const Mat4<T>& p) const {
  Mat4<T> pinv = inverse(p);
  LieAlgebra4<T> r;
  r.name = name;
  for (int a = 0; a < kDim; ++a)
    for (int b = a + 1; b < kDim; ++b) {
      Vec4<T> fa, fb;
      for (int i = 0; i < kDim; ++i) {
        fa[i] = p(i, a);
        fb[i] = p(i, b);
      }
      Vec4<T> coords = pinv.apply(bracket(fa, fb));
      for (int k = 0; k < kDim; ++k)
        if (!is_zero(coords[k])) r.set(a, b, k, coords[k]);
    }
  return r;
}

template <class T>
AlgebraCheck<T> validate(const LieAlgebra4<T>& alg, Tol tol) {
  T res(0);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        Vec4<T> ek = unit_vec<T>(k), ei = unit_vec<T>(i), ej = unit_vec<T>(j);
        Vec4<T> jac = alg.bracket(alg.bracket(i, j), ek) + alg.bracket(alg.bracket(j, k), ei) +
                      alg.bracket(alg.bracket(k, i), ej);
        res += dot(jac, jac);
      }
  if (!is_zero(res, tol)) throw Error(ErrorKind::InvalidAlgebra, "Jacobi identity fails");
  bool uni = true;
  for (int i = 0; i < kDim; ++i)
    if (!is_zero(alg.trace_ad(i), tol)) uni = false;
  return {res, uni};
}

template class LieAlgebra4<Rational>;
template class LieAlgebra4<double>;
template AlgebraCheck<Rational> validate(const LieAlgebra4<Rational>&, Tol);
template AlgebraCheck<double> validate(const LieAlgebra4<double>&, Tol);

namespace catalog {

namespace {

LieAlgebra4<Rational> make(const std::string& name,
                           std::initializer_list<std::tuple<int, int, int, long>> entries) {
  LieAlgebra4<Rational> a;
  a.name = name;
  for (auto [i, j, k, v] : entries) a.set(i - 1, j - 1, k - 1, Rational(v));
  return a;
}

}  // namespace

LieAlgebra4<Rational> abelian() { return make("abelian", {}); }
LieAlgebra4<Rational> heisenberg_r() { return make("heis3r", {{1, 2, 3, 1}}); }
LieAlgebra4<Rational> a36_a1() { return make("a36a1", {{1, 3, 2, -1}, {2, 3, 1, 1}}); }
LieAlgebra4<Rational> su2_r() {
  return make("su2r", {{1, 2, 3, 1}, {2, 3, 1, 1}, {3, 1, 2, 1}});
}
LieAlgebra4<Rational> aff_r_r2() { return make("affr_r2", {{1, 2, 1, 1}}); }
LieAlgebra4<Rational> aff_c() {
  return make("affc", {{1, 3, 3, 1}, {1, 4, 4, 1}, {2, 3, 4, 1}, {2, 4, 3, -1}});
}
LieAlgebra4<Rational> r3_lambda_r(const Rational& lambda) {
  LieAlgebra4<Rational> a = make("r3lambda_r", {{1, 2, 2, 1}});
  a.set(0, 2, 2, lambda);
  return a;
}

std::vector<std::string> names() {
  return {"abelian", "heis3r", "a36a1", "su2r", "affr_r2", "affc", "r3lambda_r"};
}

LieAlgebra4<Rational> by_name(const std::string& name) {
  if (name == "abelian") return abelian();
  if (name == "heis3r") return heisenberg_r();
  if (name == "a36a1") return a36_a1();
  if (name == "su2r") return su2_r();
  if (name == "affr_r2") return aff_r_r2();
  if (name == "affc") return aff_c();
  if (name == "r3lambda_r") return r3_lambda_r(Rational(1, 2));
  throw Error(ErrorKind::InvalidInput, "unknown catalog algebra '" + name + "'");
}

AcsJ<Rational> j_standard() { return AcsJ<Rational>::from_pairs(0, 1, 2, 3, 1); }
AcsJ<Rational> j_anti_standard() { return AcsJ<Rational>::from_pairs(0, 1, 2, 3, -1); }
AcsJ<Rational> j_alt() { return AcsJ<Rational>::from_pairs(0, 2, 1, 3, 1); }
AcsJ<Rational> j_alt_anti() { return AcsJ<Rational>::from_pairs(0, 2, 1, 3, -1); }

}  // namespace catalog

Mat4<Rational> cayley(const Mat4<Rational>& s) {
  Mat4<Rational> id = Mat4<Rational>::identity();
  return (id - s) * inverse(Mat4<Rational>(id + s));
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

LieAlgebra4<Rational> semidirect(std::mt19937_64& rng, bool unimodular) {
  for (;;) {
    int a[3][3];
    bool nonzero = false;
    for (auto& row : a)
      for (int& x : row) {
        x = uniform(rng, -2, 2);
        nonzero = nonzero || x != 0;
      }
    if (unimodular) {
      a[2][2] = -a[0][0] - a[1][1];
      nonzero = false;
      for (auto& row : a)
        for (int x : row) nonzero = nonzero || x != 0;
    }
    if (!nonzero) continue;
    LieAlgebra4<Rational> alg;
    alg.name = "semidirect";
    // [e4, e_i] = sum_j a(j, i) e_j
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (a[j][i] != 0) alg.set(3, i, j, Rational(a[j][i]));
    return alg;
  }
}

LieAlgebra4<Rational> filiform() {
  LieAlgebra4<Rational> a;
  a.name = "n4";
  a.set(0, 1, 2, Rational(1));
  a.set(0, 2, 3, Rational(1));
  return a;
}

LieAlgebra4<Rational> aff_aff() {
  LieAlgebra4<Rational> a;
  a.name = "affr_affr";
  a.set(0, 1, 0, Rational(1));
  a.set(2, 3, 2, Rational(1));
  return a;
}

Mat4<Rational> random_unimodular_basis(std::mt19937_64& rng) {
  Mat4<Rational> p = Mat4<Rational>::identity();
  int ops = uniform(rng, 1, 4);
  for (int n = 0; n < ops; ++n) {
    int i = uniform(rng, 0, 3), j = uniform(rng, 0, 3);
    if (i == j) continue;
    int s = uniform(rng, 0, 1) ? 1 : -1;
    for (int r = 0; r < kDim; ++r) p(r, j) += Rational(s) * p(r, i);
  }
  if (uniform(rng, 0, 1)) {
    int i = uniform(rng, 0, 3);
    Rational f = uniform(rng, 0, 1) ? Rational(2) : Rational(1, 2);
    for (int r = 0; r < kDim; ++r) p(r, i) *= f;
  }
  return p;
}

}  // namespace

LieAlgebra4<Rational> random_algebra(std::mt19937_64& rng, bool unimodular) {
  LieAlgebra4<Rational> base;
  int kind = uniform(rng, 0, 5);
  if (kind < 3) {
    base = semidirect(rng, unimodular);
  } else if (unimodular) {
    static const std::vector<std::function<LieAlgebra4<Rational>()>> uni = {
        catalog::heisenberg_r, catalog::a36_a1, catalog::su2_r, filiform};
    base = uni[uniform(rng, 0, static_cast<int>(uni.size()) - 1)]();
  } else {
    static const std::vector<std::function<LieAlgebra4<Rational>()>> non = {
        catalog::aff_r_r2, catalog::aff_c, aff_aff,
        [] { return catalog::r3_lambda_r(Rational(1, 2)); }};
    base = non[uniform(rng, 0, static_cast<int>(non.size()) - 1)]();
  }
  LieAlgebra4<Rational> out = base.change_basis(random_unimodular_basis(rng));
  out.name = base.name;
  validate(out);
  return out;
}

std::pair<AcsJ<Rational>, Gauge<Rational>> random_j(std::mt19937_64& rng) {
  Mat4<Rational> s = Mat4<Rational>::zero();
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) {
      Rational v(uniform(rng, -2, 2), 2);
      v.canonicalize();
      s(i, j) = v;
      s(j, i) = -v;
    }
  Mat4<Rational> o = cayley(s);
  AcsJ<Rational> j0 = uniform(rng, 0, 1) ? catalog::j_standard() : catalog::j_anti_standard();
  Gauge<Rational> g0 = make_gauge(j0, KForm<Rational>::monomial({0, 2}));
  AcsJ<Rational> j(Mat4<Rational>(o * j0.matrix() * o.transpose()));
  Gauge<Rational> g{push_forward(o, g0.phi), push_forward(o, g0.jphi)};
  return {j, g};
}

RandomStructureSample random_structure(std::mt19937_64& rng, bool unimodular) {
  LieAlgebra4<Rational> alg = random_algebra(rng, unimodular);
  auto [j, g] = random_j(rng);
  return {alg, j, g};
}

}  // namespace grayform
