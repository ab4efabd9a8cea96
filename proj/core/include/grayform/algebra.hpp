#pragma once

// Four-dimensional real Lie algebras given by structure constants in a frame
// that is declared orthonormal, plus a small catalog and random generators.

#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "grayform/exterior4.hpp"
#include "grayform/uh2.hpp"

namespace grayform {

/// Structure constants c(i, j, k) = <[e_i, e_j], e_k>, 0-based.
template <class T>
class LieAlgebra4 {
 public:
  LieAlgebra4() : c_(3) {}

  /// Sets [e_i, e_j] = ... + value e_k and completes antisymmetry.
  void set(int i, int j, int k, const T& value);
  const T& c(int i, int j, int k) const { return c_(i, j, k); }
  const Tensor<T>& tensor() const { return c_; }

  Vec4<T> bracket(const Vec4<T>& x, const Vec4<T>& y) const;
  /// [e_i, e_j] as a vector.
  Vec4<T> bracket(int i, int j) const;

  /// tr ad_{e_i}.
  T trace_ad(int i) const;

  /// Structure constants in the frame f_a = sum_i p(i, a) e_i, declared orthonormal.
  LieAlgebra4 change_basis(const Mat4<T>& p) const;

  template <class U>
  LieAlgebra4<U> convert() const {
    LieAlgebra4<U> r;
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          if (!is_zero(c_(i, j, k))) r.set(i, j, k, convert_to<U>(c_(i, j, k)));
    return r;
  }

  std::string name;

 private:
  template <class U>
  static U convert_to(const T& x) {
    if constexpr (std::is_same_v<T, U>)
      return x;
    else
      return static_cast<U>(to_double(x));
  }

  Tensor<T> c_;
};

template <class T>
struct AlgebraCheck {
  T jacobi_residual;  // sum of squares over the Jacobiator
  bool unimodular;
};

/// Throws InvalidAlgebra when Jacobi fails (exact on rationals, within tol on floats).
template <class T>
AlgebraCheck<T> validate(const LieAlgebra4<T>& alg, Tol tol = {});

namespace catalog {

LieAlgebra4<Rational> abelian();
LieAlgebra4<Rational> heisenberg_r();  // [e1,e2]=e3
LieAlgebra4<Rational> a36_a1();        // [e1,e3]=-e2, [e2,e3]=e1
LieAlgebra4<Rational> su2_r();         // [e1,e2]=e3 cyclic
LieAlgebra4<Rational> aff_r_r2();      // [e1,e2]=e1
LieAlgebra4<Rational> aff_c();         // [e1,e3]=e3, [e1,e4]=e4, [e2,e3]=e4, [e2,e4]=-e3
LieAlgebra4<Rational> r3_lambda_r(const Rational& lambda);  // [e1,e2]=e2, [e1,e3]=lambda e3

/// Catalog lookup by the short names used for the shipped JSON files.
LieAlgebra4<Rational> by_name(const std::string& name);
std::vector<std::string> names();

/// J e1 = e2, J e3 = e4.
AcsJ<Rational> j_standard();
/// J e1 = e2, J e3 = -e4.
AcsJ<Rational> j_anti_standard();
/// J e1 = e3, J e2 = e4.
AcsJ<Rational> j_alt();
/// J e1 = e3, J e2 = -e4.
AcsJ<Rational> j_alt_anti();

}  // namespace catalog

/// Rational orthogonal matrix (I - S)(I + S)^{-1} for a skew S.
Mat4<Rational> cayley(const Mat4<Rational>& skew);

struct RandomStructureSample {
  LieAlgebra4<Rational> alg;
  AcsJ<Rational> J;
  Gauge<Rational> gauge;
};

/// Random Jacobi-valid rational algebra: a semidirect product R^3 x_A R, or a
/// named non-abelian algebra, pushed through a random unimodular integer basis
/// change. `unimodular` forces trace-free A.
LieAlgebra4<Rational> random_algebra(std::mt19937_64& rng, bool unimodular);

/// Random rational orthogonal J = O J0 O^T with J0 one of the two standard
/// structures, and the pushed-forward rational gauge.
std::pair<AcsJ<Rational>, Gauge<Rational>> random_j(std::mt19937_64& rng);

RandomStructureSample random_structure(std::mt19937_64& rng, bool unimodular);

}  // namespace grayform
