#include "doctest.h"
#include "grayform/structure.hpp"

using namespace grayform;
using Q = Rational;

TEST_CASE("catalog algebras satisfy Jacobi") {
  for (const std::string& n : catalog::names()) {
    CAPTURE(n);
    AlgebraCheck<Q> c = validate(catalog::by_name(n));
    CHECK(c.jacobi_residual == 0);
  }
  CHECK(validate(catalog::su2_r()).unimodular);
  CHECK_FALSE(validate(catalog::aff_c()).unimodular);
}

TEST_CASE("Jacobi violation throws InvalidAlgebra") {
  LieAlgebra4<Q> a;
  a.set(0, 1, 2, Q(1));
  a.set(0, 2, 3, Q(1));
  a.set(1, 2, 3, Q(1));
  a.set(2, 3, 0, Q(1));
  try {
    validate(a);
    FAIL("expected InvalidAlgebra");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidAlgebra);
  }
}

TEST_CASE("bracket antisymmetry is completed") {
  LieAlgebra4<Q> a = catalog::a36_a1();
  CHECK(a.c(0, 2, 1) == -1);
  CHECK(a.c(2, 0, 1) == 1);
  Vec4<Q> b = a.bracket(1, 2);
  CHECK(b[0] == 1);
}

TEST_CASE("cayley transform is orthogonal") {
  Mat4<Q> s;
  s(0, 1) = Q(1, 2);
  s(1, 0) = Q(-1, 2);
  s(2, 3) = Q(3);
  s(3, 2) = Q(-3);
  s(0, 3) = Q(1, 5);
  s(3, 0) = Q(-1, 5);
  Mat4<Q> o = cayley(s);
  CHECK(frobenius2(o.transpose() * o - Mat4<Q>::identity()) == 0);
}

TEST_CASE("change of orthonormal basis preserves curvature invariants") {
  std::mt19937_64 rng(3);
  LieAlgebra4<Q> a = catalog::su2_r();
  Mat4<Q> s;
  s(0, 2) = Q(1, 3);
  s(2, 0) = Q(-1, 3);
  s(1, 3) = Q(2);
  s(3, 1) = Q(-2);
  LieAlgebra4<Q> b = a.change_basis(cayley(s));
  AcsJ<Q> J = catalog::j_standard();
  Structure<Q> sa(a, J), sb(b, J);
  CHECK(sa.ricci().s == sb.ricci().s);
}

TEST_CASE("random structures are valid") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    RandomStructureSample s = random_structure(rng, t % 2 == 0);
    CHECK(validate(s.alg).jacobi_residual == 0);
    CHECK(gauge_defect(s.J, s.gauge) == 0);
    if (t % 2 == 0) CHECK(validate(s.alg).unimodular);
  }
}

TEST_CASE("Levi-Civita connection is metric and torsion free") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    LieAlgebra4<Q> a = random_algebra(rng, false);
    Tensor<Q> g = levi_civita(a);
    CHECK(metric_defect(g) == 0);
    CHECK(torsion_defect(a, g) == 0);
    CHECK(curvature_symmetry_defect(riemann(a, g)) == 0);
  }
}

TEST_CASE("d squared vanishes and both exterior derivative routes agree") {
  std::mt19937_64 rng(8);
  LieAlgebra4<Q> a = random_algebra(rng, false);
  Tensor<Q> g = levi_civita(a);
  KForm<Q> x = KForm<Q>::monomial({0}, Q(2)) + KForm<Q>::monomial({2}, Q(-1, 3));
  CHECK(norm2(ext_d(a, ext_d(a, x))) == 0);
  KForm<Q> y = KForm<Q>::monomial({0, 3}) + KForm<Q>::monomial({1, 2}, Q(5));
  CHECK(norm2(ext_d(a, y) - ext_d_nabla(g, y)) == 0);
  CHECK(norm2(codiff(a, y) - codiff_nabla(g, y)) == 0);
}
