#include "doctest.h"
#include "grayform/uh2.hpp"

using namespace grayform;
using Q = Rational;

namespace {

KForm<Q> e(std::initializer_list<int> idx, long c = 1) { return KForm<Q>::monomial(idx, Q(c)); }

}  // namespace

TEST_CASE("wedge is graded commutative") {
  KForm<Q> a = e({0}) + e({2}, 3);
  KForm<Q> b = e({1}, -2) + e({3});
  KForm<Q> ab = wedge(a, b), ba = wedge(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i) CHECK(ab[i] == -ba[i]);
  CHECK(norm2(wedge(a, a)) == 0);
}

TEST_CASE("monomial reorders with sign") {
  CHECK(e({1, 0})[0] == -1);
  CHECK(norm2(e({1, 1})) == 0);
}

TEST_CASE("hodge star on 2-forms and its square") {
  Orientation pos = Orientation::positive();
  KForm<Q> s = hodge(e({0, 1}), pos);
  CHECK(norm2(s - e({2, 3})) == 0);
  CHECK(norm2(hodge(e({0, 1}), Orientation::negative()) + e({2, 3})) == 0);
  for (int k = 0; k <= 4; ++k) {
    KForm<Q> a(k);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = Q(long(i) + 1, 3);
    KForm<Q> ss = hodge(hodge(a, pos), pos);
    long sign = (k * (4 - k)) % 2 ? -1 : 1;
    CHECK(norm2(ss - Q(sign) * a) == 0);
  }
}

TEST_CASE("self-dual split reassembles") {
  KForm<Q> psi = e({0, 1}, 2) + e({0, 3}) + e({1, 2}, -5);
  SdSplit<Q> sp = sd_split(psi, Orientation::positive());
  CHECK(norm2(sp.plus + sp.minus - psi) == 0);
  CHECK(form_inner(sp.plus, sp.minus) == 0);
}

TEST_CASE("interior product contracts the first slot") {
  Vec4<Q> v = unit_vec<Q>(0);
  CHECK(norm2(interior(v, e({0, 1})) - e({1})) == 0);
  CHECK(norm2(interior(v, e({1, 2}))) == 0);
}

TEST_CASE("J conventions on forms") {
  AcsJ<Q> J = AcsJ<Q>::from_pairs(0, 1, 2, 3);
  // J e1 = e2, so (J e^1)(e2) = -e^1(J e2) = 1.
  KForm<Q> je1 = j_one_form(J, e({0}));
  CHECK(norm2(je1 - e({1})) == 0);
  KForm<Q> w = fundamental_form(J);
  CHECK(norm2(w - e({0, 1}) - e({2, 3})) == 0);
  CHECK(j_orientation(J) == Orientation::positive());
  CHECK(j_orientation(AcsJ<Q>::from_pairs(0, 1, 2, 3, -1)) == Orientation::negative());
  CHECK(norm2(j_conjugate(J, w) - w) == 0);
}

TEST_CASE("AcsJ rejects non-complex structures") {
  Mat4<Q> m = Mat4<Q>::identity();
  CHECK_THROWS_AS(AcsJ<Q>{m}, Error);
}

TEST_CASE("u(2) split of a 2-form") {
  AcsJ<Q> J = AcsJ<Q>::from_pairs(0, 1, 2, 3);
  KForm<Q> psi = e({0, 2}, 3) + e({0, 1}) - e({1, 3}, 2);
  CHECK(norm2(invariant_part(J, psi) + anti_part(J, psi) - psi) == 0);
  KForm<Q> inv = invariant_part(J, psi);
  CHECK(norm2(j_conjugate(J, inv) - inv) == 0);
}

TEST_CASE("default gauge is orthonormal and anti-invariant") {
  for (AcsJ<Q> J : {AcsJ<Q>::from_pairs(0, 1, 2, 3), AcsJ<Q>::from_pairs(0, 2, 1, 3, -1)}) {
    Gauge<Q> g = default_gauge(J);
    CHECK(gauge_defect(J, g) == 0);
  }
}

TEST_CASE("rational inverse") {
  Mat4<Q> m = Mat4<Q>::identity();
  m(0, 1) = Q(1, 2);
  m(3, 2) = Q(-3);
  Mat4<Q> p = m * inverse(m);
  CHECK(frobenius2(p - Mat4<Q>::identity()) == 0);
}
