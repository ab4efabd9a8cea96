#include "doctest.h"
#include "grayform/suites.hpp"

using namespace grayform;
using Q = Rational;

namespace {

std::vector<std::pair<std::string, AcsJ<Q>>> catalog_js() {
  return {{"standard", catalog::j_standard()},
          {"anti-standard", catalog::j_anti_standard()},
          {"alt", catalog::j_alt()},
          {"alt-anti", catalog::j_alt_anti()}};
}

void require_all_pass(const SuiteReport& r) {
  for (const Row& row : r.rows) {
    CAPTURE(tag_name(row.tag));
    CAPTURE(row.detail);
    CAPTURE(row.value);
    CHECK(row.pass);
  }
}

}  // namespace

TEST_CASE("suite names round-trip") {
  for (SuiteKind k : all_suites()) CHECK(suite_from_name(suite_name(k)) == k);
  CHECK_THROWS_AS(suite_from_name("nope"), Error);
}

TEST_CASE("every suite passes on every catalog structure") {
  for (const std::string& n : catalog::names())
    for (const auto& [jn, J] : catalog_js()) {
      CAPTURE(n);
      CAPTURE(jn);
      Structure<Q> st(catalog::by_name(n), J);
      for (SuiteKind k : all_suites()) require_all_pass(run_suite(st, k));
    }
}

TEST_CASE("identity suites pass on random rational structures") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 12; ++t) {
    RandomStructureSample s = random_structure(rng, t % 3 == 0);
    Structure<Q> st(s.alg, s.J, s.gauge);
    for (SuiteKind k : all_suites()) require_all_pass(run_suite(st, k));
  }
}

TEST_CASE("a36a1 example") {
  LieAlgebra4<Q> a = catalog::a36_a1();
  Structure<Q> kahler(a, catalog::j_anti_standard());
  CHECK(curvature_symmetry_defect(kahler.R()) == 0);
  Q rsum = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) rsum += kahler.R()(i, j, k, l) * kahler.R()(i, j, k, l);
  CHECK(rsum == 0);
  CHECK(norm2(kahler.d_omega()) == 0);
  CHECK(kahler.nijenhuis_norm2() == 0);

  Structure<Q> st(a, catalog::j_alt());
  CHECK(st.nijenhuis_norm2() == 4);
  CHECK(norm2(st.theta() - KForm<Q>::monomial({3})) == 0);
  CHECK(norm2(st.d(st.theta())) == 0);
  CHECK(st.delta_theta() == 0);
  G1Defects<Q> d = g1_defects(st, st.gauge());
  CHECK(d.gray == 0);
  CHECK(d.components == 0);
  CHECK(d.commutator == 0);
  CHECK(d.structure == 0);
  CHECK(d.invariant == 0);
}

TEST_CASE("first Gray characterizations are simultaneously nonzero off G1") {
  std::mt19937_64 rng(4);
  int witnesses = 0;
  for (int t = 0; t < 10; ++t) {
    RandomStructureSample s = random_structure(rng, false);
    Structure<Q> st(s.alg, s.J, s.gauge);
    G1Defects<Q> d = g1_defects(st, s.gauge);
    bool any = d.gray != 0 || d.components != 0 || d.commutator != 0 || d.structure != 0 ||
               d.invariant != 0;
    bool all = d.gray != 0 && d.components != 0 && d.commutator != 0 && d.structure != 0 &&
               d.invariant != 0;
    CHECK(any == all);
    witnesses += all;
  }
  CHECK(witnesses > 0);
}

TEST_CASE("Sekigawa density vanishes on unimodular catalog entries") {
  for (const char* n : {"abelian", "heis3r", "a36a1", "su2r"})
    for (const auto& [jn, J] : catalog_js()) {
      CAPTURE(n);
      CAPTURE(jn);
      Structure<Q> st(catalog::by_name(n), J);
      CHECK(sekigawa_pointwise(st).density == 0);
    }
}

TEST_CASE("applicability of the conditional suites") {
  Structure<Q> g1(catalog::a36_a1(), catalog::j_alt());
  CHECK(run_suite(g1, SuiteKind::AH1).applicable);
  CHECK_FALSE(run_suite(g1, SuiteKind::H1).applicable);
  Structure<Q> herm(catalog::su2_r(), catalog::j_standard());
  CHECK(herm.nijenhuis_norm2() == 0);
  CHECK(run_suite(herm, SuiteKind::H1).applicable);
}

TEST_CASE("unknown rows are looked up by tag") {
  Structure<Q> st(catalog::heisenberg_r(), catalog::j_standard());
  SuiteReport r = run_suite(st, SuiteKind::S2);
  CHECK(r.find(IdentityTag::ConnectionTorsion) != nullptr);
  CHECK(r.find(IdentityTag::H1ForcedKahler) == nullptr);
}

TEST_CASE("float backend agrees with the rational backend") {
  std::mt19937_64 rng(9);
  RandomStructureSample s = random_structure(rng, false);
  Structure<Q> exact(s.alg, s.J, s.gauge);
  Structure<double> approx = exact.convert<double>(Tol{1e-9});
  CHECK(approx.ricci().s == doctest::Approx(exact.ricci().s.get_d()));
  CHECK(approx.nijenhuis_norm2() == doctest::Approx(exact.nijenhuis_norm2().get_d()));
  for (SuiteKind k : {SuiteKind::S2, SuiteKind::Bianchi}) require_all_pass(run_suite(approx, k));
}
