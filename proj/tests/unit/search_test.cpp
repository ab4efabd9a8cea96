#include <cmath>

#include "doctest.h"
#include "grayform/search.hpp"

using namespace grayform;

namespace {

LieAlgebra4<double> named(const std::string& n) {
  LieAlgebra4<double> a = catalog::by_name(n).convert<double>();
  a.name = n;
  return a;
}

}  // namespace

TEST_CASE("pole of the sphere is the standard J") {
  AcsJ<double> J = j_from_sphere({1.0, 0.0, 0.0}, 1);
  CHECK(J.matrix()(1, 0) == doctest::Approx(1.0));
  CHECK(J.matrix()(3, 2) == doctest::Approx(1.0));
  AcsJ<double> Jm = j_from_sphere({1.0, 0.0, 0.0}, -1);
  CHECK(Jm.matrix()(3, 2) == doctest::Approx(-1.0));
}

TEST_CASE("realize with identity parameters keeps the algebra") {
  StructureParams p;
  Structure<double> st = realize(named("su2r"), p);
  Structure<double> ref = Structure<Rational>(catalog::su2_r(), catalog::j_standard()).convert<double>(Tol{1e-9});
  CHECK(st.ricci().s == doctest::Approx(ref.ricci().s));
  CHECK(defect(named("abelian"), p) == 0.0);
  CHECK(kahler_margin(named("abelian"), p) == 0.0);
}

TEST_CASE("realize rejects bad parameters") {
  StructureParams p;
  p.chol(0, 1) = 1.0;
  CHECK_THROWS_AS(realize(named("heis3r"), p), Error);
  StructureParams q;
  q.chol(2, 2) = 0.0;
  CHECK_THROWS_AS(realize(named("heis3r"), q), Error);
  StructureParams u;
  u.jsphere = {1.0, 1.0, 0.0};
  CHECK_THROWS_AS(realize(named("heis3r"), u), Error);
}

TEST_CASE("a36a1 non-Kahler example has margin 5") {
  Structure<double> st = Structure<Rational>(catalog::a36_a1(), catalog::j_alt()).convert<double>(Tol{1e-12});
  CHECK(st.nijenhuis_norm2() + norm2(st.theta()) == doctest::Approx(5.0));
}

TEST_CASE("search is deterministic and rejects zero starts") {
  SearchConfig cfg;
  cfg.starts = 3;
  cfg.max_iterations = 40;
  SearchReport a = search(named("heis3r"), cfg), b = search(named("heis3r"), cfg);
  REQUIRE(a.trace.size() == 3);
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].defect == b.trace[i].defect);
    CHECK(a.trace[i].index == int(i));
  }
  CHECK(a.best_defect == b.best_defect);
  cfg.starts = 0;
  CHECK_THROWS_AS(search(named("heis3r"), cfg), Error);
}

TEST_CASE("search finds a non-Kahler first-Gray structure on a36a1") {
  SearchConfig cfg;
  cfg.starts = 20;
  SearchReport r = search(named("a36a1"), cfg);
  CHECK(r.found());
  CHECK(r.best_defect < 1e-12);
  CHECK(r.best_margin >= cfg.margin);
}
