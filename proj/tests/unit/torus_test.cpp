#include <cmath>

#include "doctest.h"
#include "grayform/torus.hpp"

using namespace grayform;

TEST_CASE("grid validation and indexing") {
  CHECK_THROWS_AS(Grid4(6), Error);
  CHECK_THROWS_AS(Grid4(9), Error);
  Grid4 g(8);
  CHECK(g.size() == 4096);
  std::size_t node = g.index({1, 2, 3, 4});
  CHECK(g.coords(node) == std::array<int, 4>{1, 2, 3, 4});
  CHECK(g.coords(g.shift(node, 3, 5))[3] == 1);
  CHECK(g.coords(g.shift(node, 0, -2))[0] == 7);
}

TEST_CASE("hyperkahler frame satisfies the quaternion relations") {
  CHECK(HKFrame::standard().defect() == doctest::Approx(0.0));
}

TEST_CASE("j_field requires a unit vector") {
  HKFrame hk = HKFrame::standard();
  CHECK_THROWS_AS(j_field({1.0, 0.1, 0.0}, hk), Error);
  JField jf = j_field({0.6, 0.8, 0.0}, hk);
  Mat4<double> sq = jf.J * jf.J + Mat4<double>::identity();
  CHECK(frobenius2(sq) < 1e-24);
}

TEST_CASE("sphere field is exactly unit") {
  FSpec s = sphere_fspec();
  for (double t : {0.0, 0.3, 1.7, 4.1}) {
    FJet j = evaluate(s, {t, 2 * t, -t, 0.5});
    double n2 = j.f[0] * j.f[0] + j.f[1] * j.f[1] + j.f[2] * j.f[2];
    CHECK(n2 == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("renormalized gradients match finite differences") {
  FSpec s = random_fspec(2);
  Vec4<double> x{0.1, 0.7, -0.4, 2.0};
  FJet j = evaluate(s, x);
  const double h = 1e-6;
  for (int a = 0; a < 4; ++a) {
    Vec4<double> xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    FJet p = evaluate(s, xp), m = evaluate(s, xm);
    for (int i = 0; i < 3; ++i) CHECK(j.df[i][a] == doctest::Approx((p.f[i] - m.f[i]) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("constant f gives vanishing invariants") {
  FSpec s;
  s.f[0] = {TrigTerm{{0, 0, 0, 0}, 1.0, 0.0}};
  TorusReport r = TorusSolver(s, HKFrame::standard(), 8).report();
  CHECK(r.theta_error == 0.0);
  CHECK(r.nijenhuis_error == 0.0);
  CHECK(r.scalar_residual == 0.0);
  CHECK(r.lee_integral == 0.0);
  CHECK(r.nijenhuis_integral == 0.0);
}

TEST_CASE("Nyquist guard") {
  FSpec s = circle_fspec();
  s.f[0][0].k = {3, 0, 0, 0};
  s.f[1][0].k = {3, 0, 0, 0};
  try {
    TorusSolver(s, HKFrame::standard(), 8);
    FAIL("expected Unresolved");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unresolved);
  }
  CHECK_NOTHROW(TorusSolver(s, HKFrame::standard(), 12));
}

TEST_CASE("closed forms agree with the oracle on the circle field") {
  TorusSolver solver(circle_fspec(), HKFrame::standard(), 16);
  TorusReport r = solver.report();
  CHECK(r.unit_defect < 1e-14);
  CHECK(r.theta_error < 1e-3);
  CHECK(r.nijenhuis_error < 1e-3);
  CHECK(std::abs(r.lee_integral_fd) < 1e-10);
  CHECK(std::abs(r.nijenhuis_integral - r.theta_integral) < 1e-8);
}

TEST_CASE("scalar relation integrates to zero on the sphere field") {
  TorusReport r = TorusSolver(sphere_fspec(), HKFrame::standard(), 12).report();
  CHECK(std::abs(r.lee_integral) < 1e-10);
  CHECK(std::abs(r.nijenhuis_integral - r.theta_integral) < 1e-8);
  CHECK(r.theta_integral > 0.1);
}

TEST_CASE("fourth-order convergence on the circle field") {
  ConvergenceResult c = convergence_study(circle_fspec(), HKFrame::standard(), 8, 16);
  CHECK(c.theta_order > 3.7);
  CHECK(c.nijenhuis_order > 3.7);
}
