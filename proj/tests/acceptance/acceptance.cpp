// Runs the seven acceptance criteria and prints one PASS/FAIL line for each.
//
//   grayform_acceptance [--only N] [--expect-fail N[,N...]]
//
// Exit status is 0 when the failing criteria are exactly the expected ones.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <Eigen/QR>

#include "grayform/search.hpp"
#include "grayform/suites.hpp"
#include "grayform/torus.hpp"

using namespace grayform;
using Q = Rational;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

constexpr double kRoundoff = 1e-12;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool identity_rows_pass(const SuiteReport& r, std::string* first_failure) {
  for (const Row& row : r.rows)
    if (row.applicable && row.kind == RowKind::Identity && !row.pass) {
      if (first_failure->empty())
        *first_failure = std::string(tag_name(row.tag)) + " [" + row.detail + "] " + row.value;
      return false;
    }
  return true;
}

Outcome criterion_example() {
  auto t0 = Clock::now();
  LieAlgebra4<Q> a = catalog::a36_a1();
  Outcome o;
  auto need = [&](bool ok, const char* what) {
    if (!ok) {
      o.pass = false;
      o.detail += std::string(what) + "; ";
    }
  };
  Structure<Q> kahler(a, catalog::j_anti_standard());
  Q r2 = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) r2 += kahler.R()(i, j, k, l) * kahler.R()(i, j, k, l);
  need(r2 == 0, "curvature nonzero");
  need(norm2(kahler.d_omega()) == 0, "d omega0 nonzero");
  need(kahler.nijenhuis_norm2() == 0, "N0 nonzero");

  Structure<Q> st(a, catalog::j_alt());
  need(st.nijenhuis_norm2() == 4, "|N|^2 != 4");
  need(norm2(st.theta() - KForm<Q>::monomial({3})) == 0, "theta != e4");
  need(norm2(st.d(st.theta())) == 0, "d theta nonzero");
  need(st.delta_theta() == 0, "delta theta nonzero");
  G1Defects<Q> d = g1_defects(st, st.gauge());
  need(d.gray == 0 && d.components == 0 && d.commutator == 0 && d.structure == 0 && d.invariant == 0,
       "G1 defect nonzero");
  std::string fail;
  for (SuiteKind k : all_suites()) need(identity_rows_pass(run_suite(st, k), &fail), "suite identity failed");
  double s = since(t0);
  need(s < 1.0, "slower than 1 s");
  o.detail = fmt("%s|N|^2 = %s, theta = e4, all G1 defects 0/1, %.3f s", o.detail.c_str(),
                 st.nijenhuis_norm2().get_str().c_str(), s);
  return o;
}

Outcome criterion_identities() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  int count = 0, unimodular = 0;
  std::string fail;
  bool ok = true;
  for (int t = 0; t < 120; ++t) {
    bool uni = t % 2 == 0;
    RandomStructureSample s = random_structure(rng, uni);
    Structure<Q> st(s.alg, s.J, s.gauge);
    for (SuiteKind k : {SuiteKind::S2, SuiteKind::Bianchi}) ok = identity_rows_pass(run_suite(st, k), &fail) && ok;
    ++count;
    unimodular += st.unimodular();
  }
  double sec = since(t0);
  ok = ok && sec < 120.0;
  return {ok, fmt("%d structures (%d unimodular), %.1f s%s%s", count, unimodular, sec, fail.empty() ? "" : ", ",
                  fail.c_str())};
}

Outcome criterion_g1_equivalence() {
  const std::array<std::pair<const char*, AcsJ<Q>>, 4> js{{{"standard", catalog::j_standard()},
                                                           {"anti-standard", catalog::j_anti_standard()},
                                                           {"alt", catalog::j_alt()},
                                                           {"alt-anti", catalog::j_alt_anti()}}};
  auto classify = [](const G1Defects<Q>& d) {
    std::array<bool, 5> z{d.gray == 0, d.components == 0, d.commutator == 0, d.structure == 0, d.invariant == 0};
    int zeros = 0;
    for (bool b : z) zeros += b;
    return zeros == 5 ? 1 : zeros == 0 ? 0 : -1;
  };
  int g1 = 0, non_g1 = 0, mixed = 0;
  for (const std::string& n : catalog::names())
    for (const auto& [jn, J] : js) {
      Structure<Q> st(catalog::by_name(n), J);
      int c = classify(g1_defects(st, st.gauge()));
      (c == 1 ? g1 : c == 0 ? non_g1 : mixed)++;
    }
  std::mt19937_64 rng(77);
  int witnesses = 0;
  for (int t = 0; t < 40; ++t) {
    RandomStructureSample s = random_structure(rng, t % 2 == 0);
    Structure<Q> st(s.alg, s.J, s.gauge);
    int c = classify(g1_defects(st, s.gauge));
    if (c == 0) ++witnesses;
    if (c == -1) ++mixed;
  }
  bool ok = mixed == 0 && g1 > 0 && witnesses + non_g1 >= 20;
  return {ok, fmt("catalog: %d G1, %d non-G1; random non-G1 witnesses %d; mixed %d", g1, non_g1, witnesses, mixed)};
}

Outcome criterion_sekigawa() {
  const std::array<AcsJ<Q>, 4> js{catalog::j_standard(), catalog::j_anti_standard(), catalog::j_alt(),
                                  catalog::j_alt_anti()};
  int checked = 0;
  std::string bad;
  for (const char* n : {"abelian", "heis3r", "a36a1", "su2r"})
    for (const AcsJ<Q>& J : js) {
      Structure<Q> st(catalog::by_name(n), J);
      Q v = sekigawa_pointwise(st).density;
      ++checked;
      if (v != 0) bad += fmt("%s=%s ", n, v.get_str().c_str());
    }
  return {bad.empty(), fmt("%d structures, density exactly 0%s%s", checked, bad.empty() ? "" : "; nonzero: ",
                           bad.c_str())};
}

Outcome criterion_torus() {
  auto t0 = Clock::now();
  HKFrame hk = HKFrame::standard();
  Outcome o;
  std::string parts;
  for (auto [name, spec] : {std::pair{"circle", circle_fspec()}, std::pair{"sphere", sphere_fspec()}}) {
    ConvergenceResult c = convergence_study(spec, hk, 16, 32);
    auto exact = [](double coarse, double fine) { return coarse <= kRoundoff && fine <= kRoundoff; };
    double order = INFINITY;
    int exact_count = 0;
    const std::array<std::array<double, 3>, 3> orders{{{c.coarse.theta_error, c.fine.theta_error, c.theta_order},
                                                        {c.coarse.nijenhuis_error, c.fine.nijenhuis_error, c.nijenhuis_order},
                                                        {c.coarse.delta_theta_error, c.fine.delta_theta_error,
                                                         c.delta_theta_order}}};
    for (const auto& q : orders) {
      if (exact(q[0], q[1]))
        ++exact_count;
      else
        order = std::min(order, q[2]);
    }
    bool scalar_exact = exact(c.coarse.scalar_residual, c.fine.scalar_residual);
    double cmax = std::max(c.c_coarse, c.c_fine);
    double cspread = scalar_exact || cmax == 0 ? 0.0 : std::abs(c.c_coarse - c.c_fine) / cmax;
    double lee = std::max(std::abs(c.coarse.lee_integral_fd), std::abs(c.fine.lee_integral_fd));
    double gap = std::max(std::abs(c.coarse.nijenhuis_integral - c.coarse.theta_integral),
                          std::abs(c.fine.nijenhuis_integral - c.fine.theta_integral));
    bool ok = order >= 3.8 && cspread <= 0.2 && lee <= 1e-10 && gap <= 1e-8;
    std::string cpart = scalar_exact ? std::string("scalar residual at roundoff")
                                     : fmt("C %.3g/%.3g", c.c_coarse, c.c_fine);
    parts += fmt("%s: order %.2f (%d of 3 at roundoff), %s, |int dtheta| %.1e, gap %.1e; ", name, order,
                 exact_count, cpart.c_str(), lee, gap);
    o.pass = o.pass && ok;
  }
  double sec = since(t0);
  o.pass = o.pass && sec < 300.0;
  o.detail = parts + fmt("%.1f s", sec);
  return o;
}

Outcome criterion_search() {
  auto t0 = Clock::now();
  auto alg = [](const char* n) {
    LieAlgebra4<double> a = catalog::by_name(n).convert<double>();
    a.name = n;
    return a;
  };
  SearchConfig cfg;
  cfg.seed = 7;
  cfg.starts = 20;
  SearchReport a36 = search(alg("a36a1"), cfg);
  cfg.starts = 50;
  SearchReport heis = search(alg("heis3r"), cfg);
  SearchReport affc = search(alg("affc"), cfg);
  double sec = since(t0);
  bool ok = a36.found() && heis.best_defect > 1e-4 && affc.best_defect > 1e-4 && sec < 600.0;
  return {ok, fmt("a36a1 %s (defect %.2e, margin %.3g); floors heis3r %.6e, affc %.6e (margin %.3g); %.1f s",
                  a36.found() ? "found" : "not found", a36.best_defect, a36.best_margin, heis.best_defect,
                  affc.best_defect, affc.best_margin, sec)};
}

Mat4<double> haar_orthogonal(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = n(rng);
  Eigen::HouseholderQR<Eigen::Matrix4d> qr(m);
  Eigen::Matrix4d q = qr.householderQ();
  Mat4<double> o;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) o(i, j) = q(i, j) * (qr.matrixQR()(j, j) < 0 ? -1.0 : 1.0);
  return o;
}

// Einstein pool: real and complex hyperbolic space and H2 x H2 as solvable groups.
std::vector<LieAlgebra4<Q>> einstein_pool() {
  LieAlgebra4<Q> rh;
  for (int i = 0; i < 3; ++i) rh.set(3, i, i, Q(1));
  LieAlgebra4<Q> ch;
  ch.set(3, 0, 0, Q(1, 2));
  ch.set(3, 1, 1, Q(1, 2));
  ch.set(3, 2, 2, Q(1));
  ch.set(0, 1, 2, Q(1));
  LieAlgebra4<Q> hh;
  hh.set(0, 1, 1, Q(1));
  hh.set(2, 3, 3, Q(1));
  return {rh, ch, hh};
}

Outcome criterion_einstein() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(13);
  std::vector<LieAlgebra4<Q>> pool = einstein_pool();
  const std::array<AcsJ<Q>, 4> js{catalog::j_standard(), catalog::j_anti_standard(), catalog::j_alt(),
                                  catalog::j_alt_anti()};
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::normal_distribution<double> gauss;
  const int samples = 10000;
  int accepted = 0, counterexamples = 0, einstein = 0;
  for (int t = 0; t < samples; ++t) {
    LieAlgebra4<double> alg;
    double pick = u01(rng);
    if (pick < 0.2) {
      alg = random_algebra(rng, t % 2 == 0).convert<double>();
    } else {
      double scale = 0.5 + 1.5 * u01(rng);
      LieAlgebra4<Q> base = pool[t % pool.size()];
      alg = base.convert<double>();
      LieAlgebra4<double> scaled;
      for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
          for (int k = 0; k < kDim; ++k)
            if (alg.c(i, j, k) != 0.0) scaled.set(i, j, k, scale * alg.c(i, j, k));
      alg = scaled;
    }
    Mat4<double> o = u01(rng) < 0.5 ? haar_orthogonal(rng) : Mat4<double>::identity();
    alg = alg.change_basis(o);
    AcsJ<double> J;
    if (u01(rng) < 0.5) {
      const AcsJ<Q>& jq = js[t % 4];
      Mat4<double> m;
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) m(i, j) = jq.matrix()(i, j).get_d();
      J = AcsJ<double>(m, Tol{1e-12});
    } else {
      std::array<double, 3> v{gauss(rng), gauss(rng), gauss(rng)};
      double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      for (double& x : v) x /= n;
      J = j_from_sphere(v, t % 2 ? -1 : 1);
    }
    Structure<double> st(alg, J, std::nullopt, Tol{1e-9});
    const RicciData<double>& rd = st.ricci();
    double ric0 = frobenius2(trace_free(rd.ric));
    if (std::sqrt(ric0) > 1e-9 || std::abs(rd.s) < 0.1) continue;
    ++einstein;
    if (g1_component_defect(st.u2()) > 1e-9) continue;
    ++accepted;
    if (st.nijenhuis_norm2() + norm2(st.theta()) > 1e-6) ++counterexamples;
  }
  bool ok = counterexamples == 0 && accepted > 0;
  return {ok, fmt("%d samples, %d Einstein with |s| >= 0.1, %d also G1, %d non-Kahler; %.1f s", samples, einstein,
                  accepted, counterexamples, since(t0))};
}

std::set<int> parse_list(const char* s) {
  std::set<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, expect_fail;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc)
      only = parse_list(argv[++i]);
    else if (!std::strcmp(argv[i], "--expect-fail") && i + 1 < argc)
      expect_fail = parse_list(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--only N[,N...]] [--expect-fail N[,N...]]\n", argv[0]);
      return 2;
    }
  }
  const std::array<std::pair<const char*, std::function<Outcome()>>, 7> criteria{{
      {"exact flat example on a36a1", criterion_example},
      {"identity suites on random rational structures", criterion_identities},
      {"equivalence of first Gray characterizations", criterion_g1_equivalence},
      {"pointwise Sekigawa density on unimodular catalog", criterion_sekigawa},
      {"torus closed forms vs finite differences", criterion_torus},
      {"multistart search regression", criterion_search},
      {"Einstein dichotomy", criterion_einstein},
  }};
  std::set<int> failed;
  for (int i = 0; i < 7; ++i) {
    int id = i + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::set<int> expected;
  for (int id : expect_fail)
    if (only.empty() || only.count(id)) expected.insert(id);
  if (failed != expected) {
    std::printf("failing criteria differ from the expected set\n");
    return 1;
  }
  return 0;
}
