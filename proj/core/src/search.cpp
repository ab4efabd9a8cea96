#include "grayform/search.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>

#include "grayform/parallel.hpp"

namespace grayform {

namespace {

std::array<Mat4<double>, 3> sphere_basis(int orient) {
  Mat4<double> j1 = AcsJ<double>::from_pairs(0, 1, 2, 3).matrix();
  Mat4<double> j2 = AcsJ<double>::from_pairs(0, 2, 1, 3, -1).matrix();
  std::array<Mat4<double>, 3> b{j1, j2, j1 * j2};
  if (orient < 0) {
    Mat4<double> p = Mat4<double>::identity();
    p(3, 3) = -1.0;
    for (auto& m : b) m = p * m * p;
  }
  return b;
}

constexpr int kParams = 13;  // 10 Cholesky entries (log diagonal) + 3 sphere coordinates
constexpr int kResiduals = 16 + 6 + 3 + 1;

using Vec = Eigen::VectorXd;

StructureParams decode(const Vec& x, int orient) {
  StructureParams p;
  p.chol = Mat4<double>{};
  int k = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j <= i; ++j, ++k) p.chol(i, j) = (i == j) ? std::exp(x[k]) : x[k];
  double n = std::sqrt(x[10] * x[10] + x[11] * x[11] + x[12] * x[12]);
  if (n == 0.0) n = 1.0;
  p.jsphere = {x[10] / n, x[11] / n, x[12] / n};
  p.orient = orient;
  return p;
}

Vec encode(const StructureParams& p) {
  Vec x(kParams);
  int k = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j <= i; ++j, ++k) x[k] = (i == j) ? std::log(p.chol(i, j)) : p.chol(i, j);
  for (int i = 0; i < 3; ++i) x[10 + i] = p.jsphere[i];
  return x;
}

double margin_of(const Structure<double>& st) { return st.nijenhuis_norm2() + norm2(st.theta()); }

/// Residuals whose squared sum is defect + penalty max(0, margin_target - margin)^2.
void residuals(const Structure<double>& st, const SearchConfig& cfg, Vec& r) {
  const U2Curv<double>& u = st.u2();
  int k = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[k++] = u.ric0_anti(i, j);
  for (std::size_t s = 0; s < u.rho_star_anti.size(); ++s) r[k++] = u.rho_star_anti[s];
  r[k++] = u.w3a;
  r[k++] = u.w3b;
  r[k++] = u.kappa - u.s;
  r[k++] = std::sqrt(cfg.penalty) * std::max(0.0, cfg.margin - margin_of(st));
}

struct Objective : Eigen::DenseFunctor<double> {
  const LieAlgebra4<double>& alg;
  const SearchConfig& cfg;
  int orient;

  Objective(const LieAlgebra4<double>& a, const SearchConfig& c, int o)
      : DenseFunctor<double>(kParams, kResiduals), alg(a), cfg(c), orient(o) {}

  int operator()(const InputType& x, ValueType& f) const {
    f.resize(kResiduals);
    try {
      residuals(realize(alg, decode(x, orient)), cfg, f);
    } catch (const Error&) {
      f.setConstant(1e6);
    }
    return 0;
  }

  int df(const InputType& x, JacobianType& jac) const {
    jac.resize(kResiduals, kParams);
    ValueType fp(kResiduals), fm(kResiduals);
    for (int i = 0; i < kParams; ++i) {
      double h = cfg.fd_step * std::max(1.0, std::abs(x[i]));
      InputType xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      (*this)(xp, fp);
      (*this)(xm, fm);
      jac.col(i) = (fp - fm) / (2.0 * h);
    }
    return 0;
  }
};

StructureParams random_start(std::mt19937_64& rng, int orient) {
  std::normal_distribution<double> n(0.0, 1.0);
  StructureParams p;
  p.chol = Mat4<double>{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j <= i; ++j) p.chol(i, j) = (i == j) ? std::exp(0.3 * n(rng)) : 0.3 * n(rng);
  std::array<double, 3> u{n(rng), n(rng), n(rng)};
  double len = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  for (double& c : u) c /= len;
  p.jsphere = u;
  p.orient = orient;
  return p;
}

StartResult run_start(const LieAlgebra4<double>& alg, const SearchConfig& cfg, int index) {
  std::seed_seq seq{std::uint64_t(cfg.seed), std::uint64_t(index)};
  std::mt19937_64 rng(seq);
  int orient = (index % 2 == 0) ? 1 : -1;
  StructureParams start = random_start(rng, orient);
  Objective obj(alg, cfg, orient);
  Eigen::LevenbergMarquardt<Objective> lm(obj);
  lm.setGtol(cfg.gtol);
  lm.setFtol(1e-16);
  lm.setXtol(1e-16);
  lm.setMaxfev(cfg.max_iterations);
  Vec x = encode(start);
  lm.minimize(x);
  StartResult r;
  r.index = index;
  r.iterations = int(lm.iterations());
  r.params = decode(x, orient);
  try {
    Structure<double> st = realize(alg, r.params);
    r.defect = g1_component_defect(st.u2());
    r.margin = margin_of(st);
  } catch (const Error&) {
    r.defect = std::numeric_limits<double>::infinity();
    r.margin = 0.0;
  }
  double gap = std::max(0.0, cfg.margin - r.margin);
  r.objective = r.defect + cfg.penalty * gap * gap;
  return r;
}

}  // namespace

AcsJ<double> j_from_sphere(const std::array<double, 3>& u, int orient) {
  double n2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
  if (std::abs(n2 - 1.0) > 1e-12) throw Error(ErrorKind::InvalidInput, "jsphere must be a unit vector");
  if (orient != 1 && orient != -1) throw Error(ErrorKind::InvalidInput, "orient must be +1 or -1");
  std::array<Mat4<double>, 3> b = sphere_basis(orient);
  return AcsJ<double>(u[0] * b[0] + u[1] * b[1] + u[2] * b[2], Tol{1e-12});
}

Structure<double> realize(const LieAlgebra4<double>& alg, const StructureParams& p, Tol tol) {
  for (int i = 0; i < kDim; ++i) {
    if (!(p.chol(i, i) > 0.0)) throw Error(ErrorKind::InvalidInput, "metric_chol needs a positive diagonal");
    for (int j = i + 1; j < kDim; ++j)
      if (p.chol(i, j) != 0.0) throw Error(ErrorKind::InvalidInput, "metric_chol must be lower triangular");
  }
  Mat4<double> frame = inverse(p.chol.transpose());
  LieAlgebra4<double> a = alg.change_basis(frame);
  a.name = alg.name;
  return Structure<double>(a, j_from_sphere(p.jsphere, p.orient), std::nullopt, tol);
}

double defect(const LieAlgebra4<double>& alg, const StructureParams& p) {
  return g1_component_defect(realize(alg, p).u2());
}

double kahler_margin(const LieAlgebra4<double>& alg, const StructureParams& p) {
  return margin_of(realize(alg, p));
}

bool SearchReport::found() const {
  for (const StartResult& s : trace)
    if (s.defect < config.found_threshold && s.margin >= config.margin) return true;
  return false;
}

SearchReport search(const LieAlgebra4<double>& alg, const SearchConfig& config) {
  if (config.starts < 1) throw Error(ErrorKind::InvalidInput, "starts must be at least 1");
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.algebra = alg.name;
  rep.config = config;
  rep.trace.resize(config.starts);
  parallel_chunks(std::size_t(config.starts), [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) rep.trace[i] = run_start(alg, config, int(i));
  });
  for (const StartResult& s : rep.trace)
    if (rep.best_index < 0 || s.objective < rep.trace[rep.best_index].objective) {
      rep.best_index = s.index;
      rep.best_defect = s.defect;
      rep.best_margin = s.margin;
      rep.best_params = s.params;
    }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace grayform
