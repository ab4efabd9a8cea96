#include "grayform/torus.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "grayform/parallel.hpp"

namespace grayform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec4<double> col(const Mat4<double>& m, int j) {
  Vec4<double> v;
  for (int i = 0; i < kDim; ++i) v[i] = m(i, j);
  return v;
}

KForm<double> one(const Vec4<double>& v) { return KForm<double>::one_form(v); }

/// (X, Y) -> <N_{JX}, N_Y>.
KForm<double> pairing(const TwoFormField<double>& N, const Mat4<double>& J) {
  KForm<double> r(2);
  for (std::size_t s = 0; s < r.size(); ++s) {
    int mk = r.mask(s);
    int x = __builtin_ctz(mk), y = 31 - __builtin_clz(mk);
    r[s] = form_inner(at(N, col(J, x)), N[y]);
  }
  return r;
}

double max_abs(const KForm<double>& a) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

}  // namespace

int FSpec::max_wavenumber() const {
  int m = 0;
  for (const auto& terms : f)
    for (const TrigTerm& t : terms)
      for (int k : t.k) m = std::max(m, std::abs(k));
  return m;
}

FSpec circle_fspec() {
  FSpec s;
  s.f[0] = {TrigTerm{{1, 0, 0, 0}, 1.0, 0.0}};
  s.f[1] = {TrigTerm{{1, 0, 0, 0}, 0.0, 1.0}};
  return s;
}

FSpec sphere_fspec(const std::array<int, 4>& k, const std::array<int, 4>& l) {
  std::array<int, 4> plus, minus;
  for (int i = 0; i < 4; ++i) {
    plus[i] = k[i] + l[i];
    minus[i] = k[i] - l[i];
  }
  FSpec s;
  s.f[0] = {TrigTerm{k, 1.0, 0.0}};
  s.f[1] = {TrigTerm{plus, 0.0, 0.5}, TrigTerm{minus, 0.0, 0.5}};
  s.f[2] = {TrigTerm{minus, 0.5, 0.0}, TrigTerm{plus, -0.5, 0.0}};
  return s;
}

FSpec random_fspec(unsigned seed, int degree, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> kd(-degree, degree);
  FSpec s;
  s.renormalize = true;
  const std::array<double, 3> base{0.8, 0.5, 0.3};
  for (int i = 0; i < 3; ++i) {
    s.f[i].push_back(TrigTerm{{0, 0, 0, 0}, base[i], 0.0});
    for (int t = 0; t < 3; ++t) {
      TrigTerm term;
      do {
        for (int& k : term.k) k = kd(rng);
      } while (term.k == std::array<int, 4>{});
      term.a = amplitude * u(rng);
      term.b = amplitude * u(rng);
      s.f[i].push_back(term);
    }
  }
  return s;
}

FJet evaluate(const FSpec& spec, const Vec4<double>& x) {
  FJet g;
  for (int i = 0; i < 3; ++i) {
    g.df[i] = zero_vec<double>();
    for (const TrigTerm& t : spec.f[i]) {
      double ph = 0;
      for (int a = 0; a < kDim; ++a) ph += t.k[a] * x[a];
      double c = std::cos(ph), s = std::sin(ph);
      g.f[i] += t.a * c + t.b * s;
      double dph = -t.a * s + t.b * c;
      for (int a = 0; a < kDim; ++a) g.df[i][a] += t.k[a] * dph;
    }
  }
  if (!spec.renormalize) return g;
  double r2 = g.f[0] * g.f[0] + g.f[1] * g.f[1] + g.f[2] * g.f[2];
  if (r2 <= 1e-24) throw Error(ErrorKind::InvalidInput, "f vanishes; cannot renormalize");
  double r = std::sqrt(r2);
  Vec4<double> dr2 = zero_vec<double>();
  for (int i = 0; i < 3; ++i) dr2 = dr2 + (2.0 * g.f[i]) * g.df[i];
  FJet out;
  for (int i = 0; i < 3; ++i) {
    out.f[i] = g.f[i] / r;
    out.df[i] = (1.0 / r) * g.df[i] - (0.5 * g.f[i] / (r2 * r)) * dr2;
  }
  return out;
}

Grid4::Grid4(int n_) : n(n_) {
  if (n < 8 || n % 2 != 0) throw Error(ErrorKind::InvalidInput, "grid size must be even and at least 8");
}

double Grid4::h() const { return kTwoPi / n; }

std::size_t Grid4::index(const std::array<int, 4>& i) const {
  return ((std::size_t(i[0]) * n + i[1]) * n + i[2]) * n + i[3];
}

std::array<int, 4> Grid4::coords(std::size_t node) const {
  std::array<int, 4> c;
  for (int a = 3; a >= 0; --a) {
    c[a] = int(node % n);
    node /= n;
  }
  return c;
}

Vec4<double> Grid4::point(std::size_t node) const {
  std::array<int, 4> c = coords(node);
  Vec4<double> x;
  for (int a = 0; a < kDim; ++a) x[a] = c[a] * h();
  return x;
}

std::size_t Grid4::shift(std::size_t node, int axis, int step) const {
  std::array<int, 4> c = coords(node);
  c[axis] = ((c[axis] + step) % n + n) % n;
  return index(c);
}

HKFrame HKFrame::standard() {
  HKFrame hk;
  Mat4<double> j1 = AcsJ<double>::from_pairs(0, 1, 2, 3).matrix();
  Mat4<double> j2 = AcsJ<double>::from_pairs(0, 2, 1, 3, -1).matrix();
  Mat4<double> j3 = j1 * j2;
  hk.J = {AcsJ<double>(j1), AcsJ<double>(j2), AcsJ<double>(j3)};
  for (int i = 0; i < 3; ++i) hk.omega[i] = fundamental_form(hk.J[i]);
  return hk;
}

double HKFrame::defect() const {
  double d = 0;
  for (int i = 0; i < 3; ++i) {
    const Mat4<double>& a = J[i].matrix();
    const Mat4<double>& b = J[(i + 1) % 3].matrix();
    const Mat4<double>& c = J[(i + 2) % 3].matrix();
    d += frobenius2(a * b - c) + frobenius2(a * b + b * a);
  }
  return d;
}

JField j_field(const std::array<double, 3>& f, const HKFrame& hk) {
  double r2 = f[0] * f[0] + f[1] * f[1] + f[2] * f[2];
  if (std::abs(r2 - 1.0) > kUnitNormTol)
    throw Error(ErrorKind::InvalidInput, "f is not unit length (|f|^2 = " + std::to_string(r2) + ")");
  JField out;
  out.J = f[0] * hk.J[0].matrix() + f[1] * hk.J[1].matrix() + f[2] * hk.J[2].matrix();
  out.omega = f[0] * hk.omega[0] + f[1] * hk.omega[1] + f[2] * hk.omega[2];
  return out;
}

TorusInvariants closed_form_invariants(const FJet& g, const HKFrame& hk) {
  JField jf = j_field(g.f, hk);
  AcsJ<double> J(jf.J, Tol{1e-10});
  const auto& f = g.f;
  std::array<KForm<double>, 3> df{one(g.df[0]), one(g.df[1]), one(g.df[2])};
  TorusInvariants r;
  r.theta = j_one_form(hk.J[2], f[1] * df[0] - f[0] * df[1]) +
            j_one_form(hk.J[0], f[2] * df[1] - f[1] * df[2]) +
            j_one_form(hk.J[1], f[0] * df[2] - f[2] * df[0]);
  std::array<KForm<double>, 3> c{f[1] * df[2] - f[2] * df[1] + j_one_form(J, df[0]),
                                 f[2] * df[0] - f[0] * df[2] + j_one_form(J, df[1]),
                                 f[0] * df[1] - f[1] * df[0] + j_one_form(J, df[2])};
  for (int a = 0; a < kDim; ++a) {
    r.N[a] = KForm<double>(2);
    for (int i = 0; i < 3; ++i) r.N[a] += c[i][a] * hk.omega[i];
  }
  r.delta_theta = -2.0 * (form_inner(df[1], j_one_form(hk.J[2], df[0])) +
                          form_inner(df[2], j_one_form(hk.J[0], df[1])) +
                          form_inner(df[0], j_one_form(hk.J[1], df[2])));
  KForm<double> jt = j_one_form(J, r.theta);
  r.phi = -0.125 * pairing(r.N, jf.J) + 0.25 * (norm2(r.theta) * jf.omega - wedge(r.theta, jt)) -
          0.25 * at(r.N, jt.vec());
  return r;
}

TorusSolver::TorusSolver(FSpec spec, HKFrame hk, int n) : spec_(std::move(spec)), hk_(std::move(hk)), grid_(n) {
  if (4 * spec_.max_wavenumber() > n)
    throw Error(ErrorKind::Unresolved, "wavenumber " + std::to_string(spec_.max_wavenumber()) +
                                           " is not resolved on n = " + std::to_string(n));
  std::size_t m = grid_.size();
  for (auto& v : f_) v.assign(m, 0.0);
  parallel_chunks(m, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t p = b; p < e; ++p) {
      FJet g = evaluate(spec_, grid_.point(p));
      for (int i = 0; i < 3; ++i) f_[i][p] = g.f[i];
    }
  });
  for (std::size_t p = 0; p < m; ++p) {
    double r2 = f_[0][p] * f_[0][p] + f_[1][p] * f_[1][p] + f_[2][p] * f_[2][p];
    if (std::abs(r2 - 1.0) > kUnitNormTol)
      throw Error(ErrorKind::InvalidInput, "f is not unit length at node " + std::to_string(p) +
                                               "; set renormalize to project onto the sphere");
  }
  for (auto& v : theta_fd_) v.assign(m, 0.0);
  parallel_chunks(m, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t p = b; p < e; ++p) {
      KForm<double> t = oracle_first_order(p).theta;
      for (int a = 0; a < kDim; ++a) theta_fd_[a][p] = t[a];
    }
  });
}

double TorusSolver::diff(const std::vector<double>& v, std::size_t p, int axis) const {
  double fp1 = v[grid_.shift(p, axis, 1)], fm1 = v[grid_.shift(p, axis, -1)];
  double fp2 = v[grid_.shift(p, axis, 2)], fm2 = v[grid_.shift(p, axis, -2)];
  return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * grid_.h());
}

std::array<Vec4<double>, 3> TorusSolver::fd_gradient(std::size_t p) const {
  std::array<Vec4<double>, 3> d;
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < kDim; ++a) d[i][a] = diff(f_[i], p, a);
  return d;
}

TorusInvariants TorusSolver::oracle_first_order(std::size_t p) const {
  JField jf = j_field({f_[0][p], f_[1][p], f_[2][p]}, hk_);
  AcsJ<double> J(jf.J, Tol{1e-10});
  std::array<Vec4<double>, 3> d = fd_gradient(p);
  TwoFormField<double> nw;
  for (int a = 0; a < kDim; ++a) nw[a] = d[0][a] * hk_.omega[0] + d[1][a] * hk_.omega[1] + d[2][a] * hk_.omega[2];
  KForm<double> dw(1);
  for (int a = 0; a < kDim; ++a) dw -= one(contract_first(nw[a], unit_vec<double>(a)));
  TorusInvariants r;
  r.theta = j_one_form(J, dw);
  for (int a = 0; a < kDim; ++a) r.N[a] = j_two_form(J, nw[a]) - at(nw, col(jf.J, a));
  for (std::size_t s = 0; s < r.phi.size(); ++s) {
    int mk = r.phi.mask(s);
    int x = __builtin_ctz(mk), y = 31 - __builtin_clz(mk);
    r.phi[s] = 0.5 * form_inner(j_two_form(J, nw[x]), nw[y]);
  }
  return r;
}

TorusInvariants TorusSolver::closed_form(std::size_t p) const {
  return closed_form_invariants(evaluate(spec_, grid_.point(p)), hk_);
}

TorusInvariants TorusSolver::fd_oracle(std::size_t p) const {
  TorusInvariants r = oracle_first_order(p);
  double div = 0;
  for (int a = 0; a < kDim; ++a) div += diff(theta_fd_[a], p, a);
  r.delta_theta = -div;
  return r;
}

double TorusSolver::scalar_relation(std::size_t p) const {
  TorusInvariants o = fd_oracle(p);
  double n2 = 0;
  for (const auto& x : o.N) n2 += norm2(x);
  return 0.25 * n2 - norm2(o.theta) - 2.0 * o.delta_theta;
}

TorusReport TorusSolver::report() const {
  auto start = std::chrono::steady_clock::now();
  struct Acc {
    double unit = 0, jd = 0, te = 0, ne = 0, de = 0, pe = 0, sr = 0;
    double lee_fd = 0, lee = 0, n2 = 0, t2 = 0;
  };
  const HKFrame& hk = hk_;
  Acc acc = parallel_reduce(
      grid_.size(), Acc{},
      [&](Acc& a, std::size_t p) {
        FJet g = evaluate(spec_, grid_.point(p));
        double r2 = g.f[0] * g.f[0] + g.f[1] * g.f[1] + g.f[2] * g.f[2];
        a.unit = std::max(a.unit, std::abs(r2 - 1.0));
        JField jf = j_field(g.f, hk);
        Mat4<double> sq = jf.J * jf.J + Mat4<double>::identity();
        a.jd = std::max(a.jd, std::sqrt(frobenius2(sq)));
        TorusInvariants c = closed_form_invariants(g, hk);
        TorusInvariants o = fd_oracle(p);
        a.te = std::max(a.te, max_abs(c.theta - o.theta));
        double n2 = 0;
        for (int k = 0; k < kDim; ++k) {
          a.ne = std::max(a.ne, max_abs(c.N[k] - o.N[k]));
          n2 += norm2(c.N[k]);
        }
        a.de = std::max(a.de, std::abs(c.delta_theta - o.delta_theta));
        a.pe = std::max(a.pe, max_abs(c.phi - o.phi));
        double on2 = 0;
        for (const auto& x : o.N) on2 += norm2(x);
        a.sr = std::max(a.sr, std::abs(0.25 * on2 - norm2(o.theta) - 2.0 * o.delta_theta));
        a.lee_fd += o.delta_theta;
        a.lee += c.delta_theta;
        a.n2 += 0.25 * n2;
        a.t2 += norm2(c.theta);
      },
      [](Acc x, const Acc& y) {
        x.unit = std::max(x.unit, y.unit);
        x.jd = std::max(x.jd, y.jd);
        x.te = std::max(x.te, y.te);
        x.ne = std::max(x.ne, y.ne);
        x.de = std::max(x.de, y.de);
        x.pe = std::max(x.pe, y.pe);
        x.sr = std::max(x.sr, y.sr);
        x.lee_fd += y.lee_fd;
        x.lee += y.lee;
        x.n2 += y.n2;
        x.t2 += y.t2;
        return x;
      });
  double h = grid_.h();
  double dv = h * h * h * h;
  TorusReport r;
  r.n = grid_.n;
  r.h = h;
  r.unit_defect = acc.unit;
  r.j_defect = acc.jd;
  r.theta_error = acc.te;
  r.nijenhuis_error = acc.ne;
  r.delta_theta_error = acc.de;
  r.phi_error = acc.pe;
  r.scalar_residual = acc.sr;
  r.lee_integral_fd = acc.lee_fd * dv;
  r.lee_integral = acc.lee * dv;
  r.nijenhuis_integral = acc.n2 * dv;
  r.theta_integral = acc.t2 * dv;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ConvergenceResult convergence_study(const FSpec& spec, const HKFrame& hk, int n_coarse, int n_fine) {
  ConvergenceResult c;
  c.coarse = TorusSolver(spec, hk, n_coarse).report();
  c.fine = TorusSolver(spec, hk, n_fine).report();
  double ratio = std::log(c.coarse.h / c.fine.h);
  auto order = [&](double e0, double e1) {
    if (e0 <= 0 || e1 <= 0) return 0.0;
    return std::log(e0 / e1) / ratio;
  };
  c.theta_order = order(c.coarse.theta_error, c.fine.theta_error);
  c.nijenhuis_order = order(c.coarse.nijenhuis_error, c.fine.nijenhuis_error);
  c.delta_theta_order = order(c.coarse.delta_theta_error, c.fine.delta_theta_error);
  auto h4 = [](double h) { return h * h * h * h; };
  c.c_coarse = c.coarse.scalar_residual / h4(c.coarse.h);
  c.c_fine = c.fine.scalar_residual / h4(c.fine.h);
  return c;
}

}  // namespace grayform
