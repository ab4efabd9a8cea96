#include "grayform/invariants.hpp"

#include <cmath>

namespace grayform {

namespace {

template <class T>
KForm<T> e1form(int i) {
  return KForm<T>::one_form(unit_vec<T>(i));
}

template <class T>
KForm<T> row_form(const Mat4<T>& m, int x) {
  KForm<T> r(1);
  for (int j = 0; j < kDim; ++j) r[j] = m(x, j);
  return r;
}

template <class T>
KForm<T> pair_form(const Tensor<T>& t4, int x, int y, bool skew) {
  KForm<T> r(2);
  for (std::size_t s = 0; s < r.size(); ++s) {
    int mk = r.mask(s);
    int i = __builtin_ctz(mk);
    int j = 31 - __builtin_clz(mk);
    r[s] = skew ? T(t4(x, y, i, j) - t4(y, x, i, j)) : t4(x, y, i, j);
  }
  return r;
}

}  // namespace

namespace {

template <class T>
GaugeOneForms<T> one_forms_of(const Structure<T>& st, const Gauge<T>& g) {
  GaugeOneForms<T> f;
  T half = sfrac<T>(1, 2);
  TwoFormField<T> nphi = st.nabla_form(g.phi);
  for (int x = 0; x < kDim; ++x) {
    const KForm<T>& nw = st.nabla_omega()[x];
    f.a[x] = half * form_inner(nw, g.phi);
    f.b[x] = half * form_inner(nw, g.jphi);
    f.c[x] = half * form_inner(nphi[x], g.jphi);
    f.n[x] = half * form_inner(st.nijenhuis_at(st.Jv(unit_vec<T>(x))), g.phi);
  }
  return f;
}

}  // namespace

template <class T>
GaugeOneForms<T> gauge_one_forms(const Structure<T>& st, const Gauge<T>& g) {
  if (!is_zero(gauge_defect(st.J(), g), st.tol()))
    throw Error(ErrorKind::GaugeDegenerate, "gauge violates its invariants");
  return one_forms_of(st, g);
}

template <class T>
T gauge_reconstruction_defect(const Structure<T>& st, const Gauge<T>& g,
                              const GaugeOneForms<T>& f) {
  TwoFormField<T> nphi = st.nabla_form(g.phi);
  TwoFormField<T> njphi = st.nabla_form(g.jphi);
  T s(0);
  for (int x = 0; x < kDim; ++x) {
    s += norm2(st.nabla_omega()[x] - f.a[x] * g.phi - f.b[x] * g.jphi);
    s += norm2(nphi[x] + f.a[x] * st.omega() - f.c[x] * g.jphi);
    s += norm2(njphi[x] + f.b[x] * st.omega() + f.c[x] * g.phi);
  }
  return s;
}

template <class T>
KForm<T> phi_form(const Structure<T>& st) {
  KForm<T> r(2);
  T half = sfrac<T>(1, 2);
  for (std::size_t s = 0; s < r.size(); ++s) {
    int mk = r.mask(s);
    int x = __builtin_ctz(mk);
    int y = 31 - __builtin_clz(mk);
    r[s] = half * form_inner(st.J2(st.nabla_omega()[x]), st.nabla_omega()[y]);
  }
  return r;
}

template <class T>
KForm<T> nijenhuis_pairing(const Structure<T>& st) {
  KForm<T> r(2);
  for (std::size_t s = 0; s < r.size(); ++s) {
    int mk = r.mask(s);
    int x = __builtin_ctz(mk);
    int y = 31 - __builtin_clz(mk);
    r[s] = form_inner(st.nijenhuis_at(st.Jv(unit_vec<T>(x))), st.nijenhuis()[y]);
  }
  return r;
}

template <class T>
KForm<T> phi_form_nijenhuis(const Structure<T>& st) {
  const KForm<T>& th = st.theta();
  KForm<T> r = sfrac<T>(-1, 8) * nijenhuis_pairing(st);
  r += sfrac<T>(1, 4) * (norm2(th) * st.omega() - wedge(th, st.j_theta()));
  r -= sfrac<T>(1, 4) * st.nijenhuis_at(st.Jv(th.vec()));
  return r;
}

template <class T>
KForm<T> chern_form(const Structure<T>& st) {
  return st.ricci().rho_star + phi_form(st);
}

template <class T>
KForm<T> alpha_form(const Structure<T>& st) {
  Mat4<T> dm = st.nabla_theta() * st.J().matrix();
  KForm<T> r(2);
  for (std::size_t s = 0; s < r.size(); ++s) {
    int mk = r.mask(s);
    int a = __builtin_ctz(mk);
    int b = 31 - __builtin_clz(mk);
    r[s] = dm(a, b) - dm(b, a);
  }
  return r;
}

template <class T>
T star_top(const Structure<T>& st, const KForm<T>& top) {
  T v = top_coefficient(top);
  return st.orient().sign > 0 ? v : T(-v);
}

template <class T>
SekigawaTerms<T> sekigawa_pointwise(const Structure<T>& st) {
  const RicciData<T>& rd = st.ricci();
  const U2Curv<T>& u = st.u2();
  const KForm<T>& w = st.omega();
  T s = rd.s, ss = rd.s_star, kappa = u.kappa;
  T rsa2 = norm2(u.rho_star_anti);
  T w3 = w3_norm2(u);
  T ric0a2 = frobenius2(u.ric0_anti);
  KForm<T> rho0 = rd.rho - T(form_inner(rd.rho, w) / T(2)) * w;
  T rho02 = norm2(rho0);
  KForm<T> phi = phi_form(st);
  T rp = star_top(st, wedge(rd.rho_star, phi));
  KForm<T> gamma = rd.rho_star + phi;
  Mat4<T> ric0 = rd.ric - T(s / T(4)) * Mat4<T>::identity();

  SekigawaTerms<T> t;
  T ds = ss - s;
  t.density = ds * ds / T(16) + rsa2 + T(2) * w3 - ric0a2 / T(2) - T(2) * rp;
  t.chern_square = rsa2 + ss * ss / T(8) - rho02 + T(2) * rp;
  t.chern_weil = s * s / T(24) - rho02 - ric0a2 / T(2) + kappa * kappa / T(12) + T(2) * rsa2 +
                 T(2) * w3;
  t.gamma_square = star_top(st, wedge(gamma, gamma));
  t.euler_signature = s * s / T(24) - frobenius2(ric0) / T(2) + T(2) * u.wplus.norm2();
  return t;
}

template <class T>
PairField<T> second_derivative_commutator(const Structure<T>& st, const KForm<T>& psi) {
  Tensor<T> d2 = st.nabla(st.nabla(to_tensor(psi)));
  PairField<T> f;
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y) f[4 * x + y] = pair_form(d2, x, y, true);
  return f;
}

template <class T>
PairField<T> invariant_g1_identity(const Structure<T>& st) {
  const KForm<T>& th = st.theta();
  const KForm<T>& jth = st.j_theta();
  T th2 = norm2(th);
  T half = sfrac<T>(1, 2);

  // JN as the field Y -> J N_Y = -N_{JY}; s holds N_{JY}, so -d(JN) enters as +d(s)
  Tensor<T> s(3);
  for (int y = 0; y < kDim; ++y) {
    KForm<T> ny = st.nijenhuis_at(st.Jv(unit_vec<T>(y)));
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) s(y, i, j) = ny(i, j);
  }
  Tensor<T> ds = st.nabla(s);

  PairField<T> f;
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y) {
      KForm<T> X = e1form<T>(x), Y = e1form<T>(y);
      KForm<T> JX = st.J1(X), JY = st.J1(Y);
      KForm<T> r(2);
      r += half * (th[x] * (wedge(Y, jth) + wedge(JY, th)) - th[y] * (wedge(X, jth) + wedge(JX, th)));
      r += half * th2 * (wedge(X, JY) + wedge(JX, Y));
      KForm<T> nx_th = act(st.nijenhuis_at(st.Jv(unit_vec<T>(x))), th);
      KForm<T> ny_th = act(st.nijenhuis_at(st.Jv(unit_vec<T>(y))), th);
      KForm<T> jnxy =
          KForm<T>::one_form(st.Jv(st.nijenhuis_vector(unit_vec<T>(x), unit_vec<T>(y))));
      r += half * (wedge(Y, nx_th) - wedge(X, ny_th) + wedge(jnxy, th));
      KForm<T> nxt = row_form(st.nabla_theta(), x), nyt = row_form(st.nabla_theta(), y);
      r += wedge(Y, st.J1(nxt)) - wedge(X, st.J1(nyt)) + wedge(JY, nxt) - wedge(JX, nyt);
      r += pair_form(ds, x, y, true);
      f[4 * x + y] = r;
    }
  return f;
}

template <class T>
G1Defects<T> g1_defects(const Structure<T>& st, const Gauge<T>& g) {
  G1Defects<T> d;
  d.gray = gray_defects(st.R(), st.J()).d1;
  d.components = g1_component_defect(st.u2());
  d.commutator = pair_norm2(second_derivative_commutator(st, st.omega()));
  GaugeOneForms<T> f = gauge_one_forms(st, g);
  d.structure = norm2(st.d(f.a) - wedge(f.c, f.b)) + norm2(st.d(f.b) + wedge(f.c, f.a));
  d.invariant = pair_norm2(invariant_g1_identity(st));
  return d;
}

template <class T>
KForm<T> trace_free_ricci_form(const Structure<T>& st) {
  const KForm<T>& rho = st.ricci().rho;
  return rho - T(form_inner(rho, st.omega()) / T(2)) * st.omega();
}

template <class T>
KForm<T> rough_laplacian(const Structure<T>& st, const KForm<T>& psi) {
  Tensor<T> d2 = st.nabla(st.nabla(to_tensor(psi)));
  KForm<T> r(2);
  for (std::size_t s = 0; s < r.size(); ++s) {
    int mk = r.mask(s);
    int i = __builtin_ctz(mk);
    int j = 31 - __builtin_clz(mk);
    T v(0);
    for (int a = 0; a < kDim; ++a) v -= d2(a, a, i, j);
    r[s] = v;
  }
  return r;
}

template <class T>
TwoFormField<T> cotton_york(const Structure<T>& st) {
  const RicciData<T>& rd = st.ricci();
  Mat4<T> h = sfrac<T>(1, 2) * rd.ric + T(rd.s / T(24) - rd.s / T(8)) * Mat4<T>::identity();
  Tensor<T> dh = st.nabla(mat_to_tensor(h));
  TwoFormField<T> c;
  for (int z = 0; z < kDim; ++z) {
    KForm<T> r(2);
    for (std::size_t s = 0; s < r.size(); ++s) {
      int mk = r.mask(s);
      int x = __builtin_ctz(mk);
      int y = 31 - __builtin_clz(mk);
      r[s] = dh(y, x, z) - dh(x, y, z);
    }
    c[z] = r;
  }
  return c;
}

template <class T>
TwoFormField<T> a_field(const Structure<T>& st) {
  const Mat4<T>& ra = st.u2().ric0_anti;
  Tensor<T> dr = st.nabla(mat_to_tensor(ra));
  KForm<T> sj = st.star(st.J1(divergence(st.gamma(), ra)));
  TwoFormField<T> a;
  for (int z = 0; z < kDim; ++z) {
    KForm<T> r(2);
    for (std::size_t s = 0; s < r.size(); ++s) {
      int mk = r.mask(s);
      int x = __builtin_ctz(mk);
      int y = 31 - __builtin_clz(mk);
      r[s] = dr(x, y, z) - dr(y, x, z);
    }
    a[z] = r + interior(st.Jv(unit_vec<T>(z)), sj);
  }
  return a;
}

template <class T>
TwoFormField<T> weyl_divergence(const Structure<T>& st, const Mat6<T>& w) {
  Tensor<T> dw = st.nabla(tensor_from_operator(w).r);
  TwoFormField<T> f;
  for (int z = 0; z < kDim; ++z) {
    KForm<T> r(2);
    for (std::size_t s = 0; s < r.size(); ++s) {
      int mk = r.mask(s);
      int x = __builtin_ctz(mk);
      int y = 31 - __builtin_clz(mk);
      T v(0);
      for (int i = 0; i < kDim; ++i) v -= dw(i, x, y, i, z);
      r[s] = v;
    }
    f[z] = r;
  }
  return f;
}

template <class T>
KForm<T> j_invariant_divergence_defect(const Structure<T>& st, const Mat4<T>& b) {
  KForm<T> bj = from_matrix(st.J().matrix().transpose() * b);
  KForm<T> pair(1);
  for (int x = 0; x < kDim; ++x)
    pair[x] = form_inner(invariant_part(st.J(), interior(unit_vec<T>(x), st.d_omega())), bj);
  return divergence(st.gamma(), b) - pair + st.J1(st.delta(bj));
}

namespace {

double vnorm(const Vec4<double>& v) { return std::sqrt(dot(v, v)); }

KForm<double> vform(const Vec4<double>& v) { return KForm<double>::one_form(v); }

}  // namespace

AlignedFrameData aligned_frame(const Structure<double>& st, double eps) {
  AlignedFrameData out;
  double th = std::sqrt(norm2(st.theta()));
  if (th <= eps) throw Error(ErrorKind::FrameUndefined, "Lee form vanishes");
  if (st.nijenhuis_norm2() <= eps * eps) throw Error(ErrorKind::FrameUndefined, "Nijenhuis tensor vanishes");
  out.theta_norm = th;
  out.T = (1.0 / th) * st.theta().vec();
  out.JT = st.Jv(out.T);

  // unit E orthogonal to Span(T, JT); the complement is spanned by E, JE
  Vec4<double> e{};
  double best = -1;
  for (int i = 0; i < kDim; ++i) {
    Vec4<double> v = unit_vec<double>(i);
    v = v - dot(v, out.T) * out.T - dot(v, out.JT) * out.JT;
    double n = vnorm(v);
    if (n > best) {
      best = n;
      e = (1.0 / n) * v;
    }
  }
  Vec4<double> je = st.Jv(e);
  std::array<Vec4<double>, 2> basis{e, je};
  double l[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) l[a][b] = dot(st.nijenhuis_vector(out.T, basis[b]), basis[a]);
  out.symmetry_residual = (l[0][1] - l[1][0]) * (l[0][1] - l[1][0]) + (l[0][0] + l[1][1]) * (l[0][0] + l[1][1]);

  double p = 0.5 * (l[0][0] - l[1][1]);
  double q = 0.5 * (l[0][1] + l[1][0]);
  double lam = std::hypot(p, q);
  if (lam <= eps) throw Error(ErrorKind::FrameUndefined, "N(T, .) vanishes on the complement");
  out.lambda = lam;
  // eigenvector of [[p, q], [q, -p]] for +lam
  double ang = 0.5 * std::atan2(q, p);
  out.V = std::cos(ang) * e + std::sin(ang) * je;
  out.JV = st.Jv(out.V);

  KForm<double> T1 = vform(out.T), JT1 = vform(out.JT), V1 = vform(out.V), JV1 = vform(out.JV);
  KForm<double> psi = wedge(T1, V1) - wedge(JT1, JV1);
  KForm<double> jpsi = wedge(JT1, V1) + wedge(T1, JV1);
  out.psi_gauge = Gauge<double>{psi, jpsi};

  double nf = 0;
  for (int x = 0; x < kDim; ++x) {
    KForm<double> model = (lam * out.V[x]) * psi - (lam * out.JV[x]) * jpsi;
    nf += norm2(st.nijenhuis()[x] - model);
  }
  out.normal_form_residual = nf;

  GaugeOneForms<double> f = one_forms_of(st, out.psi_gauge);
  out.ta = f.a;
  out.tb = f.b;
  out.tc = f.c;
  out.ta_residual = norm2(f.a - (0.5 * (th - lam)) * JV1);
  out.tb_residual = norm2(f.b + (0.5 * (th + lam)) * V1);
  double tb2 = norm2(f.b);
  out.mu = tb2 > 0 ? form_inner(f.c, f.b) / tb2 : 0.0;
  out.mu_residual = norm2(f.c - out.mu * f.b);
  out.dtheta_pairing = form_inner(st.d(st.theta()), jpsi) - out.mu * th * th;
  return out;
}

#define GRAYFORM_INSTANTIATE(T)                                                            \
  template GaugeOneForms<T> gauge_one_forms(const Structure<T>&, const Gauge<T>&);         \
  template T gauge_reconstruction_defect(const Structure<T>&, const Gauge<T>&,             \
                                         const GaugeOneForms<T>&);                         \
  template KForm<T> phi_form(const Structure<T>&);                                         \
  template KForm<T> phi_form_nijenhuis(const Structure<T>&);                               \
  template KForm<T> nijenhuis_pairing(const Structure<T>&);                                \
  template KForm<T> chern_form(const Structure<T>&);                                       \
  template KForm<T> alpha_form(const Structure<T>&);                                       \
  template T star_top(const Structure<T>&, const KForm<T>&);                               \
  template SekigawaTerms<T> sekigawa_pointwise(const Structure<T>&);                       \
  template PairField<T> second_derivative_commutator(const Structure<T>&, const KForm<T>&); \
  template PairField<T> invariant_g1_identity(const Structure<T>&);                        \
  template G1Defects<T> g1_defects(const Structure<T>&, const Gauge<T>&);                  \
  template KForm<T> trace_free_ricci_form(const Structure<T>&);                            \
  template KForm<T> rough_laplacian(const Structure<T>&, const KForm<T>&);                 \
  template TwoFormField<T> cotton_york(const Structure<T>&);                               \
  template TwoFormField<T> a_field(const Structure<T>&);                                   \
  template TwoFormField<T> weyl_divergence(const Structure<T>&, const Mat6<T>&);           \
  template KForm<T> j_invariant_divergence_defect(const Structure<T>&, const Mat4<T>&);

GRAYFORM_INSTANTIATE(Rational)
GRAYFORM_INSTANTIATE(double)

}  // namespace grayform
