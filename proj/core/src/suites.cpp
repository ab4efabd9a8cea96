#include "grayform/suites.hpp"

#include <chrono>
#include <cmath>

namespace grayform {

std::string_view suite_name(SuiteKind k) {
  switch (k) {
    case SuiteKind::S2: return "s2";
    case SuiteKind::Bianchi: return "bianchi";
    case SuiteKind::Sekigawa: return "sekigawa";
    case SuiteKind::G1: return "g1";
    case SuiteKind::AH1: return "ah1";
    case SuiteKind::H1: return "h1";
  }
  return "?";
}

SuiteKind suite_from_name(std::string_view name) {
  for (SuiteKind k : all_suites())
    if (suite_name(k) == name) return k;
  throw Error(ErrorKind::InvalidInput, "unknown suite: " + std::string(name));
}

std::vector<SuiteKind> all_suites() {
  return {SuiteKind::S2, SuiteKind::Bianchi, SuiteKind::Sekigawa,
          SuiteKind::G1, SuiteKind::AH1,     SuiteKind::H1};
}

namespace {

using Clock = std::chrono::steady_clock;
using IT = IdentityTag;

template <class T>
struct Builder {
  SuiteReport rep;
  Tol tol;
  Clock::time_point start = Clock::now();

  Builder(SuiteKind k, Tol t) : tol(t) { rep.name = std::string(suite_name(k)); }

  void id(IT tag, std::string detail, const T& residual) {
    rep.rows.push_back(identity_row(tag, std::move(detail), residual, tol));
  }
  void meas(IT tag, std::string detail, const T& value) {
    rep.rows.push_back(measurement_row(tag, std::move(detail), value));
  }
  void check(IT tag, std::string detail, bool pass, std::string value = {}) {
    rep.rows.push_back(check_row(tag, std::move(detail), pass, std::move(value)));
  }
  void na(IT tag, std::string detail) {
    Row r{tag, std::move(detail), RowKind::Identity, "", 0.0, true, false};
    rep.rows.push_back(std::move(r));
  }
  SuiteReport done() {
    rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return std::move(rep);
  }
};

template <class T>
T sq(const T& x) {
  return x * x;
}

template <class T>
KForm<T> e1(int i) {
  return KForm<T>::one_form(unit_vec<T>(i));
}

template <class T>
KForm<T> pair_of(const KForm<T>& f, int x, int y) {
  KForm<T> r(0);
  r[0] = f(x, y);
  return r;
}

template <class T>
Structure<double> as_double(const Structure<T>& st) {
  if constexpr (std::is_same_v<T, double>)
    return st;
  else
    return st.template convert<double>(Tol{1e-9});
}

template <class T>
Mat4<T> trace_free_ricci(const Structure<T>& st) {
  return st.ricci().ric - T(st.ricci().s / T(4)) * Mat4<T>::identity();
}

/// Deterministic J-invariant symmetric sample for the divergence helper.
template <class T>
Mat4<T> sample_invariant_symmetric(const Structure<T>& st) {
  Mat4<T> m;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m(i, j) = sfrac<T>(((3 * i + 5 * j + 1) % 7) - 3, 1 + (i + j) % 3);
  return tensor_invariant_part(st.J(), symmetric_part(m));
}

}  // namespace

template <class T>
SuiteReport suite_s2(const Structure<T>& st) {
  Builder<T> b(SuiteKind::S2, st.tol());
  const auto& G = st.gamma();
  const RicciData<T>& rd = st.ricci();
  const U2Curv<T>& u = st.u2();
  const KForm<T>& w = st.omega();
  const KForm<T>& th = st.theta();
  const KForm<T>& jth = st.j_theta();
  T th2 = norm2(th);
  T half = sfrac<T>(1, 2);

  b.id(IT::ConnectionMetric, "nabla g = 0", metric_defect(G));
  b.id(IT::ConnectionTorsion, "torsion free", torsion_defect(st.alg(), G));
  b.id(IT::CurvatureSymmetries, "pair symmetries and first Bianchi", curvature_symmetry_defect(st.R()));

  T dd(0);
  for (const KForm<T>& f : {th, jth, w, rd.rho_star, st.d_omega()})
    dd += norm2(st.d(f) - ext_d_nabla(G, f));
  b.id(IT::ExteriorDerivativeRoutes, "bracket vs connection", dd);
  T cd(0);
  for (const KForm<T>& f : {th, w, rd.rho, st.d_omega(), volume_form<T>()})
    cd += norm2(st.delta(f) - codiff_nabla(G, f));
  b.id(IT::CodifferentialRoutes, "-*d* vs -trace nabla", cd);

  T nd(0), nj(0);
  for (int x = 0; x < kDim; ++x) {
    KForm<T> X = e1<T>(x);
    KForm<T> model = half * (wedge(X, jth) + wedge(st.J1(X), th)) +
                     half * st.nijenhuis_at(st.Jv(unit_vec<T>(x)));
    nd += norm2(st.nabla_omega()[x] - model);
    nj += norm2(st.nijenhuis_at(st.Jv(unit_vec<T>(x))) + st.J2(st.nijenhuis()[x]));
  }
  b.id(IT::NablaOmegaDecomposition, "nabla omega in terms of theta and N", nd);
  b.id(IT::NijenhuisRoutes, "bracket vs J nabla_X omega - nabla_JX omega",
       field_norm2(field_minus(nijenhuis_from_nabla_omega(st), st.nijenhuis())));
  b.id(IT::NijenhuisJAntiLinear, "N_JX = -J N_X", nj);
  b.id(IT::LeeForm, "d omega = theta ^ omega", norm2(st.d_omega() - wedge(th, w)));

  const Gauge<T>& g = st.gauge();
  GaugeOneForms<T> f = gauge_one_forms(st, g);
  b.id(IT::GaugeReconstruction, "nabla omega, nabla phi, nabla J phi", gauge_reconstruction_defect(st, g, f));
  b.id(IT::GaugeLeeRelation, "J phi(theta) = a - Jb", norm2(act(g.jphi, th) - (f.a - st.J1(f.b))));
  b.id(IT::GaugeNijenhuisRelation, "n = a + Jb", norm2(f.n - (f.a + st.J1(f.b))));
  T nf(0);
  KForm<T> jn = st.J1(f.n);
  for (int x = 0; x < kDim; ++x) {
    nf += norm2(st.nijenhuis()[x] - (jn[x] * g.phi + f.n[x] * g.jphi));
    nf += norm2(st.nijenhuis_at(st.Jv(unit_vec<T>(x))) - (f.n[x] * g.phi - jn[x] * g.jphi));
  }
  b.id(IT::GaugeNijenhuisForm, "N in the gauge", nf);

  KForm<T> phi = phi_form(st);
  b.id(IT::PhiNijenhuisRoute, "expansion in theta and N", norm2(phi - phi_form_nijenhuis(st)));
  b.id(IT::PhiGaugeRoute, "Phi = a ^ b", norm2(phi - wedge(f.a, f.b)));
  b.id(IT::PhiSquare, "Phi ^ Phi = 0", norm2(wedge(phi, phi)));
  b.id(IT::PhiTrace, "<Phi, omega> = -|N|^2/16 + |theta|^2/4",
       sq(T(form_inner(phi, w) + st.nijenhuis_norm2() / T(16) - th2 / T(4))));
  b.id(IT::PhiAntiInvariant, "Phi'' = -N_{J theta}/4",
       norm2(anti_part(st.J(), phi) + sfrac<T>(1, 4) * st.nijenhuis_at(st.Jv(th.vec()))));
  KForm<T> gamma = chern_form(st);
  b.id(IT::ChernFormExact, "rho* + Phi = -dc", norm2(gamma + st.d(f.c)));
  b.id(IT::ChernFormClosed, "d gamma = 0", norm2(st.d(gamma)));

  std::array<T, 4> ri = ricci_identity_residuals(rd, st.J());
  b.id(IT::StarRicciTwist, "Ric*(JX,JY) = Ric*(Y,X)", ri[0]);
  b.id(IT::RicciFormInvariant, "rho J-invariant", ri[1]);
  b.id(IT::StarRicciFormTraceFree, "(rho*)'_0 = rho_0", ri[2]);
  b.id(IT::StarRicciSymmetricPart, "Ric*sym - Ric' = (s*-s)/4 g", ri[3]);
  b.id(IT::U2Reconstruction, "components sum to the curvature operator", reconstruction_defect(u, st.op()));
  b.id(IT::W3Shape, "W3+ in the gauge", w3_shape_defect(u, g));
  b.id(IT::WPlusNorm, "|W+|^2 = kappa^2/24 + |rho*''|^2 + |W3+|^2",
       sq(T(u.wplus.norm2() - (u.kappa * u.kappa / T(24) + norm2(u.rho_star_anti) + w3_norm2(u)))));
  b.id(IT::KappaStarScalar, "kappa = (3 s* - s)/2", sq(T(u.kappa - (T(3) * rd.s_star - rd.s) / T(2))));

  T ds = rd.s_star - rd.s;
  b.id(IT::ScalarCurvatureRelation, "s* - s = 2/3 (kappa - s)", sq(T(ds - sfrac<T>(2, 3) * (u.kappa - rd.s))));
  b.id(IT::ScalarCurvatureRelation, "s* - s = |N|^2/4 - |theta|^2 - 2 delta theta",
       sq(T(ds - (st.nijenhuis_norm2() / T(4) - th2 - T(2) * st.delta_theta()))));

  KForm<T> lap = st.d(st.delta_omega()) + st.delta(st.d_omega());
  KForm<T> rough = rough_laplacian(st, w);
  b.id(IT::WeitzenbockOmega, "Delta omega = nabla*nabla omega + s/3 omega - 2 W+ omega",
       norm2(lap - (rough + T(rd.s / T(3)) * w - T(2) * u.wplus.apply(w))));
  T nw2 = field_norm2(st.nabla_omega());
  b.id(IT::WeitzenbockOmegaComponent, "<Delta omega, omega> = |nabla omega|^2 + 2/3 (s - kappa)",
       sq(T(form_inner(lap, w) - (nw2 + sfrac<T>(2, 3) * (rd.s - u.kappa)))));

  KForm<T> al = alpha_form(st);
  KForm<T> djt = st.d(jth);
  b.id(IT::DJThetaConnection, "d J theta = nabla_theta omega - iota_theta d omega - alpha",
       norm2(djt - (at(st.nabla_omega(), th.vec()) - interior(th.vec(), st.d_omega()) - al)));
  KForm<T> njt = st.nijenhuis_at(st.Jv(th.vec()));
  b.id(IT::DJThetaExpanded, "d J theta = N_{J theta}/2 + theta ^ J theta - |theta|^2 omega - alpha",
       norm2(djt - (half * njt + wedge(th, jth) - th2 * w - al)));
  b.id(IT::AlphaTrace, "<alpha, omega> = delta theta", sq(T(form_inner(al, w) - st.delta_theta())));
  b.id(IT::AlphaAntiInvariant, "alpha'' = -J (d theta)''",
       norm2(anti_part(st.J(), al) + st.J2(anti_part(st.J(), st.d(th)))));
  Mat4<T> hinv = tensor_invariant_part(st.J(), symmetric_part(st.nabla_theta()));
  b.id(IT::AlphaInvariant, "alpha' = -2 (nabla theta)^sym' o J",
       norm2(invariant_part(st.J(), al) + T(2) * from_matrix(st.J().matrix().transpose() * hinv)));
  b.id(IT::PhiDJThetaResidual, "-4 Phi - dJ theta - <N_J., N.>/2 - N_{J theta}/2 - alpha = 0",
       norm2(T(-4) * phi - djt - half * nijenhuis_pairing(st) - half * njt - al));
  return b.done();
}

template <class T>
SuiteReport suite_bianchi(const Structure<T>& st) {
  Builder<T> b(SuiteKind::Bianchi, st.tol());
  const RicciData<T>& rd = st.ricci();
  const U2Curv<T>& u = st.u2();
  const KForm<T>& w = st.omega();
  const KForm<T>& th = st.theta();
  const KForm<T>& jth = st.j_theta();
  const T& s = rd.s;
  const T& kappa = u.kappa;
  T half = sfrac<T>(1, 2);
  Orientation o = st.orient();

  b.id(IT::ContractedBianchi, "delta Ric = 0", norm2(divergence(st.gamma(), rd.ric)));

  KForm<T> rho0 = trace_free_ricci_form(st);
  KForm<T> jdiv = st.J1(divergence(st.gamma(), u.ric0_anti));
  KForm<T> sjdiv = hodge(jdiv, o);
  T s4 = s / T(4);
  b.id(IT::RicciFormCodifferential, "delta(rho0 - s/4 omega) = s/4 J theta + iota_theta rho0 - J delta Ric0''",
       norm2(st.delta(rho0 - s4 * w) - (s4 * jth + interior(th.vec(), rho0) - jdiv)));
  b.id(IT::RicciFormDifferential, "d rho = s/4 theta ^ omega - theta ^ rho0 + *(J delta Ric0'')",
       norm2(st.d(rd.rho) - (s4 * wedge(th, w) - wedge(th, rho0) + sjdiv)));
  b.id(IT::TraceFreeRicciFormDifferential, "d rho0 = -theta ^ rho0 + *(J delta Ric0'')",
       norm2(st.d(rho0) - (sjdiv - wedge(th, rho0))));

  b.id(IT::JInvariantDivergence, "b = Ric0'", norm2(j_invariant_divergence_defect(st, u.ric0_inv)));
  b.id(IT::JInvariantDivergence, "b = fixed sample",
       norm2(j_invariant_divergence_defect(st, sample_invariant_symmetric(st))));

  TwoFormField<T> C = cotton_york(st);
  TwoFormField<T> A = a_field(st);
  TwoFormField<T> nrho0 = st.nabla_form(rho0);
  const KForm<T>& rsa = u.rho_star_anti;
  TwoFormField<T> nrsa = st.nabla_form(rsa);
  KForm<T> drsa = st.delta(rsa);
  TwoFormField<T> dw = weyl_divergence(st, u.wplus + u.wminus);
  TwoFormField<T> dwp = weyl_divergence(st, u.wplus);
  TwoFormField<T> dwm = weyl_divergence(st, u.wminus);
  TwoFormField<T> dw1 = weyl_divergence(st, u.w1plus);
  TwoFormField<T> dw2 = weyl_divergence(st, u.w2plus);
  TwoFormField<T> dw3 = weyl_divergence(st, u.w3plus);
  KForm<T> ricth = tensor_slot(u.ric0_inv, th.vec());
  KForm<T> jricth = st.J1(ricth);

  T cy(0), wd(0), wdp(0), wdm(0), w1(0), w2(0), sd(0), asd(0);
  for (int z = 0; z < kDim; ++z) {
    Vec4<T> Z = unit_vec<T>(z);
    Vec4<T> JZ = st.Jv(Z);
    KForm<T> Zf = e1<T>(z);
    KForm<T> ricz = tensor_slot(u.ric0_inv, Z);
    KForm<T> thz = anti_part(st.J(), wedge(th, Zf));
    KForm<T> thricz = anti_part(st.J(), wedge(th, ricz));
    SdSplit<T> as = sd_split(A[z], o);
    SdSplit<T> cs = sd_split(C[z], o);

    KForm<T> cyr = at(nrho0, JZ) - jth[z] * rho0 + jricth[z] * w + thricz +
                   half * st.nijenhuis_at(st.Jv(interior(Z, rho0).vec())) - A[z];
    cy += norm2(T(2) * C[z] - cyr);
    wd += norm2(dw[z] - C[z]);
    wdp += norm2(dwp[z] - cs.plus);
    wdm += norm2(dwm[z] - cs.minus);

    KForm<T> m1 = T(-kappa / T(8) * jth[z]) * w + T(kappa / T(8)) * thz - T(kappa / T(16)) * st.nijenhuis()[z];
    w1 += norm2(dw1[z] - m1);
    KForm<T> rz = interior(Z, rsa);
    KForm<T> m2 = half * at(nrsa, JZ) + half * at(st.nabla_omega(), rz.vec()) - T(half * jth[z]) * rsa +
                  T(half * drsa[z]) * w;
    w2 += norm2(dw2[z] - m2);

    KForm<T> e6 = T(-kappa / T(4) * jth[z]) * w - jricth[z] * w + T(kappa / T(4)) * thz - thricz +
                  half * st.nijenhuis_at(ricz.vec()) - T(kappa / T(8)) * st.nijenhuis()[z] + drsa[z] * w +
                  at(st.nabla_omega(), rz.vec()) - jth[z] * rsa + at(nrsa, JZ) + T(2) * dw3[z] + as.plus;
    sd += norm2(e6);
    asd += norm2(at(nrho0, JZ) - jth[z] * rho0 - T(2) * dwm[z] - as.minus);
  }
  b.id(IT::CottonYork, "2 C_Z expansion with A_Z", cy);
  b.id(IT::WeylDivergence, "delta W = C", wd);
  b.id(IT::WeylDivergencePlus, "delta W+ = C+", wdp);
  b.id(IT::WeylDivergenceMinus, "delta W- = C-", wdm);
  b.id(IT::DivergenceW1Plus, "delta W1+ expression", w1);
  b.id(IT::DivergenceW2Plus, "delta W2+ expression", w2);
  b.id(IT::SelfDualBianchi, "self-dual Bianchi identity", sd);
  b.id(IT::AntiSelfDualBianchi, "anti-self-dual Bianchi identity", asd);
  return b.done();
}

template <class T>
SuiteReport suite_sekigawa(const Structure<T>& st) {
  Builder<T> b(SuiteKind::Sekigawa, st.tol());
  SekigawaTerms<T> t = sekigawa_pointwise(st);
  if (st.unimodular()) {
    b.id(IT::SekigawaDensity, "S = 0 on a unimodular algebra", t.density);
    b.id(IT::ChernSquareDensity, "c1^2 density vanishes (unimodular)", t.chern_square);
    b.id(IT::ChernWeilDensity, "Chern-Weil density vanishes (unimodular)", t.chern_weil);
  } else {
    b.meas(IT::SekigawaDensity, "S", t.density);
    b.meas(IT::ChernSquareDensity, "c1^2 density", t.chern_square);
    b.meas(IT::ChernWeilDensity, "Chern-Weil density", t.chern_weil);
  }
  b.id(IT::SekigawaRouteDifference, "S = Chern-Weil - c1^2 density", sq(T(t.density - (t.chern_weil - t.chern_square))));
  b.id(IT::ChernSquareDensity, "= *(gamma ^ gamma)", sq(T(t.chern_square - t.gamma_square)));
  b.id(IT::ChernWeilDensity, "= s^2/24 - |Ric0|^2/2 + 2|W+|^2", sq(T(t.chern_weil - t.euler_signature)));
  return b.done();
}

template <class T>
SuiteReport suite_g1(const Structure<T>& st) {
  Builder<T> b(SuiteKind::G1, st.tol());
  const Gauge<T>& g = st.gauge();
  G1Defects<T> d = g1_defects(st, g);
  b.meas(IT::GrayG1, "d1", d.gray);
  b.meas(IT::G1Components, "|Ric0''|^2 + |rho*''|^2 + (w3a^2 + w3b^2) + (kappa - s)^2", d.components);
  b.meas(IT::SecondDerivativeCommutator, "sum |(nabla^2_XY - nabla^2_YX) omega|^2", d.commutator);
  b.meas(IT::GaugeStructureEquations, "|da - c ^ b|^2 + |db + c ^ a|^2", d.structure);
  b.meas(IT::InvariantG1Identity, "invariant identity defect", d.invariant);

  PairField<T> com = second_derivative_commutator(st, st.omega());
  PairField<T> inv = invariant_g1_identity(st);
  GaugeOneForms<T> f = gauge_one_forms(st, g);
  KForm<T> da = st.d(f.a) - wedge(f.c, f.b);
  KForm<T> db = st.d(f.b) + wedge(f.c, f.a);
  const Mat4<T>& m = st.J().matrix();
  const CurvTensor<T>& R = st.R();
  T ri(0), gs(0), tw(0);
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y) {
      const KForm<T>& cxy = com[4 * x + y];
      KForm<T> curv(2);
      for (std::size_t s = 0; s < curv.size(); ++s) {
        int mk = curv.mask(s);
        int a = __builtin_ctz(mk);
        int c = 31 - __builtin_clz(mk);
        T v(0);
        for (int i = 0; i < kDim; ++i) v -= m(i, a) * R(x, y, i, c) + m(i, c) * R(x, y, a, i);
        curv[s] = v;
      }
      ri += norm2(cxy - curv);
      gs += norm2(cxy - (da(x, y) * g.phi + db(x, y) * g.jphi));
      tw += norm2(inv[4 * x + y] - T(2) * cxy);
    }
  b.id(IT::RicciIdentityOmega, "commutator = -R_XY(J.,.) - R_XY(.,J.)", ri);
  b.id(IT::CommutatorGaugeSplit, "commutator = (da - c^b) phi + (db + c^a) J phi", gs);
  b.id(IT::InvariantG1Identity, "invariant identity = 2 commutator", tw);

  Tol tol = st.tol();
  bool z1 = is_zero(d.gray, tol), z2 = is_zero(d.components, tol), z3 = is_zero(d.commutator, tol),
       z4 = is_zero(d.structure, tol), z5 = is_zero(d.invariant, tol);
  bool all0 = z1 && z2 && z3 && z4 && z5;
  bool none0 = !z1 && !z2 && !z3 && !z4 && !z5;
  b.check(IT::G1Equivalence, "defects vanish simultaneously", all0 || none0, all0 ? "G1" : (none0 ? "not G1" : "mixed"));
  GrayDefects<T> gd = gray_defects(R, st.J());
  bool chain = (!is_zero(gd.d1, tol) || is_zero(gd.d2, tol)) && (!is_zero(gd.d2, tol) || is_zero(gd.d3, tol)) &&
               (!is_zero(gd.d3, tol) || is_zero(gd.d4, tol));
  b.check(IT::GrayChain, "G1 => G2 => G3 => G4", chain);
  return b.done();
}

namespace {

template <class T>
bool frame_defined(const Structure<T>& st) {
  return !is_zero(st.nijenhuis_norm2(), st.tol()) && !is_zero(norm2(st.theta()), st.tol());
}

}  // namespace

void append_aligned_rows(SuiteReport& rep, const Structure<double>& st, bool g1, double eps) {
  Tol tol{eps};
  auto add = [&](IT tag, std::string detail, double r) { rep.rows.push_back(identity_row(tag, std::move(detail), r, tol)); };
  auto na = [&](IT tag, std::string detail) {
    rep.rows.push_back(Row{tag, std::move(detail), RowKind::Identity, "", 0.0, true, false});
  };
  AlignedFrameData af;
  try {
    af = aligned_frame(st);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::FrameUndefined) throw;
    for (IT t : {IT::AlignedNijenhuisNormalForm, IT::AlignedLambda, IT::AlignedGaugeForms, IT::AlignedMuCollinear,
                 IT::AlignedDThetaPairing})
      na(t, "frame undefined");
    return;
  }
  add(IT::AlignedNijenhuisNormalForm, "N in the aligned frame", af.normal_form_residual + af.symmetry_residual);
  add(IT::AlignedLambda, "lambda^2 = |N|^2/4", (af.lambda * af.lambda - st.nijenhuis_norm2() / 4) *
                                                   (af.lambda * af.lambda - st.nijenhuis_norm2() / 4));
  add(IT::AlignedGaugeForms, "ta = (|theta| - lambda)/2 JV, tb = -(|theta| + lambda)/2 V",
      af.ta_residual + af.tb_residual);
  rep.rows.push_back(measurement_row(IT::AlignedMuCollinear, "mu", af.mu));
  bool gauduchon = std::abs(st.delta_theta()) <= eps;
  if (g1) {
    add(IT::AlignedMuCollinear, "tc = mu tb", af.mu_residual);
  } else {
    na(IT::AlignedMuCollinear, "tc = mu tb (needs G1)");
  }
  if (g1 && gauduchon) {
    double l = af.lambda - af.theta_norm;
    add(IT::AlignedLambda, "lambda = |theta|", l * l);
    add(IT::AlignedGaugeForms, "ta = 0, tb = -|theta| V",
        norm2(af.ta) + norm2(af.tb + af.theta_norm * KForm<double>::one_form(af.V)));
    add(IT::AlignedDThetaPairing, "<d theta, J psi> = mu |theta|^2", af.dtheta_pairing * af.dtheta_pairing);
  } else {
    na(IT::AlignedDThetaPairing, "needs G1 and delta theta = 0");
  }
}

template <class T>
SuiteReport suite_ah1(const Structure<T>& st) {
  Builder<T> b(SuiteKind::AH1, st.tol());
  Tol tol = st.tol();
  GrayDefects<T> gd = gray_defects(st.R(), st.J());
  if (!is_zero(gd.d1, tol)) {
    b.rep.applicable = false;
    b.rep.note = "first Gray condition fails (d1 = " + format_scalar(gd.d1) + ")";
    return b.done();
  }
  const RicciData<T>& rd = st.ricci();
  const KForm<T>& w = st.omega();
  const KForm<T>& th = st.theta();
  const KForm<T>& jth = st.j_theta();
  const T& s = rd.s;
  T s4 = s / T(4);
  T th2 = norm2(th);
  Mat4<T> ric0 = trace_free_ricci(st);
  bool s_zero = is_zero(s, tol);
  bool th_zero = is_zero(th2, tol);
  bool n_zero = is_zero(st.nijenhuis_norm2(), tol);

  b.id(IT::LeeEigenvector, "Ric0(theta) = -s/4 theta", norm2(tensor_slot(ric0, th.vec()) + s4 * th));
  b.id(IT::LeeEigenvector, "Ric0(J theta) = -s/4 J theta", norm2(tensor_slot(ric0, jth.vec()) + s4 * jth));
  if (!s_zero)
    b.id(IT::LeeNijenhuisOrthogonal, "|N_theta|^2 + |N_J theta|^2",
         norm2(st.nijenhuis_at(th.vec())) + norm2(st.nijenhuis_at(jth.vec())));
  else
    b.na(IT::LeeNijenhuisOrthogonal, "s = 0");
  T img(0);
  for (int a = 0; a < kDim; ++a)
    for (int c = a + 1; c < kDim; ++c) {
      Vec4<T> nv = st.nijenhuis_vector(unit_vec<T>(a), unit_vec<T>(c));
      img += norm2(tensor_slot(ric0, nv) - s4 * KForm<T>::one_form(nv));
    }
  b.id(IT::NijenhuisImageEigen, "Ric0 = s/4 on Image N", img);
  if (s_zero) {
    bool ric_zero = frobenius2(rd.ric) == T(0) || is_zero(frobenius2(rd.ric), tol);
    b.check(IT::ZeroScalarAlternative, "Ric = 0 or (theta = 0 and N = 0)", ric_zero || (th_zero && n_zero));
  } else {
    b.na(IT::ZeroScalarAlternative, "s != 0");
  }

  KForm<T> phi = phi_form(st);
  b.id(IT::RicciFormClosed, "d rho = 0", norm2(st.d(rd.rho)));
  b.id(IT::PhiClosed, "d Phi = 0", norm2(st.d(phi)));
  b.id(IT::PhiOnNijenhuisImage, "s Phi + delta theta rho = 0", norm2(s * phi + st.delta_theta() * rd.rho));
  if (!s_zero && !th_zero && !n_zero) {
    KForm<T> wim = w - T(T(1) / th2) * wedge(th, jth);
    b.id(IT::RhoOnNijenhuisImage, "rho = s/2 omega|ImN", norm2(rd.rho - T(s / T(2)) * wim));
    b.id(IT::PhiOnNijenhuisImage, "Phi = -delta theta/2 omega|ImN", norm2(phi + T(st.delta_theta() / T(2)) * wim));
    b.id(IT::PhiOnNijenhuisImage, "Phi = (|theta|^2 - |N|^2/4)/4 omega|ImN",
         norm2(phi - T((th2 - st.nijenhuis_norm2() / T(4)) / T(4)) * wim));
  } else {
    b.na(IT::RhoOnNijenhuisImage, "needs s, theta, N nonzero");
  }
  b.id(IT::StarRicciPhiWedge, "rho* ^ Phi = 0", norm2(wedge(rd.rho_star, phi)));

  T bs(0);
  KForm<T> jrt = st.J1(tensor_slot(ric0, th.vec()));
  for (int z = 0; z < kDim; ++z) {
    KForm<T> Zf = e1<T>(z);
    KForm<T> rz = tensor_slot(ric0, unit_vec<T>(z));
    KForm<T> e = T(-s4 * jth[z]) * w - jrt[z] * w + s4 * anti_part(st.J(), wedge(th, Zf)) -
                 anti_part(st.J(), wedge(th, rz)) + sfrac<T>(1, 2) * st.nijenhuis_at(rz.vec()) -
                 T(s / T(8)) * st.nijenhuis()[z];
    bs += norm2(e);
  }
  b.id(IT::G1SelfDualBianchi, "self-dual Bianchi under G1", bs);

  if (is_zero(frobenius2(ric0), tol)) {
    bool ok = s_zero || (th_zero && n_zero);
    b.check(IT::EinsteinDichotomy, "Einstein: s = 0 or Kahler", ok);
  } else {
    b.na(IT::EinsteinDichotomy, "not Einstein");
  }

  if (frame_defined(st)) {
    append_aligned_rows(b.rep, as_double(st), true, 1e-9);
  }
  return b.done();
}

NormalFormFit fit_h1_normal_form(const Structure<double>& st, double eps) {
  const KForm<double>& th = st.theta();
  double th2 = norm2(th);
  if (th2 <= eps * eps) throw Error(ErrorKind::FrameUndefined, "Lee form vanishes");
  Vec4<double> t = th.vec(), jt = st.Jv(t);
  Vec4<double> e{};
  double best = -1;
  for (int i = 0; i < kDim; ++i) {
    Vec4<double> v = unit_vec<double>(i);
    v = v - (dot(v, t) / th2) * t - (dot(v, jt) / th2) * jt;
    double n = std::sqrt(dot(v, v));
    if (n > best) {
      best = n;
      e = (1.0 / n) * v;
    }
  }
  Vec4<double> je = st.Jv(e);
  auto op = [](const Vec4<double>& a, const Vec4<double>& b) {
    Mat4<double> m;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) m(i, j) = a[i] * b[j];
    return m;
  };
  Mat4<double> r = st.nabla_theta() - 0.5 * op(jt, jt);
  Mat4<double> b1 = op(t, e) + op(jt, je);
  Mat4<double> b2 = op(jt, e) - op(t, je);
  auto ip = [](const Mat4<double>& a, const Mat4<double>& b) {
    double s = 0;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) s += a(i, j) * b(i, j);
    return s;
  };
  double a11 = ip(b1, b1), a12 = ip(b1, b2), a22 = ip(b2, b2);
  double r1 = ip(b1, r), r2 = ip(b2, r);
  double det = a11 * a22 - a12 * a12;
  NormalFormFit f;
  f.x = (a22 * r1 - a12 * r2) / det;
  f.y = (a11 * r2 - a12 * r1) / det;
  f.residual = frobenius2(r - f.x * b1 - f.y * b2);
  return f;
}

template <class T>
SuiteReport suite_h1(const Structure<T>& st) {
  Builder<T> b(SuiteKind::H1, st.tol());
  Tol tol = st.tol();
  if (!is_zero(st.nijenhuis_norm2(), tol)) {
    b.rep.applicable = false;
    b.rep.note = "J is not integrable (|N|^2 = " + format_scalar(st.nijenhuis_norm2()) + ")";
    return b.done();
  }
  const KForm<T>& th = st.theta();
  const KForm<T>& jth = st.j_theta();
  T th2 = norm2(th);
  T d1 = gray_defects(st.R(), st.J()).d1;
  T cod = T(2) * st.delta_theta() + th2;
  KForm<T> dth = st.d(th);
  Mat4<T> hess = tensor_anti_part(st.J(), st.nabla_theta()) +
                 sfrac<T>(1, 4) * (tensor_product(th, th) - tensor_product(jth, jth));
  T hd = frobenius2(hess);
  b.meas(IT::H1Codifferential, "2 delta theta + |theta|^2", cod);
  b.meas(IT::H1DThetaAnti, "|(d theta)''|^2", norm2(anti_part(st.J(), dth)));
  b.id(IT::H1DThetaTrace, "<d theta, omega> = 0", sq(form_inner(dth, st.omega())));
  b.meas(IT::H1HessianAnti, "|(nabla theta)'' + (theta theta - J theta J theta)/4|^2", hd);
  bool conds = is_zero(cod, tol) && is_zero(hd, tol);
  bool g1 = is_zero(d1, tol);
  b.check(IT::H1Characterization, "conditions hold iff d1 = 0", conds == g1,
          std::string(conds ? "conditions hold" : "conditions fail") + ", " + (g1 ? "G1" : "not G1"));
  b.check(IT::H1ForcedKahler, "G1 forces theta = 0", !g1 || is_zero(th2, tol));
  if (is_zero(th2, tol)) {
    b.na(IT::H1NormalForm, "theta = 0");
  } else {
    NormalFormFit nf = fit_h1_normal_form(as_double(st));
    b.rep.rows.push_back(measurement_row(IT::H1NormalForm, "x", nf.x));
    b.rep.rows.push_back(measurement_row(IT::H1NormalForm, "y", nf.y));
    b.rep.rows.push_back(measurement_row(IT::H1NormalForm, "fit residual", nf.residual));
    b.check(IT::H1NormalForm, "normal form iff d1 = 0", (nf.residual <= 1e-9) == g1);
  }
  return b.done();
}

template <class T>
SuiteReport run_suite(const Structure<T>& st, SuiteKind k) {
  switch (k) {
    case SuiteKind::S2: return suite_s2(st);
    case SuiteKind::Bianchi: return suite_bianchi(st);
    case SuiteKind::Sekigawa: return suite_sekigawa(st);
    case SuiteKind::G1: return suite_g1(st);
    case SuiteKind::AH1: return suite_ah1(st);
    case SuiteKind::H1: return suite_h1(st);
  }
  throw Error(ErrorKind::InvalidInput, "unknown suite");
}

#define GRAYFORM_INSTANTIATE(T)                                  \
  template SuiteReport suite_s2(const Structure<T>&);            \
  template SuiteReport suite_bianchi(const Structure<T>&);       \
  template SuiteReport suite_sekigawa(const Structure<T>&);      \
  template SuiteReport suite_g1(const Structure<T>&);            \
  template SuiteReport suite_ah1(const Structure<T>&);           \
  template SuiteReport suite_h1(const Structure<T>&);            \
  template SuiteReport run_suite(const Structure<T>&, SuiteKind);

GRAYFORM_INSTANTIATE(Rational)
GRAYFORM_INSTANTIATE(double)

}  // namespace grayform
