#pragma once

// Derived invariants of a left-invariant almost Hermitian structure: gauge
// 1-forms, the forms Phi, gamma and alpha, Chern number densities, first Gray
// condition defects, and the Nijenhuis-aligned frame.

#include "grayform/structure.hpp"

namespace grayform {

/// nabla omega = a (x) phi + b (x) J phi, nabla phi = -a (x) omega + c (x) J phi,
/// N_{JX} = n(X) phi - (Jn)(X) J phi.
template <class T>
struct GaugeOneForms {
  KForm<T> a{1}, b{1}, c{1}, n{1};
};

/// Throws GaugeDegenerate when the gauge invariants fail.
template <class T>
GaugeOneForms<T> gauge_one_forms(const Structure<T>& st, const Gauge<T>& g);

/// Squared residuals of the three gauge reconstruction formulas.
template <class T>
T gauge_reconstruction_defect(const Structure<T>& st, const Gauge<T>& g,
                              const GaugeOneForms<T>& f);

/// Phi(X,Y) = 1/2 <J nabla_X omega, nabla_Y omega>.
template <class T>
KForm<T> phi_form(const Structure<T>& st);

/// -1/8 <N_{JX}, N_Y> + 1/4 (|theta|^2 omega - theta ^ J theta)(X,Y) - 1/4 N_{J theta}(X,Y).
template <class T>
KForm<T> phi_form_nijenhuis(const Structure<T>& st);

/// (X, Y) -> <N_{JX}, N_Y>.
template <class T>
KForm<T> nijenhuis_pairing(const Structure<T>& st);

/// gamma = rho* + Phi.
template <class T>
KForm<T> chern_form(const Structure<T>& st);

/// alpha(A,B) = (nabla_A theta)(JB) - (nabla_B theta)(JA).
template <class T>
KForm<T> alpha_form(const Structure<T>& st);

/// Value of a 4-form on the J-oriented volume.
template <class T>
T star_top(const Structure<T>& st, const KForm<T>& top);

template <class T>
struct SekigawaTerms {
  T density;       // (s*-s)^2/16 + |rho*''|^2 + 2|W3+|^2 - |Ric0''|^2/2 - 2 *(rho* ^ Phi)
  T chern_square;  // |rho*''|^2 + s*^2/8 - |rho0|^2 + 2 *(rho* ^ Phi)
  T chern_weil;    // s^2/24 - |rho0|^2 - |Ric0''|^2/2 + kappa^2/12 + 2|rho*''|^2 + 2|W3+|^2
  T gamma_square;  // *(gamma ^ gamma)
  T euler_signature;  // s^2/24 - |Ric0|^2/2 + 2|W+|^2
};

template <class T>
SekigawaTerms<T> sekigawa_pointwise(const Structure<T>& st);

/// Skew second derivative (X, Y) -> (nabla^2_{X,Y} - nabla^2_{Y,X}) psi, index 4 X + Y.
template <class T>
using PairField = std::array<KForm<T>, 16>;

template <class T>
PairField<T> second_derivative_commutator(const Structure<T>& st, const KForm<T>& psi);

/// Left side of the invariant first-Gray-condition identity for every frame pair,
/// with (JN)_Y = J(N_Y). Equals twice the skew second derivative of omega.
template <class T>
PairField<T> invariant_g1_identity(const Structure<T>& st);

template <class T>
T pair_norm2(const PairField<T>& f) {
  T s(0);
  for (const auto& x : f) s += norm2(x);
  return s;
}

template <class T>
struct G1Defects {
  T gray;          // d1
  T components;    // Ric'', W2+, W3+, kappa - s
  T commutator;    // skew second derivative of omega
  T structure;     // da - c ^ b, db + c ^ a
  T invariant;     // the expanded invariant identity
};

template <class T>
G1Defects<T> g1_defects(const Structure<T>& st, const Gauge<T>& g);

/// rho_0 = rho - <rho, omega>/2 omega.
template <class T>
KForm<T> trace_free_ricci_form(const Structure<T>& st);

/// Rough Laplacian -sum_a (nabla^2 psi)(e_a, e_a) of an invariant 2-form.
template <class T>
KForm<T> rough_laplacian(const Structure<T>& st, const KForm<T>& psi);

/// Cotton-York tensor C_Z(X,Y) = -(nabla_X h)(Y,Z) + (nabla_Y h)(X,Z), h = Ric0/2 + (s/24) g.
template <class T>
TwoFormField<T> cotton_york(const Structure<T>& st);

/// A_Z = (d^nabla Ric'')_Z + iota_{JZ} *(J delta Ric'').
template <class T>
TwoFormField<T> a_field(const Structure<T>& st);

/// (delta W)_Z(X,Y) = -sum_i (nabla_i W)(X, Y, e_i, Z) for a Weyl-type operator on 2-forms.
template <class T>
TwoFormField<T> weyl_divergence(const Structure<T>& st, const Mat6<T>& w);

/// delta b - <(iota_. d omega)', b o J> + J delta(b o J) for a J-invariant symmetric b.
template <class T>
KForm<T> j_invariant_divergence_defect(const Structure<T>& st, const Mat4<T>& b);

/// Nijenhuis-aligned frame; float backend only.
struct AlignedFrameData {
  Vec4<double> T, JT, V, JV;
  double lambda = 0;
  double theta_norm = 0;
  Gauge<double> psi_gauge;
  KForm<double> ta{1}, tb{1}, tc{1};
  double mu = 0;
  double mu_residual = 0;       // |tc - mu tb|^2
  double normal_form_residual = 0;
  double symmetry_residual = 0;  // asymmetry of L on the complement of Span(T, JT)
  double ta_residual = 0;
  double tb_residual = 0;
  double dtheta_pairing = 0;  // <d theta, J psi> - mu |theta|^2
};

/// Throws FrameUndefined when N or theta vanishes (within eps).
AlignedFrameData aligned_frame(const Structure<double>& st, double eps = 1e-12);

}  // namespace grayform
