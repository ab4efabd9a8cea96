#pragma once

// Almost complex structures on the frame, the fundamental form, gauges, and
// the U(2) splitting of 2-forms.

#include "grayform/exterior4.hpp"

namespace grayform {

/// Orthogonal almost complex structure stored as a frame matrix:
/// J e_j = sum_i m(i, j) e_i.
template <class T>
class AcsJ {
 public:
  AcsJ() = default;
  /// Validates J^2 = -Id and J^T J = Id (exact on rationals, within tol on floats).
  explicit AcsJ(const Mat4<T>& m, Tol tol = {});

  /// J e_a = e_b, J e_c = sign * e_d (0-based), completed by J^2 = -Id.
  static AcsJ from_pairs(int a, int b, int c, int d, int sign = 1);

  const Mat4<T>& matrix() const { return m_; }
  Vec4<T> apply(const Vec4<T>& v) const { return m_.apply(v); }
  Vec4<T> column(int j) const {
    Vec4<T> v;
    for (int i = 0; i < kDim; ++i) v[i] = m_(i, j);
    return v;
  }
  AcsJ negated() const;

  friend bool operator==(const AcsJ& a, const AcsJ& b) { return a.m_ == b.m_; }

 private:
  Mat4<T> m_ = Mat4<T>::identity();
};

/// omega(X, Y) = <JX, Y>.
template <class T>
KForm<T> fundamental_form(const AcsJ<T>& J);

/// (J alpha)(X) = -alpha(JX).
template <class T>
KForm<T> j_one_form(const AcsJ<T>& J, const KForm<T>& alpha);

/// psi(J., J.).
template <class T>
KForm<T> j_conjugate(const AcsJ<T>& J, const KForm<T>& psi);

/// (J psi)(X, Y) = -psi(JX, Y); the complex structure on [[Lambda^{0,2}]].
template <class T>
KForm<T> j_two_form(const AcsJ<T>& J, const KForm<T>& psi);

/// J-invariant part psi' = (psi + psi(J., J.)) / 2.
template <class T>
KForm<T> invariant_part(const AcsJ<T>& J, const KForm<T>& psi);

/// J-anti-invariant part psi'' = (psi - psi(J., J.)) / 2.
template <class T>
KForm<T> anti_part(const AcsJ<T>& J, const KForm<T>& psi);

/// Orientation in which omega^2 / 2 is the positive volume form.
template <class T>
Orientation j_orientation(const AcsJ<T>& J);

template <class T>
struct U2SplitOf2Form {
  T trace;        // <psi, omega>
  KForm<T> inv0;  // Lambda^{1,1}_0 part
  KForm<T> anti;  // [[Lambda^{0,2}]] part
};

template <class T>
U2SplitOf2Form<T> split_two_form(const KForm<T>& psi, const AcsJ<T>& J);

/// Unit section phi of [[Lambda^{0,2}]] (|phi|^2 = 2) and J phi.
template <class T>
struct Gauge {
  KForm<T> phi;
  KForm<T> jphi;
};

/// Normalizes the anti-invariant part of the seed. Throws GaugeDegenerate when
/// that part vanishes, and GaugeIrrational on the rational backend when the
/// normalization factor is not rational.
template <class T>
Gauge<T> make_gauge(const AcsJ<T>& J, const KForm<T>& seed, Tol tol = {});

/// Deterministic gauge: seeds e13, e12, e14 (then the remaining monomials on
/// the rational backend), first usable one wins.
template <class T>
Gauge<T> default_gauge(const AcsJ<T>& J, Tol tol = {});

/// Checks the gauge invariants; returns the sum of squared violations.
template <class T>
T gauge_defect(const AcsJ<T>& J, const Gauge<T>& g);

/// Push-forward of a 2-form by an orthogonal matrix: (O psi)(X,Y) = psi(O^T X, O^T Y).
template <class T>
KForm<T> push_forward(const Mat4<T>& o, const KForm<T>& psi);

/// Endomorphism action of a 2-form on a 1-form: psi(alpha) = iota_{alpha^sharp} psi.
template <class T>
KForm<T> act(const KForm<T>& psi, const KForm<T>& alpha) {
  return interior(alpha.vec(), psi);
}

}  // namespace grayform
