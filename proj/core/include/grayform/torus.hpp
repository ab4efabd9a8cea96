#pragma once

// Almost Hermitian structures omega = f1 omega1 + f2 omega2 + f3 omega3 on the
// flat 4-torus with a constant hyperKahler frame. Closed forms for theta, N and
// delta theta are compared against a finite-difference oracle built from
// nabla omega = sum dfi (x) omegai.

#include <array>
#include <vector>

#include "grayform/calculus.hpp"
#include "grayform/uh2.hpp"

namespace grayform {

/// a cos(k.x) + b sin(k.x).
struct TrigTerm {
  std::array<int, 4> k{};
  double a = 0.0;
  double b = 0.0;
};

/// Trigonometric polynomials f1, f2, f3. With renormalize set, f is replaced by
/// f/|f| at every point.
struct FSpec {
  std::array<std::vector<TrigTerm>, 3> f;
  bool renormalize = false;

  int max_wavenumber() const;
};

/// f = (cos x1, sin x1, 0).
FSpec circle_fspec();
/// f = (cos u, sin u cos v, sin u sin v) with u = k.x, v = l.x; unit without renormalizing.
FSpec sphere_fspec(const std::array<int, 4>& k = {1, 0, 1, 0}, const std::array<int, 4>& l = {0, 1, 0, -1});
/// Random degree-bounded trig polynomials around a unit constant, renormalized.
FSpec random_fspec(unsigned seed, int degree = 1, double amplitude = 0.05);

/// Value and analytic gradient of f at a point.
struct FJet {
  std::array<double, 3> f{};
  std::array<Vec4<double>, 3> df{};
};

FJet evaluate(const FSpec& spec, const Vec4<double>& x);

struct Grid4 {
  int n = 16;

  /// Throws InvalidInput unless n >= 8 and even.
  explicit Grid4(int n);
  double h() const;
  std::size_t size() const { return std::size_t(n) * n * n * n; }
  std::size_t index(const std::array<int, 4>& i) const;
  std::array<int, 4> coords(std::size_t node) const;
  Vec4<double> point(std::size_t node) const;
  /// Periodic neighbour along an axis.
  std::size_t shift(std::size_t node, int axis, int step) const;
};

struct HKFrame {
  std::array<AcsJ<double>, 3> J;
  std::array<KForm<double>, 3> omega;

  /// J1 e1 = e2, J2 e1 = e3, J3 = J1 J2.
  static HKFrame standard();
  /// Squared defect of the quaternion relations.
  double defect() const;
};

struct JField {
  Mat4<double> J;
  KForm<double> omega{2};
};

inline constexpr double kUnitNormTol = 1e-12;

/// J = sum fi Ji, omega = sum fi omegai. Throws InvalidInput when
/// | |f|^2 - 1 | > kUnitNormTol.
JField j_field(const std::array<double, 3>& f, const HKFrame& hk);

/// Pointwise invariants. N[a] is N_{e_a} as a 2-form.
struct TorusInvariants {
  KForm<double> theta{1};
  TwoFormField<double> N{KForm<double>(2), KForm<double>(2), KForm<double>(2), KForm<double>(2)};
  double delta_theta = 0.0;
  KForm<double> phi{2};
};

/// Closed forms in f and its analytic gradient.
TorusInvariants closed_form_invariants(const FJet& jet, const HKFrame& hk);

struct TorusReport {
  int n = 0;
  double h = 0.0;
  double unit_defect = 0.0;    // max | |f|^2 - 1 |
  double j_defect = 0.0;       // max |J^2 + Id|
  double theta_error = 0.0;    // max |theta - theta_fd|
  double nijenhuis_error = 0.0;
  double delta_theta_error = 0.0;
  double phi_error = 0.0;
  double scalar_residual = 0.0;  // max |N_fd|^2/4 - |theta_fd|^2 - 2 delta theta_fd|
  double lee_integral_fd = 0.0;  // integral of delta theta_fd
  double lee_integral = 0.0;     // integral of the closed-form delta theta
  double nijenhuis_integral = 0.0;  // integral of |N|^2/4
  double theta_integral = 0.0;      // integral of |theta|^2
  double seconds = 0.0;
};

/// Sampled f on a grid with the finite-difference oracle.
class TorusSolver {
 public:
  /// Throws Unresolved when a wavenumber exceeds n/4, InvalidInput on a
  /// unit-norm violation.
  TorusSolver(FSpec spec, HKFrame hk, int n);

  const Grid4& grid() const { return grid_; }
  const FSpec& spec() const { return spec_; }

  TorusInvariants closed_form(std::size_t node) const;
  /// theta, N and Phi from fourth-order differences of omega; delta theta by a
  /// difference divergence of theta.
  TorusInvariants fd_oracle(std::size_t node) const;
  /// |N|^2/4 - |theta|^2 - 2 delta theta on the oracle values.
  double scalar_relation(std::size_t node) const;

  TorusReport report() const;

 private:
  double diff(const std::vector<double>& field, std::size_t node, int axis) const;
  std::array<Vec4<double>, 3> fd_gradient(std::size_t node) const;
  TorusInvariants oracle_first_order(std::size_t node) const;

  FSpec spec_;
  HKFrame hk_;
  Grid4 grid_;
  std::array<std::vector<double>, 3> f_;
  std::array<std::vector<double>, 4> theta_fd_;
};

struct ConvergenceResult {
  TorusReport coarse, fine;
  double theta_order = 0.0;
  double nijenhuis_order = 0.0;
  double delta_theta_order = 0.0;
  double c_coarse = 0.0;  // scalar_residual / h^4
  double c_fine = 0.0;
};

ConvergenceResult convergence_study(const FSpec& spec, const HKFrame& hk, int n_coarse,
                                    int n_fine);

}  // namespace grayform
