#pragma once

// Verification suites over a single structure. Every identity row carries a
// squared residual; measurement rows report values without a pass criterion.

#include <string>
#include <vector>

#include "grayform/invariants.hpp"
#include "grayform/report.hpp"

namespace grayform {

enum class SuiteKind { S2, Bianchi, Sekigawa, G1, AH1, H1 };

std::string_view suite_name(SuiteKind k);
/// Throws InvalidInput on an unknown name.
SuiteKind suite_from_name(std::string_view name);
std::vector<SuiteKind> all_suites();

/// Connection, first-order data, Phi, gamma, alpha, the scalar relation and
/// the Weitzenbock formula for omega.
template <class T>
SuiteReport suite_s2(const Structure<T>& st);

/// Ricci-form identities, the J-invariant divergence helper, Cotton-York and
/// the self-dual / anti-self-dual Bianchi identities.
template <class T>
SuiteReport suite_bianchi(const Structure<T>& st);

/// Pointwise Sekigawa density and both c1^2 routes.
template <class T>
SuiteReport suite_sekigawa(const Structure<T>& st);

/// Defects of the equivalent first-Gray-condition characterizations.
template <class T>
SuiteReport suite_g1(const Structure<T>& st);

/// Consequences of the first Gray condition; not applicable unless d1 = 0.
template <class T>
SuiteReport suite_ah1(const Structure<T>& st);

/// Hermitian case; not applicable unless N = 0.
template <class T>
SuiteReport suite_h1(const Structure<T>& st);

template <class T>
SuiteReport run_suite(const Structure<T>& st, SuiteKind k);

/// Aligned-frame rows (float). Adds not-applicable rows when the frame is undefined.
void append_aligned_rows(SuiteReport& rep, const Structure<double>& st, bool g1, double eps);

/// Fit of grad theta to the Lie algebra normal form
/// 1/2 J theta (x) J theta + p (x) V + Jp (x) JV with p = x theta + y J theta.
struct NormalFormFit {
  double x = 0, y = 0;
  double residual = 0;
};

/// Throws FrameUndefined when theta vanishes.
NormalFormFit fit_h1_normal_form(const Structure<double>& st, double eps = 1e-12);

}  // namespace grayform
