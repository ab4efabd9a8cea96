#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace grayform {

using Rational = mpq_class;

/// Error categories surfaced by the library; the CLI maps them to exit codes.
enum class ErrorKind {
  InvalidInput,
  InvalidAlgebra,
  GaugeDegenerate,
  GaugeIrrational,
  FrameUndefined,
  Unresolved,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Comparison tolerance for the float backend. Ignored by the rational backend.
struct Tol {
  double eps = 0.0;
};

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static Rational frac(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  static bool is_zero(const Rational& x, Tol = {}) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational abs(const Rational& x) { return ::abs(x); }

  /// Exact square root when x is the square of a rational.
  static std::optional<Rational> sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
  }

  /// "p/q" with q always present, e.g. "0/1", "-3/4".
  static std::string to_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
  }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static double frac(long p, long q = 1) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static bool is_zero(double x, Tol tol = {}) { return std::fabs(x) <= tol.eps; }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
  static std::optional<double> sqrt(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
  }
  static std::string to_string(double x);
};

template <class T>
inline T sfrac(long p, long q = 1) {
  return ScalarOps<T>::frac(p, q);
}

template <class T>
inline bool is_zero(const T& x, Tol tol = {}) {
  return ScalarOps<T>::is_zero(x, tol);
}

template <class T>
inline double to_double(const T& x) {
  return ScalarOps<T>::to_double(x);
}

/// Parses "p/q", "p", or a decimal literal into an exact rational.
Rational parse_rational(const std::string& text);

template <class T>
T convert_scalar(const Rational& x);

template <>
inline Rational convert_scalar<Rational>(const Rational& x) {
  return x;
}
template <>
inline double convert_scalar<double>(const Rational& x) {
  return x.get_d();
}

/// Backend conversion; double -> Rational is exact on the binary value.
template <class U, class T>
inline U scalar_cast(const T& x) {
  if constexpr (std::is_same_v<U, T>)
    return x;
  else if constexpr (std::is_same_v<U, double>)
    return to_double(x);
  else
    return Rational(x);
}

}  // namespace grayform
