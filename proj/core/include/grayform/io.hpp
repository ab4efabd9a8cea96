#pragma once

// JSON and CSV formats: algebra specs, run reports, search reports, f-specs
// and torus tables. Malformed input throws Error(InvalidInput).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grayform/search.hpp"
#include "grayform/suites.hpp"
#include "grayform/torus.hpp"

namespace grayform {

/// [e_i, e_j] = sum value e_k with 1-based indices; antisymmetry is completed
/// when the algebra is built. J is given in the orthonormal frame; metric is
/// the Gram matrix of the basis.
struct AlgebraSpec {
  struct Constant {
    int i = 0, j = 0, k = 0;
    Rational value;
  };
  std::string name;
  std::vector<Constant> c;
  std::optional<Mat4<Rational>> J;
  std::optional<Mat4<Rational>> metric;
};

AlgebraSpec parse_algebra_spec(std::string_view json);
std::string serialize(const AlgebraSpec& spec);
AlgebraSpec to_spec(const LieAlgebra4<Rational>& alg, const std::string& name);

/// Structure constants in the given basis. Throws InvalidAlgebra when Jacobi fails.
LieAlgebra4<Rational> to_algebra(const AlgebraSpec& spec);

/// Frame f_a = sum_i F(i, a) e_i orthonormal for the Gram matrix, when every
/// Cholesky pivot is a rational square. Throws InvalidInput on a matrix that
/// is not symmetric positive definite.
std::optional<Mat4<Rational>> rational_orthonormal_frame(const Mat4<Rational>& gram);
Mat4<double> float_orthonormal_frame(const Mat4<double>& gram);

/// "standard", "anti-standard", "alt", "alt-anti". Throws InvalidInput otherwise.
AcsJ<Rational> named_j(const std::string& name);

std::string run_report_json(const std::string& algebra, const std::string& j,
                            const std::string& backend, const std::vector<SuiteReport>& suites);
std::string search_report_json(const SearchReport& rep);

FSpec parse_fspec(std::string_view json);
std::string serialize(const FSpec& spec);

std::string torus_csv_header();
std::string torus_csv_row(const TorusReport& r);
std::string convergence_csv(const ConvergenceResult& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace grayform
