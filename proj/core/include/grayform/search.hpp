#pragma once

// Multistart search for non-Kahler structures satisfying the first Gray
// condition on a fixed Lie algebra. Negative results are empirical floors.

#include <array>
#include <cstdint>
#include <vector>

#include "grayform/structure.hpp"

namespace grayform {

/// Inner product with Gram matrix L L^T in the algebra basis; J from the unit
/// (anti-)self-dual form sum u_i sigma_i of the induced metric.
struct StructureParams {
  Mat4<double> chol = Mat4<double>::identity();  // lower triangular, positive diagonal
  std::array<double, 3> jsphere{1.0, 0.0, 0.0};
  int orient = 1;
};

/// Orthonormal frame f_a = sum_i (L^{-T})_{ia} e_i. Throws InvalidInput on a
/// singular or non-triangular chol or a non-unit jsphere.
Structure<double> realize(const LieAlgebra4<double>& alg, const StructureParams& p,
                          Tol tol = Tol{1e-9});

/// Compatible J for a unit vector u and orientation sign; u = (1,0,0) gives
/// J e1 = e2, J e3 = orient e4.
AcsJ<double> j_from_sphere(const std::array<double, 3>& u, int orient);

/// (kappa - s)^2 + |rho*''|^2 + w3a^2 + w3b^2 + |Ric0''|^2.
double defect(const LieAlgebra4<double>& alg, const StructureParams& p);

/// |N|^2 + |theta|^2.
double kahler_margin(const LieAlgebra4<double>& alg, const StructureParams& p);

struct SearchConfig {
  int starts = 20;
  std::uint64_t seed = 7;
  double margin = 0.1;
  double penalty = 1e3;
  double fd_step = 1e-6;  // relative
  double gtol = 1e-10;
  int max_iterations = 500;
  double found_threshold = 1e-12;
};

struct StartResult {
  int index = 0;
  double defect = 0.0;
  double margin = 0.0;
  double objective = 0.0;
  int iterations = 0;
  StructureParams params;
};

/// The best start minimizes the penalized objective.
struct SearchReport {
  std::string algebra;
  SearchConfig config;
  double best_defect = 0.0;
  double best_margin = 0.0;
  StructureParams best_params;
  int best_index = -1;
  std::vector<StartResult> trace;
  double seconds = 0.0;

  /// Some start reached defect below the threshold with margin at least the configured one.
  bool found() const;
};

/// Throws InvalidInput when starts < 1.
SearchReport search(const LieAlgebra4<double>& alg, const SearchConfig& config);

}  // namespace grayform
