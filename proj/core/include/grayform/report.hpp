#pragma once

// Identity tags and report rows produced by the verification suites.

#include <string>
#include <string_view>
#include <vector>

#include "grayform/scalar.hpp"

namespace grayform {

/// Every residual row carries one of these tags.
enum class IdentityTag {
  // connection and first-order data
  ConnectionMetric,
  ConnectionTorsion,
  CurvatureSymmetries,
  ExteriorDerivativeRoutes,
  CodifferentialRoutes,
  NablaOmegaDecomposition,
  NijenhuisRoutes,
  NijenhuisJAntiLinear,
  LeeForm,
  GaugeReconstruction,
  GaugeLeeRelation,
  GaugeNijenhuisRelation,
  GaugeNijenhuisForm,
  PhiNijenhuisRoute,
  PhiGaugeRoute,
  PhiSquare,
  PhiTrace,
  PhiAntiInvariant,
  ChernFormExact,
  ChernFormClosed,
  StarRicciTwist,
  RicciFormInvariant,
  StarRicciFormTraceFree,
  StarRicciSymmetricPart,
  U2Reconstruction,
  W3Shape,
  WPlusNorm,
  KappaStarScalar,
  ScalarCurvatureRelation,
  WeitzenbockOmega,
  WeitzenbockOmegaComponent,
  DJThetaConnection,
  DJThetaExpanded,
  AlphaTrace,
  AlphaAntiInvariant,
  AlphaInvariant,
  PhiDJThetaResidual,
  // differential Bianchi identity
  ContractedBianchi,
  RicciFormCodifferential,
  RicciFormDifferential,
  TraceFreeRicciFormDifferential,
  JInvariantDivergence,
  CottonYork,
  WeylDivergence,
  WeylDivergencePlus,
  WeylDivergenceMinus,
  DivergenceW1Plus,
  DivergenceW2Plus,
  SelfDualBianchi,
  AntiSelfDualBianchi,
  // Chern number densities
  SekigawaDensity,
  SekigawaRouteDifference,
  ChernSquareDensity,
  ChernWeilDensity,
  ScalarSquaresRelation,
  // first Gray condition
  GrayG1,
  G1Components,
  SecondDerivativeCommutator,
  GaugeStructureEquations,
  InvariantG1Identity,
  RicciIdentityOmega,
  CommutatorGaugeSplit,
  G1Equivalence,
  GrayChain,
  // consequences of the first Gray condition
  LeeEigenvector,
  LeeNijenhuisOrthogonal,
  NijenhuisImageEigen,
  ZeroScalarAlternative,
  RicciFormClosed,
  PhiClosed,
  StarRicciPhiWedge,
  G1SelfDualBianchi,
  RhoOnNijenhuisImage,
  PhiOnNijenhuisImage,
  EinsteinDichotomy,
  // aligned frame
  AlignedNijenhuisNormalForm,
  AlignedLambda,
  AlignedGaugeForms,
  AlignedMuCollinear,
  AlignedDThetaPairing,
  // Hermitian case
  H1Codifferential,
  H1DThetaAnti,
  H1DThetaTrace,
  H1HessianAnti,
  H1Characterization,
  H1NormalForm,
  H1ForcedKahler,
};

std::string_view tag_name(IdentityTag tag);

enum class RowKind {
  Identity,     // residual must vanish
  Measurement,  // reported value, no pass criterion
  Check,        // boolean criterion
};

struct Row {
  IdentityTag tag;
  std::string detail;
  RowKind kind = RowKind::Identity;
  std::string value;  // "p/q" on rationals, decimal on floats
  double magnitude = 0.0;
  bool pass = true;
  bool applicable = true;
};

struct SuiteReport {
  std::string name;
  bool applicable = true;
  std::string note;
  std::vector<Row> rows;
  double seconds = 0.0;

  /// True when every applicable row passes.
  bool passed() const;
  const Row* find(IdentityTag tag, std::string_view detail = {}) const;
};

/// "p/q" for rationals (always with a denominator), %.17g for floats.
std::string format_scalar(const Rational& x);
std::string format_scalar(double x);

template <class T>
Row identity_row(IdentityTag tag, std::string detail, const T& residual, Tol tol) {
  Row r{tag, std::move(detail), RowKind::Identity, format_scalar(residual), to_double(residual),
        is_zero(residual, tol), true};
  return r;
}

template <class T>
Row measurement_row(IdentityTag tag, std::string detail, const T& value) {
  return Row{tag, std::move(detail), RowKind::Measurement, format_scalar(value), to_double(value),
             true, true};
}

inline Row check_row(IdentityTag tag, std::string detail, bool pass, std::string value = {}) {
  return Row{tag, std::move(detail), RowKind::Check, std::move(value), pass ? 0.0 : 1.0, pass,
             true};
}

}  // namespace grayform
