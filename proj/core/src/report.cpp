#include "grayform/report.hpp"

#include <cstdio>

namespace grayform {

std::string_view tag_name(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::ConnectionMetric:
      return "connection_metric";
    case IdentityTag::ConnectionTorsion:
      return "connection_torsion";
    case IdentityTag::CurvatureSymmetries:
      return "curvature_symmetries";
    case IdentityTag::ExteriorDerivativeRoutes:
      return "exterior_derivative_routes";
    case IdentityTag::CodifferentialRoutes:
      return "codifferential_routes";
    case IdentityTag::NablaOmegaDecomposition:
      return "nabla_omega_decomposition";
    case IdentityTag::NijenhuisRoutes:
      return "nijenhuis_routes";
    case IdentityTag::NijenhuisJAntiLinear:
      return "nijenhuis_j_anti_linear";
    case IdentityTag::LeeForm:
      return "lee_form";
    case IdentityTag::GaugeReconstruction:
      return "gauge_reconstruction";
    case IdentityTag::GaugeLeeRelation:
      return "gauge_lee_relation";
    case IdentityTag::GaugeNijenhuisRelation:
      return "gauge_nijenhuis_relation";
    case IdentityTag::GaugeNijenhuisForm:
      return "gauge_nijenhuis_form";
    case IdentityTag::PhiNijenhuisRoute:
      return "phi_nijenhuis_route";
    case IdentityTag::PhiGaugeRoute:
      return "phi_gauge_route";
    case IdentityTag::PhiSquare:
      return "phi_square";
    case IdentityTag::PhiTrace:
      return "phi_trace";
    case IdentityTag::PhiAntiInvariant:
      return "phi_anti_invariant";
    case IdentityTag::ChernFormExact:
      return "chern_form_exact";
    case IdentityTag::ChernFormClosed:
      return "chern_form_closed";
    case IdentityTag::StarRicciTwist:
      return "star_ricci_twist";
    case IdentityTag::RicciFormInvariant:
      return "ricci_form_invariant";
    case IdentityTag::StarRicciFormTraceFree:
      return "star_ricci_form_trace_free";
    case IdentityTag::StarRicciSymmetricPart:
      return "star_ricci_symmetric_part";
    case IdentityTag::U2Reconstruction:
      return "u2_reconstruction";
    case IdentityTag::W3Shape:
      return "w3_shape";
    case IdentityTag::WPlusNorm:
      return "w_plus_norm";
    case IdentityTag::KappaStarScalar:
      return "kappa_star_scalar";
    case IdentityTag::ScalarCurvatureRelation:
      return "scalar_curvature_relation";
    case IdentityTag::WeitzenbockOmega:
      return "weitzenbock_omega";
    case IdentityTag::WeitzenbockOmegaComponent:
      return "weitzenbock_omega_component";
    case IdentityTag::DJThetaConnection:
      return "dj_theta_connection";
    case IdentityTag::DJThetaExpanded:
      return "dj_theta_expanded";
    case IdentityTag::AlphaTrace:
      return "alpha_trace";
    case IdentityTag::AlphaAntiInvariant:
      return "alpha_anti_invariant";
    case IdentityTag::AlphaInvariant:
      return "alpha_invariant";
    case IdentityTag::PhiDJThetaResidual:
      return "phi_dj_theta_residual";
    case IdentityTag::ContractedBianchi:
      return "contracted_bianchi";
    case IdentityTag::RicciFormCodifferential:
      return "ricci_form_codifferential";
    case IdentityTag::RicciFormDifferential:
      return "ricci_form_differential";
    case IdentityTag::TraceFreeRicciFormDifferential:
      return "trace_free_ricci_form_differential";
    case IdentityTag::JInvariantDivergence:
      return "j_invariant_divergence";
    case IdentityTag::CottonYork:
      return "cotton_york";
    case IdentityTag::WeylDivergence:
      return "weyl_divergence";
    case IdentityTag::WeylDivergencePlus:
      return "weyl_divergence_plus";
    case IdentityTag::WeylDivergenceMinus:
      return "weyl_divergence_minus";
    case IdentityTag::DivergenceW1Plus:
      return "divergence_w1_plus";
    case IdentityTag::DivergenceW2Plus:
      return "divergence_w2_plus";
    case IdentityTag::SelfDualBianchi:
      return "self_dual_bianchi";
    case IdentityTag::AntiSelfDualBianchi:
      return "anti_self_dual_bianchi";
    case IdentityTag::SekigawaDensity:
      return "sekigawa_density";
    case IdentityTag::SekigawaRouteDifference:
      return "sekigawa_route_difference";
    case IdentityTag::ChernSquareDensity:
      return "chern_square_density";
    case IdentityTag::ChernWeilDensity:
      return "chern_weil_density";
    case IdentityTag::ScalarSquaresRelation:
      return "scalar_squares_relation";
    case IdentityTag::GrayG1:
      return "gray_g1";
    case IdentityTag::G1Components:
      return "g1_components";
    case IdentityTag::SecondDerivativeCommutator:
      return "second_derivative_commutator";
    case IdentityTag::GaugeStructureEquations:
      return "gauge_structure_equations";
    case IdentityTag::InvariantG1Identity:
      return "invariant_g1_identity";
    case IdentityTag::RicciIdentityOmega:
      return "ricci_identity_omega";
    case IdentityTag::CommutatorGaugeSplit:
      return "commutator_gauge_split";
    case IdentityTag::G1Equivalence:
      return "g1_equivalence";
    case IdentityTag::GrayChain:
      return "gray_chain";
    case IdentityTag::LeeEigenvector:
      return "lee_eigenvector";
    case IdentityTag::LeeNijenhuisOrthogonal:
      return "lee_nijenhuis_orthogonal";
    case IdentityTag::NijenhuisImageEigen:
      return "nijenhuis_image_eigen";
    case IdentityTag::ZeroScalarAlternative:
      return "zero_scalar_alternative";
    case IdentityTag::RicciFormClosed:
      return "ricci_form_closed";
    case IdentityTag::PhiClosed:
      return "phi_closed";
    case IdentityTag::StarRicciPhiWedge:
      return "star_ricci_phi_wedge";
    case IdentityTag::G1SelfDualBianchi:
      return "g1_self_dual_bianchi";
    case IdentityTag::RhoOnNijenhuisImage:
      return "rho_on_nijenhuis_image";
    case IdentityTag::PhiOnNijenhuisImage:
      return "phi_on_nijenhuis_image";
    case IdentityTag::EinsteinDichotomy:
      return "einstein_dichotomy";
    case IdentityTag::AlignedNijenhuisNormalForm:
      return "aligned_nijenhuis_normal_form";
    case IdentityTag::AlignedLambda:
      return "aligned_lambda";
    case IdentityTag::AlignedGaugeForms:
      return "aligned_gauge_forms";
    case IdentityTag::AlignedMuCollinear:
      return "aligned_mu_collinear";
    case IdentityTag::AlignedDThetaPairing:
      return "aligned_d_theta_pairing";
    case IdentityTag::H1Codifferential:
      return "h1_codifferential";
    case IdentityTag::H1DThetaAnti:
      return "h1_d_theta_anti";
    case IdentityTag::H1DThetaTrace:
      return "h1_d_theta_trace";
    case IdentityTag::H1HessianAnti:
      return "h1_hessian_anti";
    case IdentityTag::H1Characterization:
      return "h1_characterization";
    case IdentityTag::H1NormalForm:
      return "h1_normal_form";
    case IdentityTag::H1ForcedKahler:
      return "h1_forced_kahler";
  }
  return "unknown";
}

bool SuiteReport::passed() const {
  if (!applicable) return true;
  for (const auto& r : rows)
    if (r.applicable && !r.pass) return false;
  return true;
}

const Row* SuiteReport::find(IdentityTag tag, std::string_view detail) const {
  for (const auto& r : rows)
    if (r.tag == tag && (detail.empty() || r.detail == detail)) return &r;
  return nullptr;
}

std::string format_scalar(const Rational& x) {
  mpq_class y = x;
  y.canonicalize();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

std::string format_scalar(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace grayform
