////////////////////////////////////////////////////////////////////////////////
// material.hpp
//
// Material phases and periodic laminates for plane thermodiffusive elasticity.
// A phase couples stress to strain, temperature and chemical potential through
// sigma = C : eps - alpha * theta - beta * eta, and transports heat and mass
// through uncoupled Fourier/Fick laws q = -K grad(theta), j = -D grad(eta).
////////////////////////////////////////////////////////////////////////////////
#ifndef LAMHOM_MATERIAL_HPP
#define LAMHOM_MATERIAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace lamhom {

enum class PlaneAssumption { PlaneStress, PlaneStrain };

/// One homogeneous orthotropic phase. The orthotropy axes coincide with the
/// coordinate axes; e2 is the stacking normal of every laminate built from
/// these phases. Units: stiffness and the alpha/beta couplings carry stress
/// units (alpha, beta are stress per unit temperature / chemical potential).
struct PhaseProperties {
  double C1111 = 0.0;
  double C2222 = 0.0;
  double C1122 = 0.0;
  double C1212 = 0.0;
  double alpha11 = 0.0;
  double alpha22 = 0.0;
  double beta11 = 0.0;
  double beta22 = 0.0;
  double K11 = 0.0;
  double K22 = 0.0;
  double D11 = 0.0;
  double D22 = 0.0;

  /// Throws std::invalid_argument unless the plane elastic matrix
  /// [[C1111, C1122, 0], [C1122, C2222, 0], [0, 0, C1212]] is symmetric
  /// positive definite, K and D components are positive, and every
  /// coupling component is finite.
  void validate() const;

  /// True when the tensor set is that of an isotropic phase, i.e. the
  /// stiffness is expressible through a single (E~, nu~) pair and the
  /// coupling/transport tensors are spherical.
  bool is_isotropic(double rel_tol = 1e-9) const;
};

/// Builds the plane stiffness of an isotropic phase from engineering
/// constants. Plane strain maps (E, nu) -> (E/(1-nu^2), nu/(1-nu)) before the
/// common plane-stress formulas are applied; plane stress uses (E, nu)
/// unchanged.
PhaseProperties make_isotropic_phase(double E, double nu, double alpha, double beta,
                                     double K, double D, PlaneAssumption assumption);

struct Layer {
  PhaseProperties phase;
  double thickness_fraction = 0.0;
};

/// Periodic stack of homogeneous layers with period `epsilon` along e2.
/// Immutable once constructed; construction enforces admissibility of all
/// phases, positive fractions summing to one, and a positive period.
class Laminate {
 public:
  Laminate(std::vector<Layer> layers, double epsilon);

  const std::vector<Layer>& layers() const { return layers_; }
  double epsilon() const { return epsilon_; }
  std::size_t layer_count() const { return layers_.size(); }

  /// Cumulative fraction boundaries: size layer_count()+1, first 0, last 1.
  /// Layer i occupies [boundaries()[i], boundaries()[i+1]) of the unit cell.
  const std::vector<double>& boundaries() const { return boundaries_; }

  /// Thickness ratio a/b of a two-layer laminate. Throws unless exactly two
  /// layers are present.
  double zeta() const;

 private:
  std::vector<Layer> layers_;
  std::vector<double> boundaries_;
  double epsilon_;
};

/// Non-dimensional description of a two-layer laminate with isotropic phases:
/// phase-a over phase-b property ratios plus the thickness ratio. A ratio is
/// disengaged (nullopt) when the phase-b property vanishes.
struct DimensionlessRatios {
  std::optional<double> rho_C;
  std::optional<double> rho_alpha;
  std::optional<double> rho_beta;
  std::optional<double> rho_K;
  std::optional<double> rho_D;
  double zeta = 1.0;
  double nu_a = 0.0;  // effective plane Poisson ratios recovered from the stiffness
  double nu_b = 0.0;
};

/// Recovers the property ratios of a two-layer laminate whose phases were
/// built as isotropic. Throws std::invalid_argument otherwise.
DimensionlessRatios dimensionless_ratios(const Laminate& laminate);

}  // namespace lamhom

#endif  // LAMHOM_MATERIAL_HPP
