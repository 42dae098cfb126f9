////////////////////////////////////////////////////////////////////////////////
// laminate_homogenizer.hpp
//
// Closed-form overall constants and fluctuation profiles of two-layer stacks.
// C2222, C1212, K22 and D22 of the stack are thickness-weighted harmonic
// means, K11 and D11 arithmetic means, C1122/alpha22/beta22 stiffness-weighted
// means, and C1111/alpha11/beta11 carry the in-plane/normal coupling through
// C1122. The same constants normalised by the phase averages expose the
// rho/zeta parameter structure used by the sweep harness.
////////////////////////////////////////////////////////////////////////////////
#ifndef LAMHOM_LAMINATE_HOMOGENIZER_HPP
#define LAMHOM_LAMINATE_HOMOGENIZER_HPP

#include <optional>
#include <vector>

#include "lamhom/material.hpp"
#include "lamhom/profiles.hpp"

namespace lamhom {

/// Overall constants of the equivalent homogeneous continuum; same component
/// roles as PhaseProperties. Off-diagonal transport components vanish for
/// stacks layered along an orthotropy axis and are not stored.
struct EffectiveProperties {
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

  /// Throws std::runtime_error unless the elastic matrix is symmetric
  /// positive definite and the transport components are positive.
  void validate() const;
};

/// Effective constants divided componentwise by the two-phase averages
/// (e.g. C^ = (C_a + C_b)/2). A component whose phase average vanishes is not
/// normalisable and reported as nullopt.
struct NormalizedProperties {
  std::optional<double> C1111, C2222, C1122, C1212;
  std::optional<double> alpha11, alpha22, beta11, beta22;
  std::optional<double> K11, K22, D11, D22;
};

/// The seven non-vanishing first-order fluctuation profiles of a two-layer
/// stack, in kAllCellProblems order. Identical phases give identically zero
/// profiles.
std::vector<PerturbationProfile> perturbation_profiles_biphase(const Laminate& laminate);

/// Closed-form overall constants of a two-layer orthotropic stack.
EffectiveProperties effective_constants_biphase(const Laminate& laminate);

/// Closed-form overall constants of a two-layer stack with isotropic phases,
/// written directly in the engineering constants (E~, nu~) of each phase.
/// Agrees with effective_constants_biphase after the isotropic substitution;
/// rejects non-isotropic input.
EffectiveProperties effective_constants_isotropic(const Laminate& laminate);

/// Componentwise normalisation by the phase averages of a two-layer stack.
NormalizedProperties normalize_constants(const EffectiveProperties& eff,
                                         const Laminate& laminate);

/// Largest componentwise discrepancy |a - b| / max(|a|, |b|, family scale),
/// where the family scale is the largest magnitude within the same tensor
/// (C, alpha, beta, K, D). The floor keeps the metric meaningful for the
/// sign-indefinite coupling components near their zero crossings.
double max_relative_discrepancy(const EffectiveProperties& a, const EffectiveProperties& b);

}  // namespace lamhom

#endif  // LAMHOM_LAMINATE_HOMOGENIZER_HPP
