////////////////////////////////////////////////////////////////////////////////
// profiles.hpp
//
// Piecewise-linear fluctuation profiles over the periodic unit cell. Each
// first-order cell problem of a laminate admits a corrector that is linear in
// the fast coordinate within every layer; the profile stores the per-layer
// slopes plus the affine offsets that make it continuous, periodic and
// zero-mean over the cell.
////////////////////////////////////////////////////////////////////////////////
#ifndef LAMHOM_PROFILES_HPP
#define LAMHOM_PROFILES_HPP

#include <span>
#include <vector>

#include "lamhom/material.hpp"

namespace lamhom {

/// The seven first-order cell problems of a stack layered along e2. The three
/// mechanical problems are driven by the unit macroscopic strains E11, E22 and
/// E12 (the shear problem covers both members of the symmetric pair); the
/// coupling problems by a unit temperature / chemical potential; the transport
/// problems by unit macroscopic gradients.
enum class CellProblemKind {
  Extension11,
  Extension22,
  Shear12,
  ThermalCoupling,
  DiffusiveCoupling,
  Conduction,
  Diffusion,
};

inline constexpr CellProblemKind kAllCellProblems[] = {
    CellProblemKind::Extension11,      CellProblemKind::Extension22,
    CellProblemKind::Shear12,          CellProblemKind::ThermalCoupling,
    CellProblemKind::DiffusiveCoupling, CellProblemKind::Conduction,
    CellProblemKind::Diffusion,
};

const char* to_string(CellProblemKind kind);

/// Zero-mean, cell-periodic, piecewise-linear corrector over the unit cell
/// coordinate xi in [0, 1). Layer i spans [breaks[i], breaks[i+1]) and carries
/// value offsets[i] + slopes[i] * (xi - breaks[i]).
struct PerturbationProfile {
  CellProblemKind kind = CellProblemKind::Conduction;
  std::vector<double> breaks;   // size layers+1, breaks.front()==0, breaks.back()==1
  std::vector<double> slopes;   // size layers
  std::vector<double> offsets;  // size layers, value at the layer start

  /// Profile value at xi (wrapped periodically into [0, 1)).
  double value(double xi) const;
  /// Per-layer derivative at xi; at a break point the right layer wins.
  double slope_at(double xi) const;
  /// Exact cell mean of the piecewise-linear profile.
  double mean() const;
  /// value(1^-) - value(0): zero for a periodic profile.
  double wrap_jump() const;
};

/// Assembles the continuous, periodic, zero-mean profile from per-layer
/// slopes. Throws std::invalid_argument when the slopes violate the periodic
/// closure sum_i f_i * s_i = 0.
PerturbationProfile make_profile(CellProblemKind kind, const Laminate& laminate,
                                 std::span<const double> slopes);

}  // namespace lamhom

#endif  // LAMHOM_PROFILES_HPP
