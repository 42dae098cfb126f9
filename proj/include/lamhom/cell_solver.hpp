////////////////////////////////////////////////////////////////////////////////
// cell_solver.hpp
//
// Semi-analytic N-layer solver for the first-order cell problems of a stack
// layered along e2. Every corrector of such a stack is piecewise linear in
// the fast coordinate, so each cell problem reduces exactly to a linear
// system: the generalized flux (traction, heat flux, mass flux) is one
// constant through all layers, and the slopes close periodically with
// sum_i f_i * s_i = 0. No discretization is involved, which makes this module
// an exact independent check on the two-layer closed forms and its natural
// generalization to N >= 2 phases.
////////////////////////////////////////////////////////////////////////////////
#ifndef LAMHOM_CELL_SOLVER_HPP
#define LAMHOM_CELL_SOLVER_HPP

#include <span>
#include <vector>

#include "lamhom/laminate_homogenizer.hpp"
#include "lamhom/material.hpp"
#include "lamhom/profiles.hpp"

namespace lamhom {

/// Solution of one cell problem: per-layer corrector slopes together with the
/// conserved generalized flux across the cell.
struct LayerSlopeSolution {
  CellProblemKind kind = CellProblemKind::Conduction;
  std::vector<double> slopes;
  double flux_constant = 0.0;
  double residual = 0.0;  // infinity-norm residual of the linear solve, relative
};

/// Solves one cell problem for an N-layer stack. Throws std::runtime_error if
/// the linear-solve residual exceeds 1e-10 (impossible for admissible phases).
LayerSlopeSolution solve_cell_problem(const Laminate& laminate, CellProblemKind kind);

/// All seven cell problems, in kAllCellProblems order.
std::vector<LayerSlopeSolution> solve_cell_problems(const Laminate& laminate);

/// Zero-mean periodic profile carrying the slopes of a solution.
PerturbationProfile to_profile(const Laminate& laminate, const LayerSlopeSolution& sol);

/// Effective constants with the off-diagonal transport components that the
/// cell averages produce (identically zero for stacks layered along an
/// orthotropy axis, reported for the symmetry assertions).
struct CellHomogenizationResult {
  EffectiveProperties effective;
  double K12 = 0.0;
  double D12 = 0.0;
};

/// Energy/flux cell averages of the corrector slopes:
///   C : quadratic average of the corrected strains,
///   alpha, beta : <alpha - C N'>, <beta - C N'> (linear averages),
///   K, D : quadratic averages of the corrected gradients.
/// `solutions` must cover all seven kinds for this laminate.
CellHomogenizationResult effective_from_profiles(const Laminate& laminate,
                                                 std::span<const LayerSlopeSolution> solutions);

/// Same averages fed directly from per-layer profile slopes.
CellHomogenizationResult effective_from_profiles(const Laminate& laminate,
                                                 std::span<const PerturbationProfile> profiles);

}  // namespace lamhom

#endif  // LAMHOM_CELL_SOLVER_HPP
