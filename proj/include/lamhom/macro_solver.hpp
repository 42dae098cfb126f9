////////////////////////////////////////////////////////////////////////////////
// macro_solver.hpp
//
// Closed-form solution of the homogenized extensional thermodiffusion problem
// under periodic harmonic loads acting along one axis:
//   C U'' - alpha T' - beta Y' + b = 0,  K T'' + r = 0,  D Y'' + s = 0
// with b = B cos(2 pi m x / L), r = R cos(2 pi n x / L), s = S cos(2 pi p x/L)
// and zero-mean periodic fields on [0, L).
////////////////////////////////////////////////////////////////////////////////
#ifndef LAMHOM_MACRO_SOLVER_HPP
#define LAMHOM_MACRO_SOLVER_HPP

#include <optional>
#include <vector>

#include "lamhom/laminate_homogenizer.hpp"
#include "lamhom/material.hpp"

namespace lamhom {

/// Zero-mean harmonic load case along one axis. Real amplitudes only.
struct HarmonicLoad {
  int direction = 2;  // axis the fields vary along (1 or 2)
  double B = 0.0;     // body-force amplitude
  double R = 0.0;     // heat-source amplitude
  double S = 0.0;     // mass-source amplitude
  int m = 1;          // body-force wave number
  int n = 1;          // heat-source wave number
  int p = 1;          // mass-source wave number
  double L = 1.0;     // macro period

  /// Throws std::invalid_argument on a zero wave number paired with a nonzero
  /// amplitude, a non-positive period, or a direction outside {1, 2}.
  void validate() const;
};

/// Closed-form coefficient set of the homogenized fields for one load case:
///   U(x) = U_cos * cos(k_m x) + U_sin_n * sin(k_n x) + U_sin_p * sin(k_p x)
///   Theta(x) = T_cos * cos(k_n x),   Upsilon(x) = Y_cos * cos(k_p x)
/// together with the effective coefficients that produced them and the
/// thermal/diffusive amplitude factors entering the dimensionless form.
struct MacroSolution {
  HarmonicLoad load;
  double C = 0.0, K = 0.0, D = 0.0, alpha = 0.0, beta = 0.0;  // jj components used
  double U_cos = 0.0, U_sin_n = 0.0, U_sin_p = 0.0;
  double T_cos = 0.0;
  double Y_cos = 0.0;
  double xi_alpha = 0.0;  // alpha R L / (K B), zero when B == 0
  double xi_beta = 0.0;   // beta S L / (D B), zero when B == 0

  double U(double x) const;
  double dU(double x) const;
  double d2U(double x) const;
  double Theta(double x) const;
  double dTheta(double x) const;
  double Upsilon(double x) const;
  double dUpsilon(double x) const;

  /// Dimensionless fields; defined only when the corresponding load amplitude
  /// is nonzero.
  std::optional<double> U_star(double x) const;
  std::optional<double> Theta_star(double x) const;
  std::optional<double> Upsilon_star(double x) const;
};

/// Solves the homogenized field equations for one harmonic load case.
MacroSolution solve_homogenized(const EffectiveProperties& eff, const HarmonicLoad& load);

/// Largest relative residual of the three field equations over `points`
/// equispaced collocation points, each equation normalised by its largest
/// term magnitude.
double field_equation_residual(const MacroSolution& sol, int points = 64);

/// Thermal and diffusive displacement amplitudes for a load case, with the
/// variants normalised by the phase-average amplitude of the stack (defined
/// for two-layer laminates; nullopt when the phase-average divisor vanishes).
struct AmplitudeFunctions {
  double xi_alpha = 0.0;
  double xi_beta = 0.0;
  std::optional<double> xi_alpha_tilde;
  std::optional<double> xi_beta_tilde;
};

AmplitudeFunctions amplitude_functions(const EffectiveProperties& eff,
                                       const Laminate& laminate,
                                       const HarmonicLoad& load);

}  // namespace lamhom

#endif  // LAMHOM_MACRO_SOLVER_HPP
