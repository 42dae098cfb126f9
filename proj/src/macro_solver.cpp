#include "lamhom/macro_solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lamhom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

void HarmonicLoad::validate() const {
  require(direction == 1 || direction == 2, "load direction must be 1 or 2");
  require(L > 0.0 && std::isfinite(L), "macro period must be positive");
  require(std::isfinite(B) && std::isfinite(R) && std::isfinite(S),
          "load amplitudes must be finite");
  // Zero-mean sources need nonzero wave numbers.
  require(B == 0.0 || m != 0, "nonzero body force requires a nonzero wave number m");
  require(R == 0.0 || n != 0, "nonzero heat source requires a nonzero wave number n");
  require(S == 0.0 || p != 0, "nonzero mass source requires a nonzero wave number p");
}

double MacroSolution::U(double x) const {
  const double km = kTwoPi * load.m / load.L;
  const double kn = kTwoPi * load.n / load.L;
  const double kp = kTwoPi * load.p / load.L;
  return U_cos * std::cos(km * x) + U_sin_n * std::sin(kn * x) + U_sin_p * std::sin(kp * x);
}

double MacroSolution::dU(double x) const {
  const double km = kTwoPi * load.m / load.L;
  const double kn = kTwoPi * load.n / load.L;
  const double kp = kTwoPi * load.p / load.L;
  return -U_cos * km * std::sin(km * x) + U_sin_n * kn * std::cos(kn * x) +
         U_sin_p * kp * std::cos(kp * x);
}

double MacroSolution::d2U(double x) const {
  const double km = kTwoPi * load.m / load.L;
  const double kn = kTwoPi * load.n / load.L;
  const double kp = kTwoPi * load.p / load.L;
  return -U_cos * km * km * std::cos(km * x) - U_sin_n * kn * kn * std::sin(kn * x) -
         U_sin_p * kp * kp * std::sin(kp * x);
}

double MacroSolution::Theta(double x) const {
  return T_cos * std::cos(kTwoPi * load.n * x / load.L);
}

double MacroSolution::dTheta(double x) const {
  const double kn = kTwoPi * load.n / load.L;
  return -T_cos * kn * std::sin(kn * x);
}

double MacroSolution::Upsilon(double x) const {
  return Y_cos * std::cos(kTwoPi * load.p * x / load.L);
}

double MacroSolution::dUpsilon(double x) const {
  const double kp = kTwoPi * load.p / load.L;
  return -Y_cos * kp * std::sin(kp * x);
}

std::optional<double> MacroSolution::U_star(double x) const {
  if (load.B == 0.0) return std::nullopt;
  const double km = kTwoPi * load.m;
  return U(x) * C * km * km / (load.B * load.L * load.L);
}

std::optional<double> MacroSolution::Theta_star(double x) const {
  if (load.R == 0.0) return std::nullopt;
  const double kn = kTwoPi * load.n;
  return Theta(x) * K * kn * kn / (load.R * load.L * load.L);
}

std::optional<double> MacroSolution::Upsilon_star(double x) const {
  if (load.S == 0.0) return std::nullopt;
  const double kp = kTwoPi * load.p;
  return Upsilon(x) * D * kp * kp / (load.S * load.L * load.L);
}

MacroSolution solve_homogenized(const EffectiveProperties& eff, const HarmonicLoad& load) {
  load.validate();

  MacroSolution sol;
  sol.load = load;
  if (load.direction == 1) {
    sol.C = eff.C1111;
    sol.K = eff.K11;
    sol.D = eff.D11;
    sol.alpha = eff.alpha11;
    sol.beta = eff.beta11;
  } else {
    sol.C = eff.C2222;
    sol.K = eff.K22;
    sol.D = eff.D22;
    sol.alpha = eff.alpha22;
    sol.beta = eff.beta22;
  }
  require(sol.C > 0.0, "effective stiffness along the load direction must be positive");
  require(sol.K > 0.0, "effective conduction along the load direction must be positive");
  if (load.S != 0.0 && sol.D <= 0.0)
    throw std::invalid_argument("mass source with a singular diffusion coefficient");

  const double L = load.L;
  if (load.B != 0.0) {
    const double km = kTwoPi * load.m;
    sol.U_cos = load.B * L * L / (sol.C * km * km);
  }
  if (load.R != 0.0) {
    const double kn = kTwoPi * load.n;
    sol.T_cos = load.R * L * L / (sol.K * kn * kn);
    sol.U_sin_n = load.R * sol.alpha * L * L * L / (sol.C * sol.K * kn * kn * kn);
  }
  if (load.S != 0.0) {
    const double kp = kTwoPi * load.p;
    sol.Y_cos = load.S * L * L / (sol.D * kp * kp);
    sol.U_sin_p = load.S * sol.beta * L * L * L / (sol.C * sol.D * kp * kp * kp);
  }
  if (load.B != 0.0) {
    sol.xi_alpha = sol.alpha * load.R * L / (sol.K * load.B);
    sol.xi_beta = (load.S != 0.0) ? sol.beta * load.S * L / (sol.D * load.B) : 0.0;
  }
  return sol;
}

double field_equation_residual(const MacroSolution& sol, int points) {
  const HarmonicLoad& ld = sol.load;
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = ld.L * (static_cast<double>(i) + 0.5) / points;
    const double b = ld.B * std::cos(kTwoPi * ld.m * x / ld.L);
    const double r = ld.R * std::cos(kTwoPi * ld.n * x / ld.L);
    const double s = ld.S * std::cos(kTwoPi * ld.p * x / ld.L);

    const double t1 = sol.C * sol.d2U(x);
    const double t2 = -sol.alpha * sol.dTheta(x);
    const double t3 = -sol.beta * sol.dUpsilon(x);
    const double mech = t1 + t2 + t3 + b;
    const double mech_scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3),
                                        std::abs(b), 1e-300});
    worst = std::max(worst, std::abs(mech) / mech_scale);

    if (ld.R != 0.0) {
      const double kn = kTwoPi * ld.n / ld.L;
      const double heat = -sol.K * sol.T_cos * kn * kn * std::cos(kn * x) + r;
      worst = std::max(worst, std::abs(heat) / std::max(std::abs(r), 1e-300));
    }
    if (ld.S != 0.0) {
      const double kp = kTwoPi * ld.p / ld.L;
      const double mass = -sol.D * sol.Y_cos * kp * kp * std::cos(kp * x) + s;
      worst = std::max(worst, std::abs(mass) / std::max(std::abs(s), 1e-300));
    }
  }
  return worst;
}

AmplitudeFunctions amplitude_functions(const EffectiveProperties& eff,
                                       const Laminate& lam,
                                       const HarmonicLoad& load) {
  load.validate();
  if (lam.layer_count() != 2)
    throw std::invalid_argument("amplitude normalisation requires a two-layer laminate");
  if (load.B == 0.0)
    throw std::invalid_argument("amplitude functions require a nonzero body force");

  const PhaseProperties& a = lam.layers()[0].phase;
  const PhaseProperties& b = lam.layers()[1].phase;
  const bool dir1 = load.direction == 1;
  const double alpha_eff = dir1 ? eff.alpha11 : eff.alpha22;
  const double beta_eff = dir1 ? eff.beta11 : eff.beta22;
  const double K_eff = dir1 ? eff.K11 : eff.K22;
  const double D_eff = dir1 ? eff.D11 : eff.D22;
  const double alpha_sum = dir1 ? a.alpha11 + b.alpha11 : a.alpha22 + b.alpha22;
  const double beta_sum = dir1 ? a.beta11 + b.beta11 : a.beta22 + b.beta22;
  const double K_sum = dir1 ? a.K11 + b.K11 : a.K22 + b.K22;
  const double D_sum = dir1 ? a.D11 + b.D11 : a.D22 + b.D22;

  AmplitudeFunctions out;
  out.xi_alpha = alpha_eff * load.R * load.L / (K_eff * load.B);
  out.xi_beta = beta_eff * load.S * load.L / (D_eff * load.B);

  // Normalised variants divide by the phase-average amplitude
  // R L (alpha_a + alpha_b) / (B (K_a + K_b)) and its beta/D counterpart; the
  // load factors cancel so the ratio is a pure material property.
  if (alpha_sum != 0.0) out.xi_alpha_tilde = (alpha_eff / K_eff) * (K_sum / alpha_sum);
  if (beta_sum != 0.0) out.xi_beta_tilde = (beta_eff / D_eff) * (D_sum / beta_sum);
  return out;
}

}  // namespace lamhom
