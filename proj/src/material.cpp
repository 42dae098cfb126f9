#include "lamhom/material.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lamhom {

namespace {

bool finite(double v) { return std::isfinite(v); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

void PhaseProperties::validate() const {
  for (double v : {C1111, C2222, C1122, C1212, alpha11, alpha22, beta11, beta22,
                   K11, K22, D11, D22}) {
    require(finite(v), "phase property is not finite");
  }
  // Positive definiteness of the plane elastic matrix reduces to positive
  // leading minors: C1111, C1111*C2222 - C1122^2 and C1212.
  require(C1111 > 0.0, "C1111 must be positive");
  require(C1212 > 0.0, "C1212 must be positive");
  require(C1111 * C2222 - C1122 * C1122 > 0.0,
          "plane elastic matrix must be positive definite (C1111*C2222 > C1122^2)");
  require(K11 > 0.0 && K22 > 0.0, "conduction components must be positive");
  require(D11 > 0.0 && D22 > 0.0, "diffusion components must be positive");
}

bool PhaseProperties::is_isotropic(double rel_tol) const {
  auto close = [rel_tol](double a, double b, double scale) {
    return std::abs(a - b) <= rel_tol * std::max({std::abs(a), std::abs(b), scale});
  };
  const double cs = std::max(std::abs(C1111), std::abs(C2222));
  return close(C1111, C2222, cs) &&
         close(C1212, 0.5 * (C1111 - C1122), cs) &&
         close(alpha11, alpha22, std::abs(alpha11) + std::abs(alpha22)) &&
         close(beta11, beta22, std::abs(beta11) + std::abs(beta22)) &&
         close(K11, K22, K11 + K22) &&
         close(D11, D22, D11 + D22);
}

PhaseProperties make_isotropic_phase(double E, double nu, double alpha, double beta,
                                     double K, double D, PlaneAssumption assumption) {
  require(E > 0.0, "Young's modulus must be positive");
  require(nu > -1.0 && nu < 0.5, "Poisson's ratio must lie in (-1, 0.5)");
  require(K > 0.0, "conductivity must be positive");
  require(D > 0.0, "diffusivity must be positive");
  require(finite(alpha) && finite(beta), "alpha and beta must be finite");

  double Et = E;
  double nut = nu;
  if (assumption == PlaneAssumption::PlaneStrain) {
    Et = E / (1.0 - nu * nu);
    nut = nu / (1.0 - nu);
  }
  const double C = Et / (1.0 - nut * nut);

  PhaseProperties p;
  p.C1111 = C;
  p.C2222 = C;
  p.C1122 = nut * C;
  p.C1212 = Et / (2.0 * (1.0 + nut));
  p.alpha11 = p.alpha22 = alpha;
  p.beta11 = p.beta22 = beta;
  p.K11 = p.K22 = K;
  p.D11 = p.D22 = D;
  p.validate();
  return p;
}

Laminate::Laminate(std::vector<Layer> layers, double epsilon)
    : layers_(std::move(layers)), epsilon_(epsilon) {
  require(!layers_.empty(), "laminate needs at least one layer");
  require(epsilon_ > 0.0 && finite(epsilon_), "cell period must be positive");
  double sum = 0.0;
  boundaries_.reserve(layers_.size() + 1);
  boundaries_.push_back(0.0);
  for (const Layer& l : layers_) {
    l.phase.validate();
    require(l.thickness_fraction > 0.0 && l.thickness_fraction < 1.0 + 1e-12,
            "thickness fractions must lie in (0, 1)");
    sum += l.thickness_fraction;
    boundaries_.push_back(sum);
  }
  if (layers_.size() == 1) {
    require(std::abs(sum - 1.0) <= 1e-12, "single layer must have fraction 1");
  } else {
    require(std::abs(sum - 1.0) <= 1e-12, "thickness fractions must sum to 1");
  }
  boundaries_.back() = 1.0;
}

double Laminate::zeta() const {
  if (layers_.size() != 2)
    throw std::invalid_argument("zeta is defined only for two-layer laminates");
  return layers_[0].thickness_fraction / layers_[1].thickness_fraction;
}

namespace {

// Inverts the isotropic plane stiffness: nu~ = C1122/C1111, E~ = C1111(1-nu~^2).
void recover_engineering(const PhaseProperties& p, double& Et, double& nut) {
  nut = p.C1122 / p.C1111;
  Et = p.C1111 * (1.0 - nut * nut);
}

std::optional<double> ratio(double a, double b) {
  if (b == 0.0) return std::nullopt;
  return a / b;
}

}  // namespace

DimensionlessRatios dimensionless_ratios(const Laminate& laminate) {
  if (laminate.layer_count() != 2)
    throw std::invalid_argument("dimensionless ratios require exactly two layers");
  const PhaseProperties& a = laminate.layers()[0].phase;
  const PhaseProperties& b = laminate.layers()[1].phase;
  if (!a.is_isotropic() || !b.is_isotropic())
    throw std::invalid_argument("dimensionless ratios require isotropic phases");

  DimensionlessRatios r;
  double Ea, Eb;
  recover_engineering(a, Ea, r.nu_a);
  recover_engineering(b, Eb, r.nu_b);
  r.rho_C = ratio(Ea, Eb);
  r.rho_alpha = ratio(a.alpha22, b.alpha22);
  r.rho_beta = ratio(a.beta22, b.beta22);
  r.rho_K = ratio(a.K22, b.K22);
  r.rho_D = ratio(a.D22, b.D22);
  r.zeta = laminate.zeta();
  return r;
}

}  // namespace lamhom
