#include "lamhom/laminate_homogenizer.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace lamhom {

void EffectiveProperties::validate() const {
  if (!(C1111 > 0.0) || !(C1212 > 0.0) || !(C1111 * C2222 - C1122 * C1122 > 0.0))
    throw std::runtime_error("effective elastic matrix is not positive definite");
  if (!(K11 > 0.0 && K22 > 0.0))
    throw std::runtime_error("effective conduction is not positive");
  if (!(D11 > 0.0 && D22 > 0.0))
    throw std::runtime_error("effective diffusion is not positive");
}

namespace {

void require_biphase(const Laminate& lam) {
  if (lam.layer_count() != 2)
    throw std::invalid_argument("this operation requires exactly two layers");
}

}  // namespace

std::vector<PerturbationProfile> perturbation_profiles_biphase(const Laminate& lam) {
  require_biphase(lam);
  const PhaseProperties& a = lam.layers()[0].phase;
  const PhaseProperties& b = lam.layers()[1].phase;
  const double zeta = lam.zeta();

  // Slope in layer a of a two-layer corrector; layer b carries -zeta times it
  // by periodic closure. The denominators A_a + zeta*A_b are strictly positive
  // under the phase invariants.
  auto slope_a = [zeta](double numerator, double Aa, double Ab) {
    return numerator / (Aa + zeta * Ab);
  };

  struct Spec {
    CellProblemKind kind;
    double sa;
  };
  const std::array<Spec, 7> specs = {{
      {CellProblemKind::Extension11, slope_a(b.C1122 - a.C1122, a.C2222, b.C2222)},
      {CellProblemKind::Extension22, slope_a(b.C2222 - a.C2222, a.C2222, b.C2222)},
      {CellProblemKind::Shear12, slope_a(b.C1212 - a.C1212, a.C1212, b.C1212)},
      {CellProblemKind::ThermalCoupling, slope_a(a.alpha22 - b.alpha22, a.C2222, b.C2222)},
      {CellProblemKind::DiffusiveCoupling, slope_a(a.beta22 - b.beta22, a.C2222, b.C2222)},
      {CellProblemKind::Conduction, slope_a(b.K22 - a.K22, a.K22, b.K22)},
      {CellProblemKind::Diffusion, slope_a(b.D22 - a.D22, a.D22, b.D22)},
  }};

  std::vector<PerturbationProfile> out;
  out.reserve(specs.size());
  for (const Spec& s : specs) {
    const double sl[2] = {s.sa, -zeta * s.sa};
    out.push_back(make_profile(s.kind, lam, sl));
  }
  return out;
}

EffectiveProperties effective_constants_biphase(const Laminate& lam) {
  require_biphase(lam);
  const PhaseProperties& a = lam.layers()[0].phase;
  const PhaseProperties& b = lam.layers()[1].phase;
  const double z = lam.zeta();
  const double den = a.C2222 + z * b.C2222;

  EffectiveProperties e;
  e.C1111 = (z * z * a.C1111 * b.C2222 +
             z * (b.C1111 * b.C2222 - a.C1122 * a.C1122 + 2.0 * a.C1122 * b.C1122 -
                  b.C1122 * b.C1122 + a.C1111 * a.C2222) +
             b.C1111 * a.C2222) /
            ((z + 1.0) * den);
  e.C2222 = (z + 1.0) * a.C2222 * b.C2222 / den;
  e.C1212 = (z + 1.0) * a.C1212 * b.C1212 / (a.C1212 + z * b.C1212);
  e.C1122 = (b.C1122 * a.C2222 + z * a.C1122 * b.C2222) / den;

  e.alpha11 = -(z * (b.C1122 * b.alpha22 - b.C1122 * a.alpha22 - b.C2222 * b.alpha11 -
                     a.C1122 * b.alpha22 + a.C1122 * a.alpha22 - a.C2222 * a.alpha11) -
                z * z * b.C2222 * a.alpha11 - a.C2222 * b.alpha11) /
              ((z + 1.0) * den);
  e.alpha22 = (z * b.C2222 * a.alpha22 + b.alpha22 * a.C2222) / den;
  e.beta11 = -(z * (b.C1122 * b.beta22 - b.C1122 * a.beta22 - b.C2222 * b.beta11 -
                    a.C1122 * b.beta22 + a.C1122 * a.beta22 - a.C2222 * a.beta11) -
               z * z * b.C2222 * a.beta11 - a.C2222 * b.beta11) /
             ((z + 1.0) * den);
  e.beta22 = (z * b.C2222 * a.beta22 + b.beta22 * a.C2222) / den;

  e.K11 = (b.K11 + z * a.K11) / (z + 1.0);
  e.K22 = (z + 1.0) * a.K22 * b.K22 / (a.K22 + z * b.K22);
  e.D11 = (b.D11 + z * a.D11) / (z + 1.0);
  e.D22 = (z + 1.0) * a.D22 * b.D22 / (a.D22 + z * b.D22);
  return e;
}

EffectiveProperties effective_constants_isotropic(const Laminate& lam) {
  require_biphase(lam);
  const PhaseProperties& pa = lam.layers()[0].phase;
  const PhaseProperties& pb = lam.layers()[1].phase;
  if (!pa.is_isotropic() || !pb.is_isotropic())
    throw std::invalid_argument("isotropic closed forms require isotropic phases");

  const double na = pa.C1122 / pa.C1111;
  const double nb = pb.C1122 / pb.C1111;
  const double Ea = pa.C1111 * (1.0 - na * na);
  const double Eb = pb.C1111 * (1.0 - nb * nb);
  const double z = lam.zeta();

  const double aa = pa.alpha22, ab = pb.alpha22;
  const double ba = pa.beta22, bb = pb.beta22;
  const double Ka = pa.K22, Kb = pb.K22;
  const double Da = pa.D22, Db = pb.D22;

  // Common denominator zEb(na^2-1) + Ea(nb^2-1) < 0.
  const double q = z * Eb * (na * na - 1.0) + Ea * (nb * nb - 1.0);

  EffectiveProperties e;
  e.C1111 = (-z * z * Ea * Eb +
             z * ((Ea * nb) * (Ea * nb) - 2.0 * Ea * na * Eb * nb + (Eb * na) * (Eb * na) -
                  Ea * Ea - Eb * Eb) -
             Ea * Eb) /
            ((z + 1.0) * q);
  e.C2222 = -(z + 1.0) * Ea * Eb / q;
  e.C1212 = (z + 1.0) * Ea * Eb / (2.0 * (Ea + Ea * nb + z * (Eb * na + Eb)));
  e.C1122 = -Ea * Eb * (nb + z * na) / q;

  const double A11 = z * z * (Eb * na * na - Eb) +
                     z * (Ea * nb * nb - Eb * nb + Eb * nb * na * na + Ea * na -
                          Ea * na * nb * nb - Ea);
  const double B11 = z * (Ea * na * nb * nb - Eb + Eb * na * na + Eb * nb -
                          Eb * nb * na * na - Ea * na) +
                     Ea * nb * nb - Ea;
  const double Del11 = (z + 1.0) * q;
  e.alpha11 = (A11 * aa + B11 * ab) / Del11;
  e.alpha22 = (z * (Eb * na * na - Eb) * aa + Ea * (nb * nb - 1.0) * ab) / q;
  e.beta11 = (A11 * ba + B11 * bb) / Del11;
  e.beta22 = (z * (Eb * na * na - Eb) * ba + Ea * (nb * nb - 1.0) * bb) / q;

  e.K11 = (Kb + z * Ka) / (z + 1.0);
  e.K22 = (z + 1.0) * Ka * Kb / (Ka + z * Kb);
  e.D11 = (Db + z * Da) / (z + 1.0);
  e.D22 = (z + 1.0) * Da * Db / (Da + z * Db);
  return e;
}

double max_relative_discrepancy(const EffectiveProperties& a, const EffectiveProperties& b) {
  struct Entry {
    double va, vb;
    int family;
  };
  const Entry entries[] = {
      {a.C1111, b.C1111, 0}, {a.C2222, b.C2222, 0}, {a.C1122, b.C1122, 0},
      {a.C1212, b.C1212, 0}, {a.alpha11, b.alpha11, 1}, {a.alpha22, b.alpha22, 1},
      {a.beta11, b.beta11, 2}, {a.beta22, b.beta22, 2}, {a.K11, b.K11, 3},
      {a.K22, b.K22, 3}, {a.D11, b.D11, 4}, {a.D22, b.D22, 4},
  };
  double scale[5] = {0, 0, 0, 0, 0};
  for (const Entry& e : entries)
    scale[e.family] = std::max({scale[e.family], std::abs(e.va), std::abs(e.vb)});
  double worst = 0.0;
  for (const Entry& e : entries) {
    const double denom = std::max(scale[e.family], 1e-300);
    worst = std::max(worst, std::abs(e.va - e.vb) / denom);
  }
  return worst;
}

NormalizedProperties normalize_constants(const EffectiveProperties& eff,
                                         const Laminate& lam) {
  require_biphase(lam);
  const PhaseProperties& a = lam.layers()[0].phase;
  const PhaseProperties& b = lam.layers()[1].phase;

  auto norm = [](double value, double pa, double pb) -> std::optional<double> {
    const double hat = 0.5 * (pa + pb);
    if (hat == 0.0) return std::nullopt;
    return value / hat;
  };

  NormalizedProperties n;
  n.C1111 = norm(eff.C1111, a.C1111, b.C1111);
  n.C2222 = norm(eff.C2222, a.C2222, b.C2222);
  n.C1122 = norm(eff.C1122, a.C1122, b.C1122);
  n.C1212 = norm(eff.C1212, a.C1212, b.C1212);
  n.alpha11 = norm(eff.alpha11, a.alpha11, b.alpha11);
  n.alpha22 = norm(eff.alpha22, a.alpha22, b.alpha22);
  n.beta11 = norm(eff.beta11, a.beta11, b.beta11);
  n.beta22 = norm(eff.beta22, a.beta22, b.beta22);
  n.K11 = norm(eff.K11, a.K11, b.K11);
  n.K22 = norm(eff.K22, a.K22, b.K22);
  n.D11 = norm(eff.D11, a.D11, b.D11);
  n.D22 = norm(eff.D22, a.D22, b.D22);
  return n;
}

}  // namespace lamhom
