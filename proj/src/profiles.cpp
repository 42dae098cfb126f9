#include "lamhom/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace lamhom {

const char* to_string(CellProblemKind kind) {
  switch (kind) {
    case CellProblemKind::Extension11: return "extension11";
    case CellProblemKind::Extension22: return "extension22";
    case CellProblemKind::Shear12: return "shear12";
    case CellProblemKind::ThermalCoupling: return "thermal_coupling";
    case CellProblemKind::DiffusiveCoupling: return "diffusive_coupling";
    case CellProblemKind::Conduction: return "conduction";
    case CellProblemKind::Diffusion: return "diffusion";
  }
  return "unknown";
}

namespace {

double wrap_unit(double xi) {
  double w = xi - std::floor(xi);
  if (w >= 1.0) w = 0.0;  // guard against 1.0 from rounding
  return w;
}

std::size_t layer_of(const std::vector<double>& breaks, double w) {
  // breaks is short (a handful of layers); linear scan is fine.
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (w < breaks[i + 1]) return i;
  }
  return breaks.size() - 2;
}

}  // namespace

double PerturbationProfile::value(double xi) const {
  const double w = wrap_unit(xi);
  const std::size_t i = layer_of(breaks, w);
  return offsets[i] + slopes[i] * (w - breaks[i]);
}

double PerturbationProfile::slope_at(double xi) const {
  return slopes[layer_of(breaks, wrap_unit(xi))];
}

double PerturbationProfile::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const double f = breaks[i + 1] - breaks[i];
    m += offsets[i] * f + 0.5 * slopes[i] * f * f;
  }
  return m;
}

double PerturbationProfile::wrap_jump() const {
  const std::size_t last = slopes.size() - 1;
  const double end = offsets[last] + slopes[last] * (breaks[last + 1] - breaks[last]);
  return end - offsets[0];
}

PerturbationProfile make_profile(CellProblemKind kind, const Laminate& laminate,
                                 std::span<const double> slopes) {
  const std::size_t n = laminate.layer_count();
  if (slopes.size() != n)
    throw std::invalid_argument("one slope per layer required");

  double closure = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = laminate.layers()[i].thickness_fraction;
    closure += f * slopes[i];
    scale = std::max(scale, std::abs(slopes[i]));
  }
  if (std::abs(closure) > 1e-10 * std::max(scale, 1.0))
    throw std::invalid_argument("slopes violate periodic closure");

  PerturbationProfile p;
  p.kind = kind;
  p.breaks = laminate.boundaries();
  p.slopes.assign(slopes.begin(), slopes.end());
  p.offsets.resize(n);

  // Continuity from a provisional start value, then shift to zero mean.
  p.offsets[0] = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double f = p.breaks[i + 1] - p.breaks[i];
    p.offsets[i + 1] = p.offsets[i] + p.slopes[i] * f;
  }
  const double m = p.mean();
  for (double& v : p.offsets) v -= m;
  return p;
}

}  // namespace lamhom
