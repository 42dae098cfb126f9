////////////////////////////////////////////////////////////////////////////////
// sweep.hpp
//
// Parameter-sweep harness over two-layer stacks with isotropic phases. Phase b
// is held at unit properties and phase a carries the swept/fixed property
// ratios, so the normalised outputs depend only on the ratios and the
// thickness ratio.
////////////////////////////////////////////////////////////////////////////////
#ifndef LAMHOM_SWEEP_HPP
#define LAMHOM_SWEEP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lamhom/laminate_homogenizer.hpp"
#include "lamhom/material.hpp"

namespace lamhom {

/// Property ratios of phase a over phase b plus geometry; phase b has unit
/// properties and both phases share the Poisson ratio nu.
struct RatioSpec {
  double rho_C = 1.0;
  double rho_alpha = 1.0;
  double rho_beta = 1.0;
  double rho_K = 1.0;
  double rho_D = 1.0;
  double zeta = 1.0;
  double nu = 0.3;
  PlaneAssumption assumption = PlaneAssumption::PlaneStress;
  double epsilon = 0.1;
};

Laminate biphase_from_ratios(const RatioSpec& spec);

enum class SweepParameter { RhoC, RhoAlpha, RhoBeta, RhoK, RhoD, Zeta };

const char* to_string(SweepParameter p);
SweepParameter sweep_parameter_from_string(const std::string& name);

/// Strictly positive 1D grid, linear or logarithmic in the endpoints.
struct GridSpec {
  double min = 0.1;
  double max = 10.0;
  int count = 2;
  bool log_scale = true;

  std::vector<double> points() const;  // validates on use
};

struct SweepConfig {
  SweepParameter parameter = SweepParameter::RhoC;
  GridSpec grid;
  RatioSpec fixed;
};

struct SweepRow {
  double value = 0.0;  // swept parameter value
  NormalizedProperties normalized;
  std::optional<double> xi_alpha_11, xi_alpha_22;
  std::optional<double> xi_beta_11, xi_beta_22;
};

/// Evaluates every grid point (closed forms only, embarrassingly parallel);
/// rows come back in grid order regardless of scheduling.
std::vector<SweepRow> run_sweep(const SweepConfig& config, int max_threads = 0);

/// Thread cap from LAMHOM_THREADS, else hardware concurrency.
int thread_cap_from_env();

/// Runs fn(0..count-1) on up to max_threads threads (0 = thread_cap_from_env).
void parallel_for(std::size_t count, int max_threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace lamhom

#endif  // LAMHOM_SWEEP_HPP
