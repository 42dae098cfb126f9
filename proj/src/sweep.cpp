#include "lamhom/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "lamhom/macro_solver.hpp"

namespace lamhom {

Laminate biphase_from_ratios(const RatioSpec& spec) {
  if (!(spec.zeta > 0.0) || !std::isfinite(spec.zeta))
    throw std::invalid_argument("zeta must be positive");
  const PhaseProperties a =
      make_isotropic_phase(spec.rho_C, spec.nu, spec.rho_alpha, spec.rho_beta,
                           spec.rho_K, spec.rho_D, spec.assumption);
  const PhaseProperties b =
      make_isotropic_phase(1.0, spec.nu, 1.0, 1.0, 1.0, 1.0, spec.assumption);
  const double fa = spec.zeta / (1.0 + spec.zeta);
  return Laminate({{a, fa}, {b, 1.0 - fa}}, spec.epsilon);
}

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::RhoC: return "rho_C";
    case SweepParameter::RhoAlpha: return "rho_alpha";
    case SweepParameter::RhoBeta: return "rho_beta";
    case SweepParameter::RhoK: return "rho_K";
    case SweepParameter::RhoD: return "rho_D";
    case SweepParameter::Zeta: return "zeta";
  }
  return "unknown";
}

SweepParameter sweep_parameter_from_string(const std::string& name) {
  if (name == "rho_C") return SweepParameter::RhoC;
  if (name == "rho_alpha") return SweepParameter::RhoAlpha;
  if (name == "rho_beta") return SweepParameter::RhoBeta;
  if (name == "rho_K") return SweepParameter::RhoK;
  if (name == "rho_D") return SweepParameter::RhoD;
  if (name == "zeta") return SweepParameter::Zeta;
  throw std::invalid_argument("unknown sweep parameter: " + name);
}

std::vector<double> GridSpec::points() const {
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (!(min > 0.0) || !(max > 0.0) || !std::isfinite(min) || !std::isfinite(max))
    throw std::invalid_argument("grid endpoints must be positive and finite");
  if (count == 1) return {min};
  std::vector<double> pts(count);
  if (log_scale) {
    const double la = std::log(min), lb = std::log(max);
    for (int i = 0; i < count; ++i)
      pts[i] = std::exp(la + (lb - la) * i / (count - 1));
  } else {
    for (int i = 0; i < count; ++i)
      pts[i] = min + (max - min) * i / (count - 1);
  }
  pts.front() = min;
  pts.back() = max;
  return pts;
}

int thread_cap_from_env() {
  if (const char* env = std::getenv("LAMHOM_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, int max_threads,
                  const std::function<void(std::size_t)>& fn) {
  if (max_threads <= 0) max_threads = thread_cap_from_env();
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(max_threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, int max_threads) {
  const std::vector<double> pts = config.grid.points();
  std::vector<SweepRow> rows(pts.size());
  parallel_for(pts.size(), max_threads, [&](std::size_t i) {
    RatioSpec spec = config.fixed;
    switch (config.parameter) {
      case SweepParameter::RhoC: spec.rho_C = pts[i]; break;
      case SweepParameter::RhoAlpha: spec.rho_alpha = pts[i]; break;
      case SweepParameter::RhoBeta: spec.rho_beta = pts[i]; break;
      case SweepParameter::RhoK: spec.rho_K = pts[i]; break;
      case SweepParameter::RhoD: spec.rho_D = pts[i]; break;
      case SweepParameter::Zeta: spec.zeta = pts[i]; break;
    }
    const Laminate lam = biphase_from_ratios(spec);
    const EffectiveProperties eff = effective_constants_biphase(lam);

    SweepRow row;
    row.value = pts[i];
    row.normalized = normalize_constants(eff, lam);
    // The normalised amplitudes are load-independent; a unit load selects the
    // direction only.
    HarmonicLoad unit{1, 1.0, 1.0, 1.0, 1, 1, 1, 1.0};
    AmplitudeFunctions a1 = amplitude_functions(eff, lam, unit);
    unit.direction = 2;
    AmplitudeFunctions a2 = amplitude_functions(eff, lam, unit);
    row.xi_alpha_11 = a1.xi_alpha_tilde;
    row.xi_beta_11 = a1.xi_beta_tilde;
    row.xi_alpha_22 = a2.xi_alpha_tilde;
    row.xi_beta_22 = a2.xi_beta_tilde;
    rows[i] = row;
  });
  return rows;
}

}  // namespace lamhom
