#include "lamhom/commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lamhom/cell_solver.hpp"
#include "lamhom/csv.hpp"
#include "lamhom/hetero_solver.hpp"
#include "lamhom/json_io.hpp"

namespace lamhom {

using nlohmann::json;

HomogenizeMethod method_from_string(const std::string& s) {
  if (s == "analytic") return HomogenizeMethod::Analytic;
  if (s == "cell-solver") return HomogenizeMethod::CellSolver;
  if (s == "both") return HomogenizeMethod::Both;
  throw std::invalid_argument("method must be analytic, cell-solver or both");
}

namespace {

json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  return json::parse(in);  // parse errors report byte position and context
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path p = std::filesystem::path(dir) / name;
  std::ofstream out(p, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::runtime_error("cannot write output file: " + p.string());
  return out;
}

Laminate laminate_from_config(const json& cfg) {
  if (!cfg.contains("laminate"))
    throw std::invalid_argument("config: missing \"laminate\"");
  return laminate_from_json(cfg.at("laminate"));
}

const std::vector<std::string> kComponentNames = {
    "C1111", "C2222", "C1122", "C1212", "alpha11", "alpha22",
    "beta11", "beta22", "K11", "K22", "D11", "D22"};

std::vector<double> components_of(const EffectiveProperties& e) {
  return {e.C1111, e.C2222, e.C1122, e.C1212, e.alpha11, e.alpha22,
          e.beta11, e.beta22, e.K11, e.K22, e.D11, e.D22};
}

// Maps exceptions to exit codes shared by all commands.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitSolverError;
  }
}

void write_profiles_csv(std::ostream& os, const Laminate& lam,
                        const std::vector<LayerSlopeSolution>& sols, int samples) {
  std::vector<PerturbationProfile> profiles;
  profiles.reserve(sols.size());
  for (const LayerSlopeSolution& s : sols) profiles.push_back(to_profile(lam, s));

  CsvWriter csv(os);
  std::vector<std::string> head = {"xi2"};
  for (const PerturbationProfile& p : profiles) head.emplace_back(to_string(p.kind));
  csv.header(head);
  for (int i = 0; i <= samples; ++i) {
    const double xi = static_cast<double>(i) / samples;
    std::vector<std::string> row = {CsvWriter::field(xi)};
    for (const PerturbationProfile& p : profiles)
      row.push_back(CsvWriter::field(p.value(xi)));
    csv.row(row);
  }
}

}  // namespace

int cmd_homogenize(const CommandOptions& opts, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const json cfg = read_config(opts.config_path);
    const Laminate lam = laminate_from_config(cfg);

    const bool want_analytic = opts.method != HomogenizeMethod::CellSolver;
    const bool want_cell = opts.method != HomogenizeMethod::Analytic;
    if (want_analytic && lam.layer_count() != 2)
      throw std::invalid_argument(
          "analytic closed forms require two layers; use --method cell-solver");

    std::optional<EffectiveProperties> analytic, cell;
    if (want_analytic) analytic = effective_constants_biphase(lam);
    std::vector<LayerSlopeSolution> sols = solve_cell_problems(lam);
    if (want_cell) cell = effective_from_profiles(lam, sols).effective;

    const EffectiveProperties primary = analytic ? *analytic : *cell;
    json report;
    report["method"] = opts.method == HomogenizeMethod::Analytic
                           ? "analytic"
                           : (opts.method == HomogenizeMethod::CellSolver ? "cell-solver"
                                                                          : "both");
    report["effective"] = to_json(primary);
    if (analytic && cell) {
      report["effective_cell_solver"] = to_json(*cell);
      report["max_relative_discrepancy"] = max_relative_discrepancy(*analytic, *cell);
    }
    if (lam.layer_count() == 2)
      report["normalized"] = to_json(normalize_constants(primary, lam));

    {
      std::ofstream os = open_output(opts.out_dir, "effective.json");
      os << report.dump(2) << "\n";
    }
    {
      std::ofstream os = open_output(opts.out_dir, "effective.csv");
      CsvWriter csv(os);
      std::vector<std::string> head = {"method"};
      head.insert(head.end(), kComponentNames.begin(), kComponentNames.end());
      csv.header(head);
      auto emit = [&](const char* name, const EffectiveProperties& e) {
        std::vector<std::string> row = {name};
        for (double v : components_of(e)) row.push_back(CsvWriter::field(v));
        csv.row(row);
      };
      if (analytic) emit("analytic", *analytic);
      if (cell) emit("cell-solver", *cell);
    }
    {
      std::ofstream os = open_output(opts.out_dir, "profiles.csv");
      write_profiles_csv(os, lam, sols, 512);
    }
    log << "effective constants written to " << opts.out_dir << "\n";
    return kExitOk;
  });
}

int cmd_sweep(const CommandOptions& opts, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const json cfg = read_config(opts.config_path);
    if (!cfg.contains("sweep"))
      throw std::invalid_argument("config: missing \"sweep\"");
    const SweepConfig sweep = sweep_config_from_json(cfg.at("sweep"));
    const std::vector<SweepRow> rows = run_sweep(sweep);

    std::ofstream os = open_output(opts.out_dir, "sweep.csv");
    CsvWriter csv(os);
    std::vector<std::string> head = {to_string(sweep.parameter)};
    for (const std::string& c : kComponentNames) head.push_back(c + "_norm");
    head.insert(head.end(), {"xi_alpha_11", "xi_alpha_22", "xi_beta_11", "xi_beta_22"});
    csv.header(head);
    for (const SweepRow& r : rows) {
      const NormalizedProperties& n = r.normalized;
      std::vector<std::string> row = {CsvWriter::field(r.value)};
      for (const std::optional<double>& v :
           {n.C1111, n.C2222, n.C1122, n.C1212, n.alpha11, n.alpha22, n.beta11,
            n.beta22, n.K11, n.K22, n.D11, n.D22})
        row.push_back(CsvWriter::field(v));
      row.push_back(CsvWriter::field(r.xi_alpha_11));
      row.push_back(CsvWriter::field(r.xi_alpha_22));
      row.push_back(CsvWriter::field(r.xi_beta_11));
      row.push_back(CsvWriter::field(r.xi_beta_22));
      csv.row(row);
    }
    log << rows.size() << " sweep rows written to " << opts.out_dir << "\n";
    return kExitOk;
  });
}

namespace {

void write_fields_csv(std::ostream& os, const MicroGrid& grid, const MicroSolution& s) {
  CsvWriter csv(os);
  const std::vector<std::string> head = {"x_over_L", "u", "theta", "eta",
                                         "sigma22", "q", "j"};
  csv.header(head);
  const double L = grid.domain_length();
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    csv.row(std::vector<std::string>{
        CsvWriter::field(grid.nodes()[i] / L), CsvWriter::field(s.u[i]),
        CsvWriter::field(s.theta[i]), CsvWriter::field(s.eta[i]),
        CsvWriter::field(s.sigma22[i]), CsvWriter::field(s.q[i]),
        CsvWriter::field(s.j[i])});
  }
}

}  // namespace

int cmd_compare(const CommandOptions& opts, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const json cfg = read_config(opts.config_path);
    const Laminate lam = laminate_from_config(cfg);
    if (!cfg.contains("compare"))
      throw std::invalid_argument("config: missing \"compare\"");
    const json& cj = cfg.at("compare");

    const int l_over_eps = cj.value("L_over_epsilon", 10);
    const int npl = cj.value("nodes_per_layer", 64);
    const int samples = cj.value("samples", 512);
    if (l_over_eps < 2)
      throw std::invalid_argument("compare.L_over_epsilon must be >= 2");
    if (!cj.contains("load"))
      throw std::invalid_argument("compare: missing \"load\"");
    const HarmonicLoad load = load_from_json(cj.at("load"), l_over_eps * lam.epsilon());

    const auto t0 = std::chrono::steady_clock::now();
    const EffectiveProperties eff = effective_constants_biphase(lam);
    const MacroSolution macro = solve_homogenized(eff, load);
    const auto t1 = std::chrono::steady_clock::now();
    const MicroGrid grid(lam, l_over_eps, npl);
    const MicroSolution micro = solve_heterogeneous(lam, load, grid);
    const auto t2 = std::chrono::steady_clock::now();

    ComparisonReport rep = compare(macro, micro, lam);
    rep.macro_runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
    rep.hetero_runtime_seconds = std::chrono::duration<double>(t2 - t1).count();

    {
      std::ofstream os = open_output(opts.out_dir, "report.json");
      os << to_json(rep).dump(2) << "\n";
    }
    {
      std::ofstream os = open_output(opts.out_dir, "micro_fields.csv");
      write_fields_csv(os, grid, micro);
    }
    {
      std::ofstream os = open_output(opts.out_dir, "upscaled_fields.csv");
      const UpscaledFields up = upscale(micro, lam);
      CsvWriter csv(os);
      csv.header(std::vector<std::string>{"x_over_L", "U", "Theta", "Upsilon"});
      const double L = grid.domain_length();
      for (std::size_t i = 0; i < grid.node_count(); ++i)
        csv.row(std::vector<std::string>{
            CsvWriter::field(grid.nodes()[i] / L), CsvWriter::field(up.U[i]),
            CsvWriter::field(up.Theta[i]), CsvWriter::field(up.Upsilon[i])});
    }
    {
      std::ofstream os = open_output(opts.out_dir, "macro_fields.csv");
      CsvWriter csv(os);
      csv.header(std::vector<std::string>{"x_over_L", "U", "Theta", "Upsilon",
                                          "U_star", "Theta_star", "Upsilon_star"});
      for (int i = 0; i < samples; ++i) {
        const double x = load.L * i / samples;
        csv.row(std::vector<std::string>{
            CsvWriter::field(static_cast<double>(i) / samples),
            CsvWriter::field(macro.U(x)), CsvWriter::field(macro.Theta(x)),
            CsvWriter::field(macro.Upsilon(x)), CsvWriter::field(macro.U_star(x)),
            CsvWriter::field(macro.Theta_star(x)),
            CsvWriter::field(macro.Upsilon_star(x))});
      }
    }
    log << "comparison report written to " << opts.out_dir << "\n";
    return kExitOk;
  });
}

int cmd_validate(const CommandOptions& opts, std::ostream& log, std::ostream& err) {
  // Validation failures exit with their own code; config/parse problems with 1.
  json cfg;
  try {
    cfg = read_config(opts.config_path);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  int failures = 0;
  auto check = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
      log << "ok   " << name << "\n";
    } catch (const std::exception& e) {
      log << "FAIL " << name << ": " << e.what() << "\n";
      ++failures;
    }
  };

  std::optional<Laminate> lam;
  check("laminate admissibility (phase positive definiteness, fractions, period)", [&] {
    if (!cfg.contains("laminate"))
      throw std::invalid_argument("config: missing \"laminate\"");
    lam.emplace(laminate_from_json(cfg.at("laminate")));
  });

  if (lam) {
    std::vector<LayerSlopeSolution> sols;
    check("cell problems solvable with conserved fluxes", [&] {
      sols = solve_cell_problems(*lam);
    });
    check("perturbation profiles zero-mean, continuous, periodic", [&] {
      for (const LayerSlopeSolution& s : sols) {
        const PerturbationProfile p = to_profile(*lam, s);
        if (std::abs(p.mean()) > 1e-12)
          throw std::runtime_error(std::string(to_string(p.kind)) + " mean nonzero");
        if (std::abs(p.wrap_jump()) > 1e-12 * (1.0 + std::abs(p.offsets[0])))
          throw std::runtime_error(std::string(to_string(p.kind)) + " wrap jump");
      }
    });
    check("effective tensors symmetric positive definite", [&] {
      effective_from_profiles(*lam, sols).effective.validate();
    });
    if (lam->layer_count() == 2) {
      check("closed forms match cell-problem averages to 1e-12", [&] {
        const double d = max_relative_discrepancy(
            effective_constants_biphase(*lam),
            effective_from_profiles(*lam, sols).effective);
        if (d > 1e-12)
          throw std::runtime_error("discrepancy " + format_double(d));
      });
    }
  }

  if (failures > 0) {
    err << failures << " validation check(s) failed\n";
    return kExitValidationFailure;
  }
  log << "all validation checks passed\n";
  return kExitOk;
}

}  // namespace lamhom
