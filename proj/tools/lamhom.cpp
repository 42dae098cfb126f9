#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lamhom/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lamhom - homogenization toolkit for periodic thermodiffusive laminates"};
  app.require_subcommand(1);

  std::string config_path;
  std::string method = "analytic";
  std::string out_dir = ".";

  auto add_common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("--config", config_path, "JSON configuration file")
        ->required();
    sub->add_option("--out", out_dir, "output directory (default: current)");
    if (with_method)
      sub->add_option("--method", method,
                      "effective-constant route: analytic | cell-solver | both")
          ->check(CLI::IsMember({"analytic", "cell-solver", "both"}));
  };

  CLI::App* homogenize = app.add_subcommand(
      "homogenize", "effective constants of one laminate (JSON + CSV reports)");
  add_common(homogenize, true);
  CLI::App* sweep = app.add_subcommand(
      "sweep", "normalized constants/amplitudes over a parameter grid (CSV)");
  add_common(sweep, false);
  CLI::App* compare = app.add_subcommand(
      "compare", "heterogeneous vs homogenized fields under a harmonic load");
  add_common(compare, false);
  CLI::App* validate = app.add_subcommand(
      "validate", "run the invariant suite on a laminate (nonzero exit on failure)");
  add_common(validate, false);

  CLI11_PARSE(app, argc, argv);

  lamhom::CommandOptions opts;
  opts.config_path = config_path;
  opts.out_dir = out_dir;
  try {
    opts.method = lamhom::method_from_string(method);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return lamhom::kExitConfigError;
  }

  if (homogenize->parsed()) return lamhom::cmd_homogenize(opts, std::cout, std::cerr);
  if (sweep->parsed()) return lamhom::cmd_sweep(opts, std::cout, std::cerr);
  if (compare->parsed()) return lamhom::cmd_compare(opts, std::cout, std::cerr);
  if (validate->parsed()) return lamhom::cmd_validate(opts, std::cout, std::cerr);
  return lamhom::kExitConfigError;
}
