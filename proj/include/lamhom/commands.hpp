////////////////////////////////////////////////////////////////////////////////
// commands.hpp
//
// Batch entry points behind the lamhom CLI. Each command reads a JSON config,
// writes CSV/JSON outputs into an output directory, and returns a process
// exit code: 0 success, 1 config error, 2 solver error, 3 validation failure.
////////////////////////////////////////////////////////////////////////////////
#ifndef LAMHOM_COMMANDS_HPP
#define LAMHOM_COMMANDS_HPP

#include <ostream>
#include <string>

namespace lamhom {

enum class HomogenizeMethod { Analytic, CellSolver, Both };

HomogenizeMethod method_from_string(const std::string& s);

struct CommandOptions {
  std::string config_path;
  HomogenizeMethod method = HomogenizeMethod::Analytic;
  std::string out_dir = ".";
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitSolverError = 2;
inline constexpr int kExitValidationFailure = 3;

int cmd_homogenize(const CommandOptions& opts, std::ostream& log, std::ostream& err);
int cmd_sweep(const CommandOptions& opts, std::ostream& log, std::ostream& err);
int cmd_compare(const CommandOptions& opts, std::ostream& log, std::ostream& err);
int cmd_validate(const CommandOptions& opts, std::ostream& log, std::ostream& err);

}  // namespace lamhom

#endif  // LAMHOM_COMMANDS_HPP
