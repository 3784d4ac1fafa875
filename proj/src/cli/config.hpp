#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace krein::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { spectrum, evolve, check };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key-value run configuration.  Precedence: --set overrides > config
// file > defaults.
struct RunConfig {
  Command command = Command::check;

  // grid
  double grid_half_width = 6.0;
  int grid_n_points = 601;
  std::string grid_boundary = "dirichlet";
  int stencil_order = 2;

  // constants
  double hbar = 1.0;
  double mass = 1.0;

  // potential
  std::string potential_kind = "zero";  // zero|harmonic|bender|imaginary_cubic|custom
  double potential_omega = 1.0;
  double potential_epsilon = 0.0;
  std::string potential_file;

  // evolution
  double t_final = 2.0;
  int n_steps = 200;
  bool write_snapshots = false;

  // initial state
  std::string initial_kind = "gaussian";  // gaussian|eigenstate|file
  double initial_center = 1.0;
  double initial_width = 0.5;
  double initial_momentum = 0.0;
  int initial_index = 0;
  std::string initial_file;

  // tolerances
  double null_tol = 1e-8;
  double reality_tol = 1e-8;
  double unitarity_tol = 1e-8;

  bool include_null_states = false;

  // output
  std::string out_dir = ".";
  bool force = false;
  bool plot = false;

  // the fully-resolved key=value map, echoed into result bundles
  std::map<std::string, std::string> echo() const;
};

// Parses "key = value" lines; '#' starts a comment.  Throws ConfigError with
// a line-numbered message on bad input.
RunConfig parse_config(Command command, const std::string& config_path,
                       const std::vector<std::string>& overrides);

// Applies a single "key=value" assignment.
void apply_setting(RunConfig& cfg, const std::string& key,
                   const std::string& value, const std::string& where);

void validate(const RunConfig& cfg);

}  // namespace krein::cli
