#include "cli/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace krein::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& v, const std::string& where) {
  try {
    std::size_t pos = 0;
    const int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return i;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected an integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& v, const std::string& where) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(where + ": expected a boolean, got '" + v + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void apply_setting(RunConfig& cfg, const std::string& key,
                   const std::string& value, const std::string& where) {
  if (key == "grid.half_width") cfg.grid_half_width = parse_double(value, where);
  else if (key == "grid.n_points") cfg.grid_n_points = parse_int(value, where);
  else if (key == "grid.boundary") cfg.grid_boundary = value;
  else if (key == "grid.stencil_order") cfg.stencil_order = parse_int(value, where);
  else if (key == "constants.hbar") cfg.hbar = parse_double(value, where);
  else if (key == "constants.mass") cfg.mass = parse_double(value, where);
  else if (key == "potential.kind") cfg.potential_kind = value;
  else if (key == "potential.omega") cfg.potential_omega = parse_double(value, where);
  else if (key == "potential.epsilon") cfg.potential_epsilon = parse_double(value, where);
  else if (key == "potential.file") cfg.potential_file = value;
  else if (key == "evolve.t_final") cfg.t_final = parse_double(value, where);
  else if (key == "evolve.n_steps") cfg.n_steps = parse_int(value, where);
  else if (key == "evolve.snapshots") cfg.write_snapshots = parse_bool(value, where);
  else if (key == "initial.kind") cfg.initial_kind = value;
  else if (key == "initial.center") cfg.initial_center = parse_double(value, where);
  else if (key == "initial.width") cfg.initial_width = parse_double(value, where);
  else if (key == "initial.momentum") cfg.initial_momentum = parse_double(value, where);
  else if (key == "initial.index") cfg.initial_index = parse_int(value, where);
  else if (key == "initial.file") cfg.initial_file = value;
  else if (key == "tol.null") cfg.null_tol = parse_double(value, where);
  else if (key == "tol.reality") cfg.reality_tol = parse_double(value, where);
  else if (key == "tol.unitarity") cfg.unitarity_tol = parse_double(value, where);
  else if (key == "include_null_states") cfg.include_null_states = parse_bool(value, where);
  else if (key == "out.dir") cfg.out_dir = value;
  else throw ConfigError(where + ": unknown key '" + key + "'");
}

RunConfig parse_config(Command command, const std::string& config_path,
                       const std::vector<std::string>& overrides) {
  RunConfig cfg;
  cfg.command = command;

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      const std::string where = config_path + ":" + std::to_string(lineno);
      if (eq == std::string::npos)
        throw ConfigError(where + ": expected 'key = value'");
      apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
                    where);
    }
  }

  for (const std::string& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--set " + ov + ": expected key=value");
    apply_setting(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)),
                  "--set " + ov);
  }

  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.grid_boundary != "dirichlet" && cfg.grid_boundary != "periodic")
    throw ConfigError("grid.boundary must be dirichlet or periodic");
  if (cfg.grid_boundary == "dirichlet" &&
      (cfg.grid_n_points < 3 || cfg.grid_n_points % 2 == 0))
    throw ConfigError("dirichlet grids need odd grid.n_points >= 3");
  if (cfg.grid_boundary == "periodic" &&
      (cfg.grid_n_points < 4 || cfg.grid_n_points % 2 != 0))
    throw ConfigError("periodic grids need even grid.n_points >= 4");
  if (!(cfg.grid_half_width > 0.0))
    throw ConfigError("grid.half_width must be > 0");
  if (cfg.stencil_order != 2 && cfg.stencil_order != 4)
    throw ConfigError("grid.stencil_order must be 2 or 4");
  if (!(cfg.hbar > 0.0) || !(cfg.mass > 0.0))
    throw ConfigError("constants.hbar and constants.mass must be > 0");
  if (cfg.potential_kind != "zero" && cfg.potential_kind != "harmonic" &&
      cfg.potential_kind != "bender" && cfg.potential_kind != "imaginary_cubic" &&
      cfg.potential_kind != "custom")
    throw ConfigError("potential.kind must be one of "
                      "zero|harmonic|bender|imaginary_cubic|custom");
  if (cfg.potential_kind == "harmonic" && !(cfg.potential_omega > 0.0))
    throw ConfigError("potential.omega must be > 0");
  if (cfg.potential_kind == "bender" && cfg.potential_epsilon < 0.0)
    throw ConfigError("potential.epsilon must be >= 0");
  if (cfg.potential_kind == "custom" && cfg.potential_file.empty())
    throw ConfigError("potential.file is required for a custom potential");
  if (cfg.initial_kind != "gaussian" && cfg.initial_kind != "eigenstate" &&
      cfg.initial_kind != "file")
    throw ConfigError("initial.kind must be gaussian|eigenstate|file");
  if (cfg.initial_kind == "gaussian" && !(cfg.initial_width > 0.0))
    throw ConfigError("initial.width must be > 0");
  if (cfg.initial_kind == "eigenstate" && cfg.initial_index < 0)
    throw ConfigError("initial.index must be >= 0");
  if (cfg.initial_kind == "file" && cfg.initial_file.empty())
    throw ConfigError("initial.file is required for initial.kind = file");
  if (cfg.n_steps < 1) throw ConfigError("evolve.n_steps must be >= 1");
  if (!(cfg.t_final >= 0.0)) throw ConfigError("evolve.t_final must be >= 0");
  if (!(cfg.null_tol > 0.0) || !(cfg.reality_tol > 0.0) ||
      !(cfg.unitarity_tol > 0.0))
    throw ConfigError("tolerances must be > 0");
}

std::map<std::string, std::string> RunConfig::echo() const {
  std::map<std::string, std::string> m;
  switch (command) {
    case Command::spectrum: m["command"] = "spectrum"; break;
    case Command::evolve: m["command"] = "evolve"; break;
    case Command::check: m["command"] = "check"; break;
  }
  m["grid.half_width"] = fmt(grid_half_width);
  m["grid.n_points"] = std::to_string(grid_n_points);
  m["grid.boundary"] = grid_boundary;
  m["grid.stencil_order"] = std::to_string(stencil_order);
  m["constants.hbar"] = fmt(hbar);
  m["constants.mass"] = fmt(mass);
  m["potential.kind"] = potential_kind;
  m["potential.omega"] = fmt(potential_omega);
  m["potential.epsilon"] = fmt(potential_epsilon);
  if (!potential_file.empty()) m["potential.file"] = potential_file;
  m["evolve.t_final"] = fmt(t_final);
  m["evolve.n_steps"] = std::to_string(n_steps);
  m["evolve.snapshots"] = write_snapshots ? "true" : "false";
  m["initial.kind"] = initial_kind;
  m["initial.center"] = fmt(initial_center);
  m["initial.width"] = fmt(initial_width);
  m["initial.momentum"] = fmt(initial_momentum);
  m["initial.index"] = std::to_string(initial_index);
  if (!initial_file.empty()) m["initial.file"] = initial_file;
  m["tol.null"] = fmt(null_tol);
  m["tol.reality"] = fmt(reality_tol);
  m["tol.unitarity"] = fmt(unitarity_tol);
  m["include_null_states"] = include_null_states ? "true" : "false";
  m["out.dir"] = out_dir;
  return m;
}

}  // namespace krein::cli
