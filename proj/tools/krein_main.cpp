#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"J-Hermitian (Krein-space) quantum mechanics toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::vector<std::string> overrides;
  bool plot = false, force = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "flat key=value config file");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--set", overrides, "override a config key (key=value)");
    sub->add_flag("--plot", plot, "write an SVG plot of both norms");
    sub->add_flag("--force", force, "overwrite existing output files");
  };

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "diagonalize and classify by Krein norm");
  CLI::App* evolve = app.add_subcommand(
      "evolve", "propagate an initial state, trace both norms");
  CLI::App* check = app.add_subcommand(
      "check", "PT-symmetry, J-Hermiticity and unitarity verdicts");
  add_common(spectrum);
  add_common(evolve);
  add_common(check);

  CLI11_PARSE(app, argc, argv);

  krein::cli::Command command = krein::cli::Command::check;
  if (spectrum->parsed()) command = krein::cli::Command::spectrum;
  if (evolve->parsed()) command = krein::cli::Command::evolve;

  try {
    krein::cli::RunConfig cfg =
        krein::cli::parse_config(command, config_path, overrides);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    cfg.plot = plot;
    cfg.force = force;
    const krein::cli::RunResult result = krein::cli::run(cfg);
    return result.exit_code;
  } catch (const krein::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
