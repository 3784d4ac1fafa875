#pragma once

#include <vector>

#include "cli/config.hpp"
#include "cli/output.hpp"
#include "krein/state.hpp"

namespace krein::cli {

struct RunResult {
  ResultBundle bundle;
  int exit_code = 0;
  // filled by run_evolve when evolve.snapshots is set
  std::vector<StateVector> snapshots;
};

RunResult run_spectrum(const RunConfig& cfg);
RunResult run_evolve(const RunConfig& cfg);
RunResult run_check(const RunConfig& cfg);

// Dispatches on cfg.command and writes the output files.
RunResult run(const RunConfig& cfg);

}  // namespace krein::cli
