#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "krein/evolution.hpp"
#include "krein/spectrum.hpp"

namespace krein::cli {

struct CheckVerdict {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  bool required = true;  // informational checks do not affect the exit code
};

struct ResultBundle {
  std::map<std::string, std::string> config;
  std::string version;
  std::string timestamp;
  std::vector<CheckVerdict> verdicts;

  bool has_spectrum = false;
  // serialized spectrum rows: index, re, im, krein_norm, class, residual
  struct SpectrumRow {
    int index;
    double re_lambda, im_lambda, krein_norm;
    std::string classification;
    double residual;
  };
  std::vector<SpectrumRow> spectrum;
  double max_solver_residual = 0.0;

  bool has_trace = false;
  std::vector<double> times, krein_norms, dirac_norms, continuity_residuals;
};

std::string format_number(double v);  // fixed %.12e

// SOURCE_DATE_EPOCH (when set) pins the timestamp for reproducible output.
std::string make_timestamp();

void write_spectrum_csv(const ResultBundle& bundle, const std::string& path);
void write_trace_csv(const ResultBundle& bundle, const std::string& path);
void write_bundle_json(const ResultBundle& bundle, const std::string& path);
ResultBundle load_bundle_json(const std::string& path);

// Static two-series plot of both norms against time.
void write_norms_svg(const ResultBundle& bundle, const std::string& path);

// Refuses to overwrite an existing file unless force is set.
void check_writable(const std::string& path, bool force);

}  // namespace krein::cli
