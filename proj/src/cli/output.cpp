#include "cli/output.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>

namespace krein::cli {

using nlohmann::json;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

std::string make_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH"))
    t = static_cast<std::time_t>(std::atoll(e));
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void check_writable(const std::string& path, bool force) {
  if (!force && std::filesystem::exists(path))
    throw ConfigError("refusing to overwrite '" + path + "' (use --force)");
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

}  // namespace

void write_spectrum_csv(const ResultBundle& bundle, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "index,re_lambda,im_lambda,krein_norm,class,residual\n";
  for (const auto& r : bundle.spectrum) {
    out << r.index << ',' << format_number(r.re_lambda) << ','
        << format_number(r.im_lambda) << ',' << format_number(r.krein_norm)
        << ',' << r.classification << ',' << format_number(r.residual) << '\n';
  }
}

void write_trace_csv(const ResultBundle& bundle, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "t,krein_norm,dirac_norm,max_continuity_residual\n";
  for (std::size_t i = 0; i < bundle.times.size(); ++i) {
    out << format_number(bundle.times[i]) << ','
        << format_number(bundle.krein_norms[i]) << ','
        << format_number(bundle.dirac_norms[i]) << ','
        << format_number(bundle.continuity_residuals[i]) << '\n';
  }
}

void write_bundle_json(const ResultBundle& bundle, const std::string& path) {
  json j;
  j["version"] = bundle.version;
  j["timestamp"] = bundle.timestamp;
  j["config"] = bundle.config;
  json verdicts = json::array();
  for (const auto& v : bundle.verdicts) {
    verdicts.push_back({{"name", v.name},
                        {"passed", v.passed},
                        {"residual", v.residual},
                        {"required", v.required}});
  }
  j["verdicts"] = verdicts;
  if (bundle.has_spectrum) {
    json rows = json::array();
    for (const auto& r : bundle.spectrum) {
      rows.push_back({{"index", r.index},
                      {"re_lambda", r.re_lambda},
                      {"im_lambda", r.im_lambda},
                      {"krein_norm", r.krein_norm},
                      {"class", r.classification},
                      {"residual", r.residual}});
    }
    j["spectrum"] = rows;
    j["max_solver_residual"] = bundle.max_solver_residual;
  }
  if (bundle.has_trace) {
    j["trace"] = {{"t", bundle.times},
                  {"krein_norm", bundle.krein_norms},
                  {"dirac_norm", bundle.dirac_norms},
                  {"max_continuity_residual", bundle.continuity_residuals}};
  }
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
}

ResultBundle load_bundle_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  json j = json::parse(in);
  ResultBundle b;
  b.version = j.at("version").get<std::string>();
  b.timestamp = j.at("timestamp").get<std::string>();
  b.config = j.at("config").get<std::map<std::string, std::string>>();
  for (const auto& v : j.at("verdicts")) {
    b.verdicts.push_back({v.at("name").get<std::string>(),
                          v.at("passed").get<bool>(),
                          v.at("residual").get<double>(),
                          v.at("required").get<bool>()});
  }
  if (j.contains("spectrum")) {
    b.has_spectrum = true;
    for (const auto& r : j.at("spectrum")) {
      b.spectrum.push_back({r.at("index").get<int>(),
                            r.at("re_lambda").get<double>(),
                            r.at("im_lambda").get<double>(),
                            r.at("krein_norm").get<double>(),
                            r.at("class").get<std::string>(),
                            r.at("residual").get<double>()});
    }
    b.max_solver_residual = j.at("max_solver_residual").get<double>();
  }
  if (j.contains("trace")) {
    b.has_trace = true;
    b.times = j["trace"].at("t").get<std::vector<double>>();
    b.krein_norms = j["trace"].at("krein_norm").get<std::vector<double>>();
    b.dirac_norms = j["trace"].at("dirac_norm").get<std::vector<double>>();
    // non-finite residuals serialize as null (boundary steps have none)
    for (const auto& e : j["trace"].at("max_continuity_residual"))
      b.continuity_residuals.push_back(e.is_null() ? std::nan("")
                                                   : e.get<double>());
  }
  return b;
}

namespace {

struct Range {
  double lo, hi;
  void widen(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
};

}  // namespace

void write_norms_svg(const ResultBundle& bundle, const std::string& path) {
  const int width = 640, height = 420;
  const int ml = 70, mr = 20, mt = 30, mb = 50;
  const double pw = width - ml - mr, ph = height - mt - mb;

  Range tx{1e300, -1e300}, ty{1e300, -1e300};
  for (double t : bundle.times) tx.widen(t);
  for (double v : bundle.krein_norms) ty.widen(v);
  for (double v : bundle.dirac_norms) ty.widen(v);
  if (tx.hi <= tx.lo) tx.hi = tx.lo + 1.0;
  if (ty.hi <= ty.lo) {
    ty.lo -= 0.5;
    ty.hi += 0.5;
  }
  const double pad = 0.05 * (ty.hi - ty.lo);
  ty.lo -= pad;
  ty.hi += pad;

  auto px = [&](double t) { return ml + pw * (t - tx.lo) / (tx.hi - tx.lo); };
  auto py = [&](double v) { return mt + ph * (1.0 - (v - ty.lo) / (ty.hi - ty.lo)); };

  auto polyline = [&](const std::vector<double>& ys, const char* color) {
    std::string s = "  <polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"1.5\" points=\"";
    char buf[64];
    for (std::size_t i = 0; i < bundle.times.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(bundle.times[i]), py(ys[i]));
      s += buf;
    }
    s += "\"/>\n";
    return s;
  };

  std::ofstream out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  char buf[256];
  for (int i = 0; i <= 4; ++i) {
    const double t = tx.lo + i * (tx.hi - tx.lo) / 4.0;
    const double v = ty.lo + i * (ty.hi - ty.lo) / 4.0;
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%.1f\" y=\"%d\" font-size=\"11\" "
                  "text-anchor=\"middle\">%.3g</text>\n",
                  px(t), height - mb + 18, t);
    out << buf;
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%d\" y=\"%.1f\" font-size=\"11\" "
                  "text-anchor=\"end\">%.3g</text>\n",
                  ml - 6, py(v) + 4, v);
    out << buf;
  }
  out << polyline(bundle.krein_norms, "#1f77b4")
      << polyline(bundle.dirac_norms, "#d62728")
      << "  <text x=\"" << ml + 10 << "\" y=\"" << mt + 16
      << "\" font-size=\"12\" fill=\"#1f77b4\">Krein norm</text>\n"
      << "  <text x=\"" << ml + 10 << "\" y=\"" << mt + 32
      << "\" font-size=\"12\" fill=\"#d62728\">Dirac norm</text>\n"
      << "  <text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"12\" text-anchor=\"middle\">t</text>\n"
      << "</svg>\n";
}

}  // namespace krein::cli
