#include "framepot/io.hpp"

#include "framepot/rng.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace framepot {

Json to_json(const Configuration &config) {
  return Json{{"dim", config.dim()}, {"n", config.size()}, {"vectors", config.rows()}};
}

Configuration configuration_from_json(const Json &j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    auto vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != vectors.size()) {
      throw std::invalid_argument("\"n\" does not match the number of vectors");
    }
    return Configuration(dim, vectors);
  } catch (const Json::exception &e) {
    throw std::invalid_argument(std::string("malformed configuration JSON: ") + e.what());
  }
}

Configuration read_configuration(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception &e) {
    throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
  }
  return configuration_from_json(j);
}

void write_configuration(const Configuration &config, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(config).dump(2) << '\n';
}

Json to_json(const OptimizationResult &result) {
  Json values = Json::array();
  for (double v : result.per_restart_values) {
    values.push_back(std::isfinite(v) ? Json(v) : Json(nullptr));
  }
  return Json{{"best_value", result.best_value},
              {"best_config", to_json(result.best_config)},
              {"per_restart_values", values},
              {"best_restart", result.best_restart},
              {"seed", result.seed},
              {"prng", std::string(Rng::kAlgorithm)},
              {"iterations_used", result.iterations_used},
              {"tied_invariant_digests", result.tied_invariant_digests}};
}

Json to_json(const BoundReport &report) {
  return Json{{"kind", to_string(report.kind)}, {"value", report.value}, {"applicability", report.applicability}};
}

Json to_json(const DesignReport &report) {
  return Json{{"max_strength", report.max_strength},
              {"worst_residual", report.worst_residual},
              {"passed", report.passed}};
}

Json to_json(const SharpReport &report) {
  return Json{{"is_sharp", report.is_sharp},
              {"m", report.m},
              {"inner_products", report.inner_products},
              {"design_strength_needed", report.design_strength_needed},
              {"design", to_json(report.design)}};
}

Json to_json(const Certificate &cert) {
  Json j{{"valid", cert.valid()},
         {"lower_bound", cert.lower_bound},
         {"pointwise_ok", cert.pointwise_ok},
         {"pd_ok", cert.pd_ok},
         {"dim", cert.dim},
         {"n", cert.n},
         {"nodes", cert.nodes},
         {"interpolant", cert.interpolant.coeffs()},
         {"expansion_coeffs", cert.expansion_coeffs},
         {"min_slack", cert.min_slack}};
  j["witness"] = cert.witness ? Json(*cert.witness) : Json(nullptr);
  j["offending_index"] = cert.offending_index ? Json(*cert.offending_index) : Json(nullptr);
  return j;
}

Json to_json(const HalfCircleCertificate &cert) {
  return Json{{"certificate", to_json(cert.certificate)}, {"achieved", cert.achieved}, {"gap", cert.gap}};
}

Json to_json(const ConjectureReport &report) {
  Json trials = Json::array();
  for (const auto &t : report.trial_log) {
    trials.push_back(Json{{"p", t.p}, {"value", t.value}, {"reference", t.reference}, {"seed", t.seed}});
  }
  return Json{{"d", report.d},
              {"k", report.k},
              {"p_min", report.p_min},
              {"p_max", report.p_max},
              {"trials", report.trials},
              {"beat_count", report.beat_count},
              {"significant_beat_count", report.significant_beat_count},
              {"significance", report.significance},
              {"max_gap", report.max_gap},
              {"seed", report.seed},
              {"trial_log", trials}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sweep_csv(const SweepResult &result) {
  std::ostringstream out;
  out << "p,value,invariant_digest,seed\n";
  for (const auto &row : result.rows) {
    out << format_double(row.p) << ',' << format_double(row.value) << ',' << row.invariant_digest << ','
        << row.seed << '\n';
  }
  return out.str();
}

void export_sweep_csv(const SweepResult &result, const std::filesystem::path &path) {
  if (result.rows.empty()) throw std::invalid_argument("refusing to export an empty sweep");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << sweep_csv(result);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

template <typename T>
T parse_field(const std::string &s) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad CSV field '" + s + "'");
  }
  return v;
}

}  // namespace

SweepResult parse_sweep_csv(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "p,value,invariant_digest,seed") {
    throw std::invalid_argument("missing sweep CSV header");
  }
  SweepResult result;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.size() != 4) throw std::invalid_argument("sweep CSV row needs 4 fields: " + line);
    SweepRow row;
    row.p = parse_field<double>(fields[0]);
    row.value = parse_field<double>(fields[1]);
    row.invariant_digest = fields[2];
    row.seed = parse_field<std::uint64_t>(fields[3]);
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace framepot
