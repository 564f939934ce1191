#pragma once

#include "framepot/bounds.hpp"
#include "framepot/certify.hpp"
#include "framepot/core.hpp"
#include "framepot/designs.hpp"
#include "framepot/optimizer.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace framepot {

using Json = nlohmann::json;

/// {"dim": d, "n": N, "vectors": [[...], ...]}, one row per vector.
Json to_json(const Configuration &config);
Configuration configuration_from_json(const Json &j);

Configuration read_configuration(const std::filesystem::path &path);
void write_configuration(const Configuration &config, const std::filesystem::path &path);

Json to_json(const OptimizationResult &result);
Json to_json(const BoundReport &report);
Json to_json(const DesignReport &report);
Json to_json(const SharpReport &report);
Json to_json(const Certificate &cert);
Json to_json(const HalfCircleCertificate &cert);
Json to_json(const ConjectureReport &report);

/// %.17g, which round-trips every finite double.
std::string format_double(double v);

/// Header `p,value,invariant_digest,seed`, rows in ascending p.
std::string sweep_csv(const SweepResult &result);
void export_sweep_csv(const SweepResult &result, const std::filesystem::path &path);
/// Parses the CSV back; invariants are not stored, only their digests.
SweepResult parse_sweep_csv(const std::string &text);

}  // namespace framepot
