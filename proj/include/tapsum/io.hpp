#pragma once

#include <string>

#include <json.hpp>

#include "tapsum/engine.hpp"
#include "tapsum/regimes.hpp"
#include "tapsum/stats.hpp"

namespace tapsum {

using json = nlohmann::json;

json filter_to_json(const FilterSpec& f);
FilterSpec filter_from_json(const json& j);

json plan_to_json(const SimulationPlan& plan);
// Inverse of plan_to_json; rejects unknown keys.  b is recomputed from
// (n, gamma), never read.
SimulationPlan plan_from_json(const json& j);

// CSV layout v1: header "replicate,<t_1>,...,<t_k>", one row per replicate.
std::string ensemble_to_csv(const PathEnsemble& e);
json ensemble_to_json(const PathEnsemble& e);

json report_to_json(const TestReport& r);
json fit_to_json(const ScalingFit& f);
json verdict_to_json(const RegimeParams& p, const RegimeVerdict& v);

// Chosen output directory: the TAPSUM_OUTPUT_DIR environment variable
// wins over the configured value; "." if both are empty.
std::string resolve_output_dir(const std::string& configured);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace tapsum
