#include "tapsum/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tapsum {

namespace {

std::string normalization_name(Normalization n) {
  switch (n) {
    case Normalization::ExactStdDev: return "exact_stddev";
    case Normalization::TheoreticalPower: return "theoretical_power";
    case Normalization::Raw: return "raw";
  }
  return "?";
}

Normalization normalization_from_name(const std::string& s) {
  if (s == "exact_stddev") return Normalization::ExactStdDev;
  if (s == "theoretical_power") return Normalization::TheoreticalPower;
  if (s == "raw") return Normalization::Raw;
  throw std::invalid_argument("unknown normalization: " + s);
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) { ok = true; break; }
    if (!ok) throw std::invalid_argument(where + ": unknown key '" + it.key() + "'");
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

json filter_to_json(const FilterSpec& f) {
  json j;
  switch (f.kind) {
    case FilterKind::PowerLaw:
      j["kind"] = "power_law";
      j["beta"] = f.beta;
      j["c_a"] = f.c_a;
      break;
    case FilterKind::ZeroSumTelescoping:
      j["kind"] = "zero_sum";
      j["beta"] = f.beta;
      break;
    case FilterKind::ExplicitFinite:
      j["kind"] = "explicit";
      j["coeffs"] = f.coeffs;
      break;
  }
  return j;
}

FilterSpec filter_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "power_law") {
    reject_unknown_keys(j, {"kind", "beta", "c_a"}, "filter");
    return FilterSpec::power_law(j.at("beta").get<double>(),
                                 j.value("c_a", 1.0));
  }
  if (kind == "zero_sum") {
    reject_unknown_keys(j, {"kind", "beta"}, "filter");
    return FilterSpec::zero_sum(j.at("beta").get<double>());
  }
  if (kind == "explicit") {
    reject_unknown_keys(j, {"kind", "coeffs"}, "filter");
    return FilterSpec::explicit_finite(j.at("coeffs").get<std::vector<double>>());
  }
  throw std::invalid_argument("filter: unknown kind '" + kind + "'");
}

json plan_to_json(const SimulationPlan& plan) {
  json j;
  j["alpha"] = plan.params.alpha;
  j["gamma"] = plan.gamma;
  j["b"] = plan.params.b;  // echoed for the manifest; derived on read
  j["filter"] = filter_to_json(plan.filter);
  j["n"] = plan.n;
  j["t_grid"] = plan.t_grid;
  j["replicates"] = plan.replicates;
  j["truncation_J"] = plan.truncation_J;
  j["seed"] = plan.seed;
  j["normalization"] = normalization_name(plan.normalization);
  if (plan.hurst) j["hurst"] = *plan.hurst;
  return j;
}

SimulationPlan plan_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"alpha", "gamma", "b", "filter", "n", "t_grid", "replicates",
                       "truncation_J", "seed", "normalization", "hurst"},
                      "plan");
  SimulationPlan plan = SimulationPlan::make(
      j.at("alpha").get<double>(), j.at("gamma").get<double>(),
      filter_from_json(j.at("filter")), j.at("n").get<std::int64_t>(),
      j.at("t_grid").get<std::vector<double>>(), j.at("replicates").get<int>(),
      j.at("truncation_J").get<std::int64_t>(), j.at("seed").get<std::uint64_t>(),
      normalization_from_name(j.value("normalization", "raw")));
  if (j.contains("hurst")) plan.hurst = j.at("hurst").get<double>();
  return plan;
}

std::string ensemble_to_csv(const PathEnsemble& e) {
  std::ostringstream os;
  os << "replicate";
  for (double t : e.plan.t_grid) os << ',' << format_double(t);
  os << '\n';
  for (std::size_t r = 0; r < e.rows; ++r) {
    os << r;
    for (std::size_t c = 0; c < e.cols; ++c) os << ',' << format_double(e.at(r, c));
    os << '\n';
  }
  return os.str();
}

json ensemble_to_json(const PathEnsemble& e) {
  json j;
  j["plan"] = plan_to_json(e.plan);
  j["normalization_used"] = e.normalization_used;
  json rows = json::array();
  for (std::size_t r = 0; r < e.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < e.cols; ++c) row.push_back(e.at(r, c));
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  return j;
}

json report_to_json(const TestReport& r) {
  json j;
  j["name"] = r.name;
  j["value"] = r.value;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  j["sample_size"] = r.sample_size;
  j["seed"] = r.seed;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json fit_to_json(const ScalingFit& f) {
  json j;
  j["exponent_hat"] = f.exponent_hat;
  j["std_error"] = f.std_error;
  j["r_squared"] = f.r_squared;
  json pts = json::array();
  for (const auto& [x, y] : f.points) pts.push_back({x, y});
  j["points"] = std::move(pts);
  return j;
}

json verdict_to_json(const RegimeParams& p, const RegimeVerdict& v) {
  json j;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["gamma"] = p.gamma;
  j["zero_sum"] = p.zero_sum;
  j["theorem"] = theorem_name(v.theorem);
  j["tapering"] = tapering_name(v.tapering);
  if (v.theorem != Theorem::Unsupported && v.theorem != Theorem::UnknownGap)
    j["limit"] = limit_name(v.limit);
  if (v.hurst) j["hurst"] = *v.hurst;
  if (v.gap_bounds) {
    j["gap_c1"] = v.gap_bounds->first;
    if (std::isfinite(v.gap_bounds->second)) j["gap_c2"] = v.gap_bounds->second;
  }
  return j;
}

std::string resolve_output_dir(const std::string& configured) {
  if (const char* env = std::getenv("TAPSUM_OUTPUT_DIR"); env && *env) return env;
  return configured.empty() ? "." : configured;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tapsum
