#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tapsum/acceptance.hpp"
#include "tapsum/distributions.hpp"
#include "tapsum/io.hpp"
#include "tapsum/regimes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr int kExitPass = 0;
constexpr int kExitTestFailure = 1;
constexpr int kExitUsage = 2;

using tapsum::json;

int cmd_moments(double alpha, double b) {
  const tapsum::TaperedParetoParams p{alpha, b};
  json out;
  out["alpha"] = alpha;
  out["b"] = b;
  for (double r : {0.0, 1.0, 2.0, 3.0}) {
    json m;
    m["r"] = r;
    m["exact"] = tp_moment_exact(p, r);
    m["asymptotic"] = tp_moment_asymptotic(p, r);
    out["moments"].push_back(m);
  }
  out["centered_variance"] = tapsum::centered_innovation_variance(p);
  out["third_abs_central_moment"] = tapsum::tp_third_abs_central_moment(p);
  std::cout << out.dump(2) << '\n';
  return kExitPass;
}

int cmd_sample(double alpha, double b, std::size_t count, std::uint64_t seed) {
  const tapsum::TaperedParetoParams p{alpha, b};
  tapsum::RngStream rng(seed, 0);
  std::cout << "value\n";
  std::cout.precision(17);
  for (std::size_t i = 0; i < count; ++i) std::cout << tp_sample(p, rng) << '\n';
  return kExitPass;
}

int cmd_classify(double alpha, double beta, double gamma, bool zero_sum) {
  const tapsum::RegimeParams p{alpha, beta, gamma, zero_sum};
  const tapsum::RegimeVerdict v = tapsum::classify(p);
  std::cout << tapsum::verdict_to_json(p, v).dump(2) << '\n';
  return kExitPass;
}

int cmd_simulate(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config " << config_path << '\n';
    return kExitUsage;
  }
  json cfg = json::parse(in);
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    const std::string& k = it.key();
    if (k != "plan" && k != "output" && k != "threads") {
      std::cerr << "error: unknown config key '" << k << "'\n";
      return kExitUsage;
    }
  }
#ifdef _OPENMP
  if (cfg.contains("threads")) omp_set_num_threads(cfg.at("threads").get<int>());
#endif
  const tapsum::SimulationPlan plan = tapsum::plan_from_json(cfg.at("plan"));

  std::string dir = ".", basename = "ensemble";
  std::vector<std::string> formats = {"csv"};
  if (cfg.contains("output")) {
    const json& o = cfg.at("output");
    for (auto it = o.begin(); it != o.end(); ++it) {
      const std::string& k = it.key();
      if (k != "dir" && k != "basename" && k != "formats") {
        std::cerr << "error: unknown output key '" << k << "'\n";
        return kExitUsage;
      }
    }
    dir = o.value("dir", dir);
    basename = o.value("basename", basename);
    if (o.contains("formats")) formats = o.at("formats").get<std::vector<std::string>>();
  }
  dir = tapsum::resolve_output_dir(dir);

  const auto start = std::chrono::steady_clock::now();
  const tapsum::PathEnsemble e = tapsum::simulate(plan);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const auto& f : formats) {
    if (f == "csv") {
      tapsum::write_text_file(dir + "/" + basename + ".csv", ensemble_to_csv(e));
    } else if (f == "json") {
      tapsum::write_text_file(dir + "/" + basename + ".json",
                              ensemble_to_json(e).dump(2) + "\n");
    } else {
      std::cerr << "error: unknown output format '" << f << "'\n";
      return kExitUsage;
    }
  }
  json manifest;
  manifest["plan"] = plan_to_json(plan);
  manifest["normalization_used"] = e.normalization_used;
  manifest["wall_seconds"] = secs;
  manifest["library_version"] = "1.0.0";
  manifest["outputs"] = formats;
  tapsum::write_text_file(dir + "/" + basename + ".manifest.json",
                          manifest.dump(2) + "\n");
  std::cout << manifest.dump(2) << '\n';
  return kExitPass;
}

int cmd_verify(const std::string& suite, bool fast, const std::string& out_path) {
  std::vector<int> ids;
  try {
    ids = tapsum::suite_criteria(suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  json out;
  out["suite"] = suite;
  out["fast"] = fast;
  bool all_pass = true;
  for (int id : ids) {
    const tapsum::CriterionResult r = tapsum::run_criterion(id, fast);
    json jc;
    jc["criterion"] = r.id;
    jc["name"] = r.name;
    jc["pass"] = r.pass;
    jc["seconds"] = r.seconds;
    for (const auto& c : r.checks) jc["checks"].push_back(report_to_json(c));
    out["criteria"].push_back(jc);
    all_pass = all_pass && r.pass;
  }
  out["pass"] = all_pass;
  const std::string text = out.dump(2) + "\n";
  if (!out_path.empty())
    tapsum::write_text_file(tapsum::resolve_output_dir(".") + "/" + out_path, text);
  std::cout << text;
  return all_pass ? kExitPass : kExitTestFailure;
}

int cmd_report(const std::vector<std::string>& inputs) {
  bool all_pass = true;
  for (const auto& path : inputs) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open report " << path << '\n';
      return kExitUsage;
    }
    const json j = json::parse(in);
    const bool pass = j.value("pass", false);
    all_pass = all_pass && pass;
    std::cout << path << ": suite=" << j.value("suite", std::string("?"))
              << " pass=" << (pass ? "yes" : "NO") << '\n';
    if (j.contains("criteria"))
      for (const auto& c : j.at("criteria"))
        std::cout << "  criterion " << c.value("criterion", 0) << " ("
                  << c.value("name", std::string()) << "): "
                  << (c.value("pass", false) ? "pass" : "FAIL") << '\n';
  }
  return all_pass ? kExitPass : kExitTestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulation and verification toolkit for partial sums of "
               "linear processes with tapered heavy-tailed innovations"};
  app.require_subcommand(1);

  double alpha = 0.0, b = 0.0, beta = 0.0, gamma = 0.0;
  bool zero_sum = false, fast = false;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  std::string config_path, suite, out_path;
  std::vector<std::string> report_inputs;

  auto* moments = app.add_subcommand("moments", "exact and asymptotic innovation moments");
  moments->add_option("--alpha", alpha, "tail exponent")->required();
  moments->add_option("--b", b, "taper level")->required();

  auto* sample = app.add_subcommand("sample", "draw tapered innovations as CSV");
  sample->add_option("--alpha", alpha)->required();
  sample->add_option("--b", b)->required();
  sample->add_option("--count", count, "number of draws");
  sample->add_option("--seed", seed, "RNG seed");

  auto* classify = app.add_subcommand("classify", "limit-regime verdict for (alpha, beta, gamma)");
  classify->add_option("--alpha", alpha)->required();
  classify->add_option("--beta", beta)->required();
  classify->add_option("--gamma", gamma)->required();
  classify->add_flag("--zero-sum", zero_sum, "filter coefficients sum to zero");

  auto* simulate = app.add_subcommand("simulate", "run a partial-sum Monte Carlo experiment");
  simulate->add_option("--config", config_path, "JSON config file")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "moments | prop1 | t1 | t2 | coupling | limits")
      ->required();
  verify->add_flag("--fast", fast, "reduced replicates, widened tolerances");
  verify->add_option("--out", out_path, "also write the JSON report to this file");

  auto* report = app.add_subcommand("report", "summarize verify JSON reports");
  report->add_option("inputs", report_inputs, "report files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (moments->parsed()) return cmd_moments(alpha, b);
    if (sample->parsed()) return cmd_sample(alpha, b, count, seed);
    if (classify->parsed()) return cmd_classify(alpha, beta, gamma, zero_sum);
    if (simulate->parsed()) return cmd_simulate(config_path);
    if (verify->parsed()) return cmd_verify(suite, fast, out_path);
    if (report->parsed()) return cmd_report(report_inputs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
