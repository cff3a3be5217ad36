#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "tapsum/io.hpp"

using namespace tapsum;

namespace {

SimulationPlan demo_plan() {
  SimulationPlan p = SimulationPlan::make(1.5, 0.2, FilterSpec::power_law(0.75), 128,
                                          {0.25, 0.5, 1.0}, 8, 512, 42,
                                          Normalization::ExactStdDev);
  p.hurst = 0.8;
  return p;
}

#ifdef TAPSUM_CLI_PATH
int run_cli(const std::string& args, std::string* output = nullptr) {
  const std::string out_file = "/tmp/tapsum_cli_out.txt";
  const std::string cmd =
      std::string(TAPSUM_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int rc = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
#endif

}  // namespace

TEST_CASE("filter specs round-trip through JSON") {
  for (const FilterSpec& f :
       {FilterSpec::power_law(0.75, 2.0), FilterSpec::zero_sum(1.25),
        FilterSpec::explicit_finite({1.0, -0.5})}) {
    const FilterSpec g = filter_from_json(filter_to_json(f));
    CHECK(g.kind == f.kind);
    CHECK(g.beta == f.beta);
    CHECK(g.c_a == f.c_a);
    CHECK(g.coeffs == f.coeffs);
  }
  CHECK_THROWS(filter_from_json(json{{"kind", "power_law"}, {"beta", 1.5}, {"x", 1}}));
  CHECK_THROWS(filter_from_json(json{{"kind", "bogus"}}));
}

TEST_CASE("plans round-trip through JSON, rejecting unknown keys") {
  const SimulationPlan p = demo_plan();
  json j = plan_to_json(p);
  const SimulationPlan q = plan_from_json(j);
  CHECK(plan_to_json(q) == j);  // parse -> serialize -> parse identity
  CHECK(q.params.b == doctest::Approx(p.params.b));
  CHECK(*q.hurst == 0.8);

  j["mystery"] = 1;
  CHECK_THROWS(plan_from_json(j));
}

TEST_CASE("ensemble CSV layout and determinism") {
  const SimulationPlan p = demo_plan();
  const PathEnsemble e = simulate(p);
  const std::string csv = ensemble_to_csv(e);
  CHECK(csv.rfind("replicate,0.25,0.5,1\n", 0) == 0);
  // one header plus one line per replicate
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  CHECK(ensemble_to_csv(simulate(p)) == csv);  // byte-identical rerun
}

TEST_CASE("ensemble JSON embeds the plan echo") {
  const PathEnsemble e = simulate(demo_plan());
  const json j = ensemble_to_json(e);
  CHECK(j.at("plan").at("n") == 128);
  CHECK(j.at("values").size() == 8);
  CHECK(j.at("values").at(0).size() == 3);
  CHECK(j.at("normalization_used").get<double>() > 0.0);
}

TEST_CASE("report and verdict serialization") {
  const TestReport r = TestReport::make("demo", 0.1, 0.2, 500, 7, "note");
  const json j = report_to_json(r);
  CHECK(j.at("pass") == true);
  CHECK(j.at("seed") == 7);
  CHECK(j.at("note") == "note");

  const RegimeParams p{1.2, 1.25, 1.0, true};
  const json v = verdict_to_json(p, classify(p));
  CHECK(v.at("theorem") == "UnknownGap");
  CHECK(v.at("gap_c1").get<double>() == doctest::Approx(0.41667).epsilon(1e-4));
}

TEST_CASE("output directory resolution honors the environment override") {
  unsetenv("TAPSUM_OUTPUT_DIR");
  CHECK(resolve_output_dir("") == ".");
  CHECK(resolve_output_dir("/data") == "/data");
  setenv("TAPSUM_OUTPUT_DIR", "/override", 1);
  CHECK(resolve_output_dir("/data") == "/override");
  unsetenv("TAPSUM_OUTPUT_DIR");
}

#ifdef TAPSUM_CLI_PATH

TEST_CASE("cli: classify emits a verdict and exit code 0") {
  std::string out;
  const int rc = run_cli("classify --alpha 1.5 --beta 0.75 --gamma 0.2", &out);
  CHECK(rc == 0);
  const json j = json::parse(out);
  CHECK(j.at("theorem") == "T1i");
  CHECK(j.at("hurst").get<double>() == doctest::Approx(0.8));
}

TEST_CASE("cli: usage errors exit with code 2") {
  CHECK(run_cli("classify --beta 0.75 --gamma 0.2") == 2);   // missing alpha
  CHECK(run_cli("verify nosuchsuite") == 2);
  CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("cli: invalid parameters exit nonzero") {
  CHECK(run_cli("classify --alpha 2.5 --beta 0.75 --gamma 0.2") == 2);
  CHECK(run_cli("moments --alpha 1.5 --b 0.5") == 2);
}

TEST_CASE("cli: moments prints exact values") {
  std::string out;
  REQUIRE(run_cli("moments --alpha 1.5 --b 10", &out) == 0);
  const json j = json::parse(out);
  CHECK(j.at("moments").at(1).at("exact").get<double>() ==
        doctest::Approx(2.3991672445680077));
}

TEST_CASE("cli: sample emits the requested number of draws") {
  std::string out;
  REQUIRE(run_cli("sample --alpha 1.5 --b 10 --count 5 --seed 9", &out) == 0);
  CHECK(std::count(out.begin(), out.end(), '\n') == 6);  // header + 5 values
  std::string again;
  run_cli("sample --alpha 1.5 --b 10 --count 5 --seed 9", &again);
  CHECK(out == again);
}

TEST_CASE("cli: simulate writes deterministic artifacts honoring the env override") {
  const std::string dir = "/tmp/tapsum_cli_sim";
  std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  const json cfg = {
      {"plan", plan_to_json(demo_plan())},
      {"output", {{"dir", "/nonexistent-ignored"}, {"basename", "demo"},
                  {"formats", {"csv", "json"}}}},
      {"threads", 2},
  };
  write_text_file(dir + "/config.json", cfg.dump(2));
  setenv("TAPSUM_OUTPUT_DIR", dir.c_str(), 1);
  REQUIRE(run_cli("simulate --config " + dir + "/config.json") == 0);
  const std::string csv1 = slurp(dir + "/demo.csv");
  const json manifest = json::parse(slurp(dir + "/demo.manifest.json"));
  CHECK(manifest.at("plan").at("b").get<double>() ==
        doctest::Approx(std::pow(128.0, 0.2)));
  REQUIRE(run_cli("simulate --config " + dir + "/config.json") == 0);
  CHECK(slurp(dir + "/demo.csv") == csv1);  // byte-identical rerun
  unsetenv("TAPSUM_OUTPUT_DIR");

  // config errors exit with code 2
  write_text_file(dir + "/bad.json", "{\"plan\": {}, \"quux\": 1}");
  CHECK(run_cli("simulate --config " + dir + "/bad.json") == 2);
}

TEST_CASE("cli: report summarizes verify output") {
  const std::string dir = "/tmp/tapsum_cli_rep";
  std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  const json fake = {{"suite", "demo"}, {"pass", true},
                     {"criteria", json::array()}};
  write_text_file(dir + "/r.json", fake.dump());
  CHECK(run_cli("report " + dir + "/r.json") == 0);
  const json failing = {{"suite", "demo"}, {"pass", false}};
  write_text_file(dir + "/f.json", failing.dump());
  CHECK(run_cli("report " + dir + "/f.json") == 1);
}

#endif  // TAPSUM_CLI_PATH
