#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <sys/wait.h>

#include "tsecon/csv.hpp"
#include "tsecon/error.hpp"
#include "tsecon/pipeline.hpp"
#include "tsecon/report_io.hpp"
#include "tsecon/sim.hpp"

using namespace tsecon;
namespace fs = std::filesystem;

namespace {

TimeSeries q_series(std::string name, std::vector<double> v) {
  return TimeSeries(std::move(name), Frequency::quarterly, Period{2010, 1}, std::move(v));
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("tsecon_pipeline_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// error-correcting dependent over one random-walk and one stationary driver
void write_study_files(const fs::path& dir, bool make_dependent_i2 = false) {
  const int n = 80;
  sim::Rng rng(7070);
  const auto x1 = sim::random_walk(n, rng, 0.3);
  std::vector<double> x2(static_cast<std::size_t>(n));
  double dev = 0.0;
  for (auto& v : x2) {
    dev = 0.5 * dev + 0.4 * rng.normal();
    v = 2.0 + dev;
  }
  std::vector<double> y(static_cast<std::size_t>(n));
  double prev = 1.0 + 0.8 * x1[0] - 0.3 * x2[0];
  for (int t = 0; t < n; ++t) {
    const double target = 1.0 + 0.8 * x1[static_cast<std::size_t>(t)] -
                          0.3 * x2[static_cast<std::size_t>(t)];
    prev = 0.3 * prev + 0.7 * target + 0.05 * rng.normal();
    y[static_cast<std::size_t>(t)] = prev;
  }
  if (make_dependent_i2) {
    y = sim::cumulative_sum(sim::cumulative_sum(sim::normal_draws(rng, n)));
  }
  write_series_csv(dir / "y.csv", q_series("Y", y));
  write_series_csv(dir / "x1.csv", q_series("X1", x1));
  // monthly driver, aggregated by the pipeline
  std::vector<double> x2_monthly(static_cast<std::size_t>(3 * n));
  for (int t = 0; t < n; ++t) {
    for (int m = 0; m < 3; ++m) {
      x2_monthly[static_cast<std::size_t>(3 * t + m)] =
          x2[static_cast<std::size_t>(t)] + 0.01 * rng.normal();
    }
  }
  write_series_csv(dir / "x2.csv", TimeSeries("X2", Frequency::monthly,
                                              Period{2010, 1}, x2_monthly));
}

std::string study_config_json() {
  return R"({
  "schema_version": 1,
  "variables": [
    {"name": "Y", "role": "dependent", "file": "y.csv", "transforms": []},
    {"name": "X1", "role": "regressor", "file": "x1.csv", "transforms": []},
    {"name": "X2", "role": "regressor", "file": "x2.csv", "aggregation": "mean",
     "transforms": ["aggregate"]}
  ],
  "max_p": 2,
  "max_q": 1,
  "bounds_case": "unrestricted_intercept",
  "levels": [0.10, 0.05, 0.01],
  "ecm_include_intercept": false,
  "lm_lags": 4,
  "adf": {
    "level": {"deterministics": "constant_and_trend"},
    "difference": {"deterministics": "constant"}
  },
  "seed": 1,
  "out_dir": "out"
})";
}

StudyConfig write_study(const fs::path& dir, bool i2 = false) {
  write_study_files(dir, i2);
  const fs::path cfg_path = dir / "config.json";
  std::ofstream(cfg_path) << study_config_json();
  return StudyConfig::load(cfg_path);
}

int run_cli(const std::string& args) {
  const char* cli = std::getenv("TSECON_CLI");
  REQUIRE(cli != nullptr);
  const std::string cmd = std::string(cli) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("empty config reports every missing field at once") {
  try {
    StudyConfig::parse("{}", ".");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("schema_version") != std::string::npos);
    CHECK(msg.find("variables") != std::string::npos);
    CHECK(msg.find("dependent") != std::string::npos);
  }
  CHECK_THROWS_AS(StudyConfig::parse("not json", "."), ValidationError);
}

TEST_CASE("config validation catches structural mistakes") {
  const std::string two_dependents = R"({
    "schema_version": 1,
    "variables": [
      {"name": "A", "role": "dependent", "file": "a.csv"},
      {"name": "B", "role": "dependent", "file": "b.csv"},
      {"name": "C", "role": "regressor", "file": "c.csv"}
    ]})";
  CHECK_THROWS_AS(StudyConfig::parse(two_dependents, "."), ValidationError);

  const std::string bad_level = R"({
    "schema_version": 1,
    "levels": [0.2],
    "variables": [
      {"name": "A", "role": "dependent", "file": "a.csv"},
      {"name": "C", "role": "regressor", "file": "c.csv"}
    ]})";
  CHECK_THROWS_AS(StudyConfig::parse(bad_level, "."), ValidationError);

  const std::string bad_builder = R"({
    "schema_version": 1,
    "variables": [
      {"name": "A", "role": "dependent", "file": "a.csv"},
      {"name": "C", "role": "regressor", "derive": {"builder": "nope", "inputs": []}}
    ]})";
  CHECK_THROWS_AS(StudyConfig::parse(bad_builder, "."), ValidationError);
}

TEST_CASE("mdi builder arithmetic and errors") {
  const auto mdi = build_mdi(q_series("op", {4, 0}), q_series("ct", {3, 0}),
                             q_series("cc", {3, 0}), q_series("gdp", {2, 5}));
  CHECK(mdi[0] == doctest::Approx(5.0));
  CHECK(mdi[1] == 0.0);
  CHECK(mdi.name() == "MDI");

  CHECK_THROWS_AS(build_mdi(q_series("op", {4}), q_series("ct", {3}),
                            q_series("cc", {3}), q_series("gdp", {0})),
                  StatError);
  const TimeSeries shifted("op", Frequency::quarterly, Period{2011, 1}, {4.0});
  CHECK_THROWS_AS(
      build_mdi(shifted, q_series("ct", {3}), q_series("cc", {3}), q_series("gdp", {2})),
      ValidationError);
}

TEST_CASE("brokerage cost builder") {
  const auto a =
      brokerage_conversion_cost(q_series("comm", {1, 0}), q_series("vol", {1000, 500}));
  CHECK(a[0] == doctest::Approx(0.002));
  CHECK(a[1] == doctest::Approx(0.001));
  CHECK(a.name() == "A");
  CHECK_THROWS_AS(
      brokerage_conversion_cost(q_series("comm", {1}), q_series("vol", {0})),
      StatError);
}

TEST_CASE("run_study produces a coherent report on a cointegrated study") {
  const auto dir = fresh_dir("ok");
  const auto config = write_study(dir);
  const auto doc = run_study(config);

  CHECK(doc.sample_size == 80);
  CHECK(doc.descriptives.size() == 3);
  CHECK(doc.adf.size() == 3);
  for (const auto& a : doc.adf) {
    CHECK(a.result.order != unitroot::IntegrationOrder::higher);
  }
  CHECK(doc.bounds.k == 2);
  CHECK_FALSE(doc.conditional_on_cointegration);
  CHECK(doc.ecm.lambda > -1.0);
  CHECK(doc.ecm.lambda < 0.0);
  CHECK(doc.cusum.path.size() == doc.cusumsq.path.size());
  CHECK(static_cast<int>(doc.cusum.path.size()) == doc.ecm.fit.n - doc.ecm.fit.k);

  // long-run signs match the data-generating relation
  REQUIRE(doc.long_run.names.size() == 2);
  CHECK(doc.long_run.theta[0] == doctest::Approx(0.8).epsilon(0.2));
  CHECK(doc.long_run.theta[1] == doctest::Approx(-0.3).epsilon(0.35));
}

TEST_CASE("pipeline aborts on a series integrated beyond I(1)") {
  const auto dir = fresh_dir("i2");
  const auto config = write_study(dir, /*i2=*/true);
  CHECK_THROWS_WITH_AS(static_cast<void>(run_study(config)),
                       doctest::Contains("beyond I(1)"), StatError);
}

TEST_CASE("reports are deterministic and round-trip through json") {
  const auto dir = fresh_dir("det");
  const auto config = write_study(dir);
  const auto doc1 = run_study(config);
  const auto doc2 = run_study(config);
  const std::string j1 = render_report_json(doc1);
  const std::string j2 = render_report_json(doc2);
  CHECK(j1 == j2);

  emit_report(doc1, dir / "out1");
  emit_report(doc2, dir / "out2");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  CHECK(slurp(dir / "out1" / "report.json") == slurp(dir / "out2" / "report.json"));
  CHECK(slurp(dir / "out1" / "report.txt") == slurp(dir / "out2" / "report.txt"));

  // parses as json and re-reads structurally identical
  const auto parsed = nlohmann::json::parse(slurp(dir / "out1" / "report.json"));
  const auto again = nlohmann::json::parse(j1);
  CHECK(parsed == again);
  CHECK(parsed.at("bounds").at("rows").size() == 3);

  // plot csv row count: one per stability point plus header
  const std::string cusum_csv = slurp(dir / "out1" / "cusum.csv");
  const auto rows = std::count(cusum_csv.begin(), cusum_csv.end(), '\n');
  CHECK(rows == static_cast<long>(doc1.cusum.path.size()) + 1);
}

TEST_CASE("cli exit codes distinguish validation, statistical and io failures") {
  const auto dir = fresh_dir("cli");
  const auto config = write_study(dir);
  (void)config;

  CHECK(run_cli("run --config " + (dir / "config.json").string() + " --out " +
                (dir / "out").string()) == 0);
  CHECK(fs::exists(dir / "out" / "report.json"));
  CHECK(fs::exists(dir / "out" / "cusum.csv"));
  CHECK(fs::exists(dir / "out" / "cusumsq.csv"));

  // io error: missing config file
  CHECK(run_cli("run --config " + (dir / "nope.json").string()) == 4);

  // validation error: malformed config
  std::ofstream(dir / "broken.json") << "{\"schema_version\": 1}";
  CHECK(run_cli("run --config " + (dir / "broken.json").string()) == 2);

  // statistical precondition: I(2) dependent
  const auto dir2 = fresh_dir("cli_i2");
  write_study(dir2, /*i2=*/true);
  CHECK(run_cli("run --config " + (dir2 / "config.json").string() + " --out " +
                (dir2 / "out").string()) == 3);
}

TEST_CASE("cli subcommands: adf, bounds, baumol, report") {
  const auto dir = fresh_dir("cli_sub");
  const auto config = write_study(dir);
  (void)config;

  CHECK(run_cli("adf --series " + (dir / "y.csv").string() + " --constant") == 0);
  CHECK(run_cli("adf --series " + (dir / "y.csv").string() + " --trend --lags 2") == 0);
  CHECK(run_cli("bounds --config " + (dir / "config.json").string()) == 0);

  CHECK(run_cli("baumol --income 100 --cost 2 --cbdc-cost 0.5 --rate 0.04") == 0);
  CHECK(run_cli("baumol --income 100 --cost 2 --cbdc-cost 0.5 --rate 0.04 "
                "--sweep b1:0.1:2.0:10 --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "sweep.csv"));
  {
    std::ifstream sweep(dir / "sweep.csv");
    std::string header;
    std::getline(sweep, header);
    CHECK(header == "b1,m_cash,m_cbdc,delta");
    int rows = 0;
    for (std::string l; std::getline(sweep, l);) ++rows;
    CHECK(rows == 10);
  }
  CHECK(run_cli("baumol --income 100 --cost 2 --cbdc-cost 0.5 --rate 0.04 "
                "--sweep bad") == 2);
  CHECK(run_cli("baumol --income -1 --cost 2 --cbdc-cost 0.5 --rate 0.04") == 2);

  CHECK(run_cli("run --config " + (dir / "config.json").string() + " --out " +
                (dir / "out").string()) == 0);
  CHECK(run_cli("report --inspect " + (dir / "out" / "report.json").string()) == 0);
  CHECK(run_cli("report --inspect " + (dir / "y.csv").string()) == 4);

  // unknown arguments are a usage error
  CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("derived variables flow through the study") {
  const auto dir = fresh_dir("derived");
  const int n = 80;
  sim::Rng rng(9090);
  // components for the mdi builder
  std::vector<double> online(n), transfer(n), consumption(n), gdp_raw(n);
  for (int t = 0; t < n; ++t) {
    online[t] = 50.0 + t + rng.normal();
    transfer[t] = 30.0 + 0.5 * t + rng.normal();
    consumption[t] = 20.0 + rng.normal();
    gdp_raw[t] = 100.0 + 2.0 * t;
  }
  write_series_csv(dir / "online.csv", q_series("ONLINE", online));
  write_series_csv(dir / "transfer.csv", q_series("TRANSFER", transfer));
  write_series_csv(dir / "consumption.csv", q_series("CONS", consumption));
  write_series_csv(dir / "gdp.csv", q_series("GDPRAW", gdp_raw));
  write_study_files(dir);  // provides y.csv / x1.csv

  std::ofstream(dir / "config.json") << R"({
    "schema_version": 1,
    "variables": [
      {"name": "Y", "role": "dependent", "file": "y.csv"},
      {"name": "X1", "role": "regressor", "file": "x1.csv"},
      {"name": "ONLINE", "role": "raw_component", "file": "online.csv"},
      {"name": "TRANSFER", "role": "raw_component", "file": "transfer.csv"},
      {"name": "CONS", "role": "raw_component", "file": "consumption.csv"},
      {"name": "GDPRAW", "role": "raw_component", "file": "gdp.csv"},
      {"name": "MDI", "role": "regressor",
       "derive": {"builder": "mdi", "inputs": ["ONLINE", "TRANSFER", "CONS", "GDPRAW"]}}
    ],
    "max_p": 1,
    "max_q": 1,
    "bounds_case": "unrestricted_intercept"
  })";
  const auto config = StudyConfig::load(dir / "config.json");
  const auto doc = run_study(config);
  CHECK(doc.bounds.k == 2);  // X1 and MDI
  bool has_mdi = false;
  for (const auto& d : doc.descriptives) has_mdi |= d.name == "MDI";
  CHECK(has_mdi);
}
