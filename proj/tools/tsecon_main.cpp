#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsecon/baumol.hpp"
#include "tsecon/csv.hpp"
#include "tsecon/error.hpp"
#include "tsecon/pipeline.hpp"
#include "tsecon/report_io.hpp"
#include "tsecon/unitroot.hpp"
#include "tsecon/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitStat = 3;
constexpr int kExitIo = 4;

int run_command(const std::string& config_path, const std::string& out_override) {
  tsecon::StudyConfig config = tsecon::StudyConfig::load(config_path);
  const tsecon::ReportDocument doc = tsecon::run_study(config);
  std::filesystem::path out_dir =
      out_override.empty() ? std::filesystem::path(config.out_dir)
                           : std::filesystem::path(out_override);
  if (out_dir.is_relative() && out_override.empty()) out_dir = config.base_dir / out_dir;
  tsecon::emit_report(doc, out_dir);
  std::cout << "report written to " << out_dir.string() << "\n";
  for (const auto& row : doc.bounds.rows) {
    std::cout << "bounds " << row.level * 100 << "%: " << tsecon::ardl::to_string(row.verdict)
              << "\n";
  }
  return kExitOk;
}

int adf_command(const std::string& csv_path, bool constant, bool trend,
                int lags, bool auto_lags) {
  tsecon::TimeSeries s = tsecon::read_series_csv(
      csv_path, std::filesystem::path(csv_path).stem().string());
  tsecon::unitroot::AdfSpec spec;
  spec.deterministics = trend ? tsecon::unitroot::Deterministics::constant_and_trend
                        : constant ? tsecon::unitroot::Deterministics::constant
                                   : tsecon::unitroot::Deterministics::none;
  if (!auto_lags) spec.lags = lags;
  const auto r = tsecon::unitroot::adf_test(s, spec);
  std::printf("series:  %s (n = %zu)\n", s.name().c_str(), s.size());
  std::printf("form:    %s\n", r.spec_string().c_str());
  std::printf("t-stat:  %.4f   (n used = %d)\n", r.t_stat, r.n_used);
  std::printf("approx p: %.4f\n", r.approx_p);
  std::printf("critical values: 1%% %.4f   5%% %.4f   10%% %.4f\n",
              r.critical_values.at_1pct, r.critical_values.at_5pct,
              r.critical_values.at_10pct);
  for (double level : {0.01, 0.05, 0.10}) {
    std::printf("at %2.0f%%: %s\n", level * 100,
                r.rejects_at(level) ? "reject unit root (stationary)"
                                    : "cannot reject unit root");
  }
  return kExitOk;
}

int bounds_command(const std::string& config_path) {
  tsecon::StudyConfig config = tsecon::StudyConfig::load(config_path);
  const tsecon::ReportDocument doc = tsecon::run_study(config);
  std::printf("ARDL order %s by SBC; case %s, k = %d\n",
              doc.order_selection.order.to_string().c_str(),
              tsecon::ardl::to_string(doc.bounds.critical_case).c_str(), doc.bounds.k);
  std::printf("F = %.4f\n", doc.bounds.f_stat);
  std::printf("%-8s%8s%8s   %s\n", "level", "I(0)", "I(1)", "verdict");
  for (const auto& row : doc.bounds.rows) {
    std::printf("%-8.0f%8.2f%8.2f   %s\n", row.level * 100, row.bounds.lower,
                row.bounds.upper, tsecon::ardl::to_string(row.verdict).c_str());
  }
  return kExitOk;
}

struct SweepSpec {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
};

SweepSpec parse_sweep(const std::string& text) {
  SweepSpec s;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) {
    throw tsecon::ValidationError("--sweep expects <param>:<from>:<to>:<steps>");
  }
  s.param = parts[0];
  if (s.param != "b1" && s.param != "r") {
    throw tsecon::ValidationError("--sweep param must be b1 or r");
  }
  try {
    s.from = std::stod(parts[1]);
    s.to = std::stod(parts[2]);
    s.steps = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw tsecon::ValidationError("--sweep expects numeric from/to/steps");
  }
  if (s.steps < 2) throw tsecon::ValidationError("--sweep needs at least 2 steps");
  return s;
}

int baumol_command(double income, double cost, double cbdc_cost, double rate,
                   const std::string& sweep_text, const std::string& out_dir) {
  tsecon::baumol::BaumolParams params{income, cost, rate};
  const auto solution = tsecon::baumol::optimal_cash(params);
  const auto sub = tsecon::baumol::cbdc_substitution(params, cbdc_cost);
  std::printf("cash:  K* = %.6g, M* = %.6g, cost = %.6g\n", solution.k_star,
              solution.m_star, solution.total_cost);
  std::printf("cbdc:  M1* = %.6g (conversion cost %.6g)\n", sub.m_cbdc, cbdc_cost);
  std::printf("delta: %.6g (%s)\n", sub.delta,
              sub.delta < 0 ? "digital currency lowers money demand"
              : sub.delta > 0 ? "digital currency raises money demand"
                              : "no change");

  if (!sweep_text.empty()) {
    const SweepSpec sweep = parse_sweep(sweep_text);
    const std::filesystem::path file = std::filesystem::path(out_dir) / "sweep.csv";
    std::ofstream out(file);
    if (!out) throw tsecon::IoError("cannot write " + file.string());
    out << sweep.param << ",m_cash,m_cbdc,delta\n";
    for (int i = 0; i < sweep.steps; ++i) {
      const double v = sweep.from + (sweep.to - sweep.from) * i / (sweep.steps - 1);
      tsecon::baumol::BaumolParams p = params;
      double b1 = cbdc_cost;
      if (sweep.param == "b1") {
        b1 = v;
      } else {
        p.interest_rate = v;
      }
      const auto row = tsecon::baumol::cbdc_substitution(p, b1);
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", v, row.m_cash,
                    row.m_cbdc, row.delta);
      out << buf;
    }
    std::cout << "sweep written to " << file.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-series econometrics toolkit: ARDL bounds testing, error "
               "correction, unit roots, and the inventory model of money demand"};
  app.set_version_flag("--version", std::string("tsecon ") + tsecon::kToolVersion);
  app.require_subcommand(1);

  std::string config_path, out_override;
  auto* run = app.add_subcommand("run", "run the full study pipeline from a config");
  run->add_option("--config", config_path, "JSON study configuration")->required();
  run->add_option("--out", out_override, "output directory (overrides config)");

  std::string adf_csv;
  bool adf_constant = false, adf_trend = false;
  int adf_lags = 0;
  auto* adf = app.add_subcommand("adf", "augmented Dickey-Fuller test on one series");
  adf->add_option("--series", adf_csv, "period,value CSV file")->required();
  adf->add_flag("--constant", adf_constant, "include a constant");
  adf->add_flag("--trend", adf_trend, "include constant and linear trend");
  auto* lags_opt = adf->add_option("--lags", adf_lags, "fixed lag count (default: automatic)");

  std::string bounds_config;
  auto* bounds = app.add_subcommand("bounds", "bounds cointegration test from a config");
  bounds->add_option("--config", bounds_config, "JSON study configuration")->required();

  double b_income = 0, b_cost = 0, b_cbdc = 0, b_rate = 0;
  std::string sweep_text, baumol_out = ".";
  auto* baumol = app.add_subcommand("baumol", "transactional money demand under a "
                                              "digital-currency conversion cost");
  baumol->add_option("--income", b_income, "per-period income Y")->required();
  baumol->add_option("--cost", b_cost, "cash conversion cost b")->required();
  baumol->add_option("--cbdc-cost", b_cbdc, "digital conversion cost b1")->required();
  baumol->add_option("--rate", b_rate, "per-period interest rate r")->required();
  baumol->add_option("--sweep", sweep_text, "<param>:<from>:<to>:<steps>, param b1 or r");
  baumol->add_option("--out", baumol_out, "directory for sweep.csv");

  std::string inspect_path;
  auto* report = app.add_subcommand("report", "inspect an emitted report.json");
  report->add_option("--inspect", inspect_path, "path to report.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*run) return run_command(config_path, out_override);
    if (*adf) return adf_command(adf_csv, adf_constant || adf_trend, adf_trend,
                                 adf_lags, lags_opt->count() == 0);
    if (*bounds) return bounds_command(bounds_config);
    if (*baumol) return baumol_command(b_income, b_cost, b_cbdc, b_rate, sweep_text,
                                       baumol_out);
    if (*report) {
      tsecon::inspect_report(inspect_path, std::cout);
      return kExitOk;
    }
  } catch (const tsecon::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const tsecon::StatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStat;
  } catch (const tsecon::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
