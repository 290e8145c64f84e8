#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsecon/ardl.hpp"
#include "tsecon/config.hpp"
#include "tsecon/diagnostics.hpp"
#include "tsecon/series_ops.hpp"
#include "tsecon/timeseries.hpp"
#include "tsecon/unitroot.hpp"

namespace tsecon {

/// MDI = (online payments + card transfers + card consumption) / GDP.
/// All four series must be aligned quarterlies and GDP strictly positive.
[[nodiscard]] TimeSeries build_mdi(const TimeSeries& online_payment,
                                   const TimeSeries& card_transfer,
                                   const TimeSeries& card_consumption,
                                   const TimeSeries& gdp);

/// A = commission / stock volume + stamp duty rate.
[[nodiscard]] TimeSeries brokerage_conversion_cost(const TimeSeries& commission,
                                                   const TimeSeries& stock_volume,
                                                   double stamp_duty_rate = 0.001);

struct VariableReport {
  std::string name;
  MomentSummary moments;
  JarqueBeraResult jb;
};

struct AdfVariableReport {
  std::string name;
  unitroot::IntegrationResult result;
};

/// Everything one study run produces; every number in it is a deterministic
/// function of (config, data).
struct ReportDocument {
  std::string tool_version;
  StudyConfig config;

  std::string sample_start;
  std::string sample_end;
  int sample_size = 0;
  Frequency frequency = Frequency::quarterly;

  std::vector<VariableReport> descriptives;
  std::vector<AdfVariableReport> adf;

  ardl::OrderSearchResult order_selection;
  ardl::BoundsResult bounds;
  /// Set when no configured level delivers a clear "cointegrated": the
  /// long-run sections are then read conditional on cointegration.
  bool conditional_on_cointegration = false;

  ardl::LongRunSolution long_run;
  ardl::EcmFit ecm;

  diag::DiagnosticResult lm;
  diag::DiagnosticResult ramsey;
  double dw = 0.0;
  double r2 = 0.0;
  double adj_r2 = 0.0;

  diag::StabilityPath cusum;
  diag::StabilityPath cusumsq;
  std::vector<Period> stability_periods;  // period of each stability point
};

/// Runs the full study: ingest, preprocess, descriptives, unit-root
/// classification (aborting past I(1)), SBC order search, bounds test,
/// long-run coefficients, error correction, diagnostics, stability.
[[nodiscard]] ReportDocument run_study(const StudyConfig& config);

}  // namespace tsecon
