#pragma once

#include <string>
#include <vector>

#include "tsecon/linreg.hpp"
#include "tsecon/parallel.hpp"
#include "tsecon/timeseries.hpp"

namespace tsecon::ardl {

/// Lag order (p, q1..qk): p >= 1 lags of the dependent variable, qj >= 0
/// lags of regressor j.
struct ArdlOrder {
  int p = 1;
  std::vector<int> q;

  [[nodiscard]] int total_lags() const;
  [[nodiscard]] std::string to_string() const;  // "(1,0,0,1,0)"
  void validate(std::size_t k) const;
};

/// Dependent variable plus k regressors aligned on a common sample.
struct ArdlData {
  TimeSeries dependent;
  std::vector<TimeSeries> regressors;

  /// Aligns the inputs and validates the overlap.
  [[nodiscard]] static ArdlData make(TimeSeries dependent,
                                     std::vector<TimeSeries> regressors);
  [[nodiscard]] std::size_t k() const { return regressors.size(); }
};

struct ArdlDesign {
  DesignMatrix design;
  Eigen::VectorXd y;
};

/// Levels regression design: columns ordered intercept, y lags 1..p, then
/// each regressor's lags 0..qj.  Rows begin at the first period where every
/// lag exists.
[[nodiscard]] ArdlDesign build_ardl_design(const ArdlData& data, const ArdlOrder& order);

struct ArdlFit {
  ArdlOrder order;
  std::string dependent;
  std::vector<std::string> regressors;
  OlsFit fit;
  Period sample_start{};
  Period sample_end{};
  Frequency frequency = Frequency::quarterly;
  // column positions within fit: intercept, y lags, per-regressor lag blocks
  int intercept_col = 0;
  std::vector<int> y_lag_cols;
  std::vector<std::vector<int>> x_lag_cols;
};

[[nodiscard]] ArdlFit fit_ardl(const ArdlData& data, const ArdlOrder& order);

struct OrderCandidate {
  ArdlOrder order;
  double sbc = 0.0;
};

struct OrderSearchResult {
  ArdlOrder order;
  ArdlFit fit;
  std::vector<OrderCandidate> criterion_table;  // enumeration order, for audit
};

/// Minimizes SBC over p in [1, max_p] and each qj in [0, max_q]; every
/// candidate is estimated on the common sample implied by (max_p, max_q) so
/// the criteria are comparable.  Ties break toward fewer total lags, then
/// the lexicographically smaller order.  The grid may be evaluated in
/// parallel; the selection is deterministic either way.
[[nodiscard]] OrderSearchResult select_order_sbc(const ArdlData& data, int max_p,
                                                 int max_q,
                                                 par::Exec exec = par::Exec::parallel);

/// Picks the winning candidate under the deterministic tie-break rule.
/// Exposed for direct testing.
[[nodiscard]] std::size_t select_best_candidate(const std::vector<OrderCandidate>& table);

/// Deterministic-term treatment of the bounds test, Pesaran-Shin-Smith
/// cases I..V.
enum class CriticalCase {
  no_intercept_no_trend,    // I
  restricted_intercept,     // II
  unrestricted_intercept,   // III
  restricted_trend,         // IV
  unrestricted_trend,       // V
};

[[nodiscard]] std::string to_string(CriticalCase c);
[[nodiscard]] CriticalCase critical_case_from_string(const std::string& s);

struct CriticalPair {
  double lower = 0.0;  // I(0) bound
  double upper = 0.0;  // I(1) bound
};

/// Tabulated asymptotic bounds for k in [0, 10] at the 10%, 5% and 1%
/// levels.  Out-of-table lookups throw; there is no extrapolation.
[[nodiscard]] CriticalPair pesaran_critical_values(CriticalCase c, int k, double level);

enum class BoundsVerdict { cointegrated, not_cointegrated, inconclusive };

[[nodiscard]] std::string to_string(BoundsVerdict v);

/// cointegrated iff f > upper; not_cointegrated iff f < lower; inconclusive
/// in between (boundaries included).
[[nodiscard]] BoundsVerdict bounds_verdict(double f_stat, const CriticalPair& bounds);

struct BoundsResult {
  double f_stat = 0.0;
  int k = 0;
  CriticalCase critical_case = CriticalCase::restricted_intercept;
  struct Row {
    double level = 0.0;
    CriticalPair bounds;
    BoundsVerdict verdict = BoundsVerdict::inconclusive;
  };
  std::vector<Row> rows;  // descending level order: 10%, 5%, 1%
  OlsFit unrestricted;    // the conditional error-correction regression
};

/// Conditional error-correction regression: dy_t on deterministics (per
/// case), dy lags 1..p-1, each regressor's differences at lags
/// 0..max(qj,1)-1, plus all k+1 lagged levels.  The F statistic restricts
/// the lagged levels to zero.
[[nodiscard]] BoundsResult bounds_f_test(const ArdlData& data, const ArdlOrder& order,
                                         CriticalCase critical_case);

struct LongRunSolution {
  std::vector<std::string> names;
  Eigen::VectorXd theta;
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd t_stats;
  Eigen::VectorXd p_values;
  double intercept = 0.0;
  double intercept_se = 0.0;
  double intercept_t = 0.0;
  double intercept_p = 0.0;
};

/// theta_j = sum(x_j lag coefficients) / (1 - sum(y lag coefficients)),
/// delta-method standard errors.  Throws StatError when the denominator
/// is within 1e-6 of zero (no long-run relation).
[[nodiscard]] LongRunSolution long_run_coefficients(const ArdlFit& fit);

/// ecm_t = y_t - sum_j theta_j x_jt - (intercept if include_intercept).
[[nodiscard]] TimeSeries build_ecm_series(const ArdlData& data,
                                          const LongRunSolution& solution,
                                          bool include_intercept);

struct EcmFit {
  OlsFit fit;
  double lambda = 0.0;
  double lambda_se = 0.0;
  double lambda_t = 0.0;
  double lambda_p = 0.0;
  double adjustment_speed = 0.0;  // -lambda
  bool lambda_in_stable_range = false;  // lambda in (-1, 0)
  TimeSeries ecm_series;
  DesignMatrix design;  // kept for stability diagnostics on this equation
};

/// Short-run regression: dy_t on an intercept, dy lags 1..p-1, dx_j lags
/// 0..qj-1 (just the contemporaneous difference when qj = 0), and ECM_{t-1}.
[[nodiscard]] EcmFit fit_ecm(const ArdlData& data, const ArdlOrder& order,
                             const LongRunSolution& solution,
                             bool include_intercept = false);

}  // namespace tsecon::ardl
