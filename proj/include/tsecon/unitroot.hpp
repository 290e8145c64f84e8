#pragma once

#include <optional>
#include <span>
#include <string>

#include "tsecon/timeseries.hpp"

namespace tsecon::unitroot {

enum class Deterministics { none, constant, constant_and_trend };

[[nodiscard]] std::string to_string(Deterministics d);
[[nodiscard]] Deterministics deterministics_from_string(const std::string& s);

/// Test form (C, T, L): constant flag, trend flag, lag count.  An empty lag
/// count selects downward t-pruning from floor(12 (n/100)^0.25).
struct AdfSpec {
  Deterministics deterministics = Deterministics::constant;
  std::optional<int> lags;
};

struct CriticalValues {
  double at_1pct = 0.0;
  double at_5pct = 0.0;
  double at_10pct = 0.0;

  [[nodiscard]] double at(double level) const;  // level in {0.01, 0.05, 0.10}
};

struct AdfResult {
  AdfSpec spec;
  int lags_used = 0;
  double t_stat = 0.0;
  CriticalValues critical_values;
  /// Interpolated from simulated asymptotic quantiles; good to about +-0.02
  /// and clamped to [0.001, 0.999].
  double approx_p = 1.0;
  int n_used = 0;

  /// Left-tailed decision: reject the unit root iff t < critical value.
  [[nodiscard]] bool rejects_at(double level) const;
  /// "(C,T,0)" style rendering of the test form.
  [[nodiscard]] std::string spec_string() const;
};

/// Regression of dy_t on deterministics, y_{t-1} and lagged differences;
/// the statistic is the t-ratio on y_{t-1}.
[[nodiscard]] AdfResult adf_test(std::span<const double> y, const AdfSpec& spec);
[[nodiscard]] AdfResult adf_test(const TimeSeries& s, const AdfSpec& spec);

/// Finite-sample critical values from response-surface coefficients
/// (MacKinnon 2010, single-variable case).
[[nodiscard]] CriticalValues df_critical_values(Deterministics det, int n_used);

/// Approximate asymptotic p-value for a DF t-statistic.
[[nodiscard]] double df_approx_p(Deterministics det, double t_stat);

enum class IntegrationOrder { i0, i1, higher };

[[nodiscard]] std::string to_string(IntegrationOrder o);

struct IntegrationPolicy {
  AdfSpec level_spec{Deterministics::constant_and_trend, std::nullopt};
  AdfSpec difference_spec{Deterministics::constant, std::nullopt};
  double level = 0.05;
};

struct IntegrationResult {
  IntegrationOrder order = IntegrationOrder::higher;
  AdfResult level;
  std::optional<AdfResult> difference;
};

/// I(0) if the level rejects, else I(1) if the first difference rejects,
/// else `higher`.
[[nodiscard]] IntegrationResult integration_order(const TimeSeries& s,
                                                  const IntegrationPolicy& policy = {});

}  // namespace tsecon::unitroot
