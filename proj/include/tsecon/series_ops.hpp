#pragma once

#include <span>

#include "tsecon/timeseries.hpp"

namespace tsecon {

enum class AggregationMethod { sum, mean, end_of_period };
enum class SeasonalModel { additive, multiplicative };

[[nodiscard]] std::string to_string(AggregationMethod m);
[[nodiscard]] AggregationMethod aggregation_from_string(const std::string& s);

/// Elementwise natural log; the result is renamed with an "LN" prefix.
/// Throws StatError on a non-positive or missing value, naming the period.
[[nodiscard]] TimeSeries log_transform(const TimeSeries& s);

/// order-fold differencing; the start advances by `order` periods.
[[nodiscard]] TimeSeries difference(const TimeSeries& s, int order = 1);

/// Shifts values forward k periods so the result at period t equals s at
/// t-k; the first k periods drop out of the usable sample.
[[nodiscard]] TimeSeries lag(const TimeSeries& s, int k);

/// Linear interpolation of interior missing runs.  Leading or trailing
/// missing values are an error: the fill never extrapolates.
[[nodiscard]] TimeSeries fill_missing(const TimeSeries& s);

/// Monthly -> quarterly.  The series must start on a quarter boundary and
/// cover whole quarters.
[[nodiscard]] TimeSeries aggregate_to_quarterly(const TimeSeries& s,
                                                AggregationMethod method);

/// Semiannual -> quarterly, sum-preserving: the two quarters of each
/// half-year sum exactly to the input value, split along a linear path
/// through the neighboring half-year levels (flat for an isolated series).
[[nodiscard]] TimeSeries interpolate_to_quarterly(const TimeSeries& s);

/// Classical moving-average decomposition: centered MA trend, per-season
/// mean deviations (additive) or ratios (multiplicative) normalized to mean
/// zero resp. one, then removed.  Requires at least two full cycles.
[[nodiscard]] TimeSeries seasonal_adjust(const TimeSeries& s, SeasonalModel model);

/// Descriptive moments.  Central moments use divisor n and kurtosis is the
/// non-excess convention (normal -> 3).  For a constant sample (std == 0)
/// skewness and kurtosis are NaN.
struct MomentSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double max = 0.0;
  double min = 0.0;
  double std_dev = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
};

[[nodiscard]] MomentSummary describe(std::span<const double> values);
[[nodiscard]] MomentSummary describe(const TimeSeries& s);

struct JarqueBeraResult {
  double stat = 0.0;
  double p_value = 1.0;
};

/// JB = (n/6) * (S^2 + (K-3)^2 / 4), chi-square with 2 dof.
[[nodiscard]] JarqueBeraResult jarque_bera(double skewness, double kurtosis,
                                           std::size_t n);
[[nodiscard]] JarqueBeraResult jarque_bera(const MomentSummary& m);

}  // namespace tsecon
