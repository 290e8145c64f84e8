#include "tsecon/series_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "tsecon/error.hpp"
#include "tsecon/probdist.hpp"

namespace tsecon {

namespace {

void require_no_missing(const TimeSeries& s, const char* op) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_missing(s[i])) {
      throw StatError(std::string(op) + ": series '" + s.name() +
                      "' has a missing value at " +
                      format_period(s.period_at(i), s.frequency()));
    }
  }
}

int season_of(const TimeSeries& s, std::size_t i) {
  const int ppy = periods_per_year(s.frequency());
  return (s.start().index - 1 + static_cast<int>(i)) % ppy;
}

}  // namespace

std::string to_string(AggregationMethod m) {
  switch (m) {
    case AggregationMethod::sum: return "sum";
    case AggregationMethod::mean: return "mean";
    case AggregationMethod::end_of_period: return "end_of_period";
  }
  return "?";
}

AggregationMethod aggregation_from_string(const std::string& s) {
  if (s == "sum") return AggregationMethod::sum;
  if (s == "mean") return AggregationMethod::mean;
  if (s == "end_of_period") return AggregationMethod::end_of_period;
  throw ValidationError("unknown aggregation method: '" + s + "'");
}

TimeSeries log_transform(const TimeSeries& s) {
  require_no_missing(s, "log_transform");
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0.0) {
      throw StatError("log_transform: non-positive value in '" + s.name() +
                      "' at " + format_period(s.period_at(i), s.frequency()));
    }
    out[i] = std::log(s[i]);
  }
  return TimeSeries("LN" + s.name(), s.frequency(), s.start(), std::move(out));
}

TimeSeries difference(const TimeSeries& s, int order) {
  if (order < 1) throw ValidationError("difference: order must be >= 1");
  if (static_cast<int>(s.size()) <= order) {
    throw ValidationError("difference: series '" + s.name() + "' has " +
                          std::to_string(s.size()) + " values, need > " +
                          std::to_string(order));
  }
  require_no_missing(s, "difference");
  std::vector<double> v(s.values().begin(), s.values().end());
  for (int d = 0; d < order; ++d) {
    for (std::size_t i = v.size() - 1; i >= 1; --i) v[i] -= v[i - 1];
    v.erase(v.begin());
  }
  const std::string prefix = order == 1 ? "D" : "D" + std::to_string(order);
  return TimeSeries(prefix + s.name(), s.frequency(),
                    advance(s.start(), s.frequency(), order), std::move(v));
}

TimeSeries lag(const TimeSeries& s, int k) {
  if (k < 1) throw ValidationError("lag: k must be >= 1");
  if (static_cast<int>(s.size()) <= k) {
    throw ValidationError("lag: series '" + s.name() + "' too short for lag " +
                          std::to_string(k));
  }
  std::vector<double> v(s.values().begin(), s.values().end() - k);
  return TimeSeries(s.name() + "(-" + std::to_string(k) + ")", s.frequency(),
                    advance(s.start(), s.frequency(), k), std::move(v));
}

TimeSeries fill_missing(const TimeSeries& s) {
  const auto v = s.values();
  const std::size_t n = s.size();
  if (n - s.missing_count() < 2) {
    throw StatError("fill_missing: series '" + s.name() +
                    "' needs at least two observed values");
  }
  if (is_missing(v.front()) || is_missing(v.back())) {
    throw StatError("fill_missing: series '" + s.name() +
                    "' has a leading or trailing gap; interpolation does not extrapolate");
  }
  std::vector<double> out(v.begin(), v.end());
  std::size_t prev = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (is_missing(out[i])) continue;
    if (i > prev + 1) {
      const double step = (out[i] - out[prev]) / static_cast<double>(i - prev);
      for (std::size_t j = prev + 1; j < i; ++j) {
        out[j] = out[prev] + step * static_cast<double>(j - prev);
      }
    }
    prev = i;
  }
  return TimeSeries(s.name(), s.frequency(), s.start(), std::move(out));
}

TimeSeries aggregate_to_quarterly(const TimeSeries& s, AggregationMethod method) {
  if (s.frequency() != Frequency::monthly) {
    throw ValidationError("aggregate_to_quarterly: series '" + s.name() +
                          "' is " + to_string(s.frequency()) + ", expected monthly");
  }
  require_no_missing(s, "aggregate_to_quarterly");
  if ((s.start().index - 1) % 3 != 0) {
    throw ValidationError("aggregate_to_quarterly: series '" + s.name() +
                          "' does not start on a quarter boundary");
  }
  if (s.size() % 3 != 0) {
    throw ValidationError("aggregate_to_quarterly: series '" + s.name() +
                          "' does not cover whole quarters");
  }
  const std::size_t nq = s.size() / 3;
  std::vector<double> out(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    const double a = s[3 * q], b = s[3 * q + 1], c = s[3 * q + 2];
    switch (method) {
      case AggregationMethod::sum: out[q] = a + b + c; break;
      case AggregationMethod::mean: out[q] = (a + b + c) / 3.0; break;
      case AggregationMethod::end_of_period: out[q] = c; break;
    }
  }
  const Period start{s.start().year, (s.start().index - 1) / 3 + 1};
  return TimeSeries(s.name(), Frequency::quarterly, start, std::move(out));
}

TimeSeries interpolate_to_quarterly(const TimeSeries& s) {
  if (s.frequency() != Frequency::semiannual) {
    throw ValidationError("interpolate_to_quarterly: series '" + s.name() +
                          "' is " + to_string(s.frequency()) + ", expected semiannual");
  }
  require_no_missing(s, "interpolate_to_quarterly");
  const auto v = s.values();
  const std::size_t n = s.size();
  std::vector<double> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    // per-quarter increment implied by the neighboring half-year levels
    double step = 0.0;
    if (n > 1) {
      if (i == 0) {
        step = (v[1] - v[0]) / 4.0;
      } else if (i == n - 1) {
        step = (v[n - 1] - v[n - 2]) / 4.0;
      } else {
        step = (v[i + 1] - v[i - 1]) / 8.0;
      }
    }
    out[2 * i] = (v[i] - step) / 2.0;
    out[2 * i + 1] = (v[i] + step) / 2.0;
  }
  const Period start{s.start().year, 2 * s.start().index - 1};
  return TimeSeries(s.name(), Frequency::quarterly, start, std::move(out));
}

TimeSeries seasonal_adjust(const TimeSeries& s, SeasonalModel model) {
  const int ppy = periods_per_year(s.frequency());
  if (ppy < 2) {
    throw ValidationError("seasonal_adjust: annual series '" + s.name() +
                          "' has no seasonal cycle");
  }
  require_no_missing(s, "seasonal_adjust");
  const std::size_t n = s.size();
  if (n < 2 * static_cast<std::size_t>(ppy)) {
    throw StatError("seasonal_adjust: series '" + s.name() +
                    "' needs at least two full cycles (" +
                    std::to_string(2 * ppy) + " values), has " + std::to_string(n));
  }
  if (model == SeasonalModel::multiplicative) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] <= 0.0) {
        throw StatError("seasonal_adjust: multiplicative model needs positive values; '" +
                        s.name() + "' at " +
                        format_period(s.period_at(i), s.frequency()) + " is not");
      }
    }
  }

  // centered moving average with half weights at the window ends
  const int half = ppy / 2;
  const auto v = s.values();
  std::vector<double> dev;
  std::vector<int> dev_season;
  for (std::size_t t = static_cast<std::size_t>(half); t + half < n; ++t) {
    double acc = 0.5 * v[t - half] + 0.5 * v[t + half];
    for (int j = -half + 1; j <= half - 1; ++j) acc += v[t + j];
    const double trend = acc / ppy;
    dev.push_back(model == SeasonalModel::additive ? v[t] - trend : v[t] / trend);
    dev_season.push_back(season_of(s, t));
  }

  std::vector<double> index(ppy, 0.0);
  std::vector<int> count(ppy, 0);
  for (std::size_t i = 0; i < dev.size(); ++i) {
    index[dev_season[i]] += dev[i];
    ++count[dev_season[i]];
  }
  for (int p = 0; p < ppy; ++p) {
    if (count[p] == 0) {
      throw StatError("seasonal_adjust: no interior observation for season " +
                      std::to_string(p + 1) + " of '" + s.name() + "'");
    }
    index[p] /= count[p];
  }
  const double norm =
      std::accumulate(index.begin(), index.end(), 0.0) / static_cast<double>(ppy);
  std::vector<double> out(n);
  if (model == SeasonalModel::additive) {
    for (int p = 0; p < ppy; ++p) index[p] -= norm;
    for (std::size_t t = 0; t < n; ++t) out[t] = v[t] - index[season_of(s, t)];
  } else {
    for (int p = 0; p < ppy; ++p) index[p] /= norm;
    for (std::size_t t = 0; t < n; ++t) out[t] = v[t] / index[season_of(s, t)];
  }
  return TimeSeries(s.name(), s.frequency(), s.start(), std::move(out));
}

MomentSummary describe(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw ValidationError("describe: need at least two values");
  for (double x : values) {
    if (is_missing(x)) throw StatError("describe: missing value in sample");
  }
  MomentSummary m;
  m.n = n;
  m.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  m.min = sorted.front();
  m.max = sorted.back();
  m.median = (n % 2 == 1) ? sorted[n / 2]
                          : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : values) {
    const double d = x - m.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  m.std_dev = std::sqrt(m2);
  if (m2 > 0.0) {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.kurtosis = m4 / (m2 * m2);
  } else {
    m.skewness = std::numeric_limits<double>::quiet_NaN();
    m.kurtosis = std::numeric_limits<double>::quiet_NaN();
  }
  return m;
}

MomentSummary describe(const TimeSeries& s) { return describe(s.values()); }

JarqueBeraResult jarque_bera(double skewness, double kurtosis, std::size_t n) {
  if (n < 3) throw ValidationError("jarque_bera: need n >= 3");
  if (std::isnan(skewness) || std::isnan(kurtosis)) {
    throw StatError("jarque_bera: undefined skewness/kurtosis (constant sample?)");
  }
  JarqueBeraResult r;
  const double excess = kurtosis - 3.0;
  r.stat = static_cast<double>(n) / 6.0 *
           (skewness * skewness + excess * excess / 4.0);
  r.p_value = probdist::chi2_sf(r.stat, 2);
  return r;
}

JarqueBeraResult jarque_bera(const MomentSummary& m) {
  return jarque_bera(m.skewness, m.kurtosis, m.n);
}

}  // namespace tsecon
