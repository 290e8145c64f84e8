#include "tsecon/unitroot.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tsecon/error.hpp"
#include "tsecon/linreg.hpp"
#include "tsecon/series_ops.hpp"

namespace tsecon::unitroot {

namespace {

// MacKinnon (2010) response surface, one variable:
// cv(T) = b0 + b1/T + b2/T^2 + b3/T^3, rows ordered 1% / 5% / 10%.
constexpr double kSurface[3][3][4] = {
    // none
    {{-2.56574, -2.2358, -3.627, 0.0},
     {-1.94100, -0.2686, -3.365, 31.223},
     {-1.61682, 0.2656, -2.714, 25.364}},
    // constant
    {{-3.43035, -6.5393, -16.786, -79.433},
     {-2.86154, -2.8903, -4.234, -40.040},
     {-2.56677, -1.5384, -2.809, 0.0}},
    // constant + trend
    {{-3.95877, -9.0531, -28.428, -134.155},
     {-3.41049, -4.3904, -9.036, -45.374},
     {-3.12705, -2.5856, -3.925, -22.380}},
};

// Asymptotic Dickey-Fuller t quantiles, simulated at T=1000 with 300000
// replications (scripts/gen_tables.py).  Grid of tail probabilities:
constexpr double kPGrid[] = {0.001, 0.005, 0.01, 0.025, 0.05, 0.10, 0.20,
                             0.30,  0.40,  0.50, 0.60,  0.70, 0.80, 0.90,
                             0.95,  0.975, 0.99, 0.995, 0.999};
constexpr int kPN = static_cast<int>(std::size(kPGrid));

constexpr double kQuantiles[3][kPN] = {
    // none
    {-3.2890, -2.7928, -2.5642, -2.2276, -1.9425, -1.6181, -1.2345, -0.9625,
     -0.7294, -0.4977, -0.2375, 0.0582, 0.4065, 0.8861, 1.2825, 1.6234, 2.0214,
     2.2759, 2.8313},
    // constant
    {-4.1148, -3.6560, -3.4329, -3.1294, -2.8651, -2.5659, -2.2168, -1.9685,
     -1.7609, -1.5646, -1.3660, -1.1460, -0.8637, -0.4461, -0.0867, 0.2316,
     0.6110, 0.8602, 1.3771},
    // constant + trend
    {-4.5940, -4.1670, -3.9593, -3.6610, -3.4132, -3.1305, -2.7940, -2.5579,
     -2.3611, -2.1793, -1.9991, -1.8075, -1.5785, -1.2432, -0.9298, -0.6475,
     -0.3228, -0.0900, 0.3834},
};

int det_index(Deterministics d) {
  switch (d) {
    case Deterministics::none: return 0;
    case Deterministics::constant: return 1;
    case Deterministics::constant_and_trend: return 2;
  }
  return 0;
}

int det_count(Deterministics d) { return det_index(d); }  // 0, 1 or 2 columns

struct AdfRegression {
  OlsFit fit;
  int level_col = 0;
  int last_lag_col = -1;
};

// dy_t on [const?, trend?, y_{t-1}, dy_{t-1}..dy_{t-L}], rows t = start..n-2
// in difference indexing; `start` >= L keeps the sample comparable while
// pruning.
AdfRegression run_regression(std::span<const double> y, Deterministics det,
                             int lags, int start) {
  const int n = static_cast<int>(y.size());
  const int nd = n - 1;
  const int rows = nd - start;
  const int ndet = det_count(det);
  const int k = ndet + 1 + lags;
  if (rows <= k) {
    throw StatError("adf_test: sample too short (" + std::to_string(rows) +
                    " usable rows for " + std::to_string(k) + " regressors)");
  }
  Eigen::MatrixXd X(rows, k);
  Eigen::VectorXd dep(rows);
  std::vector<std::string> labels;
  if (ndet >= 1) labels.push_back("const");
  if (ndet >= 2) labels.push_back("trend");
  labels.push_back("y(-1)");
  for (int j = 1; j <= lags; ++j) labels.push_back("dy(-" + std::to_string(j) + ")");

  for (int r = 0; r < rows; ++r) {
    const int t = start + r;  // difference index: dy_t = y[t+1] - y[t]
    dep[r] = y[t + 1] - y[t];
    int c = 0;
    if (ndet >= 1) X(r, c++) = 1.0;
    if (ndet >= 2) X(r, c++) = static_cast<double>(r + 1);
    X(r, c++) = y[t];
    for (int j = 1; j <= lags; ++j) X(r, c++) = y[t - j + 1] - y[t - j];
  }

  AdfRegression out;
  try {
    out.fit = ols_fit(X, dep, labels);
  } catch (const StatError& e) {
    throw StatError(std::string("adf_test: degenerate regression (constant series?): ") +
                    e.what());
  }
  out.level_col = ndet;
  out.last_lag_col = lags > 0 ? ndet + 1 + lags - 1 : -1;
  return out;
}

}  // namespace

std::string to_string(Deterministics d) {
  switch (d) {
    case Deterministics::none: return "none";
    case Deterministics::constant: return "constant";
    case Deterministics::constant_and_trend: return "constant_and_trend";
  }
  return "?";
}

Deterministics deterministics_from_string(const std::string& s) {
  if (s == "none") return Deterministics::none;
  if (s == "constant") return Deterministics::constant;
  if (s == "constant_and_trend") return Deterministics::constant_and_trend;
  throw ValidationError("unknown deterministics: '" + s + "'");
}

double CriticalValues::at(double level) const {
  if (std::fabs(level - 0.01) < 1e-9) return at_1pct;
  if (std::fabs(level - 0.05) < 1e-9) return at_5pct;
  if (std::fabs(level - 0.10) < 1e-9) return at_10pct;
  throw ValidationError("critical values tabulated at 1/5/10% only");
}

bool AdfResult::rejects_at(double level) const {
  return t_stat < critical_values.at(level);
}

std::string AdfResult::spec_string() const {
  const bool c = spec.deterministics != Deterministics::none;
  const bool t = spec.deterministics == Deterministics::constant_and_trend;
  return std::string("(") + (c ? "C" : "0") + "," + (t ? "T" : "0") + "," +
         std::to_string(lags_used) + ")";
}

CriticalValues df_critical_values(Deterministics det, int n_used) {
  if (n_used < 1) throw ValidationError("df_critical_values: need n_used >= 1");
  const double T = static_cast<double>(n_used);
  const auto& rows = kSurface[det_index(det)];
  auto eval = [T](const double* b) {
    return b[0] + b[1] / T + b[2] / (T * T) + b[3] / (T * T * T);
  };
  return CriticalValues{eval(rows[0]), eval(rows[1]), eval(rows[2])};
}

double df_approx_p(Deterministics det, double t_stat) {
  const double* q = kQuantiles[det_index(det)];
  if (t_stat <= q[0]) return kPGrid[0];
  if (t_stat >= q[kPN - 1]) return kPGrid[kPN - 1];
  int i = 0;
  while (t_stat > q[i + 1]) ++i;
  const double w = (t_stat - q[i]) / (q[i + 1] - q[i]);
  return kPGrid[i] + w * (kPGrid[i + 1] - kPGrid[i]);
}

AdfResult adf_test(std::span<const double> y, const AdfSpec& spec) {
  const int n = static_cast<int>(y.size());
  for (double v : y) {
    if (is_missing(v)) throw StatError("adf_test: series contains missing values");
  }
  if (n < 12) throw StatError("adf_test: series too short (n=" + std::to_string(n) + ")");

  int lags;
  if (spec.lags.has_value()) {
    lags = *spec.lags;
    if (lags < 0) throw ValidationError("adf_test: lags must be >= 0");
    if (n - 1 - lags < lags + 10) {
      throw StatError("adf_test: sample too short for " + std::to_string(lags) +
                      " lags (n=" + std::to_string(n) + ")");
    }
  } else {
    // downward t-pruning from the Schwert-style cap, on a fixed sample
    int max_lag = static_cast<int>(std::floor(
        12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
    const int ndet = det_count(spec.deterministics);
    while (max_lag > 0 && (n - 1 - max_lag) <= (ndet + 1 + max_lag) + 10) --max_lag;
    lags = max_lag;
    while (lags > 0) {
      const AdfRegression reg = run_regression(y, spec.deterministics, lags, max_lag);
      const double t_last = reg.fit.t_stats[reg.last_lag_col];
      if (std::fabs(t_last) >= 1.645) break;
      --lags;
    }
  }

  const AdfRegression reg = run_regression(y, spec.deterministics, lags, lags);
  AdfResult res;
  res.spec = spec;
  res.lags_used = lags;
  res.t_stat = reg.fit.t_stats[reg.level_col];
  res.n_used = reg.fit.n;
  res.critical_values = df_critical_values(spec.deterministics, res.n_used);
  res.approx_p = df_approx_p(spec.deterministics, res.t_stat);
  return res;
}

AdfResult adf_test(const TimeSeries& s, const AdfSpec& spec) {
  return adf_test(s.values(), spec);
}

std::string to_string(IntegrationOrder o) {
  switch (o) {
    case IntegrationOrder::i0: return "I(0)";
    case IntegrationOrder::i1: return "I(1)";
    case IntegrationOrder::higher: return "I(>1)";
  }
  return "?";
}

IntegrationResult integration_order(const TimeSeries& s,
                                    const IntegrationPolicy& policy) {
  IntegrationResult out;
  out.level = adf_test(s, policy.level_spec);
  if (out.level.rejects_at(policy.level)) {
    out.order = IntegrationOrder::i0;
    return out;
  }
  const TimeSeries d = difference(s, 1);
  out.difference = adf_test(d, policy.difference_spec);
  out.order = out.difference->rejects_at(policy.level) ? IntegrationOrder::i1
                                                       : IntegrationOrder::higher;
  return out;
}

}  // namespace tsecon::unitroot
