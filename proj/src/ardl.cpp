#include "tsecon/ardl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tsecon/error.hpp"
#include "tsecon/probdist.hpp"
#include "tsecon/series_ops.hpp"

namespace tsecon::ardl {

int ArdlOrder::total_lags() const {
  int total = p;
  for (int qj : q) total += qj;
  return total;
}

std::string ArdlOrder::to_string() const {
  std::string out = "(" + std::to_string(p);
  for (int qj : q) out += "," + std::to_string(qj);
  return out + ")";
}

void ArdlOrder::validate(std::size_t k) const {
  if (p < 1) throw ValidationError("ardl order: p must be >= 1");
  if (q.size() != k) {
    throw ValidationError("ardl order: " + std::to_string(q.size()) +
                          " q entries for " + std::to_string(k) + " regressors");
  }
  for (int qj : q) {
    if (qj < 0) throw ValidationError("ardl order: q entries must be >= 0");
  }
}

ArdlData ArdlData::make(TimeSeries dependent, std::vector<TimeSeries> regressors) {
  if (regressors.empty()) throw ValidationError("ardl: need at least one regressor");
  std::vector<TimeSeries> all;
  all.reserve(regressors.size() + 1);
  all.push_back(std::move(dependent));
  for (auto& r : regressors) all.push_back(std::move(r));
  for (const auto& s : all) {
    if (s.has_missing()) {
      throw StatError("ardl: series '" + s.name() + "' has missing values");
    }
  }
  auto aligned = align(all);
  ArdlData data{std::move(aligned.front()), {}};
  data.regressors.assign(std::make_move_iterator(aligned.begin() + 1),
                         std::make_move_iterator(aligned.end()));
  return data;
}

namespace {

// First usable row (levels index) and row count for a given maximum lag.
struct SampleWindow {
  int start = 0;
  int rows = 0;
};

SampleWindow sample_window(const ArdlData& data, int max_lag) {
  SampleWindow w;
  w.start = max_lag;
  w.rows = static_cast<int>(data.dependent.size()) - max_lag;
  return w;
}

ArdlDesign build_design_on(const ArdlData& data, const ArdlOrder& order,
                           const SampleWindow& w) {
  const auto& y = data.dependent;
  const int k_cols = 1 + order.p +
                     [&] {
                       int c = 0;
                       for (int qj : order.q) c += qj + 1;
                       return c;
                     }();
  if (w.rows < k_cols) {
    throw ValidationError("ardl design: " + std::to_string(w.rows) +
                          " usable rows for " + std::to_string(k_cols) +
                          " columns (order " + order.to_string() + ")");
  }

  ArdlDesign out;
  out.design.frequency = y.frequency();
  out.design.X.resize(w.rows, k_cols);
  out.y.resize(w.rows);
  out.design.labels.push_back("const");
  for (int i = 1; i <= order.p; ++i) {
    out.design.labels.push_back(y.name() + "(-" + std::to_string(i) + ")");
  }
  for (std::size_t j = 0; j < data.regressors.size(); ++j) {
    const auto& x = data.regressors[j];
    out.design.labels.push_back(x.name());
    for (int i = 1; i <= order.q[j]; ++i) {
      out.design.labels.push_back(x.name() + "(-" + std::to_string(i) + ")");
    }
  }

  for (int r = 0; r < w.rows; ++r) {
    const int t = w.start + r;
    out.y[r] = y[static_cast<std::size_t>(t)];
    int c = 0;
    out.design.X(r, c++) = 1.0;
    for (int i = 1; i <= order.p; ++i) {
      out.design.X(r, c++) = y[static_cast<std::size_t>(t - i)];
    }
    for (std::size_t j = 0; j < data.regressors.size(); ++j) {
      const auto& x = data.regressors[j];
      for (int i = 0; i <= order.q[j]; ++i) {
        out.design.X(r, c++) = x[static_cast<std::size_t>(t - i)];
      }
    }
    out.design.periods.push_back(y.period_at(static_cast<std::size_t>(t)));
  }
  return out;
}

int max_lag_of(const ArdlOrder& order) {
  int m = order.p;
  for (int qj : order.q) m = std::max(m, qj);
  return m;
}

}  // namespace

ArdlDesign build_ardl_design(const ArdlData& data, const ArdlOrder& order) {
  order.validate(data.k());
  return build_design_on(data, order, sample_window(data, max_lag_of(order)));
}

ArdlFit fit_ardl(const ArdlData& data, const ArdlOrder& order) {
  ArdlDesign d = build_ardl_design(data, order);
  ArdlFit out;
  out.order = order;
  out.dependent = data.dependent.name();
  for (const auto& x : data.regressors) out.regressors.push_back(x.name());
  out.fit = ols_fit(d.design, d.y);
  out.frequency = d.design.frequency;
  out.sample_start = d.design.periods.front();
  out.sample_end = d.design.periods.back();
  out.intercept_col = 0;
  int c = 1;
  for (int i = 0; i < order.p; ++i) out.y_lag_cols.push_back(c++);
  for (std::size_t j = 0; j < data.regressors.size(); ++j) {
    std::vector<int> cols;
    for (int i = 0; i <= order.q[j]; ++i) cols.push_back(c++);
    out.x_lag_cols.push_back(std::move(cols));
  }
  return out;
}

std::size_t select_best_candidate(const std::vector<OrderCandidate>& table) {
  if (table.empty()) throw ValidationError("order search: empty candidate table");
  std::size_t best = 0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& a = table[i];
    const auto& b = table[best];
    if (a.sbc < b.sbc) {
      best = i;
      continue;
    }
    if (a.sbc > b.sbc) continue;
    // exact SBC tie: fewer total lags, then lexicographically smaller order
    const int ta = a.order.total_lags();
    const int tb = b.order.total_lags();
    if (ta < tb) {
      best = i;
      continue;
    }
    if (ta > tb) continue;
    if (a.order.p != b.order.p) {
      if (a.order.p < b.order.p) best = i;
      continue;
    }
    if (std::lexicographical_compare(a.order.q.begin(), a.order.q.end(),
                                     b.order.q.begin(), b.order.q.end())) {
      best = i;
    }
  }
  return best;
}

OrderSearchResult select_order_sbc(const ArdlData& data, int max_p, int max_q,
                                   par::Exec exec) {
  if (max_p < 1) throw ValidationError("order search: max_p must be >= 1");
  if (max_q < 0) throw ValidationError("order search: max_q must be >= 0");
  const std::size_t k = data.k();

  std::vector<ArdlOrder> grid;
  ArdlOrder cur{1, std::vector<int>(k, 0)};
  for (cur.p = 1; cur.p <= max_p; ++cur.p) {
    std::fill(cur.q.begin(), cur.q.end(), 0);
    while (true) {
      grid.push_back(cur);
      // odometer increment over the q vector
      std::size_t pos = k;
      while (pos > 0) {
        if (cur.q[pos - 1] < max_q) {
          ++cur.q[pos - 1];
          std::fill(cur.q.begin() + static_cast<long>(pos), cur.q.end(), 0);
          break;
        }
        --pos;
      }
      if (pos == 0) break;
    }
  }

  // common estimation sample so the criteria are comparable
  const SampleWindow w = sample_window(data, std::max(max_p, max_q));
  {
    ArdlOrder widest{max_p, std::vector<int>(k, max_q)};
    build_design_on(data, widest, w);  // throws if the largest candidate is not estimable
  }

  std::vector<OrderCandidate> table(grid.size());
  std::vector<std::string> failures(grid.size());
  par::for_each_index(static_cast<int>(grid.size()), exec, [&](int i) {
    const auto& order = grid[static_cast<std::size_t>(i)];
    try {
      ArdlDesign d = build_design_on(data, order, w);
      const OlsFit fit = ols_fit(d.design, d.y);
      table[static_cast<std::size_t>(i)] = {order, fit.sbc};
    } catch (const std::exception& e) {
      table[static_cast<std::size_t>(i)] = {order,
                                            std::numeric_limits<double>::infinity()};
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  });

  bool any_ok = false;
  for (const auto& c : table) {
    if (c.sbc < std::numeric_limits<double>::infinity()) any_ok = true;
  }
  if (!any_ok) {
    throw StatError("order search: no candidate was estimable; first failure: " +
                    failures.front());
  }

  OrderSearchResult out;
  out.criterion_table = std::move(table);
  out.order = out.criterion_table[select_best_candidate(out.criterion_table)].order;
  out.fit = fit_ardl(data, out.order);  // final fit on the order's own full sample
  return out;
}

// ---------------------------------------------------------------------------
// Bounds test
// ---------------------------------------------------------------------------

std::string to_string(CriticalCase c) {
  switch (c) {
    case CriticalCase::no_intercept_no_trend: return "no_intercept_no_trend";
    case CriticalCase::restricted_intercept: return "restricted_intercept";
    case CriticalCase::unrestricted_intercept: return "unrestricted_intercept";
    case CriticalCase::restricted_trend: return "restricted_trend";
    case CriticalCase::unrestricted_trend: return "unrestricted_trend";
  }
  return "?";
}

CriticalCase critical_case_from_string(const std::string& s) {
  if (s == "no_intercept_no_trend" || s == "I") return CriticalCase::no_intercept_no_trend;
  if (s == "restricted_intercept" || s == "II") return CriticalCase::restricted_intercept;
  if (s == "unrestricted_intercept" || s == "III") return CriticalCase::unrestricted_intercept;
  if (s == "restricted_trend" || s == "IV") return CriticalCase::restricted_trend;
  if (s == "unrestricted_trend" || s == "V") return CriticalCase::unrestricted_trend;
  throw ValidationError("unknown bounds case: '" + s + "'");
}

namespace {

// Pesaran-Shin-Smith (2001) asymptotic critical-value bounds for the
// F-statistic, cases I..V, k = 0..10, at the 10% / 5% / 1% levels.
// Layout: [k][level][lower, upper].
using CaseTable = double[11][3][2];

constexpr CaseTable kCaseI = {
    {{3.00, 3.00}, {4.20, 4.20}, {7.17, 7.17}},
    {{2.44, 3.28}, {3.15, 4.11}, {4.81, 6.02}},
    {{2.17, 3.19}, {2.72, 3.83}, {3.88, 5.30}},
    {{2.01, 3.10}, {2.45, 3.63}, {3.42, 4.84}},
    {{1.90, 3.01}, {2.26, 3.48}, {3.07, 4.44}},
    {{1.81, 2.93}, {2.14, 3.34}, {2.82, 4.21}},
    {{1.75, 2.87}, {2.04, 3.24}, {2.66, 4.05}},
    {{1.70, 2.83}, {1.97, 3.18}, {2.54, 3.91}},
    {{1.66, 2.79}, {1.91, 3.11}, {2.45, 3.79}},
    {{1.63, 2.75}, {1.86, 3.05}, {2.34, 3.68}},
    {{1.60, 2.72}, {1.82, 2.99}, {2.26, 3.60}},
};

constexpr CaseTable kCaseII = {
    {{3.80, 3.80}, {4.60, 4.60}, {6.44, 6.44}},
    {{3.02, 3.51}, {3.62, 4.16}, {4.94, 5.58}},
    {{2.63, 3.35}, {3.10, 3.87}, {4.13, 5.00}},
    {{2.37, 3.20}, {2.79, 3.67}, {3.65, 4.66}},
    {{2.20, 3.09}, {2.56, 3.49}, {3.29, 4.37}},
    {{2.08, 3.00}, {2.39, 3.38}, {3.06, 4.15}},
    {{1.99, 2.94}, {2.27, 3.28}, {2.88, 3.99}},
    {{1.92, 2.89}, {2.17, 3.21}, {2.73, 3.90}},
    {{1.85, 2.85}, {2.11, 3.15}, {2.62, 3.77}},
    {{1.80, 2.80}, {2.04, 3.08}, {2.50, 3.68}},
    {{1.76, 2.77}, {1.98, 3.04}, {2.41, 3.61}},
};

constexpr CaseTable kCaseIII = {
    {{6.58, 6.58}, {8.21, 8.21}, {11.79, 11.79}},
    {{4.04, 4.78}, {4.94, 5.73}, {6.84, 7.84}},
    {{3.17, 4.14}, {3.79, 4.85}, {5.15, 6.36}},
    {{2.72, 3.77}, {3.23, 4.35}, {4.29, 5.61}},
    {{2.45, 3.52}, {2.86, 4.01}, {3.74, 5.06}},
    {{2.26, 3.35}, {2.62, 3.79}, {3.41, 4.68}},
    {{2.12, 3.23}, {2.45, 3.61}, {3.15, 4.43}},
    {{2.03, 3.13}, {2.32, 3.50}, {2.96, 4.26}},
    {{1.95, 3.06}, {2.22, 3.39}, {2.79, 4.10}},
    {{1.88, 2.99}, {2.14, 3.30}, {2.65, 3.97}},
    {{1.83, 2.94}, {2.06, 3.24}, {2.54, 3.86}},
};

constexpr CaseTable kCaseIV = {
    {{5.37, 5.37}, {6.29, 6.29}, {8.26, 8.26}},
    {{4.05, 4.49}, {4.68, 5.15}, {6.10, 6.73}},
    {{3.38, 4.02}, {3.88, 4.61}, {4.99, 5.85}},
    {{2.97, 3.74}, {3.38, 4.23}, {4.30, 5.23}},
    {{2.68, 3.53}, {3.05, 3.97}, {3.81, 4.92}},
    {{2.49, 3.38}, {2.81, 3.76}, {3.50, 4.63}},
    {{2.33, 3.25}, {2.63, 3.62}, {3.27, 4.39}},
    {{2.22, 3.17}, {2.50, 3.50}, {3.07, 4.23}},
    {{2.13, 3.09}, {2.38, 3.41}, {2.93, 4.06}},
    {{2.05, 3.02}, {2.30, 3.33}, {2.79, 3.93}},
    {{1.98, 2.97}, {2.21, 3.25}, {2.68, 3.84}},
};

constexpr CaseTable kCaseV = {
    {{9.81, 9.81}, {11.64, 11.64}, {15.73, 15.73}},
    {{5.59, 6.26}, {6.56, 7.30}, {8.74, 9.63}},
    {{4.19, 5.06}, {4.87, 5.85}, {6.34, 7.52}},
    {{3.47, 4.45}, {4.01, 5.07}, {5.17, 6.36}},
    {{3.03, 4.06}, {3.47, 4.57}, {4.40, 5.72}},
    {{2.75, 3.79}, {3.12, 4.25}, {3.93, 5.23}},
    {{2.53, 3.59}, {2.87, 4.00}, {3.60, 4.90}},
    {{2.38, 3.45}, {2.69, 3.83}, {3.34, 4.63}},
    {{2.26, 3.34}, {2.55, 3.68}, {3.15, 4.43}},
    {{2.16, 3.24}, {2.43, 3.56}, {2.97, 4.24}},
    {{2.07, 3.16}, {2.33, 3.46}, {2.84, 4.10}},
};

const CaseTable& table_for(CriticalCase c) {
  switch (c) {
    case CriticalCase::no_intercept_no_trend: return kCaseI;
    case CriticalCase::restricted_intercept: return kCaseII;
    case CriticalCase::unrestricted_intercept: return kCaseIII;
    case CriticalCase::restricted_trend: return kCaseIV;
    case CriticalCase::unrestricted_trend: return kCaseV;
  }
  return kCaseII;
}

int level_index(double level) {
  if (std::fabs(level - 0.10) < 1e-9) return 0;
  if (std::fabs(level - 0.05) < 1e-9) return 1;
  if (std::fabs(level - 0.01) < 1e-9) return 2;
  throw ValidationError("bounds critical values tabulated at 10/5/1% only");
}

}  // namespace

CriticalPair pesaran_critical_values(CriticalCase c, int k, double level) {
  if (k < 0 || k > 10) {
    throw ValidationError("bounds critical values tabulated for k in [0,10]; got k=" +
                          std::to_string(k));
  }
  const auto& row = table_for(c)[k][level_index(level)];
  return CriticalPair{row[0], row[1]};
}

std::string to_string(BoundsVerdict v) {
  switch (v) {
    case BoundsVerdict::cointegrated: return "cointegrated";
    case BoundsVerdict::not_cointegrated: return "not_cointegrated";
    case BoundsVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

BoundsVerdict bounds_verdict(double f_stat, const CriticalPair& bounds) {
  if (f_stat > bounds.upper) return BoundsVerdict::cointegrated;
  if (f_stat < bounds.lower) return BoundsVerdict::not_cointegrated;
  return BoundsVerdict::inconclusive;
}

BoundsResult bounds_f_test(const ArdlData& data, const ArdlOrder& order,
                           CriticalCase critical_case) {
  order.validate(data.k());
  const auto& y = data.dependent;
  const int k = static_cast<int>(data.k());
  const int n = static_cast<int>(y.size());

  std::vector<int> dq(order.q.size());  // difference lags per regressor
  for (std::size_t j = 0; j < order.q.size(); ++j) dq[j] = std::max(order.q[j], 1);
  int max_lag = order.p;
  for (int d : dq) max_lag = std::max(max_lag, d);
  const int start = max_lag;
  const int rows = n - start;

  const bool with_const = critical_case != CriticalCase::no_intercept_no_trend;
  const bool with_trend = critical_case == CriticalCase::restricted_trend ||
                          critical_case == CriticalCase::unrestricted_trend;
  int cols = (with_const ? 1 : 0) + (with_trend ? 1 : 0) + (order.p - 1);
  for (int d : dq) cols += d;
  const int level_cols = k + 1;
  cols += level_cols;
  if (rows <= cols) {
    throw ValidationError("bounds test: " + std::to_string(rows) +
                          " usable rows for " + std::to_string(cols) + " columns");
  }

  Eigen::MatrixXd Xu(rows, cols);
  Eigen::VectorXd dep(rows);
  std::vector<std::string> labels;
  auto dval = [](const TimeSeries& s, int t) {
    return s[static_cast<std::size_t>(t)] - s[static_cast<std::size_t>(t - 1)];
  };

  for (int r = 0; r < rows; ++r) {
    const int t = start + r;
    dep[r] = dval(y, t);
    int c = 0;
    if (r == 0) labels.clear();
    auto push = [&](double v, const std::string& lab) {
      Xu(r, c) = v;
      if (r == 0) labels.push_back(lab);
      ++c;
    };
    if (with_const) push(1.0, "const");
    if (with_trend) push(static_cast<double>(r + 1), "trend");
    for (int i = 1; i <= order.p - 1; ++i) {
      push(dval(y, t - i), "d" + y.name() + "(-" + std::to_string(i) + ")");
    }
    for (std::size_t j = 0; j < data.regressors.size(); ++j) {
      const auto& x = data.regressors[j];
      for (int i = 0; i < dq[j]; ++i) {
        push(dval(x, t - i),
             "d" + x.name() + (i > 0 ? "(-" + std::to_string(i) + ")" : ""));
      }
    }
    push(y[static_cast<std::size_t>(t - 1)], y.name() + "(-1)");
    for (const auto& x : data.regressors) {
      push(x[static_cast<std::size_t>(t - 1)], x.name() + "(-1)");
    }
  }

  const OlsFit unrestricted = ols_fit(Xu, dep, labels);

  // restricted regression: drop the k+1 lagged levels
  const int cols_r = cols - level_cols;
  double rss_r;
  if (cols_r > 0) {
    const Eigen::MatrixXd Xr = Xu.leftCols(cols_r);
    std::vector<std::string> labels_r(labels.begin(), labels.begin() + cols_r);
    rss_r = ols_fit(Xr, dep, labels_r).rss;
  } else {
    rss_r = dep.squaredNorm();
  }

  BoundsResult out;
  out.k = k;
  out.critical_case = critical_case;
  out.unrestricted = unrestricted;
  const double m = static_cast<double>(level_cols);
  out.f_stat = (rss_r - unrestricted.rss) / m /
               (unrestricted.rss / (rows - cols));
  for (double level : {0.10, 0.05, 0.01}) {
    const CriticalPair bounds = pesaran_critical_values(critical_case, k, level);
    out.rows.push_back({level, bounds, bounds_verdict(out.f_stat, bounds)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Long-run solution and error correction
// ---------------------------------------------------------------------------

LongRunSolution long_run_coefficients(const ArdlFit& ardl) {
  const OlsFit& fit = ardl.fit;
  const int k = static_cast<int>(ardl.x_lag_cols.size());
  const int dof = fit.n - fit.k;

  double y_lag_sum = 0.0;
  for (int c : ardl.y_lag_cols) y_lag_sum += fit.coefficients[c];
  const double denom = 1.0 - y_lag_sum;
  if (std::fabs(denom) <= 1e-6) {
    throw StatError("long_run_coefficients: no long-run relation (dependent series "
                    "behaves as a unit root within the model; 1 - sum(y lags) = " +
                    std::to_string(denom) + ")");
  }

  LongRunSolution sol;
  sol.names = ardl.regressors;
  sol.theta.resize(k);
  sol.standard_errors.resize(k);
  sol.t_stats.resize(k);
  sol.p_values.resize(k);

  // delta method: grad(theta_j) has 1/denom on x_j lags and S_j/denom^2 on
  // y lags; same shape for the intercept.
  auto delta_se = [&](double numerator_sum, const std::vector<int>& num_cols) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(fit.k);
    for (int c : num_cols) g[c] = 1.0 / denom;
    for (int c : ardl.y_lag_cols) g[c] = numerator_sum / (denom * denom);
    return std::sqrt(std::max(0.0, double(g.transpose() * fit.covariance * g)));
  };

  for (int j = 0; j < k; ++j) {
    double s = 0.0;
    for (int c : ardl.x_lag_cols[j]) s += fit.coefficients[c];
    sol.theta[j] = s / denom;
    sol.standard_errors[j] = delta_se(s, ardl.x_lag_cols[j]);
    if (sol.standard_errors[j] > 0.0) {
      sol.t_stats[j] = sol.theta[j] / sol.standard_errors[j];
      sol.p_values[j] = probdist::t_sf_two_sided(sol.t_stats[j], dof);
    } else {
      sol.t_stats[j] = std::numeric_limits<double>::quiet_NaN();
      sol.p_values[j] = std::numeric_limits<double>::quiet_NaN();
    }
  }

  const double c0 = fit.coefficients[ardl.intercept_col];
  sol.intercept = c0 / denom;
  sol.intercept_se = delta_se(c0, {ardl.intercept_col});
  if (sol.intercept_se > 0.0) {
    sol.intercept_t = sol.intercept / sol.intercept_se;
    sol.intercept_p = probdist::t_sf_two_sided(sol.intercept_t, dof);
  } else {
    sol.intercept_t = std::numeric_limits<double>::quiet_NaN();
    sol.intercept_p = std::numeric_limits<double>::quiet_NaN();
  }
  return sol;
}

TimeSeries build_ecm_series(const ArdlData& data, const LongRunSolution& solution,
                            bool include_intercept) {
  if (static_cast<std::size_t>(solution.theta.size()) != data.k()) {
    throw ValidationError("build_ecm_series: got " +
                          std::to_string(solution.theta.size()) + " coefficients for " +
                          std::to_string(data.k()) + " regressors");
  }
  const auto& y = data.dependent;
  std::vector<double> v(y.size());
  for (std::size_t t = 0; t < y.size(); ++t) {
    double e = y[t];
    for (std::size_t j = 0; j < data.k(); ++j) {
      e -= solution.theta[static_cast<Eigen::Index>(j)] * data.regressors[j][t];
    }
    if (include_intercept) e -= solution.intercept;
    v[t] = e;
  }
  return TimeSeries("ECM", y.frequency(), y.start(), std::move(v));
}

EcmFit fit_ecm(const ArdlData& data, const ArdlOrder& order,
               const LongRunSolution& solution, bool include_intercept) {
  order.validate(data.k());
  const TimeSeries ecm = build_ecm_series(data, solution, include_intercept);
  const auto& y = data.dependent;
  const int n = static_cast<int>(y.size());

  std::vector<int> dq(order.q.size());
  for (std::size_t j = 0; j < order.q.size(); ++j) dq[j] = std::max(order.q[j], 1);
  int max_lag = order.p;
  for (int d : dq) max_lag = std::max(max_lag, d);
  const int start = max_lag;
  const int rows = n - start;

  int cols = 1 + (order.p - 1) + 1;  // const + dy lags + ECM(-1)
  for (int d : dq) cols += d;
  if (rows < cols + 10) {
    throw ValidationError("fit_ecm: " + std::to_string(rows) + " usable rows for " +
                          std::to_string(cols) + " parameters (need >= parameters + 10)");
  }

  Eigen::MatrixXd X(rows, cols);
  Eigen::VectorXd dep(rows);
  std::vector<std::string> labels;
  std::vector<Period> periods;
  auto dval = [](const TimeSeries& s, int t) {
    return s[static_cast<std::size_t>(t)] - s[static_cast<std::size_t>(t - 1)];
  };
  for (int r = 0; r < rows; ++r) {
    const int t = start + r;
    dep[r] = dval(y, t);
    int c = 0;
    auto push = [&](double v, const std::string& lab) {
      X(r, c) = v;
      if (r == 0) labels.push_back(lab);
      ++c;
    };
    push(1.0, "const");
    for (int i = 1; i <= order.p - 1; ++i) {
      push(dval(y, t - i), "d" + y.name() + "(-" + std::to_string(i) + ")");
    }
    for (std::size_t j = 0; j < data.regressors.size(); ++j) {
      const auto& x = data.regressors[j];
      for (int i = 0; i < dq[j]; ++i) {
        push(dval(x, t - i),
             "d" + x.name() + (i > 0 ? "(-" + std::to_string(i) + ")" : ""));
      }
    }
    push(ecm[static_cast<std::size_t>(t - 1)], "ECM(-1)");
    periods.push_back(y.period_at(static_cast<std::size_t>(t)));
  }

  EcmFit out{.fit = {}, .ecm_series = ecm, .design = {}};
  out.design.labels = labels;
  out.design.X = X;
  out.design.periods = periods;
  out.design.frequency = y.frequency();
  out.fit = ols_fit(out.design, dep);
  const int lc = out.fit.coef_index("ECM(-1)");
  out.lambda = out.fit.coefficients[lc];
  out.lambda_se = out.fit.standard_errors[lc];
  out.lambda_t = out.fit.t_stats[lc];
  out.lambda_p = out.fit.p_values[lc];
  out.adjustment_speed = -out.lambda;
  out.lambda_in_stable_range = out.lambda > -1.0 && out.lambda < 0.0;
  return out;
}

}  // namespace tsecon::ardl
