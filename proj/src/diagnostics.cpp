#include "tsecon/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tsecon/error.hpp"
#include "tsecon/probdist.hpp"

namespace tsecon::diag {

DiagnosticResult breusch_godfrey(const OlsFit& fit, const Eigen::MatrixXd& X,
                                 int lags) {
  if (lags < 1) throw ValidationError("breusch_godfrey: lags must be >= 1");
  const int n = fit.n;
  if (X.rows() != n || fit.residuals.size() != n) {
    throw ValidationError("breusch_godfrey: X does not match the fit");
  }
  if (n <= fit.k + lags) {
    throw ValidationError("breusch_godfrey: sample too short for " +
                          std::to_string(lags) + " lags");
  }

  Eigen::MatrixXd aux(n, X.cols() + lags);
  aux.leftCols(X.cols()) = X;
  for (int j = 1; j <= lags; ++j) {
    for (int t = 0; t < n; ++t) {
      aux(t, X.cols() + j - 1) = t - j >= 0 ? fit.residuals[t - j] : 0.0;
    }
  }
  const OlsFit auxfit = ols_fit(aux, fit.residuals);

  const double e_mean = fit.residuals.mean();
  const double tss = (fit.residuals.array() - e_mean).matrix().squaredNorm();
  if (tss <= 0.0) throw StatError("breusch_godfrey: residuals are constant");
  const double r2 = 1.0 - auxfit.rss / tss;

  DiagnosticResult out;
  out.name = "breusch_godfrey";
  out.stat = n * r2;
  out.p_value = probdist::chi2_sf(std::max(0.0, out.stat), lags);
  out.dof_note = "chi2(" + std::to_string(lags) + ")";
  return out;
}

DiagnosticResult ramsey_reset(const OlsFit& fit, const Eigen::MatrixXd& X,
                              const Eigen::VectorXd& y,
                              const std::vector<int>& powers) {
  if (powers.empty()) throw ValidationError("ramsey_reset: powers must be nonempty");
  for (int p : powers) {
    if (p < 2) throw ValidationError("ramsey_reset: powers must be >= 2");
  }
  const int n = fit.n;
  if (X.rows() != n || y.size() != n) {
    throw ValidationError("ramsey_reset: X/y do not match the fit");
  }
  const double f0 = fit.fitted[0];
  if ((fit.fitted.array() == f0).all()) {
    throw StatError("ramsey_reset: fitted values are constant");
  }
  const int m = static_cast<int>(powers.size());
  if (n <= fit.k + m) throw ValidationError("ramsey_reset: sample too short");

  // scale fitted values to unit max magnitude so high powers stay conditioned
  const double scale = fit.fitted.cwiseAbs().maxCoeff();
  Eigen::MatrixXd aug(n, X.cols() + m);
  aug.leftCols(X.cols()) = X;
  for (int j = 0; j < m; ++j) {
    aug.col(X.cols() + j) =
        (fit.fitted / scale).array().pow(powers[static_cast<std::size_t>(j)]);
  }
  const OlsFit augfit = ols_fit(aug, y);

  DiagnosticResult out;
  out.name = "ramsey_reset";
  const int dof2 = n - fit.k - m;
  out.stat = (fit.rss - augfit.rss) / m / (augfit.rss / dof2);
  out.p_value = probdist::f_sf(std::max(0.0, out.stat), m, dof2);
  out.dof_note = "F(" + std::to_string(m) + "," + std::to_string(dof2) + ")";
  return out;
}

Eigen::VectorXd recursive_residuals(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(X.rows());
  const int k = static_cast<int>(X.cols());
  if (n <= k) throw ValidationError("recursive_residuals: need n > k");
  if (y.size() != n) throw ValidationError("recursive_residuals: y does not match X");

  const Eigen::MatrixXd X0 = X.topRows(k);
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(X0.transpose() * X0);
  if (!lu.isInvertible()) {
    throw StatError("recursive_residuals: leading k x k block is rank deficient");
  }
  Eigen::MatrixXd P = lu.inverse();                    // (X_t' X_t)^-1
  Eigen::VectorXd beta = P * (X0.transpose() * y.head(k));

  Eigen::VectorXd w(n - k);
  for (int t = k; t < n; ++t) {
    const Eigen::VectorXd x = X.row(t).transpose();
    const Eigen::VectorXd Px = P * x;
    const double f = 1.0 + x.dot(Px);
    const double err = y[t] - x.dot(beta);
    w[t - k] = err / std::sqrt(f);
    beta += Px * (err / f);
    P -= (Px * Px.transpose()) / f;
  }
  return w;
}

namespace {

double cusum_band_constant(double level) {
  if (std::fabs(level - 0.10) < 1e-9) return 0.850;
  if (std::fabs(level - 0.05) < 1e-9) return 0.948;
  if (std::fabs(level - 0.01) < 1e-9) return 1.143;
  throw ValidationError("cusum: bands available at 10/5/1% only");
}

// CUSUMSQ max-deviation band half-widths c0(m), simulated with 200000
// replications of the exact null path (scripts/gen_tables.py).
constexpr int kCusumsqM[] = {10, 15, 20, 25, 30, 40, 50, 60, 80, 100, 120, 150, 200, 300, 500};
constexpr double kCusumsqC0_10[] = {0.42208, 0.36640, 0.32778, 0.29986, 0.27794,
                                    0.24515, 0.22215, 0.20452, 0.17967, 0.16171,
                                    0.14863, 0.13429, 0.11693, 0.09631, 0.07518};
constexpr double kCusumsqC0_5[] = {0.47326, 0.41073, 0.36738, 0.33543, 0.31093,
                                   0.27452, 0.24815, 0.22831, 0.20062, 0.18038,
                                   0.16570, 0.14954, 0.13028, 0.10716, 0.08370};
constexpr double kCusumsqC0_1[] = {0.57181, 0.49607, 0.44399, 0.40752, 0.37564,
                                   0.33227, 0.30011, 0.27589, 0.24174, 0.21878,
                                   0.20065, 0.18032, 0.15728, 0.12873, 0.10064};
constexpr int kCusumsqN = static_cast<int>(std::size(kCusumsqM));

double cusumsq_c0(int m, double level, bool& clamped) {
  const double* c0;
  if (std::fabs(level - 0.10) < 1e-9) {
    c0 = kCusumsqC0_10;
  } else if (std::fabs(level - 0.05) < 1e-9) {
    c0 = kCusumsqC0_5;
  } else if (std::fabs(level - 0.01) < 1e-9) {
    c0 = kCusumsqC0_1;
  } else {
    throw ValidationError("cusumsq: bands available at 10/5/1% only");
  }
  clamped = false;
  if (m <= kCusumsqM[0]) {
    clamped = m < kCusumsqM[0];
    return c0[0];
  }
  if (m >= kCusumsqM[kCusumsqN - 1]) {
    clamped = m > kCusumsqM[kCusumsqN - 1];
    return c0[kCusumsqN - 1];
  }
  int i = 0;
  while (m > kCusumsqM[i + 1]) ++i;
  const double w = static_cast<double>(m - kCusumsqM[i]) /
                   static_cast<double>(kCusumsqM[i + 1] - kCusumsqM[i]);
  return c0[i] + w * (c0[i + 1] - c0[i]);
}

}  // namespace

StabilityPath cusum(std::span<const double> w, int k, double level) {
  const int m = static_cast<int>(w.size());
  if (m < 2) throw ValidationError("cusum: need at least two recursive residuals");
  const double a = cusum_band_constant(level);

  const double mean = std::accumulate(w.begin(), w.end(), 0.0) / m;
  double ss = 0.0;
  for (double v : w) ss += (v - mean) * (v - mean);
  const double sigma = std::sqrt(ss / (m - 1));

  const bool all_zero = std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; });
  if (sigma == 0.0 && !all_zero) {
    throw StatError("cusum: zero residual dispersion with a nonzero path");
  }

  StabilityPath out;
  const double root = std::sqrt(static_cast<double>(m));
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    acc += w[static_cast<std::size_t>(i)];
    out.t_index.push_back(k + 1 + i);
    out.path.push_back(all_zero ? 0.0 : acc / sigma);
    const double band = a * root + 2.0 * a * static_cast<double>(i + 1) / root;
    out.upper.push_back(band);
    out.lower.push_back(-band);
  }
  out.stable = true;
  for (int i = 0; i < m; ++i) {
    if (out.path[i] < out.lower[i] || out.path[i] > out.upper[i]) {
      out.stable = false;
      break;
    }
  }
  return out;
}

StabilityPath cusumsq(std::span<const double> w, int k, double level) {
  const int m = static_cast<int>(w.size());
  if (m < 2) throw ValidationError("cusumsq: need at least two recursive residuals");
  double total = 0.0;
  for (double v : w) total += v * v;
  if (total <= 0.0) {
    throw StatError("cusumsq: all recursive residuals are zero (undefined ratio)");
  }

  StabilityPath out;
  const double c0 = cusumsq_c0(m, level, out.band_clamped);
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    acc += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
    out.t_index.push_back(k + 1 + i);
    out.path.push_back(acc / total);
    const double center = static_cast<double>(i + 1) / m;
    out.upper.push_back(center + c0);
    out.lower.push_back(center - c0);
  }
  out.stable = true;
  for (int i = 0; i < m; ++i) {
    if (out.path[i] < out.lower[i] || out.path[i] > out.upper[i]) {
      out.stable = false;
      break;
    }
  }
  return out;
}

}  // namespace tsecon::diag
