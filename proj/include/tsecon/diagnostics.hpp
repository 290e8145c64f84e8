#pragma once

#include <span>
#include <string>
#include <vector>

#include "tsecon/linreg.hpp"

namespace tsecon::diag {

struct DiagnosticResult {
  std::string name;
  double stat = 0.0;
  double p_value = 1.0;
  std::string dof_note;  // "chi2(4)", "F(1,43)", ...
  [[nodiscard]] bool reject_at_5pct() const { return p_value < 0.05; }
};

/// Breusch-Godfrey LM test: residuals regressed on the original regressors
/// plus `lags` lagged residuals (zero-filled before the sample);
/// stat = n * R^2, chi-square(lags).
[[nodiscard]] DiagnosticResult breusch_godfrey(const OlsFit& fit,
                                               const Eigen::MatrixXd& X, int lags);

/// Ramsey RESET: augments the regression with powers of the fitted values
/// and F-tests the added terms.
[[nodiscard]] DiagnosticResult ramsey_reset(const OlsFit& fit, const Eigen::MatrixXd& X,
                                            const Eigen::VectorXd& y,
                                            const std::vector<int>& powers = {2});

/// Standardized one-step-ahead forecast errors w_{k+1}..w_n from recursively
/// re-estimated regressions.  Requires the leading k x k block to be full
/// rank.
[[nodiscard]] Eigen::VectorXd recursive_residuals(const Eigen::MatrixXd& X,
                                                  const Eigen::VectorXd& y);

struct StabilityPath {
  std::vector<int> t_index;   // observation index of each point (k+1..T)
  std::vector<double> path;
  std::vector<double> lower;
  std::vector<double> upper;
  bool stable = true;         // every point within [lower, upper]
  bool band_clamped = false;  // cusumsq only: sample size outside the c0 table
};

/// Brown-Durbin-Evans CUSUM of recursive residuals with straight-line
/// significance bands (a = 0.850 / 0.948 / 1.143 at 10/5/1%).
[[nodiscard]] StabilityPath cusum(std::span<const double> w, int k, double level = 0.05);

/// CUSUM of squares with bands (t-k)/(T-k) +- c0; c0 interpolated from a
/// simulated null table, clamped (with a flag) outside it.
[[nodiscard]] StabilityPath cusumsq(std::span<const double> w, int k,
                                    double level = 0.05);

}  // namespace tsecon::diag
