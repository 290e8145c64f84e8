#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "tsecon/period.hpp"

namespace tsecon {

/// Labeled regression design: an n x k matrix plus the period of each row.
struct DesignMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd X;
  std::vector<Period> periods;
  Frequency frequency = Frequency::quarterly;

  [[nodiscard]] Eigen::Index n() const { return X.rows(); }
  [[nodiscard]] Eigen::Index k() const { return X.cols(); }
  void validate() const;  // n > k, labels unique and matching k
};

/// Least-squares estimate plus the fit statistics the rest of the toolkit
/// consumes.  sigma2 = rss/(n-k); covariance = sigma2 (X'X)^-1; p-values are
/// two-sided t with n-k dof.  dw is NaN for an exact fit (rss == 0).
struct OlsFit {
  std::vector<std::string> labels;
  Eigen::VectorXd coefficients;
  Eigen::MatrixXd covariance;
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd t_stats;
  Eigen::VectorXd p_values;
  Eigen::VectorXd residuals;
  Eigen::VectorXd fitted;
  double rss = 0.0;
  double sigma2 = 0.0;
  double r2 = 0.0;
  double adj_r2 = 0.0;
  double dw = 0.0;
  double loglik = 0.0;
  double aic = 0.0;
  double sbc = 0.0;
  int n = 0;
  int k = 0;

  /// Column position of a label; throws ValidationError if absent.
  [[nodiscard]] int coef_index(const std::string& label) const;
};

struct InformationCriteria {
  double aic = 0.0;
  double sbc = 0.0;
  double loglik = 0.0;
};

/// Gaussian-likelihood criteria: sbc = n ln(rss/n) + k ln(n),
/// aic = n ln(rss/n) + 2k; lower is better.  rss == 0 flags a perfect fit
/// (criteria -inf, loglik +inf) which callers must treat as best.
[[nodiscard]] InformationCriteria information_criteria(double rss, int n, int k);

/// Solves min ||y - Xb|| by column-pivoted QR.  Throws ValidationError when
/// n <= k and StatError on numerical rank deficiency, naming the dependent
/// columns.
[[nodiscard]] OlsFit ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                             std::vector<std::string> labels = {});
[[nodiscard]] OlsFit ols_fit(const DesignMatrix& design, const Eigen::VectorXd& y);

/// Sum of squared residual changes over the residual sum of squares.
/// Throws StatError when the residuals are identically zero.
[[nodiscard]] double durbin_watson(std::span<const double> residuals);
[[nodiscard]] double durbin_watson(const Eigen::VectorXd& residuals);

}  // namespace tsecon
