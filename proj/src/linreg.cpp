#include "tsecon/linreg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "tsecon/error.hpp"
#include "tsecon/probdist.hpp"

namespace tsecon {

void DesignMatrix::validate() const {
  if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != X.cols()) {
    throw ValidationError("design matrix: label count does not match columns");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw ValidationError("design matrix: duplicate column label '" + l + "'");
    }
  }
  if (X.rows() <= X.cols()) {
    throw ValidationError("design matrix: need more rows than columns (n=" +
                          std::to_string(X.rows()) + ", k=" +
                          std::to_string(X.cols()) + ")");
  }
  if (!periods.empty() && static_cast<Eigen::Index>(periods.size()) != X.rows()) {
    throw ValidationError("design matrix: period index does not match rows");
  }
}

int OlsFit::coef_index(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw ValidationError("no coefficient labeled '" + label + "'");
  }
  return static_cast<int>(it - labels.begin());
}

InformationCriteria information_criteria(double rss, int n, int k) {
  if (rss < 0.0) throw ValidationError("information_criteria: rss must be >= 0");
  if (n <= k) throw ValidationError("information_criteria: need n > k");
  InformationCriteria c;
  if (rss == 0.0) {
    c.aic = -std::numeric_limits<double>::infinity();
    c.sbc = -std::numeric_limits<double>::infinity();
    c.loglik = std::numeric_limits<double>::infinity();
    return c;
  }
  const double nn = static_cast<double>(n);
  const double log_ms = std::log(rss / nn);
  c.sbc = nn * log_ms + k * std::log(nn);
  c.aic = nn * log_ms + 2.0 * k;
  c.loglik = -0.5 * nn * (std::log(2.0 * M_PI) + log_ms + 1.0);
  return c;
}

namespace {

bool has_constant_column(const Eigen::MatrixXd& X) {
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    const double v = X(0, j);
    if (v == 0.0) continue;
    if ((X.col(j).array() == v).all()) return true;
  }
  return false;
}

}  // namespace

OlsFit ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
               std::vector<std::string> labels) {
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();
  if (y.size() != n) throw ValidationError("ols_fit: y length does not match X rows");
  if (k < 1) throw ValidationError("ols_fit: empty design");
  if (n <= k) {
    throw ValidationError("ols_fit: need n > k (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  }
  if (labels.empty()) {
    for (Eigen::Index j = 0; j < k; ++j) labels.push_back("x" + std::to_string(j));
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  // pivot below max(n,k) * eps * |largest pivot| marks a dependent column
  if (qr.rank() < k) {
    const auto perm = qr.colsPermutation().indices();
    std::string names;
    for (Eigen::Index j = qr.rank(); j < k; ++j) {
      if (!names.empty()) names += ", ";
      names += labels[static_cast<std::size_t>(perm[j])];
    }
    throw StatError("ols_fit: design is rank deficient; dependent column(s): " + names);
  }

  OlsFit fit;
  fit.labels = std::move(labels);
  fit.n = static_cast<int>(n);
  fit.k = static_cast<int>(k);
  fit.coefficients = qr.solve(y);
  fit.fitted = X * fit.coefficients;
  fit.residuals = y - fit.fitted;
  fit.rss = fit.residuals.squaredNorm();
  // a consistent system solved in floating point leaves rounding noise, not
  // a real residual; snap it so perfect fits are flagged as such
  const double noise = static_cast<double>(n) *
                       std::numeric_limits<double>::epsilon() * y.norm();
  if (fit.rss <= noise * noise) {
    fit.rss = 0.0;
    fit.residuals.setZero();
  }
  const int dof = fit.n - fit.k;
  fit.sigma2 = fit.rss / dof;

  // (X'X)^-1 from the decomposition: X P = Q R  =>  (X'X)^-1 = P (R'R)^-1 P'
  const Eigen::MatrixXd R =
      qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
  const Eigen::MatrixXd r_inv =
      R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  const Eigen::MatrixXd xtx_inv_perm = r_inv * r_inv.transpose();
  const auto& P = qr.colsPermutation();
  const Eigen::MatrixXd xtx_inv = P * xtx_inv_perm * P.transpose();
  fit.covariance = fit.sigma2 * xtx_inv;

  fit.standard_errors.resize(k);
  fit.t_stats.resize(k);
  fit.p_values.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    fit.standard_errors[j] = std::sqrt(std::max(0.0, fit.covariance(j, j)));
    if (fit.standard_errors[j] > 0.0) {
      fit.t_stats[j] = fit.coefficients[j] / fit.standard_errors[j];
      fit.p_values[j] = probdist::t_sf_two_sided(fit.t_stats[j], dof);
    } else {
      fit.t_stats[j] = std::numeric_limits<double>::quiet_NaN();
      fit.p_values[j] = std::numeric_limits<double>::quiet_NaN();
    }
  }

  const bool intercept = has_constant_column(X);
  const double tss = intercept ? (y.array() - y.mean()).matrix().squaredNorm()
                               : y.squaredNorm();
  fit.r2 = tss > 0.0 ? 1.0 - fit.rss / tss : 1.0;
  const double denom = intercept ? static_cast<double>(n - 1) : static_cast<double>(n);
  fit.adj_r2 = 1.0 - (1.0 - fit.r2) * denom / dof;

  fit.dw = fit.rss > 0.0 ? durbin_watson(fit.residuals)
                         : std::numeric_limits<double>::quiet_NaN();

  const InformationCriteria ic = information_criteria(fit.rss, fit.n, fit.k);
  fit.aic = ic.aic;
  fit.sbc = ic.sbc;
  fit.loglik = ic.loglik;
  return fit;
}

OlsFit ols_fit(const DesignMatrix& design, const Eigen::VectorXd& y) {
  design.validate();
  return ols_fit(design.X, y, design.labels);
}

double durbin_watson(std::span<const double> residuals) {
  if (residuals.size() < 2) throw ValidationError("durbin_watson: need >= 2 residuals");
  double num = 0.0, den = 0.0;
  for (std::size_t t = 0; t < residuals.size(); ++t) {
    den += residuals[t] * residuals[t];
    if (t > 0) {
      const double d = residuals[t] - residuals[t - 1];
      num += d * d;
    }
  }
  if (den == 0.0) throw StatError("durbin_watson: residuals are identically zero");
  return num / den;
}

double durbin_watson(const Eigen::VectorXd& residuals) {
  return durbin_watson(std::span<const double>(residuals.data(),
                                               static_cast<std::size_t>(residuals.size())));
}

}  // namespace tsecon
