#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tsecon/diagnostics.hpp"
#include "tsecon/error.hpp"
#include "tsecon/parallel.hpp"
#include "tsecon/probdist.hpp"
#include "tsecon/sim.hpp"

using namespace tsecon;
using namespace tsecon::diag;

namespace {

struct Problem {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
};

// y = 1 + 0.8 x + e with optional AR(1) errors
Problem make_problem(int n, double rho, std::uint64_t seed, double sigma = 1.0) {
  sim::Rng rng(seed);
  Problem p;
  p.X.resize(n, 2);
  p.y.resize(n);
  double e_prev = 0.0;
  for (int t = 0; t < n; ++t) {
    const double x = rng.normal() + 1.0;
    const double e = rho * e_prev + sigma * rng.normal();
    e_prev = e;
    p.X(t, 0) = 1.0;
    p.X(t, 1) = x;
    p.y(t) = 1.0 + 0.8 * x + e;
  }
  return p;
}

}  // namespace

TEST_CASE("breusch_godfrey maps the published statistic to its p-value") {
  // a chi-square(4) stat of 6.6648 corresponds to p = 0.1546
  CHECK(std::fabs(probdist::chi2_sf(6.6648, 4) - 0.1546) < 5e-4);
}

TEST_CASE("breusch_godfrey flags AR(1) errors and passes clean ones") {
  const auto clean = make_problem(200, 0.0, 1101);
  const auto clean_fit = ols_fit(clean.X, clean.y);
  const auto clean_res = breusch_godfrey(clean_fit, clean.X, 4);
  CHECK(clean_res.p_value > 0.01);
  CHECK(clean_res.dof_note == "chi2(4)");

  const auto serial = make_problem(200, 0.8, 1102);
  const auto serial_fit = ols_fit(serial.X, serial.y);
  const auto serial_res = breusch_godfrey(serial_fit, serial.X, 4);
  CHECK(serial_res.p_value < 0.01);
  CHECK(serial_res.reject_at_5pct());

  CHECK_THROWS_AS(breusch_godfrey(clean_fit, clean.X, 0), ValidationError);
}

TEST_CASE("breusch_godfrey stat is invariant to joint rescaling") {
  const auto p = make_problem(150, 0.5, 1103);
  const auto fit = ols_fit(p.X, p.y);
  const auto base = breusch_godfrey(fit, p.X, 2);

  const double c = -3.5;
  Eigen::MatrixXd Xs = p.X * c;
  Eigen::VectorXd ys = p.y * c;
  const auto fits = ols_fit(Xs, ys);
  const auto scaled = breusch_godfrey(fits, Xs, 2);
  CHECK(scaled.stat == doctest::Approx(base.stat).epsilon(1e-8));
}

TEST_CASE("ramsey_reset detects a quadratic and passes a linear model") {
  sim::Rng rng(1201);
  const int n = 200;
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y_lin(n), y_quad(n);
  for (int t = 0; t < n; ++t) {
    const double x = rng.normal();
    X(t, 0) = 1.0;
    X(t, 1) = x;
    const double e = rng.normal();
    y_lin(t) = 1.0 + 2.0 * x + e;
    y_quad(t) = x * x + 0.2 * e;
  }
  const auto lin_fit = ols_fit(X, y_lin);
  CHECK(ramsey_reset(lin_fit, X, y_lin).p_value > 0.10);

  const auto quad_fit = ols_fit(X, y_quad);
  CHECK(ramsey_reset(quad_fit, X, y_quad).p_value < 0.01);

  CHECK_THROWS_AS(ramsey_reset(lin_fit, X, y_lin, {}), ValidationError);
  CHECK_THROWS_AS(ramsey_reset(lin_fit, X, y_lin, {1}), ValidationError);

  // constant fitted values cannot be augmented
  Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, 1);
  const auto mean_fit = ols_fit(ones, y_lin);
  CHECK_THROWS_AS(ramsey_reset(mean_fit, ones, y_lin), StatError);
}

TEST_CASE("recursive residuals are zero under an exact linear map") {
  const int n = 30;
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  for (int t = 0; t < n; ++t) {
    X(t, 0) = 1.0;
    X(t, 1) = t;
    y(t) = 3.0 - 2.0 * t;
  }
  const auto w = recursive_residuals(X, y);
  REQUIRE(w.size() == n - 2);
  for (int i = 0; i < w.size(); ++i) CHECK(std::fabs(w[i]) < 1e-9);
}

TEST_CASE("recursive residuals base case n = k + 1") {
  Eigen::MatrixXd X(3, 2);
  X << 1, 0, 1, 1, 1, 2;
  Eigen::VectorXd y(3);
  y << 1.0, 2.0, 5.0;
  const auto w = recursive_residuals(X, y);
  REQUIRE(w.size() == 1);
  // beta from the first two rows is (1, 1); forecast for x = (1,2) is 3
  // with variance factor 1 + x'(X0'X0)^-1 x
  const Eigen::MatrixXd X0 = X.topRows(2);
  const Eigen::MatrixXd P = (X0.transpose() * X0).inverse();
  const Eigen::VectorXd x2 = X.row(2).transpose();
  const double f = 1.0 + x2.dot(P * x2);
  CHECK(w[0] == doctest::Approx((5.0 - 3.0) / std::sqrt(f)).epsilon(1e-12));
}

TEST_CASE("recursive residuals of a stable model pass a mean-zero t test") {
  const auto p = make_problem(300, 0.0, 1303);
  const auto w = recursive_residuals(p.X, p.y);
  const int m = static_cast<int>(w.size());
  const double mean = w.mean();
  double ss = 0.0;
  for (int i = 0; i < m; ++i) ss += (w[i] - mean) * (w[i] - mean);
  const double se = std::sqrt(ss / (m - 1) / m);
  const double t = mean / se;
  CHECK(probdist::t_sf_two_sided(t, m - 1) > 0.05);
}

TEST_CASE("recursive residuals reject a rank-deficient start") {
  Eigen::MatrixXd X = Eigen::MatrixXd::Ones(10, 2);  // two identical columns
  Eigen::VectorXd y = Eigen::VectorXd::LinSpaced(10, 0.0, 1.0);
  CHECK_THROWS_AS(recursive_residuals(X, y), StatError);
}

TEST_CASE("cusum of all-zero residuals is the zero path, stable") {
  std::vector<double> w(20, 0.0);
  const auto path = cusum(w, 2);
  CHECK(path.stable);
  for (double v : path.path) CHECK(v == 0.0);
  CHECK(path.t_index.front() == 3);
  CHECK(path.t_index.back() == 22);
}

TEST_CASE("cusum bands follow the straight-line form") {
  std::vector<double> w(25, 0.0);
  w[3] = 1.0;  // non-degenerate
  const auto path = cusum(w, 4, 0.05);
  const double m = 25.0;
  const double a = 0.948;
  CHECK(path.upper.front() ==
        doctest::Approx(a * std::sqrt(m) + 2.0 * a * 1.0 / std::sqrt(m)).epsilon(1e-12));
  CHECK(path.upper.back() == doctest::Approx(3.0 * a * std::sqrt(m)).epsilon(1e-12));
  for (std::size_t i = 0; i < path.upper.size(); ++i) {
    CHECK(path.lower[i] == doctest::Approx(-path.upper[i]).epsilon(1e-12));
  }
}

TEST_CASE("cusum path and bands are invariant to positive rescaling") {
  sim::Rng rng(1401);
  std::vector<double> w(40);
  for (auto& v : w) v = rng.normal();
  const auto base = cusum(w, 3);
  std::vector<double> scaled(w);
  for (auto& v : scaled) v *= 12.75;
  const auto s = cusum(scaled, 3);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(s.path[i] == doctest::Approx(base.path[i]).epsilon(1e-10));
    CHECK(s.upper[i] == doctest::Approx(base.upper[i]).epsilon(1e-12));
  }
}

TEST_CASE("cusumsq path normalizes to one and is nondecreasing") {
  sim::Rng rng(1402);
  std::vector<double> w(60);
  for (auto& v : w) v = rng.normal();
  const auto path = cusumsq(w, 5);
  CHECK(path.path.back() == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < path.path.size(); ++i) {
    CHECK(path.path[i] >= path.path[i - 1]);
  }
  CHECK(path.path.front() >= 0.0);
  CHECK_FALSE(path.band_clamped);

  CHECK_THROWS_AS(cusumsq(std::vector<double>(10, 0.0), 2), StatError);
}

TEST_CASE("stability detection on break and variance-shift designs (frozen seeds)") {
  const int n = 120;

  auto run_paths = [&](double beta2, double sigma2, std::uint64_t seed) {
    sim::Rng rng(seed);
    Eigen::MatrixXd X(n, 2);
    Eigen::VectorXd y(n);
    for (int t = 0; t < n; ++t) {
      const double x = rng.normal() + 2.0;
      const bool late = t >= n / 2;
      const double beta = late ? beta2 : 1.0;
      const double sigma = late ? sigma2 : 0.2;
      X(t, 0) = 1.0;
      X(t, 1) = x;
      y(t) = beta * x + sigma * rng.normal();
    }
    const auto w = recursive_residuals(X, y);
    const std::span<const double> ws(w.data(), static_cast<std::size_t>(w.size()));
    return std::pair{cusum(ws, 2), cusumsq(ws, 2)};
  };

  // stable configuration
  const auto stable = run_paths(1.0, 0.2, 2030);
  CHECK(stable.first.stable);
  CHECK(stable.second.stable);

  // coefficient doubles mid-sample: the cusum drifts out
  const auto broken = run_paths(2.0, 0.2, 2027);
  CHECK_FALSE(broken.first.stable);

  // error variance quadruples mid-sample: the squared path bends out
  const auto heteros = run_paths(1.0, 0.4, 2028);
  CHECK_FALSE(heteros.second.stable);
}

TEST_CASE("null false-alarm rates stay near size (reduced battery)") {
  const int reps = 100, n = 150;
  int cusum_alarms = 0, cusumsq_alarms = 0;
  for (int r = 0; r < reps; ++r) {
    sim::Rng rng(sim::substream(5150, static_cast<std::uint64_t>(r)));
    Eigen::MatrixXd X(n, 2);
    Eigen::VectorXd y(n);
    for (int t = 0; t < n; ++t) {
      const double x = rng.normal();
      X(t, 0) = 1.0;
      X(t, 1) = x;
      y(t) = 1.0 + x + rng.normal();
    }
    const auto w = recursive_residuals(X, y);
    const std::span<const double> ws(w.data(), static_cast<std::size_t>(w.size()));
    if (!cusum(ws, 2).stable) ++cusum_alarms;
    if (!cusumsq(ws, 2).stable) ++cusumsq_alarms;
  }
  CHECK(cusum_alarms <= 12);
  CHECK(cusumsq_alarms <= 12);
}
