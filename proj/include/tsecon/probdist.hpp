#pragma once

namespace tsecon::probdist {

/// Upper-tail (survival) probabilities for the distributions every p-value
/// in the toolkit comes from.  The incomplete gamma/beta kernels use the
/// power series below the mean-based switchover and a Lentz continued
/// fraction above it, targeting 1e-10 relative accuracy; iteration caps are
/// enforced and non-convergence throws instead of returning an approximation.

/// P(X > x) for X ~ chi-square(dof).
[[nodiscard]] double chi2_sf(double x, int dof);

/// P(|T| > |t|) for T ~ Student-t(dof).
[[nodiscard]] double t_sf_two_sided(double t, int dof);

/// P(X > x) for X ~ F(d1, d2).
[[nodiscard]] double f_sf(double x, int d1, int d2);

/// 1 - Phi(z) for the standard normal.
[[nodiscard]] double normal_sf(double z);

// Kernels, exposed for direct testing.
[[nodiscard]] double regularized_gamma_p(double a, double x);
[[nodiscard]] double regularized_gamma_q(double a, double x);
[[nodiscard]] double regularized_beta(double x, double a, double b);

}  // namespace tsecon::probdist
