#pragma once

namespace tsecon::baumol {

/// Inventory-model inputs: per-period income Y, cost per conversion b,
/// per-period interest rate r.  All strictly positive.
struct BaumolParams {
  double income = 0.0;
  double conversion_cost = 0.0;
  double interest_rate = 0.0;

  void validate() const;  // throws ValidationError
};

struct BaumolSolution {
  double k_star = 0.0;      // optimal withdrawal size
  double m_star = 0.0;      // average holding, k_star / 2
  double total_cost = 0.0;  // cost at the optimum
};

/// (K/2) r + (Y/K) b for a withdrawal size K > 0.
[[nodiscard]] double total_cost(const BaumolParams& params, double withdrawal);

/// Closed form K* = sqrt(2 b Y / r), M* = sqrt(b Y / (2 r)).
[[nodiscard]] BaumolSolution optimal_cash(const BaumolParams& params);

struct SubstitutionResult {
  double m_cash = 0.0;
  double m_cbdc = 0.0;
  double delta = 0.0;  // m_cbdc - m_cash; negative when the digital cost is lower
};

/// Average money demand under the cash conversion cost b versus the digital
/// conversion cost b1 (same Y and r).
[[nodiscard]] SubstitutionResult cbdc_substitution(const BaumolParams& params,
                                                   double cbdc_cost);

struct Elasticities {
  double wrt_income = 0.0;
  double wrt_cost = 0.0;
  double wrt_rate = 0.0;
  // central-difference estimates, for cross-checking the closed forms
  double fd_income = 0.0;
  double fd_cost = 0.0;
  double fd_rate = 0.0;
};

/// The square-root form makes the elasticities of M* exactly
/// (+1/2, +1/2, -1/2) in (Y, b, r).
[[nodiscard]] Elasticities elasticities(const BaumolParams& params);

}  // namespace tsecon::baumol
