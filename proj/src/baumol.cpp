#include "tsecon/baumol.hpp"

#include <cmath>
#include <string>

#include "tsecon/error.hpp"

namespace tsecon::baumol {

void BaumolParams::validate() const {
  if (!(income > 0.0)) throw ValidationError("baumol: income must be > 0");
  if (!(conversion_cost > 0.0)) throw ValidationError("baumol: conversion cost must be > 0");
  if (!(interest_rate > 0.0)) throw ValidationError("baumol: interest rate must be > 0");
}

double total_cost(const BaumolParams& params, double withdrawal) {
  params.validate();
  if (!(withdrawal > 0.0)) {
    throw ValidationError("baumol: withdrawal size must be > 0, got " +
                          std::to_string(withdrawal));
  }
  return 0.5 * withdrawal * params.interest_rate +
         params.income / withdrawal * params.conversion_cost;
}

BaumolSolution optimal_cash(const BaumolParams& params) {
  params.validate();
  BaumolSolution s;
  s.k_star = std::sqrt(2.0 * params.conversion_cost * params.income / params.interest_rate);
  s.m_star = 0.5 * s.k_star;
  s.total_cost = total_cost(params, s.k_star);
  return s;
}

SubstitutionResult cbdc_substitution(const BaumolParams& params, double cbdc_cost) {
  params.validate();
  if (!(cbdc_cost > 0.0)) throw ValidationError("baumol: cbdc conversion cost must be > 0");
  SubstitutionResult r;
  r.m_cash = optimal_cash(params).m_star;
  BaumolParams digital = params;
  digital.conversion_cost = cbdc_cost;
  r.m_cbdc = optimal_cash(digital).m_star;
  r.delta = r.m_cbdc - r.m_cash;
  return r;
}

Elasticities elasticities(const BaumolParams& params) {
  params.validate();
  Elasticities e;
  e.wrt_income = 0.5;
  e.wrt_cost = 0.5;
  e.wrt_rate = -0.5;

  // elasticity = (dM/dx) (x/M); bumping multiplicatively makes x cancel
  const double h = 1e-6;
  const double m0 = optimal_cash(params).m_star;
  auto central = [&](double BaumolParams::* field) {
    BaumolParams up = params, dn = params;
    up.*field *= 1.0 + h;
    dn.*field *= 1.0 - h;
    return (optimal_cash(up).m_star - optimal_cash(dn).m_star) / (2.0 * h * m0);
  };
  e.fd_income = central(&BaumolParams::income);
  e.fd_cost = central(&BaumolParams::conversion_cost);
  e.fd_rate = central(&BaumolParams::interest_rate);
  return e;
}

}  // namespace tsecon::baumol
