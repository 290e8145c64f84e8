#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tsecon/ardl.hpp"
#include "tsecon/series_ops.hpp"
#include "tsecon/unitroot.hpp"

namespace tsecon {

enum class VariableRole { dependent, regressor, raw_component };

[[nodiscard]] std::string to_string(VariableRole r);
[[nodiscard]] VariableRole role_from_string(const std::string& s);

/// Derived-indicator recipe.  Builders: "mdi" (online payments, card
/// transfers, card consumption, gdp) and "brokerage_cost" (commission,
/// stock volume; stamp_duty_rate optional).
struct DeriveSpec {
  std::string builder;
  std::vector<std::string> inputs;
  double stamp_duty_rate = 0.001;
};

struct VariableConfig {
  std::string name;
  VariableRole role = VariableRole::regressor;
  std::string file;  // empty when derived
  std::optional<DeriveSpec> derive;
  AggregationMethod aggregation = AggregationMethod::mean;
  SeasonalModel seasonal_model = SeasonalModel::additive;
  std::vector<std::string> transforms;  // fill | aggregate | interpolate | seasonal_adjust | log
};

struct AdfPolicyConfig {
  unitroot::AdfSpec level{unitroot::Deterministics::constant_and_trend, std::nullopt};
  unitroot::AdfSpec difference{unitroot::Deterministics::constant, std::nullopt};
};

struct StudyConfig {
  int schema_version = 1;
  std::vector<VariableConfig> variables;
  int max_p = 4;
  int max_q = 4;
  ardl::CriticalCase bounds_case = ardl::CriticalCase::restricted_intercept;
  std::vector<double> levels = {0.10, 0.05, 0.01};
  bool ecm_include_intercept = false;
  int lm_lags = 4;
  AdfPolicyConfig adf;
  std::uint64_t seed = 0;
  std::string out_dir = "out";

  /// Directory of the config file; relative data paths resolve against it.
  std::filesystem::path base_dir;

  /// Parses and validates a JSON config document.
  [[nodiscard]] static StudyConfig load(const std::filesystem::path& path);
  [[nodiscard]] static StudyConfig parse(const std::string& json_text,
                                         const std::filesystem::path& base_dir);

  /// Collects every validation problem into one ValidationError.
  void validate() const;

  [[nodiscard]] const VariableConfig& dependent() const;
  [[nodiscard]] std::vector<const VariableConfig*> regressors() const;
};

}  // namespace tsecon
