#include "tsecon/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tsecon/error.hpp"

namespace tsecon {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownTransforms = {"fill", "aggregate", "interpolate",
                                                "seasonal_adjust", "log"};

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return j.at(key).get<T>();
}

unitroot::AdfSpec parse_adf_spec(const json& j) {
  unitroot::AdfSpec spec;
  if (j.contains("deterministics")) {
    spec.deterministics =
        unitroot::deterministics_from_string(j.at("deterministics").get<std::string>());
  }
  if (j.contains("lags") && !j.at("lags").is_null()) {
    spec.lags = j.at("lags").get<int>();
  }
  return spec;
}

}  // namespace

std::string to_string(VariableRole r) {
  switch (r) {
    case VariableRole::dependent: return "dependent";
    case VariableRole::regressor: return "regressor";
    case VariableRole::raw_component: return "raw_component";
  }
  return "?";
}

VariableRole role_from_string(const std::string& s) {
  if (s == "dependent") return VariableRole::dependent;
  if (s == "regressor") return VariableRole::regressor;
  if (s == "raw_component") return VariableRole::raw_component;
  throw ValidationError("unknown variable role: '" + s + "'");
}

StudyConfig StudyConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.has_parent_path() ? path.parent_path() : ".");
}

StudyConfig StudyConfig::parse(const std::string& json_text,
                               const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be a JSON object");

  StudyConfig cfg;
  cfg.base_dir = base_dir;
  try {
    cfg.schema_version = get_or(j, "schema_version", 0);
    if (j.contains("variables")) {
      for (const auto& vj : j.at("variables")) {
        VariableConfig v;
        v.name = get_or<std::string>(vj, "name", "");
        if (vj.contains("role")) {
          v.role = role_from_string(vj.at("role").get<std::string>());
        }
        v.file = get_or<std::string>(vj, "file", "");
        if (vj.contains("derive")) {
          DeriveSpec d;
          const auto& dj = vj.at("derive");
          d.builder = get_or<std::string>(dj, "builder", "");
          d.inputs = get_or<std::vector<std::string>>(dj, "inputs", {});
          d.stamp_duty_rate = get_or(dj, "stamp_duty_rate", 0.001);
          v.derive = std::move(d);
        }
        if (vj.contains("aggregation")) {
          v.aggregation = aggregation_from_string(vj.at("aggregation").get<std::string>());
        }
        if (vj.contains("seasonal_model")) {
          const auto s = vj.at("seasonal_model").get<std::string>();
          if (s == "additive") {
            v.seasonal_model = SeasonalModel::additive;
          } else if (s == "multiplicative") {
            v.seasonal_model = SeasonalModel::multiplicative;
          } else {
            throw ValidationError("unknown seasonal_model: '" + s + "'");
          }
        }
        v.transforms = get_or<std::vector<std::string>>(vj, "transforms", {});
        cfg.variables.push_back(std::move(v));
      }
    }
    cfg.max_p = get_or(j, "max_p", cfg.max_p);
    cfg.max_q = get_or(j, "max_q", cfg.max_q);
    if (j.contains("bounds_case")) {
      cfg.bounds_case =
          ardl::critical_case_from_string(j.at("bounds_case").get<std::string>());
    }
    cfg.levels = get_or(j, "levels", cfg.levels);
    cfg.ecm_include_intercept = get_or(j, "ecm_include_intercept", false);
    cfg.lm_lags = get_or(j, "lm_lags", cfg.lm_lags);
    if (j.contains("adf")) {
      const auto& aj = j.at("adf");
      if (aj.contains("level")) cfg.adf.level = parse_adf_spec(aj.at("level"));
      if (aj.contains("difference")) {
        cfg.adf.difference = parse_adf_spec(aj.at("difference"));
      }
    }
    cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
    cfg.out_dir = get_or<std::string>(j, "out_dir", cfg.out_dir);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

void StudyConfig::validate() const {
  std::vector<std::string> problems;
  if (schema_version != 1) {
    problems.push_back("schema_version must be 1");
  }
  if (variables.empty()) problems.push_back("variables: none defined");

  std::set<std::string> names;
  int dependents = 0, regressors_n = 0;
  for (const auto& v : variables) {
    const std::string where = "variable '" + (v.name.empty() ? "<unnamed>" : v.name) + "'";
    if (v.name.empty()) problems.push_back("variable with empty name");
    if (!names.insert(v.name).second) problems.push_back(where + ": duplicate name");
    if (v.role == VariableRole::dependent) ++dependents;
    if (v.role == VariableRole::regressor) ++regressors_n;
    if (v.file.empty() == !v.derive.has_value()) {
      problems.push_back(where + ": needs exactly one of 'file' or 'derive'");
    }
    if (v.derive) {
      if (v.derive->builder != "mdi" && v.derive->builder != "brokerage_cost") {
        problems.push_back(where + ": unknown builder '" + v.derive->builder + "'");
      } else {
        const std::size_t want = v.derive->builder == "mdi" ? 4 : 2;
        if (v.derive->inputs.size() != want) {
          problems.push_back(where + ": builder '" + v.derive->builder + "' needs " +
                             std::to_string(want) + " inputs");
        }
      }
    }
    for (const auto& t : v.transforms) {
      if (!kKnownTransforms.contains(t)) {
        problems.push_back(where + ": unknown transform '" + t + "'");
      }
    }
  }
  // derive inputs must name non-derived variables
  for (const auto& v : variables) {
    if (!v.derive) continue;
    for (const auto& in : v.derive->inputs) {
      bool ok = false;
      for (const auto& other : variables) {
        if (other.name == in && !other.derive) ok = true;
      }
      if (!ok) {
        problems.push_back("variable '" + v.name + "': derive input '" + in +
                           "' is not a file-backed variable");
      }
    }
  }
  if (dependents != 1) {
    problems.push_back("need exactly one dependent variable, have " +
                       std::to_string(dependents));
  }
  if (regressors_n < 1) problems.push_back("need at least one regressor");
  if (levels.empty()) problems.push_back("levels: none given");
  for (double l : levels) {
    if (std::fabs(l - 0.10) > 1e-9 && std::fabs(l - 0.05) > 1e-9 &&
        std::fabs(l - 0.01) > 1e-9) {
      problems.push_back("levels must be drawn from {0.10, 0.05, 0.01}");
    }
  }
  if (max_p < 1) problems.push_back("max_p must be >= 1");
  if (max_q < 0) problems.push_back("max_q must be >= 0");
  if (lm_lags < 1) problems.push_back("lm_lags must be >= 1");
  if (out_dir.empty()) problems.push_back("out_dir must not be empty");

  if (!problems.empty()) {
    std::string msg = "invalid config:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ValidationError(msg);
  }
}

const VariableConfig& StudyConfig::dependent() const {
  for (const auto& v : variables) {
    if (v.role == VariableRole::dependent) return v;
  }
  throw ValidationError("no dependent variable configured");
}

std::vector<const VariableConfig*> StudyConfig::regressors() const {
  std::vector<const VariableConfig*> out;
  for (const auto& v : variables) {
    if (v.role == VariableRole::regressor) out.push_back(&v);
  }
  return out;
}

}  // namespace tsecon
