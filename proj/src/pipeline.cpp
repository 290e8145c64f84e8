#include "tsecon/pipeline.hpp"

#include <functional>
#include <map>

#include "tsecon/csv.hpp"
#include "tsecon/error.hpp"
#include "tsecon/version.hpp"

namespace tsecon {

TimeSeries build_mdi(const TimeSeries& online_payment, const TimeSeries& card_transfer,
                     const TimeSeries& card_consumption, const TimeSeries& gdp) {
  const TimeSeries* parts[] = {&online_payment, &card_transfer, &card_consumption, &gdp};
  for (const TimeSeries* s : parts) {
    if (s->frequency() != Frequency::quarterly) {
      throw ValidationError("build_mdi: series '" + s->name() + "' is " +
                            to_string(s->frequency()) + ", expected quarterly");
    }
    if (s->start() != gdp.start() || s->size() != gdp.size()) {
      throw ValidationError("build_mdi: series '" + s->name() +
                            "' is not aligned with '" + gdp.name() + "'");
    }
  }
  std::vector<double> v(gdp.size());
  for (std::size_t t = 0; t < gdp.size(); ++t) {
    if (is_missing(gdp[t])) {
      throw StatError("build_mdi: gdp missing at " +
                      format_period(gdp.period_at(t), gdp.frequency()));
    }
    if (gdp[t] <= 0.0) {
      throw StatError("build_mdi: gdp must be positive, found " +
                      std::to_string(gdp[t]) + " at " +
                      format_period(gdp.period_at(t), gdp.frequency()));
    }
    v[t] = (online_payment[t] + card_transfer[t] + card_consumption[t]) / gdp[t];
  }
  return TimeSeries("MDI", Frequency::quarterly, gdp.start(), std::move(v));
}

TimeSeries brokerage_conversion_cost(const TimeSeries& commission,
                                     const TimeSeries& stock_volume,
                                     double stamp_duty_rate) {
  if (commission.frequency() != stock_volume.frequency() ||
      commission.start() != stock_volume.start() ||
      commission.size() != stock_volume.size()) {
    throw ValidationError("brokerage_conversion_cost: series are not aligned");
  }
  std::vector<double> v(commission.size());
  for (std::size_t t = 0; t < commission.size(); ++t) {
    if (is_missing(stock_volume[t])) {
      throw StatError("brokerage_conversion_cost: stock volume missing at " +
                      format_period(stock_volume.period_at(t), stock_volume.frequency()));
    }
    if (stock_volume[t] <= 0.0) {
      throw StatError("brokerage_conversion_cost: stock volume must be positive at " +
                      format_period(stock_volume.period_at(t), stock_volume.frequency()));
    }
    v[t] = commission[t] / stock_volume[t] + stamp_duty_rate;
  }
  return TimeSeries("A", commission.frequency(), commission.start(), std::move(v));
}

namespace {

template <class F>
auto stage(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw ValidationError("stage " + name + ": " + e.what());
  } catch (const StatError& e) {
    throw StatError("stage " + name + ": " + e.what());
  } catch (const IoError& e) {
    throw IoError("stage " + name + ": " + e.what());
  }
}

TimeSeries apply_transforms(TimeSeries s, const VariableConfig& v) {
  for (const auto& t : v.transforms) {
    if (t == "fill") {
      s = fill_missing(s);
    } else if (t == "aggregate") {
      s = aggregate_to_quarterly(s, v.aggregation);
    } else if (t == "interpolate") {
      s = interpolate_to_quarterly(s);
    } else if (t == "seasonal_adjust") {
      s = seasonal_adjust(s, v.seasonal_model);
    } else if (t == "log") {
      s = log_transform(s);
    } else {
      throw ValidationError("unknown transform '" + t + "'");  // config.validate() catches this first
    }
  }
  return s.renamed(v.name);
}

}  // namespace

ReportDocument run_study(const StudyConfig& config) {
  config.validate();

  // --- ingest ------------------------------------------------------------
  std::map<std::string, TimeSeries> processed;
  stage("ingest/preprocess", [&] {
    for (const auto& v : config.variables) {
      if (v.derive) continue;
      std::filesystem::path p = v.file;
      if (p.is_relative()) p = config.base_dir / p;
      TimeSeries raw = read_series_csv(p, v.name);
      processed.emplace(v.name, apply_transforms(std::move(raw), v));
    }
    for (const auto& v : config.variables) {
      if (!v.derive) continue;
      std::vector<const TimeSeries*> in;
      for (const auto& name : v.derive->inputs) in.push_back(&processed.at(name));
      TimeSeries built = v.derive->builder == "mdi"
                             ? build_mdi(*in[0], *in[1], *in[2], *in[3])
                             : brokerage_conversion_cost(*in[0], *in[1],
                                                         v.derive->stamp_duty_rate);
      processed.emplace(v.name, apply_transforms(std::move(built), v));
    }
    return 0;
  });

  // --- assemble the study sample -----------------------------------------
  const auto& dep_cfg = config.dependent();
  std::vector<TimeSeries> study;
  study.push_back(processed.at(dep_cfg.name));
  for (const auto* r : config.regressors()) study.push_back(processed.at(r->name));
  for (const auto& s : study) {
    if (s.frequency() != Frequency::quarterly) {
      throw ValidationError("stage ingest/preprocess: variable '" + s.name() +
                            "' is " + to_string(s.frequency()) +
                            " after transforms; the study sample is quarterly");
    }
    if (s.has_missing()) {
      throw StatError("stage ingest/preprocess: variable '" + s.name() +
                      "' still has missing values after transforms");
    }
  }
  study = align(study);

  ReportDocument doc{.tool_version = kToolVersion,
                     .config = config,
                     .order_selection = {},
                     .bounds = {},
                     .long_run = {},
                     .ecm = {.fit = {},
                             .ecm_series = study.front(),
                             .design = {}}};
  doc.frequency = study.front().frequency();
  doc.sample_size = static_cast<int>(study.front().size());
  doc.sample_start = format_period(study.front().start(), doc.frequency);
  doc.sample_end = format_period(study.front().end(), doc.frequency);

  // --- descriptive statistics ---------------------------------------------
  stage("describe", [&] {
    for (const auto& s : study) {
      VariableReport r;
      r.name = s.name();
      r.moments = describe(s);
      r.jb = jarque_bera(r.moments);
      doc.descriptives.push_back(std::move(r));
    }
    return 0;
  });

  // --- integration order ---------------------------------------------------
  stage("unit_root", [&] {
    unitroot::IntegrationPolicy policy;
    policy.level_spec = config.adf.level;
    policy.difference_spec = config.adf.difference;
    for (const auto& s : study) {
      AdfVariableReport r;
      r.name = s.name();
      r.result = unitroot::integration_order(s, policy);
      if (r.result.order == unitroot::IntegrationOrder::higher) {
        throw StatError("variable '" + s.name() +
                        "' is integrated beyond I(1); the bounds test is valid only "
                        "for variables that do not exceed I(1)");
      }
      doc.adf.push_back(std::move(r));
    }
    return 0;
  });

  // --- ARDL ----------------------------------------------------------------
  ardl::ArdlData data = stage("order_selection", [&] {
    std::vector<TimeSeries> regs(study.begin() + 1, study.end());
    return ardl::ArdlData::make(study.front(), std::move(regs));
  });
  stage("order_selection", [&] {
    doc.order_selection = ardl::select_order_sbc(data, config.max_p, config.max_q);
    return 0;
  });

  stage("bounds_test", [&] {
    doc.bounds = ardl::bounds_f_test(data, doc.order_selection.order, config.bounds_case);
    bool any_cointegrated = false;
    for (const auto& row : doc.bounds.rows) {
      for (double level : config.levels) {
        if (std::fabs(row.level - level) < 1e-9 &&
            row.verdict == ardl::BoundsVerdict::cointegrated) {
          any_cointegrated = true;
        }
      }
    }
    doc.conditional_on_cointegration = !any_cointegrated;
    return 0;
  });

  stage("long_run", [&] {
    doc.long_run = ardl::long_run_coefficients(doc.order_selection.fit);
    return 0;
  });

  stage("error_correction", [&] {
    doc.ecm = ardl::fit_ecm(data, doc.order_selection.order, doc.long_run,
                            config.ecm_include_intercept);
    return 0;
  });

  stage("diagnostics", [&] {
    const ardl::ArdlDesign levels =
        ardl::build_ardl_design(data, doc.order_selection.order);
    const OlsFit& fit = doc.order_selection.fit.fit;
    doc.lm = diag::breusch_godfrey(fit, levels.design.X, config.lm_lags);
    doc.ramsey = diag::ramsey_reset(fit, levels.design.X, levels.y);
    doc.dw = fit.dw;
    doc.r2 = fit.r2;
    doc.adj_r2 = fit.adj_r2;
    return 0;
  });

  stage("stability", [&] {
    const Eigen::VectorXd dy = doc.ecm.fit.fitted + doc.ecm.fit.residuals;
    const Eigen::VectorXd w = diag::recursive_residuals(doc.ecm.design.X, dy);
    const std::span<const double> ws(w.data(), static_cast<std::size_t>(w.size()));
    doc.cusum = diag::cusum(ws, doc.ecm.fit.k, 0.05);
    doc.cusumsq = diag::cusumsq(ws, doc.ecm.fit.k, 0.05);
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      doc.stability_periods.push_back(
          doc.ecm.design.periods[static_cast<std::size_t>(doc.ecm.fit.k + i)]);
    }
    return 0;
  });

  return doc;
}

}  // namespace tsecon
