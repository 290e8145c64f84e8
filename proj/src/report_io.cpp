#include "tsecon/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "tsecon/error.hpp"

namespace tsecon {

namespace {

// ---------------------------------------------------------------------------
// Minimal deterministic JSON emitter
// ---------------------------------------------------------------------------

class JsonWriter {
 public:
  std::string take() && { return std::move(out_); }

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const char* name) {
    comma();
    write_string(name);
    out_ += ':';
    pending_value_ = true;
  }

  void value(const std::string& s) {
    comma();
    write_string(s);
  }
  void value(const char* s) { value(std::string(s)); }
  void value(bool b) {
    comma();
    out_ += b ? "true" : "false";
  }
  void value(int v) { value(static_cast<long long>(v)); }
  void value(std::size_t v) { value(static_cast<unsigned long long>(v)); }
  void value(long long v) {
    comma();
    out_ += std::to_string(v);
  }
  void value(unsigned long long v) {
    comma();
    out_ += std::to_string(v);
  }
  void value(double v) {
    comma();
    if (!std::isfinite(v)) {
      out_ += "null";
      return;
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    out_.append(buf, res.ptr);
  }
  void null() {
    comma();
    out_ += "null";
  }

 private:
  void open(char c) {
    comma();
    out_ += c;
    first_in_scope_ = true;
  }
  void close(char c) {
    out_ += c;
    first_in_scope_ = false;
  }
  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!first_in_scope_ && !out_.empty() && out_.back() != '{' && out_.back() != '[') {
      out_ += ',';
    }
    first_in_scope_ = false;
  }
  void write_string(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\r': out_ += "\\r"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  bool first_in_scope_ = true;
  bool pending_value_ = false;
};

void write_adf_spec(JsonWriter& w, const unitroot::AdfSpec& spec) {
  w.begin_object();
  w.key("deterministics");
  w.value(unitroot::to_string(spec.deterministics));
  w.key("lags");
  if (spec.lags) {
    w.value(*spec.lags);
  } else {
    w.null();
  }
  w.end_object();
}

void write_config(JsonWriter& w, const StudyConfig& cfg) {
  w.begin_object();
  w.key("schema_version");
  w.value(cfg.schema_version);
  w.key("variables");
  w.begin_array();
  for (const auto& v : cfg.variables) {
    w.begin_object();
    w.key("name");
    w.value(v.name);
    w.key("role");
    w.value(to_string(v.role));
    if (v.derive) {
      w.key("derive");
      w.begin_object();
      w.key("builder");
      w.value(v.derive->builder);
      w.key("inputs");
      w.begin_array();
      for (const auto& in : v.derive->inputs) w.value(in);
      w.end_array();
      w.key("stamp_duty_rate");
      w.value(v.derive->stamp_duty_rate);
      w.end_object();
    } else {
      w.key("file");
      w.value(v.file);
    }
    w.key("aggregation");
    w.value(to_string(v.aggregation));
    w.key("seasonal_model");
    w.value(v.seasonal_model == SeasonalModel::additive ? "additive" : "multiplicative");
    w.key("transforms");
    w.begin_array();
    for (const auto& t : v.transforms) w.value(t);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.key("max_p");
  w.value(cfg.max_p);
  w.key("max_q");
  w.value(cfg.max_q);
  w.key("bounds_case");
  w.value(ardl::to_string(cfg.bounds_case));
  w.key("levels");
  w.begin_array();
  for (double l : cfg.levels) w.value(l);
  w.end_array();
  w.key("ecm_include_intercept");
  w.value(cfg.ecm_include_intercept);
  w.key("lm_lags");
  w.value(cfg.lm_lags);
  w.key("adf");
  w.begin_object();
  w.key("level");
  write_adf_spec(w, cfg.adf.level);
  w.key("difference");
  write_adf_spec(w, cfg.adf.difference);
  w.end_object();
  w.key("seed");
  w.value(static_cast<unsigned long long>(cfg.seed));
  w.key("out_dir");
  w.value(cfg.out_dir);
  w.end_object();
}

void write_adf_result(JsonWriter& w, const unitroot::AdfResult& r) {
  w.begin_object();
  w.key("spec");
  w.value(r.spec_string());
  w.key("t_stat");
  w.value(r.t_stat);
  w.key("approx_p");
  w.value(r.approx_p);
  w.key("cv_1pct");
  w.value(r.critical_values.at_1pct);
  w.key("cv_5pct");
  w.value(r.critical_values.at_5pct);
  w.key("cv_10pct");
  w.value(r.critical_values.at_10pct);
  w.key("lags");
  w.value(r.lags_used);
  w.key("n_used");
  w.value(r.n_used);
  w.key("rejects_at_5pct");
  w.value(r.rejects_at(0.05));
  w.end_object();
}

void write_coefficient_row(JsonWriter& w, const std::string& name, double est,
                           double se, double t, double p) {
  w.begin_object();
  w.key("name");
  w.value(name);
  w.key("estimate");
  w.value(est);
  w.key("std_error");
  w.value(se);
  w.key("t_stat");
  w.value(t);
  w.key("p_value");
  w.value(p);
  w.end_object();
}

void write_stability(JsonWriter& w, const diag::StabilityPath& path,
                     const std::vector<Period>& periods, Frequency freq,
                     bool with_clamp_flag) {
  w.begin_object();
  w.key("stable");
  w.value(path.stable);
  if (with_clamp_flag) {
    w.key("band_clamped");
    w.value(path.band_clamped);
  }
  w.key("points");
  w.begin_array();
  for (std::size_t i = 0; i < path.path.size(); ++i) {
    w.begin_object();
    w.key("period");
    w.value(format_period(periods[i], freq));
    w.key("path");
    w.value(path.path[i]);
    w.key("lower");
    w.value(path.lower[i]);
    w.key("upper");
    w.value(path.upper[i]);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

// fixed-precision helper for the text report; never locale-dependent for
// the digits we use
std::string fixed(double v, int digits) {
  if (!std::isfinite(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_report_json(const ReportDocument& doc) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version");
  w.value(1);

  w.key("provenance");
  w.begin_object();
  w.key("tool");
  w.value("tsecon");
  w.key("version");
  w.value(doc.tool_version);
  w.key("sample");
  w.begin_object();
  w.key("start");
  w.value(doc.sample_start);
  w.key("end");
  w.value(doc.sample_end);
  w.key("size");
  w.value(doc.sample_size);
  w.key("frequency");
  w.value(to_string(doc.frequency));
  w.end_object();
  w.key("config");
  write_config(w, doc.config);
  w.end_object();

  w.key("descriptives");
  w.begin_array();
  for (const auto& d : doc.descriptives) {
    w.begin_object();
    w.key("name");
    w.value(d.name);
    w.key("n");
    w.value(d.moments.n);
    w.key("mean");
    w.value(d.moments.mean);
    w.key("median");
    w.value(d.moments.median);
    w.key("max");
    w.value(d.moments.max);
    w.key("min");
    w.value(d.moments.min);
    w.key("std");
    w.value(d.moments.std_dev);
    w.key("skewness");
    w.value(d.moments.skewness);
    w.key("kurtosis");
    w.value(d.moments.kurtosis);
    w.key("jb_stat");
    w.value(d.jb.stat);
    w.key("jb_p");
    w.value(d.jb.p_value);
    w.end_object();
  }
  w.end_array();

  w.key("unit_root");
  w.begin_array();
  for (const auto& a : doc.adf) {
    w.begin_object();
    w.key("name");
    w.value(a.name);
    w.key("order");
    w.value(unitroot::to_string(a.result.order));
    w.key("level");
    write_adf_result(w, a.result.level);
    w.key("difference");
    if (a.result.difference) {
      write_adf_result(w, *a.result.difference);
    } else {
      w.null();
    }
    w.end_object();
  }
  w.end_array();

  w.key("order_selection");
  w.begin_object();
  w.key("order");
  w.value(doc.order_selection.order.to_string());
  w.key("p");
  w.value(doc.order_selection.order.p);
  w.key("q");
  w.begin_array();
  for (int qj : doc.order_selection.order.q) w.value(qj);
  w.end_array();
  w.key("candidates");
  w.begin_array();
  for (const auto& c : doc.order_selection.criterion_table) {
    w.begin_object();
    w.key("order");
    w.value(c.order.to_string());
    w.key("sbc");
    w.value(c.sbc);
    w.end_object();
  }
  w.end_array();
  w.end_object();

  w.key("bounds");
  w.begin_object();
  w.key("f_stat");
  w.value(doc.bounds.f_stat);
  w.key("k");
  w.value(doc.bounds.k);
  w.key("case");
  w.value(ardl::to_string(doc.bounds.critical_case));
  w.key("rows");
  w.begin_array();
  for (const auto& row : doc.bounds.rows) {
    w.begin_object();
    w.key("level");
    w.value(row.level);
    w.key("lower");
    w.value(row.bounds.lower);
    w.key("upper");
    w.value(row.bounds.upper);
    w.key("verdict");
    w.value(ardl::to_string(row.verdict));
    w.end_object();
  }
  w.end_array();
  w.end_object();

  w.key("long_run");
  w.begin_object();
  w.key("conditional_on_cointegration");
  w.value(doc.conditional_on_cointegration);
  w.key("coefficients");
  w.begin_array();
  for (std::size_t j = 0; j < doc.long_run.names.size(); ++j) {
    const auto i = static_cast<Eigen::Index>(j);
    write_coefficient_row(w, doc.long_run.names[j], doc.long_run.theta[i],
                          doc.long_run.standard_errors[i], doc.long_run.t_stats[i],
                          doc.long_run.p_values[i]);
  }
  w.end_array();
  w.key("intercept");
  write_coefficient_row(w, "const", doc.long_run.intercept, doc.long_run.intercept_se,
                        doc.long_run.intercept_t, doc.long_run.intercept_p);
  w.end_object();

  w.key("error_correction");
  w.begin_object();
  w.key("include_intercept");
  w.value(doc.config.ecm_include_intercept);
  w.key("coefficients");
  w.begin_array();
  for (std::size_t j = 0; j < doc.ecm.fit.labels.size(); ++j) {
    const auto i = static_cast<Eigen::Index>(j);
    write_coefficient_row(w, doc.ecm.fit.labels[j], doc.ecm.fit.coefficients[i],
                          doc.ecm.fit.standard_errors[i], doc.ecm.fit.t_stats[i],
                          doc.ecm.fit.p_values[i]);
  }
  w.end_array();
  w.key("lambda");
  w.value(doc.ecm.lambda);
  w.key("lambda_p");
  w.value(doc.ecm.lambda_p);
  w.key("adjustment_speed");
  w.value(doc.ecm.adjustment_speed);
  w.key("lambda_in_stable_range");
  w.value(doc.ecm.lambda_in_stable_range);
  w.end_object();

  w.key("diagnostics");
  w.begin_object();
  w.key("lm");
  w.begin_object();
  w.key("stat");
  w.value(doc.lm.stat);
  w.key("p_value");
  w.value(doc.lm.p_value);
  w.key("dof");
  w.value(doc.lm.dof_note);
  w.end_object();
  w.key("ramsey");
  w.begin_object();
  w.key("stat");
  w.value(doc.ramsey.stat);
  w.key("p_value");
  w.value(doc.ramsey.p_value);
  w.key("dof");
  w.value(doc.ramsey.dof_note);
  w.end_object();
  w.key("dw");
  w.value(doc.dw);
  w.key("r2");
  w.value(doc.r2);
  w.key("adj_r2");
  w.value(doc.adj_r2);
  w.end_object();

  w.key("stability");
  w.begin_object();
  w.key("cusum");
  write_stability(w, doc.cusum, doc.stability_periods, doc.frequency, false);
  w.key("cusumsq");
  write_stability(w, doc.cusumsq, doc.stability_periods, doc.frequency, true);
  w.end_object();

  w.end_object();
  std::string text = std::move(w).take();
  text += '\n';
  return text;
}

std::string render_report_text(const ReportDocument& doc) {
  std::string t;
  auto line = [&](const std::string& s = "") {
    t += s;
    t += '\n';
  };

  line("tsecon study report (v" + doc.tool_version + ")");
  line("==============================================================");
  line();
  line("Sample: " + doc.sample_start + " .. " + doc.sample_end + "  (n = " +
       std::to_string(doc.sample_size) + ", " + to_string(doc.frequency) + ")");
  line();

  line("[1] Descriptive statistics");
  line(pad("variable", 10) + lpad("mean", 10) + lpad("median", 10) + lpad("max", 10) +
       lpad("min", 10) + lpad("std", 10) + lpad("skew", 9) + lpad("kurt", 9) +
       lpad("JB", 9) + lpad("p", 8));
  for (const auto& d : doc.descriptives) {
    line(pad(d.name, 10) + lpad(fixed(d.moments.mean, 4), 10) +
         lpad(fixed(d.moments.median, 4), 10) + lpad(fixed(d.moments.max, 4), 10) +
         lpad(fixed(d.moments.min, 4), 10) + lpad(fixed(d.moments.std_dev, 4), 10) +
         lpad(fixed(d.moments.skewness, 4), 9) + lpad(fixed(d.moments.kurtosis, 4), 9) +
         lpad(fixed(d.jb.stat, 4), 9) + lpad(fixed(d.jb.p_value, 4), 8));
  }
  line();

  line("[2] Unit-root classification (ADF)");
  line(pad("variable", 10) + pad("form", 10) + lpad("t", 10) + lpad("p~", 8) +
       lpad("cv 5%", 9) + "   verdict");
  for (const auto& a : doc.adf) {
    const auto& lv = a.result.level;
    line(pad(a.name, 10) + pad(lv.spec_string(), 10) + lpad(fixed(lv.t_stat, 4), 10) +
         lpad(fixed(lv.approx_p, 4), 8) + lpad(fixed(lv.critical_values.at_5pct, 4), 9) +
         "   " + (lv.rejects_at(0.05) ? "stationary" : "unit root"));
    if (a.result.difference) {
      const auto& dv = *a.result.difference;
      line(pad("  D" + a.name, 10) + pad(dv.spec_string(), 10) +
           lpad(fixed(dv.t_stat, 4), 10) + lpad(fixed(dv.approx_p, 4), 8) +
           lpad(fixed(dv.critical_values.at_5pct, 4), 9) + "   " +
           (dv.rejects_at(0.05) ? "stationary" : "unit root"));
    }
    line(pad("", 10) + "=> " + unitroot::to_string(a.result.order));
  }
  line();

  line("[3] Bounds cointegration test");
  line("ARDL order " + doc.order_selection.order.to_string() + " by SBC; case " +
       ardl::to_string(doc.bounds.critical_case) + ", k = " +
       std::to_string(doc.bounds.k));
  line("F = " + fixed(doc.bounds.f_stat, 4));
  line(pad("level", 8) + lpad("I(0)", 8) + lpad("I(1)", 8) + "   verdict");
  for (const auto& row : doc.bounds.rows) {
    line(pad(fixed(row.level * 100.0, 0) + "%", 8) + lpad(fixed(row.bounds.lower, 2), 8) +
         lpad(fixed(row.bounds.upper, 2), 8) + "   " + ardl::to_string(row.verdict));
  }
  if (doc.conditional_on_cointegration) {
    line("warning: no clear cointegration at the configured levels; long-run");
    line("         estimates below are conditional on cointegration");
  }
  line();

  auto coef_table = [&](const std::string& title, const std::vector<std::string>& names,
                        auto est, auto se, auto ts, auto ps) {
    line(title);
    line(pad("name", 14) + lpad("coef", 12) + lpad("std err", 12) + lpad("t", 10) +
         lpad("p", 8));
    for (std::size_t j = 0; j < names.size(); ++j) {
      line(pad(names[j], 14) + lpad(fixed(est(j), 5), 12) + lpad(fixed(se(j), 5), 12) +
           lpad(fixed(ts(j), 4), 10) + lpad(fixed(ps(j), 4), 8));
    }
  };

  {
    std::vector<std::string> names = doc.long_run.names;
    names.push_back("const");
    coef_table(
        "[4] Long-run coefficients", names,
        [&](std::size_t j) {
          return j < doc.long_run.names.size()
                     ? doc.long_run.theta[static_cast<Eigen::Index>(j)]
                     : doc.long_run.intercept;
        },
        [&](std::size_t j) {
          return j < doc.long_run.names.size()
                     ? doc.long_run.standard_errors[static_cast<Eigen::Index>(j)]
                     : doc.long_run.intercept_se;
        },
        [&](std::size_t j) {
          return j < doc.long_run.names.size()
                     ? doc.long_run.t_stats[static_cast<Eigen::Index>(j)]
                     : doc.long_run.intercept_t;
        },
        [&](std::size_t j) {
          return j < doc.long_run.names.size()
                     ? doc.long_run.p_values[static_cast<Eigen::Index>(j)]
                     : doc.long_run.intercept_p;
        });
  }
  line();

  coef_table(
      "[5] Error-correction model (short run)", doc.ecm.fit.labels,
      [&](std::size_t j) { return doc.ecm.fit.coefficients[static_cast<Eigen::Index>(j)]; },
      [&](std::size_t j) {
        return doc.ecm.fit.standard_errors[static_cast<Eigen::Index>(j)];
      },
      [&](std::size_t j) { return doc.ecm.fit.t_stats[static_cast<Eigen::Index>(j)]; },
      [&](std::size_t j) { return doc.ecm.fit.p_values[static_cast<Eigen::Index>(j)]; });
  line("adjustment speed: " + fixed(doc.ecm.adjustment_speed * 100.0, 2) +
       "% per period" + (doc.ecm.lambda_in_stable_range ? "" : "  [outside (0,1)]"));
  line();

  line("[6] Diagnostics (levels ARDL regression)");
  line("LM " + doc.lm.dof_note + " = " + fixed(doc.lm.stat, 4) + " [" +
       fixed(doc.lm.p_value, 4) + "]   Ramsey " + doc.ramsey.dof_note + " = " +
       fixed(doc.ramsey.stat, 4) + " [" + fixed(doc.ramsey.p_value, 4) + "]");
  line("DW = " + fixed(doc.dw, 4) + "   R2 = " + fixed(doc.r2, 5) +
       "   adj R2 = " + fixed(doc.adj_r2, 5));
  line();

  line("[7] Stability (recursive residuals of the ECM equation, 5% bands)");
  line(std::string("CUSUM:   ") + (doc.cusum.stable ? "stable" : "NOT stable"));
  line(std::string("CUSUMSQ: ") + (doc.cusumsq.stable ? "stable" : "NOT stable"));
  return t;
}

namespace {

void write_path_csv(const std::filesystem::path& file, const diag::StabilityPath& p,
                    const std::vector<Period>& periods, Frequency freq) {
  std::ofstream out(file);
  if (!out) throw IoError("cannot write " + file.string());
  out << "period,path,lower,upper\n";
  char buf[64];
  auto emit = [&](double v) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, res.ptr - buf);
  };
  for (std::size_t i = 0; i < p.path.size(); ++i) {
    out << format_period(periods[i], freq) << ',';
    emit(p.path[i]);
    out << ',';
    emit(p.lower[i]);
    out << ',';
    emit(p.upper[i]);
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + file.string());
}

}  // namespace

void emit_report(const ReportDocument& doc, const std::filesystem::path& out_dir) {
  // internal consistency: the emitted verdicts must equal the decision rule
  // applied to the emitted F and bounds
  for (const auto& row : doc.bounds.rows) {
    if (ardl::bounds_verdict(doc.bounds.f_stat, row.bounds) != row.verdict) {
      throw StatError("emit_report: bounds verdict inconsistent with its own F and "
                      "critical values");
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  auto write_file = [&](const char* name, const std::string& content) {
    const auto path = out_dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("write failed for " + path.string());
  };
  write_file("report.json", render_report_json(doc));
  write_file("report.txt", render_report_text(doc));
  write_path_csv(out_dir / "cusum.csv", doc.cusum, doc.stability_periods, doc.frequency);
  write_path_csv(out_dir / "cusumsq.csv", doc.cusumsq, doc.stability_periods,
                 doc.frequency);
}

void inspect_report(const std::filesystem::path& json_path, std::ostream& out) {
  std::ifstream in(json_path);
  if (!in) throw IoError("cannot open " + json_path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(json_path.string() + " is not a valid report: " + e.what());
  }
  try {
    out << "report " << json_path.string() << "\n";
    out << "  tool: " << j.at("provenance").at("tool").get<std::string>() << " v"
        << j.at("provenance").at("version").get<std::string>() << "\n";
    const auto& sample = j.at("provenance").at("sample");
    out << "  sample: " << sample.at("start").get<std::string>() << " .. "
        << sample.at("end").get<std::string>() << " (n=" << sample.at("size").get<int>()
        << ")\n";
    out << "  variables: " << j.at("descriptives").size() << "\n";
    out << "  ardl order: " << j.at("order_selection").at("order").get<std::string>()
        << "\n";
    const auto& bounds = j.at("bounds");
    out << "  bounds F = " << bounds.at("f_stat").get<double>() << " (case "
        << bounds.at("case").get<std::string>() << ")\n";
    for (const auto& row : bounds.at("rows")) {
      out << "    " << row.at("level").get<double>() * 100 << "%: "
          << row.at("verdict").get<std::string>() << "\n";
    }
    out << "  lambda = " << j.at("error_correction").at("lambda").get<double>()
        << " (adjustment speed "
        << j.at("error_correction").at("adjustment_speed").get<double>() * 100
        << "% per period)\n";
    out << "  stability: cusum "
        << (j.at("stability").at("cusum").at("stable").get<bool>() ? "stable"
                                                                   : "NOT stable")
        << ", cusumsq "
        << (j.at("stability").at("cusumsq").at("stable").get<bool>() ? "stable"
                                                                     : "NOT stable")
        << "\n";
  } catch (const nlohmann::json::exception& e) {
    throw IoError(json_path.string() + ": missing report fields: " + e.what());
  }
}

}  // namespace tsecon
