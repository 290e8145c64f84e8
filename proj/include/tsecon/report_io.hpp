#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tsecon/pipeline.hpp"

namespace tsecon {

/// Deterministic serializations: fixed key order, floats at 17 significant
/// digits via locale-independent formatting, so identical inputs give
/// byte-identical files.
[[nodiscard]] std::string render_report_json(const ReportDocument& doc);
[[nodiscard]] std::string render_report_text(const ReportDocument& doc);

/// Writes report.json, report.txt, cusum.csv and cusumsq.csv into out_dir
/// (created if needed).  Re-checks the bounds verdicts against the printed
/// F and critical values before writing.
void emit_report(const ReportDocument& doc, const std::filesystem::path& out_dir);

/// Summarizes a previously emitted report.json.
void inspect_report(const std::filesystem::path& json_path, std::ostream& out);

}  // namespace tsecon
