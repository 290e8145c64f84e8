#pragma once

#include <filesystem>
#include <string>

#include "tsecon/timeseries.hpp"

namespace tsecon {

/// Reads a `period,value` CSV.  Period literals: YYYYQn, YYYY-MM, YYYYHn or
/// YYYY; an empty value field or `NA` is a missing observation.  Rows must
/// be consecutive periods of one frequency; a skipped row is an error (gaps
/// must be explicit).  The series takes `name`.
[[nodiscard]] TimeSeries read_series_csv(const std::filesystem::path& path,
                                         const std::string& name);

/// Writes the same layout; values round-trip exactly, missing as empty.
void write_series_csv(const std::filesystem::path& path, const TimeSeries& s);

}  // namespace tsecon
