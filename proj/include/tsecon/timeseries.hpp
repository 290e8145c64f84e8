#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "tsecon/period.hpp"

namespace tsecon {

/// Marker used for an explicitly missing observation.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

[[nodiscard]] inline bool is_missing(double v) { return std::isnan(v); }

/// Named, frequency-stamped sequence of observations at consecutive periods.
/// The grid itself never has holes; a gap in the data is an explicit
/// kMissing entry.  Immutable after construction.
class TimeSeries {
 public:
  TimeSeries(std::string name, Frequency frequency, Period start,
             std::vector<double> values);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] Frequency frequency() const { return frequency_; }
  [[nodiscard]] Period start() const { return start_; }
  [[nodiscard]] Period end() const;
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

  [[nodiscard]] Period period_at(std::size_t i) const;
  [[nodiscard]] bool contains(Period p) const;
  /// Position of `p` in the sample; throws ValidationError if outside.
  [[nodiscard]] std::size_t index_of(Period p) const;
  [[nodiscard]] double at(Period p) const { return values_[index_of(p)]; }

  [[nodiscard]] bool has_missing() const;
  [[nodiscard]] std::size_t missing_count() const;

  [[nodiscard]] TimeSeries renamed(std::string new_name) const;

 private:
  std::string name_;
  Frequency frequency_;
  Period start_;
  std::vector<double> values_;
};

/// Trims every series to the common period range.  All inputs must share one
/// frequency and actually overlap; throws ValidationError otherwise.
[[nodiscard]] std::vector<TimeSeries> align(const std::vector<TimeSeries>& series);

}  // namespace tsecon
