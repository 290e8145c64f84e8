#include "tsecon/timeseries.hpp"

#include <algorithm>

#include "tsecon/error.hpp"

namespace tsecon {

TimeSeries::TimeSeries(std::string name, Frequency frequency, Period start,
                       std::vector<double> values)
    : name_(std::move(name)),
      frequency_(frequency),
      start_(start),
      values_(std::move(values)) {
  validate_period(start_, frequency_);
  if (values_.empty()) {
    throw ValidationError("series '" + name_ + "' must have at least one value");
  }
}

Period TimeSeries::end() const {
  return advance(start_, frequency_, static_cast<int>(values_.size()) - 1);
}

Period TimeSeries::period_at(std::size_t i) const {
  return advance(start_, frequency_, static_cast<int>(i));
}

bool TimeSeries::contains(Period p) const {
  const int d = distance(start_, p, frequency_);
  return d >= 0 && d < static_cast<int>(values_.size());
}

std::size_t TimeSeries::index_of(Period p) const {
  const int d = distance(start_, p, frequency_);
  if (d < 0 || d >= static_cast<int>(values_.size())) {
    throw ValidationError("period " + format_period(p, frequency_) +
                          " outside the sample of series '" + name_ + "'");
  }
  return static_cast<std::size_t>(d);
}

bool TimeSeries::has_missing() const { return missing_count() > 0; }

std::size_t TimeSeries::missing_count() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), is_missing));
}

TimeSeries TimeSeries::renamed(std::string new_name) const {
  return TimeSeries(std::move(new_name), frequency_, start_, values_);
}

std::vector<TimeSeries> align(const std::vector<TimeSeries>& series) {
  if (series.empty()) throw ValidationError("align: no series given");
  const Frequency f = series.front().frequency();
  Period lo = series.front().start();
  Period hi = series.front().end();
  for (const auto& s : series) {
    if (s.frequency() != f) {
      throw ValidationError("align: series '" + s.name() + "' is " +
                            to_string(s.frequency()) + ", expected " + to_string(f));
    }
    lo = std::max(lo, s.start());
    hi = std::min(hi, s.end());
  }
  if (hi < lo) throw ValidationError("align: series do not overlap");
  const int n = distance(lo, hi, f) + 1;
  std::vector<TimeSeries> out;
  out.reserve(series.size());
  for (const auto& s : series) {
    const std::size_t offset = s.index_of(lo);
    std::vector<double> v(s.values().begin() + static_cast<long>(offset),
                          s.values().begin() + static_cast<long>(offset) + n);
    out.emplace_back(s.name(), f, lo, std::move(v));
  }
  return out;
}

}  // namespace tsecon
