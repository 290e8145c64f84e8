#pragma once

#include <compare>
#include <string>
#include <utility>

namespace tsecon {

enum class Frequency { monthly, quarterly, semiannual, annual };

[[nodiscard]] constexpr int periods_per_year(Frequency f) {
  switch (f) {
    case Frequency::monthly: return 12;
    case Frequency::quarterly: return 4;
    case Frequency::semiannual: return 2;
    case Frequency::annual: return 1;
  }
  return 0;
}

[[nodiscard]] std::string to_string(Frequency f);
[[nodiscard]] Frequency frequency_from_string(const std::string& s);

/// One point on a sampling grid: calendar year plus 1-based position within
/// the year.  Ordering is (year, index) lexicographic.
struct Period {
  int year = 0;
  int index = 1;

  friend constexpr auto operator<=>(const Period&, const Period&) = default;
};

/// Throws ValidationError unless 1 <= p.index <= periods_per_year(f).
void validate_period(Period p, Frequency f);

/// Moves `p` by `steps` grid positions (may be negative).
[[nodiscard]] Period advance(Period p, Frequency f, int steps);

/// Number of grid steps from `from` to `to` (negative if `to` precedes `from`).
[[nodiscard]] int distance(Period from, Period to, Frequency f);

/// "2010Q1" (quarterly), "2010-03" (monthly), "2010H2" (semiannual),
/// "2010" (annual).
[[nodiscard]] std::string format_period(Period p, Frequency f);

/// Parses any of the literal forms above; returns the period together with
/// the frequency the literal implies.  Throws ValidationError on malformed
/// or out-of-range input.
[[nodiscard]] std::pair<Period, Frequency> parse_period(const std::string& text);

}  // namespace tsecon
