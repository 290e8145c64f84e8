#include "tsecon/period.hpp"

#include <cctype>
#include <charconv>

#include "tsecon/error.hpp"

namespace tsecon {

std::string to_string(Frequency f) {
  switch (f) {
    case Frequency::monthly: return "monthly";
    case Frequency::quarterly: return "quarterly";
    case Frequency::semiannual: return "semiannual";
    case Frequency::annual: return "annual";
  }
  return "?";
}

Frequency frequency_from_string(const std::string& s) {
  if (s == "monthly") return Frequency::monthly;
  if (s == "quarterly") return Frequency::quarterly;
  if (s == "semiannual") return Frequency::semiannual;
  if (s == "annual") return Frequency::annual;
  throw ValidationError("unknown frequency: '" + s + "'");
}

void validate_period(Period p, Frequency f) {
  const int ppy = periods_per_year(f);
  if (p.index < 1 || p.index > ppy) {
    throw ValidationError("period index " + std::to_string(p.index) +
                          " out of range for " + to_string(f) + " frequency");
  }
}

Period advance(Period p, Frequency f, int steps) {
  const int ppy = periods_per_year(f);
  int linear = p.year * ppy + (p.index - 1) + steps;
  Period out;
  // floor division so negative linear positions land in the right year
  out.year = linear >= 0 ? linear / ppy : -((-linear + ppy - 1) / ppy);
  out.index = linear - out.year * ppy + 1;
  return out;
}

int distance(Period from, Period to, Frequency f) {
  const int ppy = periods_per_year(f);
  return (to.year - from.year) * ppy + (to.index - from.index);
}

std::string format_period(Period p, Frequency f) {
  std::string year = std::to_string(p.year);
  switch (f) {
    case Frequency::annual:
      return year;
    case Frequency::semiannual:
      return year + "H" + std::to_string(p.index);
    case Frequency::quarterly:
      return year + "Q" + std::to_string(p.index);
    case Frequency::monthly: {
      std::string m = std::to_string(p.index);
      if (m.size() < 2) m = "0" + m;
      return year + "-" + m;
    }
  }
  return year;
}

namespace {

int parse_int(std::string_view text, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("bad period literal: '" + context + "'");
  }
  return value;
}

}  // namespace

std::pair<Period, Frequency> parse_period(const std::string& text) {
  if (text.size() < 4) throw ValidationError("bad period literal: '" + text + "'");
  for (int i = 0; i < 4; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ValidationError("bad period literal: '" + text + "'");
    }
  }
  const int year = parse_int(std::string_view(text).substr(0, 4), text);
  Period p{year, 1};
  Frequency f = Frequency::annual;
  if (text.size() == 4) {
    return {p, f};
  }
  const char tag = text[4];
  const std::string_view rest = std::string_view(text).substr(5);
  if (rest.empty()) throw ValidationError("bad period literal: '" + text + "'");
  if (tag == 'Q' || tag == 'q') {
    f = Frequency::quarterly;
    p.index = parse_int(rest, text);
  } else if (tag == 'H' || tag == 'h') {
    f = Frequency::semiannual;
    p.index = parse_int(rest, text);
  } else if (tag == '-') {
    f = Frequency::monthly;
    p.index = parse_int(rest, text);
  } else {
    throw ValidationError("bad period literal: '" + text + "'");
  }
  validate_period(p, f);
  return {p, f};
}

}  // namespace tsecon
