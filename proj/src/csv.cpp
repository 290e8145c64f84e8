#include "tsecon/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>
#include <vector>

#include "tsecon/error.hpp"

namespace tsecon {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

double parse_value(const std::string& text, const std::filesystem::path& path,
                   int line_no) {
  if (text.empty() || text == "NA") return kMissing;
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw IoError(path.string() + ":" + std::to_string(line_no) +
                  ": bad numeric value '" + text + "'");
  }
  return v;
}

}  // namespace

TimeSeries read_series_csv(const std::filesystem::path& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw IoError(path.string() + ": empty file");
  ++line_no;
  if (strip(line) != "period,value") {
    throw IoError(path.string() + ": expected header 'period,value', got '" +
                  strip(line) + "'");
  }

  std::vector<double> values;
  bool have_start = false;
  Period start{};
  Frequency freq = Frequency::quarterly;
  Period expected{};
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip(line);
    if (text.empty()) continue;
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": expected 'period,value'");
    }
    const std::string period_text = strip(text.substr(0, comma));
    const std::string value_text = strip(text.substr(comma + 1));

    Period p{};
    Frequency f;
    try {
      std::tie(p, f) = parse_period(period_text);
    } catch (const ValidationError& e) {
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!have_start) {
      start = p;
      freq = f;
      expected = p;
      have_start = true;
    } else if (f != freq) {
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": mixed frequencies (" + to_string(f) + " after " +
                    to_string(freq) + ")");
    } else if (p != expected) {
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected period " +
                    format_period(expected, freq) + ", got " + format_period(p, freq) +
                    " (gaps must be written as empty values)");
    }
    values.push_back(parse_value(value_text, path, line_no));
    expected = advance(expected, freq, 1);
  }
  if (!have_start) throw IoError(path.string() + ": no data rows");
  return TimeSeries(name, freq, start, std::move(values));
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& s) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "period,value\n";
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << format_period(s.period_at(i), s.frequency()) << ',';
    const double v = s[i];
    if (!is_missing(v)) {
      const auto res = std::to_chars(buf, buf + sizeof(buf), v);
      out.write(buf, res.ptr - buf);
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace tsecon
