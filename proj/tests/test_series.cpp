#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "tsecon/csv.hpp"
#include "tsecon/error.hpp"
#include "tsecon/series_ops.hpp"
#include "tsecon/sim.hpp"
#include "tsecon/timeseries.hpp"

using namespace tsecon;

namespace {

TimeSeries quarterly(std::vector<double> v, std::string name = "x") {
  return TimeSeries(std::move(name), Frequency::quarterly, Period{2010, 1}, std::move(v));
}

TimeSeries monthly(std::vector<double> v) {
  return TimeSeries("m", Frequency::monthly, Period{2010, 1}, std::move(v));
}

}  // namespace

TEST_CASE("period literals parse and format") {
  auto [q, qf] = parse_period("2010Q3");
  CHECK(qf == Frequency::quarterly);
  CHECK(q == Period{2010, 3});
  auto [m, mf] = parse_period("2011-12");
  CHECK(mf == Frequency::monthly);
  CHECK(m == Period{2011, 12});
  auto [h, hf] = parse_period("2015H2");
  CHECK(hf == Frequency::semiannual);
  CHECK(h == Period{2015, 2});
  auto [y, yf] = parse_period("1999");
  CHECK(yf == Frequency::annual);
  CHECK(y == Period{1999, 1});

  CHECK(format_period(Period{2010, 3}, Frequency::quarterly) == "2010Q3");
  CHECK(format_period(Period{2011, 2}, Frequency::monthly) == "2011-02");
  CHECK_THROWS_AS(parse_period("2010Q5"), ValidationError);
  CHECK_THROWS_AS(parse_period("2010-13"), ValidationError);
  CHECK_THROWS_AS(parse_period("Q1"), ValidationError);
}

TEST_CASE("period arithmetic carries years") {
  CHECK(advance(Period{2010, 4}, Frequency::quarterly, 1) == Period{2011, 1});
  CHECK(advance(Period{2010, 1}, Frequency::quarterly, -1) == Period{2009, 4});
  CHECK(advance(Period{2010, 1}, Frequency::monthly, 25) == Period{2012, 2});
  CHECK(distance(Period{2010, 1}, Period{2012, 2}, Frequency::quarterly) == 9);
}

TEST_CASE("align trims to the common window") {
  const TimeSeries a("a", Frequency::quarterly, Period{2010, 1}, {1, 2, 3, 4, 5});
  const TimeSeries b("b", Frequency::quarterly, Period{2010, 3}, {30, 40, 50, 60});
  const auto aligned = align({a, b});
  CHECK(aligned[0].start() == Period{2010, 3});
  CHECK(aligned[0].size() == 3);
  CHECK(aligned[0][0] == 3);
  CHECK(aligned[1][0] == 30);

  const TimeSeries far("c", Frequency::quarterly, Period{2020, 1}, {1.0});
  CHECK_THROWS_AS(align({a, far}), ValidationError);
}

TEST_CASE("log_transform basics") {
  const auto out = log_transform(quarterly({1, 1, 1}));
  for (double v : out.values()) CHECK(v == 0.0);
  CHECK(out.name() == "LNx");

  const auto e = log_transform(quarterly({std::exp(1.0), std::exp(2.0)}));
  CHECK(e[0] == doctest::Approx(1.0));
  CHECK(e[1] == doctest::Approx(2.0));

  CHECK_THROWS_WITH_AS(log_transform(quarterly({2, 0, 3})),
                       doctest::Contains("2010Q2"), StatError);
  CHECK_THROWS_AS(log_transform(quarterly({1, kMissing, 3})), StatError);
}

TEST_CASE("log of exp returns the original within 1e-12") {
  sim::Rng rng(7);
  std::vector<double> v(40);
  for (auto& x : v) x = rng.normal();
  const auto s = quarterly(v);
  std::vector<double> ev(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) ev[i] = std::exp(v[i]);
  const auto back = log_transform(quarterly(ev));
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(back[i] == doctest::Approx(s[i]).epsilon(1e-12));
  }
}

TEST_CASE("difference basics") {
  const auto d = difference(quarterly({1, 3, 6}));
  CHECK(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 3);
  CHECK(d.start() == Period{2010, 2});

  const auto dc = difference(quarterly({5, 5, 5, 5}));
  for (double v : dc.values()) CHECK(v == 0.0);

  CHECK_THROWS_AS(difference(quarterly({1, 2}), 2), ValidationError);
}

TEST_CASE("difference then cumulative sum round-trips exactly") {
  // integer-valued data keeps every step representable, so the round trip
  // is bit-exact
  sim::Rng rng(11);
  std::vector<double> v(60);
  for (auto& x : v) x = std::floor(rng.normal() * 100.0);
  const auto s = quarterly(v);
  const auto d = difference(s);
  double level = s[0];
  for (std::size_t i = 0; i < d.size(); ++i) {
    level += d[i];
    CHECK(level == s[i + 1]);
  }
}

TEST_CASE("lag shifts values and keeps period alignment") {
  const auto s = quarterly({1, 2, 3});
  const auto l = lag(s, 1);
  CHECK(l.size() == 2);
  CHECK(l.start() == Period{2010, 2});
  CHECK(l.at(Period{2010, 2}) == 1);  // value of s at 2010Q1
  CHECK(l.at(Period{2010, 3}) == 2);

  const auto s2 = quarterly({1, 2, 3, 4, 5});
  const auto twice = lag(lag(s2, 1), 1);
  const auto once = lag(s2, 2);
  CHECK(twice.start() == once.start());
  CHECK(twice.size() == once.size());
  for (std::size_t i = 0; i < twice.size(); ++i) CHECK(twice[i] == once[i]);

  CHECK_THROWS_AS(lag(quarterly({5}), 1), ValidationError);
}

TEST_CASE("fill_missing interpolates interior gaps only") {
  const auto one = fill_missing(quarterly({1, kMissing, 3}));
  CHECK(one[1] == doctest::Approx(2.0));

  const auto two = fill_missing(quarterly({1, kMissing, kMissing, 4}));
  CHECK(two[1] == doctest::Approx(2.0));
  CHECK(two[2] == doctest::Approx(3.0));

  CHECK_THROWS_AS(fill_missing(quarterly({kMissing, 2, 3})), StatError);
  CHECK_THROWS_AS(fill_missing(quarterly({1, 2, kMissing})), StatError);
  CHECK_THROWS_AS(fill_missing(quarterly({kMissing, kMissing})), StatError);
}

TEST_CASE("aggregate_to_quarterly") {
  const auto sum = aggregate_to_quarterly(monthly({1, 2, 3}), AggregationMethod::sum);
  CHECK(sum.size() == 1);
  CHECK(sum[0] == 6);
  CHECK(sum.frequency() == Frequency::quarterly);

  const auto mean = aggregate_to_quarterly(monthly({1, 2, 3}), AggregationMethod::mean);
  CHECK(mean[0] == doctest::Approx(2.0));

  const auto eop =
      aggregate_to_quarterly(monthly({1, 2, 3, 4, 5, 6}), AggregationMethod::end_of_period);
  CHECK(eop[0] == 3);
  CHECK(eop[1] == 6);

  CHECK_THROWS_AS(aggregate_to_quarterly(monthly({1, 2}), AggregationMethod::sum),
                  ValidationError);
  const TimeSeries misaligned("m", Frequency::monthly, Period{2010, 2}, {1, 2, 3});
  CHECK_THROWS_AS(aggregate_to_quarterly(misaligned, AggregationMethod::sum),
                  ValidationError);
}

TEST_CASE("aggregation with sum preserves annual totals") {
  sim::Rng rng(13);
  std::vector<double> months(36);
  for (auto& m : months) m = std::fabs(rng.normal()) + 1.0;
  const auto q = aggregate_to_quarterly(monthly(months), AggregationMethod::sum);
  for (int year = 0; year < 3; ++year) {
    double from_months = 0.0, from_quarters = 0.0;
    for (int m = 0; m < 12; ++m) from_months += months[12 * year + m];
    for (int j = 0; j < 4; ++j) from_quarters += q[4 * year + j];
    CHECK(from_quarters == doctest::Approx(from_months).epsilon(1e-14));
  }
}

TEST_CASE("interpolate_to_quarterly splits half-years") {
  const TimeSeries single("s", Frequency::semiannual, Period{2010, 1}, {10});
  const auto flat = interpolate_to_quarterly(single);
  CHECK(flat.size() == 2);
  CHECK(flat[0] == 5);
  CHECK(flat[1] == 5);
  CHECK(flat.frequency() == Frequency::quarterly);

  // two half-years: linear weighting solved by hand
  const TimeSeries two("s", Frequency::semiannual, Period{2010, 1}, {8, 12});
  const auto q = interpolate_to_quarterly(two);
  CHECK(q[0] == doctest::Approx(3.5));
  CHECK(q[1] == doctest::Approx(4.5));
  CHECK(q[2] == doctest::Approx(5.5));
  CHECK(q[3] == doctest::Approx(6.5));
}

TEST_CASE("interpolation preserves half-year sums for random inputs") {
  sim::Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> v(8);
    for (auto& x : v) x = rng.normal() * 10.0;
    const TimeSeries s("s", Frequency::semiannual, Period{2000, 1}, v);
    const auto q = interpolate_to_quarterly(s);
    REQUIRE(q.size() == 2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(q[2 * i] + q[2 * i + 1] == doctest::Approx(v[i]).epsilon(1e-12));
    }
  }
  // exact recovery of a linear quarterly path
  const TimeSeries sums("s", Frequency::semiannual, Period{2000, 1}, {3, 7, 11});
  const auto q = interpolate_to_quarterly(sums);
  for (std::size_t i = 0; i < q.size(); ++i) {
    CHECK(q[i] == doctest::Approx(static_cast<double>(i + 1)).epsilon(1e-12));
  }
}

TEST_CASE("seasonal_adjust leaves a constant series unchanged") {
  const auto out = seasonal_adjust(quarterly(std::vector<double>(12, 4.5)),
                                   SeasonalModel::additive);
  for (double v : out.values()) CHECK(v == doctest::Approx(4.5).epsilon(1e-9));
}

TEST_CASE("seasonal_adjust recovers a linear trend under a fixed pattern") {
  const double pattern[4] = {1, -1, 2, -2};
  std::vector<double> v(24);
  for (std::size_t t = 0; t < v.size(); ++t) {
    v[t] = 3.0 + 0.5 * static_cast<double>(t) + pattern[t % 4];
  }
  const auto out = seasonal_adjust(quarterly(v), SeasonalModel::additive);
  REQUIRE(out.size() == v.size());
  for (std::size_t t = 2; t + 2 < v.size(); ++t) {
    CHECK(out[t] == doctest::Approx(3.0 + 0.5 * static_cast<double>(t)).epsilon(1e-6));
  }
}

TEST_CASE("seasonal_adjust rejects short and non-positive input") {
  CHECK_THROWS_AS(seasonal_adjust(quarterly({1, 2, 3, 4, 5}), SeasonalModel::additive),
                  StatError);
  std::vector<double> v(12, 2.0);
  v[5] = -1.0;
  CHECK_THROWS_AS(seasonal_adjust(quarterly(v), SeasonalModel::multiplicative), StatError);
}

TEST_CASE("seasonal_adjust (additive) preserves the mean over whole cycles") {
  sim::Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<double> v(16);
    const double s1 = rng.normal(), s2 = rng.normal(), s3 = rng.normal();
    for (std::size_t t = 0; t < v.size(); ++t) {
      const double season[4] = {s1, s2, s3, -(s1 + s2 + s3)};
      v[t] = 10.0 + 0.3 * static_cast<double>(t) + season[t % 4] + 0.1 * rng.normal();
    }
    const auto s = quarterly(v);
    const auto out = seasonal_adjust(s, SeasonalModel::additive);
    const double mean_in = describe(s).mean;
    const double mean_out = describe(out).mean;
    CHECK(mean_out == doctest::Approx(mean_in).epsilon(1e-9));
  }
}

TEST_CASE("describe basics") {
  const auto m = describe(quarterly({1, 2, 3, 4}));
  CHECK(m.mean == doctest::Approx(2.5));
  CHECK(m.median == doctest::Approx(2.5));
  CHECK(m.max == 4);
  CHECK(m.min == 1);

  const auto sym = describe(quarterly({-1, 0, 1}));
  CHECK(sym.skewness == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sym.median == 0);
}

TEST_CASE("describe moments with divisor n, hand computation") {
  // values (0,0,0,10): m2 = 18.75, m3 = 93.75, m4 = 820.3125
  const auto m = describe(quarterly({0, 0, 0, 10}));
  CHECK(m.std_dev == doctest::Approx(std::sqrt(18.75)).epsilon(1e-14));
  CHECK(m.skewness == doctest::Approx(93.75 / std::pow(18.75, 1.5)).epsilon(1e-14));
  CHECK(m.skewness == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(m.kurtosis == doctest::Approx(820.3125 / (18.75 * 18.75)).epsilon(1e-14));
  CHECK(m.kurtosis == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("describe flags a constant sample") {
  const auto m = describe(quarterly({2, 2, 2, 2}));
  CHECK(m.std_dev == 0.0);
  CHECK(std::isnan(m.skewness));
  CHECK(std::isnan(m.kurtosis));
  CHECK_THROWS_AS(jarque_bera(m), StatError);
}

TEST_CASE("jarque_bera reproduces the published moment rows (n = 52)") {
  struct Row {
    double s, k, jb, p;
  };
  // skewness, kurtosis, JB, p for LNGDP / LNM0 / A / MDI / r
  const Row rows[] = {
      {-0.1955, 1.9846, 2.5650, 0.2773}, {-0.1908, 2.4220, 1.0394, 0.5947},
      {1.0245, 3.8044, 10.499, 0.0052},  {-0.2365, 1.3565, 6.3367, 0.0421},
      {0.3057, 2.4024, 1.5837, 0.4530},
  };
  for (const auto& row : rows) {
    const auto jb = jarque_bera(row.s, row.k, 52);
    CHECK(std::fabs(jb.stat - row.jb) < 0.01);
    CHECK(std::fabs(jb.p_value - row.p) < 5e-4);
  }
}

TEST_CASE("jarque_bera identities") {
  const auto zero = jarque_bera(0.0, 3.0, 52);
  CHECK(zero.stat == 0.0);
  CHECK(zero.p_value == 1.0);

  sim::Rng rng(37);
  for (int i = 0; i < 25; ++i) {
    const double s = rng.normal();
    const double k = 3.0 + rng.normal();
    const auto a = jarque_bera(s, k, 52);
    const auto b = jarque_bera(-s, k, 52);
    CHECK(a.stat == doctest::Approx(b.stat).epsilon(1e-14));
    if (s != 0.0 || k != 3.0) CHECK(a.stat > 0.0);
  }
  CHECK_THROWS_AS(jarque_bera(0.1, 3.0, 2), ValidationError);
}

TEST_CASE("csv round trip with missing values") {
  const auto dir = std::filesystem::temp_directory_path() / "tsecon_csv_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "series.csv";

  TimeSeries s("x", Frequency::quarterly, Period{2010, 1},
               {1.5, kMissing, 0.1234567890123456789, -3.25});
  write_series_csv(file, s);
  const auto back = read_series_csv(file, "x");
  REQUIRE(back.size() == s.size());
  CHECK(back.start() == s.start());
  CHECK(back[0] == s[0]);
  CHECK(is_missing(back[1]));
  CHECK(back[2] == s[2]);  // exact: shortest round-trip formatting
  CHECK(back[3] == s[3]);
}

TEST_CASE("csv rejects malformed input") {
  const auto dir = std::filesystem::temp_directory_path() / "tsecon_csv_test";
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const char* content) {
    const auto p = dir / name;
    std::ofstream out(p);
    out << content;
    return p;
  };

  CHECK_THROWS_AS(read_series_csv(write("h.csv", "time,value\n2010Q1,1\n"), "x"), IoError);
  CHECK_THROWS_AS(read_series_csv(write("gap.csv", "period,value\n2010Q1,1\n2010Q3,2\n"), "x"),
                  IoError);
  CHECK_THROWS_AS(read_series_csv(write("mix.csv", "period,value\n2010Q1,1\n2010-05,2\n"), "x"),
                  IoError);
  CHECK_THROWS_AS(read_series_csv(write("bad.csv", "period,value\n2010Q1,abc\n"), "x"),
                  IoError);
  CHECK_THROWS_AS(read_series_csv(write("empty.csv", "period,value\n"), "x"), IoError);
  CHECK_THROWS_AS(read_series_csv(dir / "does_not_exist.csv", "x"), IoError);

  // NA and empty both mean missing
  const auto na = read_series_csv(write("na.csv", "period,value\n2010Q1,1\n2010Q2,NA\n2010Q3,\n2010Q4,4\n"), "x");
  CHECK(is_missing(na[1]));
  CHECK(is_missing(na[2]));
}
