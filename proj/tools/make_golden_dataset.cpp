// Regenerates the bundled synthetic dataset under data/golden/.
//
// The five series mimic the shape of a quarterly money-demand study on
// 2010Q1..2022Q4 (n = 52).  The dependent level follows an error-correction
// process around four drivers, so the study pipeline finds cointegration:
//
//   mdi_t   : random walk, drift 0.15, sigma 0.25, start near 4      (seed 1001)
//   a_t     : 0.10 + random walk with sigma 5e-4                      (seed 1002)
//   r_t     : AR(0.8) around 3.0, sigma 0.3                           (seed 1003)
//   lngdp_t : 11.5 + 0.022 t + random walk with sigma 0.01            (seed 1004)
//   lnm0_t  : 1.2*0.8 + 0.2 lnm0_{t-1} + 0.8*(theta . x_t) + e(0.01)  (seed 1005)
//             theta = (-0.027, 2.2, -0.046, 0.84)
//
// m0.csv and gdp.csv carry exp() levels so the study config applies the log
// transform; a.csv has two interior gaps so the fill step is exercised.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <vector>

#include "tsecon/csv.hpp"
#include "tsecon/sim.hpp"
#include "tsecon/timeseries.hpp"

using tsecon::Frequency;
using tsecon::Period;
using tsecon::TimeSeries;

int main(int argc, char** argv) {
  const std::filesystem::path out_dir = argc > 1 ? argv[1] : "data/golden";
  std::filesystem::create_directories(out_dir);

  constexpr int n = 52;
  const Period start{2010, 1};

  tsecon::sim::Rng rng_mdi(1001), rng_a(1002), rng_r(1003), rng_gdp(1004), rng_m0(1005);

  std::vector<double> mdi(n), a(n), r(n), lngdp(n), lnm0(n);
  {
    double level = 4.0;
    for (int t = 0; t < n; ++t) {
      level += 0.15 + 0.25 * rng_mdi.normal();
      mdi[t] = level;
    }
  }
  {
    double level = 0.10;
    for (int t = 0; t < n; ++t) {
      level += 5e-4 * rng_a.normal();
      a[t] = level;
    }
  }
  {
    double dev = 0.0;
    for (int t = 0; t < n; ++t) {
      dev = 0.8 * dev + 0.3 * rng_r.normal();
      r[t] = 3.0 + dev;
    }
  }
  {
    double walk = 0.0;
    for (int t = 0; t < n; ++t) {
      walk += 0.01 * rng_gdp.normal();
      lngdp[t] = 11.5 + 0.022 * t + walk;
    }
  }
  {
    const double theta[4] = {-0.027, 2.2, -0.046, 0.84};
    const double lr_intercept = 1.2;
    const double persistence = 0.2;
    auto equilibrium = [&](int t) {
      return lr_intercept + theta[0] * mdi[t] + theta[1] * a[t] + theta[2] * r[t] +
             theta[3] * lngdp[t];
    };
    double prev = equilibrium(0);
    for (int t = 0; t < n; ++t) {
      lnm0[t] = persistence * prev + (1.0 - persistence) * equilibrium(t) +
                0.01 * rng_m0.normal();
      prev = lnm0[t];
    }
  }

  std::vector<double> m0(n), gdp(n);
  for (int t = 0; t < n; ++t) {
    m0[t] = std::exp(lnm0[t]);
    gdp[t] = std::exp(lngdp[t]);
  }
  // interior gaps for the fill step
  a[13] = tsecon::kMissing;
  a[30] = tsecon::kMissing;

  auto write = [&](const char* file, const char* name, const std::vector<double>& v) {
    tsecon::write_series_csv(out_dir / file, TimeSeries(name, Frequency::quarterly, start, v));
    std::cout << "wrote " << (out_dir / file).string() << "\n";
  };
  write("m0.csv", "M0", m0);
  write("mdi.csv", "MDI", mdi);
  write("a.csv", "A", a);
  write("r.csv", "R", r);
  write("gdp.csv", "GDP", gdp);
  return 0;
}
