// Compares the serial and OpenMP paths of the two replication-heavy kernels:
// the SBC order-search grid and Monte Carlo ADF batteries.  Results must be
// identical; only the wall time differs.

#include <chrono>
#include <cstdio>
#include <vector>

#include "tsecon/ardl.hpp"
#include "tsecon/parallel.hpp"
#include "tsecon/sim.hpp"
#include "tsecon/timeseries.hpp"
#include "tsecon/unitroot.hpp"

using tsecon::Frequency;
using tsecon::Period;
using tsecon::TimeSeries;
using tsecon::par::Exec;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

tsecon::ardl::ArdlData make_grid_data(int n, int k, std::uint64_t seed) {
  tsecon::sim::Rng rng(seed);
  std::vector<TimeSeries> xs;
  std::vector<std::vector<double>> x_values;
  for (int j = 0; j < k; ++j) {
    x_values.push_back(tsecon::sim::random_walk(n, rng));
  }
  std::vector<double> y(static_cast<std::size_t>(n));
  double prev = 0.0;
  for (int t = 0; t < n; ++t) {
    double driver = 0.0;
    for (int j = 0; j < k; ++j) driver += 0.3 * x_values[static_cast<std::size_t>(j)][t];
    prev = 0.5 * prev + driver + rng.normal();
    y[static_cast<std::size_t>(t)] = prev;
  }
  const Period start{2000, 1};
  for (int j = 0; j < k; ++j) {
    xs.emplace_back("x" + std::to_string(j), Frequency::quarterly, start,
                    x_values[static_cast<std::size_t>(j)]);
  }
  return tsecon::ardl::ArdlData::make(TimeSeries("y", Frequency::quarterly, start, y),
                                      std::move(xs));
}

void bench_order_search() {
  const auto data = make_grid_data(400, 4, 99);
  const int max_p = 4, max_q = 3;

  const auto t0 = std::chrono::steady_clock::now();
  const auto serial = tsecon::ardl::select_order_sbc(data, max_p, max_q, Exec::serial);
  const double t_serial = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  const auto parallel = tsecon::ardl::select_order_sbc(data, max_p, max_q, Exec::parallel);
  const double t_parallel = seconds_since(t1);

  std::printf("order search  (%zu candidates): serial %.3fs  parallel %.3fs  (x%.1f, %d threads)\n",
              serial.criterion_table.size(), t_serial, t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0, tsecon::par::max_threads());
  std::printf("  selected %s == %s : %s\n", serial.order.to_string().c_str(),
              parallel.order.to_string().c_str(),
              serial.order.to_string() == parallel.order.to_string() ? "ok" : "MISMATCH");
}

void bench_adf_battery() {
  const int reps = 500, n = 200;
  auto rejection_count = [&](Exec exec) {
    return tsecon::par::count_indices(reps, exec, [&](int i) {
      tsecon::sim::Rng rng(tsecon::sim::substream(4242, static_cast<std::uint64_t>(i)));
      const auto walk = tsecon::sim::random_walk(n, rng);
      const auto res = tsecon::unitroot::adf_test(
          walk, {tsecon::unitroot::Deterministics::constant, 0});
      return res.rejects_at(0.05);
    });
  };

  const auto t0 = std::chrono::steady_clock::now();
  const int serial = rejection_count(Exec::serial);
  const double t_serial = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  const int parallel = rejection_count(Exec::parallel);
  const double t_parallel = seconds_since(t1);

  std::printf("adf battery   (%d walks of %d): serial %.3fs  parallel %.3fs  (x%.1f)\n",
              reps, n, t_serial, t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0);
  std::printf("  rejections %d == %d : %s\n", serial, parallel,
              serial == parallel ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
  bench_order_search();
  bench_adf_battery();
  return 0;
}
