#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tsecon::sim {

/// Deterministic standard-normal sampler: mt19937_64 plus Box-Muller with an
/// explicit 53-bit uniform mapping, so a seed reproduces the same stream on
/// every platform with the same libm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on (0, 1).
  double uniform();

  /// Standard normal draw.
  double normal();

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Stable derived seed for replication `index` of a multi-run experiment.
[[nodiscard]] std::uint64_t substream(std::uint64_t base_seed, std::uint64_t index);

[[nodiscard]] std::vector<double> normal_draws(Rng& rng, int n, double sigma = 1.0);

/// y_t = y_{t-1} + drift + sigma * e_t, y_0 = sigma * e_0 + drift.
[[nodiscard]] std::vector<double> random_walk(int n, Rng& rng, double sigma = 1.0,
                                              double drift = 0.0);

/// Stationary AR(1) around `mean`: y_t = mean + phi (y_{t-1} - mean) + sigma e_t.
[[nodiscard]] std::vector<double> ar1(int n, double phi, Rng& rng,
                                      double sigma = 1.0, double mean = 0.0);

/// Running sums (turns an I(d) series into I(d+1)).
[[nodiscard]] std::vector<double> cumulative_sum(const std::vector<double>& v);

}  // namespace tsecon::sim
