#include "tsecon/sim.hpp"

#include <cmath>

namespace tsecon::sim {

double Rng::uniform() {
  // 53-bit mantissa, shifted half a step away from zero
  const std::uint64_t bits = gen_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t substream(std::uint64_t base_seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined word
  std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> normal_draws(Rng& rng, int n, double sigma) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = sigma * rng.normal();
  return v;
}

std::vector<double> random_walk(int n, Rng& rng, double sigma, double drift) {
  std::vector<double> v(static_cast<std::size_t>(n));
  double level = 0.0;
  for (auto& x : v) {
    level += drift + sigma * rng.normal();
    x = level;
  }
  return v;
}

std::vector<double> ar1(int n, double phi, Rng& rng, double sigma, double mean) {
  std::vector<double> v(static_cast<std::size_t>(n));
  double dev = 0.0;
  for (auto& x : v) {
    dev = phi * dev + sigma * rng.normal();
    x = mean + dev;
  }
  return v;
}

std::vector<double> cumulative_sum(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    out[i] = acc;
  }
  return out;
}

}  // namespace tsecon::sim
