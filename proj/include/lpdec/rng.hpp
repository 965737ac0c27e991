#pragma once

#include <cmath>
#include <cstdint>

namespace lpdec {

/// Counter-keyed deterministic RNG. Each logical site (seed, trial,
/// coordinate, purpose) derives an independent stream, so parallel trial
/// execution draws identical values in any schedule.
struct RngStream {
  std::uint64_t state;

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static RngStream keyed(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                         std::uint64_t c = 0) {
    std::uint64_t s = mix(seed);
    s = mix(s ^ (a + 0x243f6a8885a308d3ull));
    s = mix(s ^ (b + 0x13198a2e03707344ull));
    s = mix(s ^ (c + 0xa4093822299f31d0ull));
    return {s};
  }

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1); never exactly zero, safe under log().
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t uniform_below(std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  double gaussian() {  // standard normal, Box-Muller
    double u1 = uniform01(), u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double laplace_unit() {  // density exp(-|x|)/2
    double u = uniform01() - 0.5;
    return (u < 0 ? 1.0 : -1.0) * std::log(1.0 - 2.0 * std::fabs(u));
  }

  /// Gamma(shape, 1) via Marsaglia-Tsang, with the U^{1/a} boost for
  /// shape < 1. Stream-local rejection keeps determinism.
  double gamma(double shape) {
    if (shape < 1.0) {
      double u = uniform01();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = gaussian();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = uniform01();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }
};

}  // namespace lpdec
