#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace hypergen {

// Seeded engine with distribution helpers whose output is identical across
// standard library implementations (std::*_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Index drawn proportional to weights; cumulative must be the inclusive
  // prefix sums of non-negative weights with a positive last entry.
  std::size_t weighted_index(std::span<const double> cumulative);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 mixing of a base seed with up to two stream coordinates, used to
// give every independent unit of work (grid cell, step, attempt) its own seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace hypergen
