#include "hypergen/rng.hpp"

#include <algorithm>

namespace hypergen {

std::size_t Rng::weighted_index(std::span<const double> cumulative) {
  const double target = uniform01() * cumulative.back();
  // First entry strictly above target; zero-weight entries never qualify.
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
  if (it == cumulative.end()) --it;
  return static_cast<std::size_t>(it - cumulative.begin());
}

namespace {
std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return splitmix(splitmix(splitmix(base) ^ a) ^ (b * 0xD6E8FEB86659FD93ULL));
}

}  // namespace hypergen
