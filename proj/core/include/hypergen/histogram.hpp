#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace hypergen {

/// Frequency table of non-negative integer observations, values ascending.
class DistributionHistogram {
 public:
  struct Bin {
    std::uint64_t value;
    std::uint64_t count;
    friend bool operator==(const Bin&, const Bin&) = default;
  };

  DistributionHistogram() = default;
  explicit DistributionHistogram(const std::map<std::uint64_t, std::uint64_t>& counts);

  static DistributionHistogram from_values(std::span<const std::uint64_t> values);

  const std::vector<Bin>& bins() const noexcept { return bins_; }
  std::uint64_t total() const noexcept { return total_; }
  bool empty() const noexcept { return bins_.empty(); }
  std::size_t distinct_values() const noexcept { return bins_.size(); }

  friend bool operator==(const DistributionHistogram&, const DistributionHistogram&) = default;

 private:
  std::vector<Bin> bins_;
  std::uint64_t total_ = 0;
};

}  // namespace hypergen
