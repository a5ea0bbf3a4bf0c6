#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "siflab/trace.hpp"

namespace siflab {

struct EnumerationParams {
  std::size_t max_prefix = 0;
  std::size_t max_cycle = 1;
  /// Symbols "0".."n-1" per component, in (hi, li, ho, lo) order.
  std::array<std::size_t, 4> alphabet_sizes{2, 2, 2, 2};
  /// Upper bound on the number of systems.
  std::uint64_t cap = std::uint64_t{1} << 20;
  /// Keeps only universe traces accepted by the filter.
  std::function<bool(const LassoTrace&)> trace_filter;
};

/// All canonical lassos with prefix length <= max_prefix and cycle length in
/// 1..max_cycle, sorted and deduplicated.
std::vector<LassoTrace> generate_universe(const Alphabets& alphabets, std::size_t max_prefix,
                                          std::size_t max_cycle);

/// Every nonempty subset of a finite trace universe, in increasing bitmask
/// order. Systems are materialized on access.
class SystemEnumeration {
 public:
  SystemEnumeration(SpacePtr space, std::vector<LassoTrace> universe,
                    std::uint64_t cap = std::uint64_t{1} << 20);

  std::uint64_t size() const { return count_; }
  System operator[](std::uint64_t i) const { return from_mask(i + 1); }
  System from_mask(std::uint64_t mask) const;

  const std::vector<LassoTrace>& universe() const { return universe_; }
  const SpacePtr& space() const { return space_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t i = 0; i < count_; ++i) f(from_mask(i + 1));
  }

 private:
  SpacePtr space_;
  std::vector<LassoTrace> universe_;
  std::uint64_t count_ = 0;
};

/// Throws CapExceededError when the number of systems exceeds params.cap.
SystemEnumeration enumerate_systems(const EnumerationParams& params);

/// The 65535 nonempty systems of period-1 binary traces.
SystemEnumeration period1_binary_systems();

/// The 16 period-1 binary traces.
std::vector<LassoTrace> period1_binary_traces();

}  // namespace siflab
