#pragma once

#include <bit>
#include <cstdint>
#include <span>

namespace hyperdual::detail {

/// Visits the GF(2) combinations of `generators` selected by the Gray codes
/// of indices [begin, end). Consecutive visits differ by one generator.
template <class Visit>
void for_each_combination(std::span<const std::uint64_t> generators, std::uint64_t begin,
                          std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const std::uint64_t gray = begin ^ (begin >> 1);
  std::uint64_t element = 0;
  for (std::uint64_t g = gray; g != 0; g &= g - 1) element ^= generators[std::countr_zero(g)];
  visit(element);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    element ^= generators[std::countr_zero(i)];
    visit(element);
  }
}

}  // namespace hyperdual::detail
