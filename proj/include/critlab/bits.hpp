#pragma once

#include <bit>
#include <cstdint>

namespace critlab {

/// One bit per vertex; bit v set means vertex v is a member.
using Bits = std::uint32_t;

constexpr Bits bit(int v) noexcept { return Bits{1} << v; }

constexpr Bits low_bits(int n) noexcept {
  return n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1;
}

constexpr int count(Bits b) noexcept { return std::popcount(b); }

constexpr int lowest(Bits b) noexcept { return std::countr_zero(b); }

/// Calls f(v) for every set bit v in increasing order.
template <class F>
constexpr void for_each_bit(Bits b, F&& f) {
  while (b != 0) {
    f(std::countr_zero(b));
    b &= b - 1;
  }
}

}  // namespace critlab
