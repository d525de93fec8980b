#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "unilat/kernels.hpp"

namespace unilat::kernels::detail {

// Among the common lower bounds of (x,y) the candidate with the largest
// down-set is the only possible infimum; it is one iff every other lower
// bound lies below it.
inline std::uint16_t greatest_lower(std::span<const std::uint8_t> leq, std::size_t n, std::size_t x,
                             std::size_t y, std::span<const std::size_t> down) {
  std::size_t best = n;
  for (std::size_t z = 0; z < n; ++z)
    if (leq[z * n + x] && leq[z * n + y] && (best == n || down[z] > down[best])) best = z;
  if (best == n) return kNoBound;
  for (std::size_t z = 0; z < n; ++z)
    if (leq[z * n + x] && leq[z * n + y] && !leq[z * n + best]) return kNoBound;
  return static_cast<std::uint16_t>(best);
}

inline std::uint16_t least_upper(std::span<const std::uint8_t> leq, std::size_t n, std::size_t x,
                          std::size_t y, std::span<const std::size_t> up) {
  std::size_t best = n;
  for (std::size_t z = 0; z < n; ++z)
    if (leq[x * n + z] && leq[y * n + z] && (best == n || up[z] > up[best])) best = z;
  if (best == n) return kNoBound;
  for (std::size_t z = 0; z < n; ++z)
    if (leq[x * n + z] && leq[y * n + z] && !leq[best * n + z]) return kNoBound;
  return static_cast<std::uint16_t>(best);
}

}  // namespace unilat::kernels::detail

namespace unilat::kernels::detail {

/// Down-set and up-set sizes of every element.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> set_sizes(
    std::span<const std::uint8_t> leq, std::size_t n) {
  std::vector<std::size_t> down(n, 0), up(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x * n + y]) {
        ++down[y];
        ++up[x];
      }
  return {std::move(down), std::move(up)};
}

}  // namespace unilat::kernels::detail
