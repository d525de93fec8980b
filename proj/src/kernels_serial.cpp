#include "unilat/kernels.hpp"

#include <vector>

#include "kernel_detail.hpp"

namespace unilat::kernels::serial {

void transitive_closure(std::span<std::uint8_t> rel, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rel[k * n + j]) rel[i * n + j] = 1;
    }
}


void bound_tables(std::span<const std::uint8_t> leq, std::size_t n, std::span<std::uint16_t> meet,
                  std::span<std::uint16_t> join) {
  const auto [down, up] = detail::set_sizes(leq, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      meet[x * n + y] = detail::greatest_lower(leq, n, x, y, down);
      join[x * n + y] = detail::least_upper(leq, n, x, y, up);
    }
}

std::optional<ScanHit> first_non_associative(const SlotTable& t) {
  const std::size_t d = t.d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::int32_t ij = t.slot[i * d + j];
      for (std::size_t k = 0; k < d; ++k) {
        const std::int32_t jk = t.slot[j * d + k];
        if (ij < 0 || jk < 0) continue;
        const std::uint16_t lhs = t.raw[i * d + static_cast<std::size_t>(jk)];
        const std::uint16_t rhs = t.raw[static_cast<std::size_t>(ij) * d + k];
        if (lhs != rhs)
          return ScanHit{{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                          static_cast<std::uint32_t>(k)},
                         lhs,
                         rhs};
      }
    }
  return std::nullopt;
}

std::optional<ScanHit> first_non_monotone(const SlotTable& t, std::span<const std::uint8_t> dom_leq,
                                          int argument) {
  const std::size_t d = t.d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j || !dom_leq[i * d + j]) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const std::uint16_t lhs = argument == 0 ? t.raw[i * d + k] : t.raw[k * d + i];
        const std::uint16_t rhs = argument == 0 ? t.raw[j * d + k] : t.raw[k * d + j];
        if (!t.carrier_leq(lhs, rhs))
          return ScanHit{{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                          static_cast<std::uint32_t>(k)},
                         lhs,
                         rhs};
      }
    }
  return std::nullopt;
}

}  // namespace unilat::kernels::serial
