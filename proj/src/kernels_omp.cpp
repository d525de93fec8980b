#include <omp.h>

#include <atomic>
#include <limits>
#include <vector>

#include "kernel_detail.hpp"
#include "unilat/kernels.hpp"

namespace unilat::kernels::omp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void lower_to(std::atomic<std::size_t>& best, std::size_t value) {
  std::size_t cur = best.load(std::memory_order_relaxed);
  while (value < cur && !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Runs `row(i)` for every outer index and returns the hit of the smallest i
// that produced one. Rows above the best index seen so far are skipped; the
// result matches the serial scan because each row reports its own first hit.
template <class Row>
std::optional<ScanHit> first_hit_by_row(std::size_t d, Row&& row) {
  std::vector<std::optional<ScanHit>> hits(d);
  std::atomic<std::size_t> best{kNone};
  const long rows = static_cast<long>(d);
#pragma omp parallel for schedule(dynamic, 1) if (d >= kParallelThreshold)
  for (long i = 0; i < rows; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (ui > best.load(std::memory_order_relaxed)) continue;
    hits[ui] = row(ui);
    if (hits[ui]) lower_to(best, ui);
  }
  const std::size_t b = best.load();
  if (b == kNone) return std::nullopt;
  return hits[b];
}

}  // namespace

void transitive_closure(std::span<std::uint8_t> rel, std::size_t n) {
  const long rows = static_cast<long>(n);
  for (std::size_t k = 0; k < n; ++k) {
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (long si = 0; si < rows; ++si) {
      const auto i = static_cast<std::size_t>(si);
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rel[k * n + j]) rel[i * n + j] = 1;
    }
  }
}

void bound_tables(std::span<const std::uint8_t> leq, std::size_t n, std::span<std::uint16_t> meet,
                  std::span<std::uint16_t> join) {
  const auto [down, up] = detail::set_sizes(leq, n);
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4) if (n >= kParallelThreshold)
  for (long sx = 0; sx < rows; ++sx) {
    const auto x = static_cast<std::size_t>(sx);
    for (std::size_t y = 0; y < n; ++y) {
      meet[x * n + y] = detail::greatest_lower(leq, n, x, y, down);
      join[x * n + y] = detail::least_upper(leq, n, x, y, up);
    }
  }
}

std::optional<ScanHit> first_non_associative(const SlotTable& t) {
  const std::size_t d = t.d;
  return first_hit_by_row(d, [&](std::size_t i) -> std::optional<ScanHit> {
    for (std::size_t j = 0; j < d; ++j) {
      const std::int32_t ij = t.slot[i * d + j];
      if (ij < 0) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const std::int32_t jk = t.slot[j * d + k];
        if (jk < 0) continue;
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
  });
}

std::optional<ScanHit> first_non_monotone(const SlotTable& t, std::span<const std::uint8_t> dom_leq,
                                          int argument) {
  const std::size_t d = t.d;
  return first_hit_by_row(d, [&](std::size_t i) -> std::optional<ScanHit> {
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
  });
}

}  // namespace unilat::kernels::omp
