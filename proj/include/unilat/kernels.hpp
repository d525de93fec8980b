#pragma once

// Data-parallel inner loops. Each kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp`; both must produce
// identical results (the omp scans return the lexicographically first hit,
// not whichever thread finishes first).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace unilat::kernels {

inline constexpr std::uint16_t kNoBound = 0xFFFF;

/// A binary operation on a d-element domain, row-major in slot space.
/// `slot[i*d+j]` is the slot of the value (or -1 when it leaves the domain);
/// `raw[i*d+j]` is the value as a carrier index; `leq` is the carrier order.
struct SlotTable {
  std::size_t d = 0;
  std::span<const std::int32_t> slot;
  std::span<const std::uint16_t> raw;
  std::span<const std::uint8_t> leq;
  std::size_t n = 0;

  bool carrier_leq(std::uint16_t x, std::uint16_t y) const noexcept { return leq[x * n + y] != 0; }
};

struct ScanHit {
  std::array<std::uint32_t, 3> slots{};
  std::uint16_t lhs = 0;
  std::uint16_t rhs = 0;
};

namespace serial {

void transitive_closure(std::span<std::uint8_t> rel, std::size_t n);
/// Greatest lower / least upper bound of every pair, kNoBound where absent.
void bound_tables(std::span<const std::uint8_t> leq, std::size_t n, std::span<std::uint16_t> meet,
                  std::span<std::uint16_t> join);
/// First (i,j,k) with op(i, op(j,k)) != op(op(i,j), k); triples whose inner
/// value leaves the domain are skipped.
std::optional<ScanHit> first_non_associative(const SlotTable& t);
/// First (i,j,k) with i < j in `dom_leq` (d x d) and op(i,k) not <= op(j,k)
/// (argument 0) or op(k,i) not <= op(k,j) (argument 1).
std::optional<ScanHit> first_non_monotone(const SlotTable& t, std::span<const std::uint8_t> dom_leq,
                                          int argument);

}  // namespace serial

namespace omp {

void transitive_closure(std::span<std::uint8_t> rel, std::size_t n);
void bound_tables(std::span<const std::uint8_t> leq, std::size_t n, std::span<std::uint16_t> meet,
                  std::span<std::uint16_t> join);
std::optional<ScanHit> first_non_associative(const SlotTable& t);
std::optional<ScanHit> first_non_monotone(const SlotTable& t, std::span<const std::uint8_t> dom_leq,
                                          int argument);

}  // namespace omp

/// Below this carrier size the omp kernels run on the calling thread only.
inline constexpr std::size_t kParallelThreshold = 48;

}  // namespace unilat::kernels
