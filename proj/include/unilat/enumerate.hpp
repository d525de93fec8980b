#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "unilat/lattice.hpp"

namespace unilat {

/// Identifies a lattice up to isomorphism: the carrier size followed by the
/// order matrix, bit-packed, under the least relabelling that respects the
/// refined element colouring.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

/// Colour refinement on (down-set size, up-set size, lower/upper cover
/// counts) and the colours of strict lower/upper neighbours, followed by an
/// exhaustive search over relabellings inside each colour class.
CanonicalForm canonical_form(const BoundedLattice& L);

inline constexpr std::size_t kDefaultLatticeCap = 7;
inline constexpr std::size_t kHardLatticeCap = 8;

/// One representative per isomorphism class of n-element bounded lattices,
/// in a fixed order. Representatives are naturally labelled (index order is
/// a linear extension): "0", then a, b, c, d, f, g, ..., then "1".
/// Throws CapExceeded when n is 0, above `cap`, or `cap` is above 8.
std::vector<BoundedLattice> enumerate_bounded_lattices(std::size_t n, std::size_t cap = kDefaultLatticeCap);

}  // namespace unilat
