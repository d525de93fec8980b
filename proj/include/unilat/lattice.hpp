#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unilat/error.hpp"

namespace unilat {

/// Dense index of an element inside one carrier. Labels live in the Poset.
struct Elem {
  std::uint16_t index = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::size_t i) : index(static_cast<std::uint16_t>(i)) {}
  constexpr auto operator<=>(const Elem&) const = default;
};

inline constexpr std::size_t kMaxCarrier = 4096;

/// Element sets are kept in the lattice's linear-extension order.
using ElemSet = std::vector<Elem>;

using CoverPair = std::pair<std::string, std::string>;  // (lower, upper)

/// A finite partial order stored as a dense n x n truth table.
class Poset {
 public:
  /// Checks reflexivity, antisymmetry and transitivity of `leq` (row-major).
  static Poset from_relation(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Elem x) const { return labels_[x.index]; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;
  /// Throws UnknownLabel.
  Elem at(std::string_view label) const;

  bool leq(Elem x, Elem y) const noexcept { return leq_[x.index * size() + y.index] != 0; }
  bool less(Elem x, Elem y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const noexcept { return leq(x, y) || leq(y, x); }
  std::span<const std::uint8_t> relation() const noexcept { return leq_; }

  /// Transitive reduction, ordered by (lower index, upper index).
  std::vector<std::pair<Elem, Elem>> covers() const;

 private:
  Poset(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {}

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

/// Reflexive-transitive closure of a cover relation. Either reduced or
/// non-reduced cover input is accepted. Throws DuplicateLabel, UnknownLabel,
/// EmptyCarrier or CycleDetected (the message names the cycle).
Poset build_poset(std::span<const std::string> labels, std::span<const CoverPair> covers);

/// (L, <=, 0, 1) with materialized meet/join tables. Immutable after
/// validation; every query is a table lookup.
class BoundedLattice {
 public:
  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::string& label(Elem x) const { return poset_.label(x); }
  Elem at(std::string_view label) const { return poset_.at(label); }

  bool leq(Elem x, Elem y) const noexcept { return poset_.leq(x, y); }
  bool less(Elem x, Elem y) const noexcept { return poset_.less(x, y); }
  bool comparable(Elem x, Elem y) const noexcept { return poset_.comparable(x, y); }
  bool incomparable(Elem x, Elem y) const noexcept { return !poset_.comparable(x, y); }
  Elem meet(Elem x, Elem y) const noexcept { return meet_[x.index * size() + y.index]; }
  Elem join(Elem x, Elem y) const noexcept { return join_[x.index * size() + y.index]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Fixed linear extension of <= (stable in declaration index). All scans
  /// and witness orderings use it.
  std::span<const Elem> order() const noexcept { return order_; }
  std::size_t rank(Elem x) const noexcept { return rank_[x.index]; }
  /// Carrier in declaration order.
  ElemSet declared() const;
  /// Sorts a set into linear-extension order and removes duplicates.
  void normalize(ElemSet& set) const;

  friend std::optional<BoundedLattice> try_validate_bounded_lattice(Poset poset, std::optional<Error>* error);

 private:
  BoundedLattice(Poset poset, std::vector<Elem> meet, std::vector<Elem> join, Elem bottom, Elem top);

  Poset poset_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_;
  Elem top_;
  std::vector<Elem> order_;
  std::vector<std::size_t> rank_;
};

/// Throws NoMeet / NoJoin (naming the pair and its maximal lower / minimal
/// upper bounds) or NotBounded.
BoundedLattice validate_bounded_lattice(Poset poset);

/// Same checks without throwing; the failure is stored in `error` when given.
std::optional<BoundedLattice> try_validate_bounded_lattice(Poset poset, std::optional<Error>* error = nullptr);

enum class Bound { Closed, Open };

/// {x : a <= x <= b} with endpoints kept or dropped. Throws NotComparable.
ElemSet interval(const BoundedLattice& L, Elem a, Elem b, Bound lower = Bound::Closed,
                 Bound upper = Bound::Closed);

/// I_e: the elements incomparable with e.
ElemSet incomparables(const BoundedLattice& L, Elem e);

/// x || y for every x in A and y in B; vacuously true for empty sets.
bool sets_incomparable(const BoundedLattice& L, std::span<const Elem> A, std::span<const Elem> B);

enum class Coord : std::uint8_t { Below = 0, Equal = 1, Above = 2, Incomp = 3 };

std::string_view to_string(Coord c);

struct RegionPair {
  Coord first;
  Coord second;
  constexpr bool operator==(const RegionPair&) const = default;
};

Coord classify(const BoundedLattice& L, Elem e, Elem x);
RegionPair classify_pair(const BoundedLattice& L, Elem e, Elem x, Elem y);

/// Coordinates of every element relative to one e, computed once.
class Regions {
 public:
  Regions(const BoundedLattice& L, Elem e);

  Elem neutral() const noexcept { return e_; }
  Coord of(Elem x) const noexcept { return coords_[x.index]; }
  RegionPair of(Elem x, Elem y) const noexcept { return {of(x), of(y)}; }

 private:
  Elem e_;
  std::vector<Coord> coords_;
};

/// Chain 0 < m1 < ... < 1 with n elements.
BoundedLattice chain_lattice(std::size_t n);
/// Componentwise-ordered product; labels are "(x,y)".
BoundedLattice product_lattice(const BoundedLattice& a, const BoundedLattice& b);

}  // namespace unilat
