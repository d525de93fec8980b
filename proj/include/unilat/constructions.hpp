#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unilat/lattice.hpp"
#include "unilat/op_table.hpp"

namespace unilat {

enum class ConstructionKind {
  UT,
  US_corrected,
  Ut_corrected,
  Us_corrected,
  UTe,
  USe,
  USe_corrected,
  US_legacy,
  Ut_legacy,
  Us_legacy,
};

inline constexpr std::array<ConstructionKind, 10> kAllKinds = {
    ConstructionKind::UT,        ConstructionKind::US_corrected, ConstructionKind::Ut_corrected,
    ConstructionKind::Us_corrected, ConstructionKind::UTe,       ConstructionKind::USe,
    ConstructionKind::USe_corrected,
    ConstructionKind::US_legacy, ConstructionKind::Ut_legacy,    ConstructionKind::Us_legacy,
};

std::string_view to_string(ConstructionKind k);
/// Throws SyntaxError on an unknown name.
ConstructionKind parse_kind(std::string_view name);
bool is_legacy(ConstructionKind k);
/// The sub-operation each kind is parameterised by.
NormRole required_role(ConstructionKind k);

/// Bit set over Coord values; a region factor such as [0,e) or I_e.
using CoordMask = std::uint8_t;

constexpr CoordMask mask(Coord c) { return static_cast<CoordMask>(1u << static_cast<unsigned>(c)); }

namespace region {
inline constexpr CoordMask kBelowOpen = mask(Coord::Below);                      // [0,e)
inline constexpr CoordMask kBelowClosed = mask(Coord::Below) | mask(Coord::Equal);  // [0,e]
inline constexpr CoordMask kAboveOpen = mask(Coord::Above);                      // (e,1]
inline constexpr CoordMask kAboveClosed = mask(Coord::Above) | mask(Coord::Equal);  // [e,1]
inline constexpr CoordMask kIncomp = mask(Coord::Incomp);                        // I_e
}  // namespace region

struct RegionBox {
  CoordMask first;
  CoordMask second;
  bool contains(RegionPair p) const { return (first & mask(p.first)) && (second & mask(p.second)); }
};

enum class ValueRule { ApplySubOp, TakeFirst, TakeSecond, MeetOf, JoinOf, ConstBottom, ConstTop };

struct PiecewiseCase {
  std::string label;
  std::vector<RegionBox> boxes;
  bool otherwise = false;
  ValueRule rule = ValueRule::JoinOf;
  /// Region pairs matched; for "otherwise" this is compiled to the
  /// complement of every other case.
  std::array<bool, 16> matches{};

  bool matches_pair(RegionPair p) const {
    return matches[static_cast<std::size_t>(p.first) * 4 + static_cast<std::size_t>(p.second)];
  }
};

struct PiecewiseSpec {
  ConstructionKind kind;
  std::vector<PiecewiseCase> cases;
};

/// The displayed case split of `kind`, in display order.
const PiecewiseSpec& piecewise_spec(ConstructionKind kind);

/// Abstract audit over the 16 region pairs: which pairs fall under several
/// cases and which under none.
struct CaseAudit {
  struct Overlap {
    RegionPair pair;
    std::vector<std::size_t> cases;
  };
  std::vector<Overlap> overlaps;
  std::vector<RegionPair> gaps;
};

CaseAudit audit_cases(ConstructionKind kind);

/// Indices of every case matching the pair.
std::vector<std::size_t> matching_cases(const PiecewiseSpec& spec, RegionPair p);

struct ConflictReport {
  Elem x;
  Elem y;
  std::size_t case_a = 0;
  Elem value_a;
  std::size_t case_b = 0;
  Elem value_b;

  bool operator==(const ConflictReport&) const = default;
};

struct Construction {
  std::optional<OpTable> table;
  std::vector<ConflictReport> conflicts;

  bool ok() const noexcept { return table.has_value(); }
};

/// Builds the full table of `kind` on L x L. Every pair is classified into its
/// region pair and every matching case is evaluated; when matching cases
/// disagree the pair is reported, and any report replaces the table.
/// Throws BadNeutral, DomainMismatch (sub-op on the wrong interval) and
/// SubOpInvalid (sub-op fails the norm axioms).
Construction construct(const BoundedLattice& L, Elem e, ConstructionKind kind, const OpTable& sub_op);

/// One entry of the same construction. Throws ConflictAt where matching cases
/// disagree, plus the errors of `construct`.
Elem evaluate(const BoundedLattice& L, Elem e, ConstructionKind kind, const OpTable& sub_op, Elem x, Elem y);

}  // namespace unilat
