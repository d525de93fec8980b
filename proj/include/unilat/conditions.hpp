#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "unilat/lattice.hpp"
#include "unilat/op_table.hpp"

namespace unilat {

// Structural conditions on the position of e in L. None of them looks at a
// constructed table; only PAnnihilation reads the t-norm.

enum class ConditionId {
  MeetClosure,       // I_e ∧ I_e ⊆ I_e ∪ {0}
  JoinClosure,       // I_e ∨ I_e ⊆ I_e ∪ {1}
  MeetNormOnIe01,    // ∧ is a t-norm on I_e ∪ {0,1}
  JoinConormOnIe01,  // ∨ is a t-conorm on I_e ∪ {0,1}
  PAnnihilation,     // P = ∅ or T vanishes on P x [0,e) and [0,e) x P
  IeIncompWithZeroE, // I_e ∥ (0,e]
};

inline constexpr std::array<ConditionId, 6> kAllConditions = {
    ConditionId::MeetClosure,   ConditionId::JoinClosure,   ConditionId::MeetNormOnIe01,
    ConditionId::JoinConormOnIe01, ConditionId::PAnnihilation, ConditionId::IeIncompWithZeroE,
};

std::string_view to_string(ConditionId id);

/// `elems` are the offending elements; `value` is the element that breaks
/// the condition (a meet, a join, a t-norm value, or the lower element of a
/// comparable pair).
struct ConditionWitness {
  std::vector<Elem> elems;
  Elem value;

  bool operator==(const ConditionWitness&) const = default;
};

struct ConditionResult {
  bool holds = true;
  std::optional<ConditionWitness> witness;
};

/// Holds iff y ∧ z ∈ I_e ∪ {0} for all y, z ∈ I_e. Witness (y, z; y∧z).
ConditionResult meet_closure_condition(const BoundedLattice& L, Elem e);
/// Holds iff y ∨ z ∈ I_e ∪ {1} for all y, z ∈ I_e. Witness (y, z; y∨z).
ConditionResult join_closure_condition(const BoundedLattice& L, Elem e);
/// Meet (TNorm, neutral 1) or join (TConorm, neutral 0) restricted to
/// I_e ∪ {0,1}, checked with the norm-axiom scans.
ConditionResult norm_on_ie01_condition(const BoundedLattice& L, Elem e, NormRole role);
/// {x ∈ (0,e) : x ≤ y for some y ∈ I_e}
ElemSet p_set(const BoundedLattice& L, Elem e);
/// `t_norm` must be a valid t-norm on [0,e] (SubOpInvalid otherwise).
/// Both orientations are scanned. Witness (x, y; T(x,y)).
ConditionResult p_annihilation_condition(const BoundedLattice& L, Elem e, const OpTable& t_norm);
/// Witness (x, y; x) with x ∈ (0,e], y ∈ I_e, x ≤ y.
ConditionResult ie_incomp_condition(const BoundedLattice& L, Elem e);

/// Dispatch by id; `t_norm` is only read for PAnnihilation.
ConditionResult evaluate_condition(const BoundedLattice& L, Elem e, ConditionId id, const OpTable* t_norm = nullptr);

/// Re-derives the violation a failed result claims. True for results that
/// hold (nothing to replay) only if they carry no witness.
bool replay_condition(const BoundedLattice& L, Elem e, ConditionId id, const ConditionResult& result,
                      const OpTable* t_norm = nullptr);

}  // namespace unilat
