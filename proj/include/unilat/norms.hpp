#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "unilat/lattice.hpp"
#include "unilat/op_table.hpp"

namespace unilat {

inline constexpr std::size_t kDefaultNormCap = 6;

/// Throws BadNeutral unless e lies strictly between bottom and top.
void require_proper_neutral(const BoundedLattice& L, Elem e);

/// [0,e] for TNorm, [e,1] for TConorm.
ElemSet norm_domain(const BoundedLattice& L, Elem e, NormRole role);

/// Closure, commutativity, associativity, monotonicity and neutrality of `op`
/// on its own domain, with `neutral` as the unit. At most one witness per
/// violated axiom, in that order. Empty means valid.
std::vector<AxiomWitness> check_operation_axioms(const BoundedLattice& L, const OpTable& op, Elem neutral);

/// As above, after checking that op's domain is exactly [0,e] (TNorm) or
/// [e,1] (TConorm); throws DomainMismatch otherwise.
std::vector<AxiomWitness> check_norm_axioms(const BoundedLattice& L, const OpTable& op, NormRole role, Elem e);

/// Meet restricted to [0,e]^2.
OpTable canonical_tnorm_meet(const BoundedLattice& L, Elem e);
/// Join restricted to [e,1]^2.
OpTable canonical_tconorm_join(const BoundedLattice& L, Elem e);
/// Least t-norm on [0,e]: x ∧ y when e is an argument, 0 otherwise.
OpTable drastic_tnorm(const BoundedLattice& L, Elem e);
/// Greatest t-conorm on [e,1]: x ∨ y when e is an argument, 1 otherwise.
OpTable drastic_tconorm(const BoundedLattice& L, Elem e);

/// Calls `visit` once for every t-norm on [0,e] (or t-conorm on [e,1]), in
/// lexicographic order of the row-major table under the linear extension.
/// Stops early when `visit` returns false. Throws DomainTooLarge when the
/// interval has more than `cap` elements.
void for_each_norm(const BoundedLattice& L, Elem e, NormRole role, const std::function<bool(const OpTable&)>& visit,
                   std::size_t cap = kDefaultNormCap);

std::vector<OpTable> enumerate_norms(const BoundedLattice& L, Elem e, NormRole role,
                                     std::size_t cap = kDefaultNormCap);

}  // namespace unilat
