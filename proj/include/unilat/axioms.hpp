#pragma once

#include <optional>

#include "unilat/lattice.hpp"
#include "unilat/op_table.hpp"

namespace unilat {

enum class Exec { Serial, Parallel };

/// Scans the operation's domain for the lexicographically first violation of
/// `axiom` under the lattice's linear extension. Works on any domain, so the
/// same scans serve full-carrier uninorms and sub-interval norms. The
/// Parallel path partitions the outer loop and returns the same witness.
/// Throws MissingNeutralParam for Neutrality without `e`.
std::optional<AxiomWitness> check_axiom(const BoundedLattice& L, const OpTable& U, Axiom axiom,
                                        std::optional<Elem> e = std::nullopt, Exec exec = Exec::Parallel);

/// True when the witness, re-evaluated against U, shows the violation it
/// claims.
bool replay_witness(const BoundedLattice& L, const OpTable& U, const AxiomWitness& w);

enum class CheckStatus { Passed, Failed, Unchecked };

struct AxiomOutcome {
  CheckStatus status = CheckStatus::Unchecked;
  std::optional<AxiomWitness> witness;
};

struct UninormReport {
  AxiomOutcome commutative;
  AxiomOutcome associative;
  AxiomOutcome monotone;
  AxiomOutcome neutral;
  bool is_uninorm = false;

  /// Witnesses of the failed axioms in check order.
  std::vector<AxiomWitness> witnesses() const;
};

/// Runs the four uninorm checks on a full-carrier table. With
/// `short_circuit`, axioms after the first failure are left Unchecked.
UninormReport is_uninorm(const BoundedLattice& L, const OpTable& U, Elem e, Exec exec = Exec::Parallel,
                         bool short_circuit = false);

}  // namespace unilat
