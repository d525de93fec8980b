#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unilat/axioms.hpp"
#include "unilat/conditions.hpp"
#include "unilat/constructions.hpp"
#include "unilat/enumerate.hpp"
#include "unilat/lattice.hpp"
#include "unilat/norms.hpp"
#include "unilat/op_table.hpp"

namespace unilat {

/// Each characterization binds one construction to one structural predicate:
/// the construction is a uninorm iff the predicate holds.
enum class TheoremId { UT_char, US_char, Ut_char, Us_char, UTe_char, USe_char };

inline constexpr std::array<TheoremId, 6> kAllTheorems = {TheoremId::UT_char,  TheoremId::US_char,
                                                          TheoremId::Ut_char,  TheoremId::Us_char,
                                                          TheoremId::UTe_char, TheoremId::USe_char};

std::string_view to_string(TheoremId t);
/// Throws SyntaxError on an unknown name.
TheoremId parse_theorem(std::string_view name);

struct TheoremBinding {
  ConstructionKind kind;
  std::vector<ConditionId> predicate;  // conjunction
};

TheoremBinding binding(TheoremId t);

struct Verdict {
  bool predicted = false;
  bool observed = false;
  bool consistent() const noexcept { return predicted == observed; }
  std::vector<std::pair<ConditionId, ConditionResult>> conditions;
  std::optional<OpTable> table;
  UninormReport report;
  std::vector<ConflictReport> conflicts;
};

/// Predicted: the theorem's predicate. Observed: exhaustive uninorm check of
/// the constructed table. Throws RoleMismatch when `sub_op` has the wrong
/// role for the theorem's construction, and BadNeutral.
Verdict verify_characterization(const BoundedLattice& L, Elem e, TheoremId thm, const OpTable& sub_op,
                                Exec exec = Exec::Parallel);

/// Names of the clause branches a case exercises (e.g. "vacuous",
/// "join=1", "P-annihilated").
std::vector<std::string> clause_branches(const BoundedLattice& L, Elem e, TheoremId thm, const OpTable& sub_op,
                                         const Verdict& v);

/// Branches every sweep up to n = 6 is expected to reach for `thm`.
std::vector<std::string> required_branches(TheoremId thm);

struct CaseRecord {
  std::string certificate;
  std::string e;
  std::uint64_t sub_op = 0;
  TheoremId theorem = TheoremId::UT_char;
  bool predicted = false;
  bool observed = false;
  bool representative_only = false;
};

struct Inconsistency {
  std::string lattice;  // .lat serialization
  std::string e;
  std::string sub_op;   // rendered table
  std::string check;    // theorem name or clause-equivalence tag
  bool predicted = false;
  bool observed = false;
  std::string witness;
};

struct SweepReport {
  std::size_t lattices_checked = 0;
  std::size_t cases_checked = 0;
  std::size_t representative_only_cases = 0;
  std::size_t clause_checks = 0;
  std::size_t witnesses_emitted = 0;
  std::size_t witnesses_replayed = 0;
  std::vector<Inconsistency> inconsistencies;
  /// theorem -> branch -> number of cases.
  std::map<std::string, std::map<std::string, std::size_t>> coverage;
  /// theorem -> {predicted true, predicted false}
  std::map<std::string, std::array<std::size_t, 2>> verdicts;
  std::vector<CaseRecord> cases;

  bool consistent() const noexcept { return inconsistencies.empty(); }
  /// Required branches (per theorem) that never fired.
  std::vector<std::string> missing_branches(std::span<const TheoremId> theorems) const;
  void write_summary(std::ostream& out) const;
  /// One tab-separated line per case: certificate, e, sub-op fingerprint,
  /// theorem, predicted, observed, consistent, representative flag.
  void write_cases(std::ostream& out) const;
};

struct SweepOptions {
  std::size_t n_min = 1;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::size_t norm_cap = kDefaultNormCap;
  bool keep_cases = true;
  bool replay_witnesses = true;
};

/// Every lattice with n_min..n_max elements, every e ∉ {0,1}, every sub-op
/// of the required role (all of them up to `norm_cap` interval elements, the
/// canonical and drastic ones beyond), every requested theorem. The result
/// does not depend on the number of worker threads.
SweepReport sweep(std::size_t n_max, std::span<const TheoremId> theorems, const SweepOptions& options = {});

struct HuntResult {
  enum class Outcome { Found, Conflict, NotFound };
  Outcome outcome = Outcome::NotFound;
  std::optional<BoundedLattice> lattice;
  Elem e;
  std::optional<OpTable> sub_op;
  std::optional<AxiomWitness> witness;
  std::vector<ConflictReport> conflicts;
  std::size_t instances_checked = 0;
};

struct HuntOptions {
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::size_t norm_cap = kDefaultNormCap;
  /// Only instances where this condition holds are considered.
  std::optional<ConditionId> require;
};

/// First instance in sweep order where `kind` violates `target`, or the first
/// construction-time conflict for ill-defined kinds.
HuntResult search_counterexample(std::size_t n_max, ConstructionKind kind, Axiom target,
                                 const HuntOptions& options = {});

/// Sub-operations a sweep quantifies over: every norm when the interval fits
/// under `cap`, else the canonical and drastic ones. `representative` is set
/// in the latter case.
std::vector<OpTable> sub_ops_for(const BoundedLattice& L, Elem e, NormRole role, std::size_t cap,
                                 bool* representative = nullptr);

}  // namespace unilat
