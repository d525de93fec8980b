#include "unilat/theorem_lab.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "unilat/error.hpp"
#include "unilat/format.hpp"

namespace unilat {

std::string_view to_string(TheoremId t) {
  switch (t) {
    case TheoremId::UT_char: return "UT_char";
    case TheoremId::US_char: return "US_char";
    case TheoremId::Ut_char: return "Ut_char";
    case TheoremId::Us_char: return "Us_char";
    case TheoremId::UTe_char: return "UTe_char";
    case TheoremId::USe_char: return "USe_char";
  }
  return "?";
}

TheoremId parse_theorem(std::string_view name) {
  for (TheoremId t : kAllTheorems)
    if (to_string(t) == name) return t;
  throw Error(ErrorCode::SyntaxError, "unknown theorem '" + std::string(name) + "'");
}

TheoremBinding binding(TheoremId t) {
  switch (t) {
    case TheoremId::UT_char: return {ConstructionKind::UT, {ConditionId::JoinClosure}};
    case TheoremId::US_char: return {ConstructionKind::US_corrected, {ConditionId::MeetClosure}};
    case TheoremId::Ut_char: return {ConstructionKind::Ut_corrected, {ConditionId::JoinClosure}};
    case TheoremId::Us_char: return {ConstructionKind::Us_corrected, {ConditionId::MeetClosure}};
    case TheoremId::UTe_char:
      return {ConstructionKind::UTe, {ConditionId::PAnnihilation, ConditionId::MeetClosure}};
    case TheoremId::USe_char: return {ConstructionKind::USe_corrected, {ConditionId::IeIncompWithZeroE}};
  }
  return {ConstructionKind::UT, {}};
}

Verdict verify_characterization(const BoundedLattice& L, Elem e, TheoremId thm, const OpTable& sub_op, Exec exec) {
  require_proper_neutral(L, e);
  const TheoremBinding b = binding(thm);
  const NormRole role = required_role(b.kind);
  if (sub_op.domain() != norm_domain(L, e, role))
    throw Error(ErrorCode::RoleMismatch, std::string(to_string(thm)) + " needs a " + std::string(to_string(role)));

  Verdict v;
  v.predicted = true;
  for (ConditionId id : b.predicate) {
    auto r = evaluate_condition(L, e, id, &sub_op);
    v.predicted = v.predicted && r.holds;
    v.conditions.emplace_back(id, std::move(r));
  }
  Construction c = construct(L, e, b.kind, sub_op);
  if (!c.ok()) {
    v.conflicts = std::move(c.conflicts);
    v.observed = false;
    return v;
  }
  v.report = is_uninorm(L, *c.table, e, exec);
  v.observed = v.report.is_uninorm;
  v.table = std::move(c.table);
  return v;
}

namespace {

bool uses_meet_closure(TheoremId t) {
  return t == TheoremId::US_char || t == TheoremId::Us_char || t == TheoremId::UTe_char;
}
bool uses_join_closure(TheoremId t) { return t == TheoremId::UT_char || t == TheoremId::Ut_char; }

}  // namespace

std::vector<std::string> clause_branches(const BoundedLattice& L, Elem e, TheoremId thm, const OpTable& sub_op,
                                         const Verdict& v) {
  const ElemSet ie = incomparables(L, e);
  if (ie.empty()) return {"vacuous"};
  std::vector<std::string> out;
  auto closure_branches = [&](bool meet) {
    const ConditionResult r = meet ? meet_closure_condition(L, e) : join_closure_condition(L, e);
    const std::string op = meet ? "meet" : "join";
    if (!r.holds) {
      out.push_back(op + "-escapes");
      return;
    }
    const Elem extreme = meet ? L.bottom() : L.top();
    bool hits_extreme = false, stays_inside = false;
    for (Elem y : ie)
      for (Elem z : ie) {
        const Elem v2 = meet ? L.meet(y, z) : L.join(y, z);
        if (v2 == extreme) hits_extreme = true;
        else if (y != z) stays_inside = true;
      }
    if (hits_extreme) out.push_back(op + (meet ? "=0" : "=1"));
    if (stays_inside) out.push_back(op + "-in-Ie");
  };
  if (uses_meet_closure(thm)) closure_branches(true);
  if (uses_join_closure(thm)) closure_branches(false);
  if (thm == TheoremId::UTe_char || thm == TheoremId::USe_char) {
    const ElemSet p = p_set(L, e);
    if (p.empty()) {
      out.emplace_back("P=empty");
    } else if (thm == TheoremId::USe_char) {
      out.emplace_back("P-nonempty");
    } else {
      const auto it = std::find_if(v.conditions.begin(), v.conditions.end(),
                                   [](const auto& c) { return c.first == ConditionId::PAnnihilation; });
      const bool annihilated = it != v.conditions.end() ? it->second.holds
                                                        : p_annihilation_condition(L, e, sub_op).holds;
      out.emplace_back(annihilated ? "P-annihilated" : "P-not-annihilated");
    }
  }
  return out;
}

std::vector<std::string> required_branches(TheoremId thm) {
  switch (thm) {
    case TheoremId::UT_char:
    case TheoremId::Ut_char: return {"vacuous", "join=1", "join-in-Ie", "join-escapes"};
    case TheoremId::US_char:
    case TheoremId::Us_char: return {"vacuous", "meet=0", "meet-in-Ie", "meet-escapes"};
    case TheoremId::UTe_char:
      return {"vacuous", "meet=0", "meet-in-Ie", "meet-escapes", "P=empty", "P-annihilated", "P-not-annihilated"};
    case TheoremId::USe_char: return {"vacuous", "P=empty", "P-nonempty"};
  }
  return {};
}

std::vector<OpTable> sub_ops_for(const BoundedLattice& L, Elem e, NormRole role, std::size_t cap,
                                 bool* representative) {
  const std::size_t d = norm_domain(L, e, role).size();
  if (representative) *representative = d > cap;
  if (d <= cap) return enumerate_norms(L, e, role, cap);
  if (role == NormRole::TNorm) return {canonical_tnorm_meet(L, e), drastic_tnorm(L, e)};
  return {canonical_tconorm_join(L, e), drastic_tconorm(L, e)};
}

std::vector<std::string> SweepReport::missing_branches(std::span<const TheoremId> theorems) const {
  std::vector<std::string> out;
  for (TheoremId t : theorems) {
    const std::string name(to_string(t));
    const auto it = coverage.find(name);
    for (const auto& b : required_branches(t))
      if (it == coverage.end() || !it->second.contains(b) || it->second.at(b) == 0) out.push_back(name + ":" + b);
  }
  return out;
}

void SweepReport::write_summary(std::ostream& out) const {
  out << "lattices checked: " << lattices_checked << "\n";
  out << "cases checked: " << cases_checked << "\n";
  out << "representative-only cases: " << representative_only_cases << "\n";
  out << "clause-equivalence checks: " << clause_checks << "\n";
  out << "witnesses replayed: " << witnesses_replayed << "/" << witnesses_emitted << "\n";
  for (const auto& [thm, counts] : verdicts)
    out << "verdicts " << thm << ": predicted-uninorm " << counts[0] << ", predicted-not " << counts[1] << "\n";
  for (const auto& [thm, branches] : coverage) {
    out << "coverage " << thm << ":";
    for (const auto& [b, n] : branches) out << " " << b << "=" << n;
    out << "\n";
  }
  out << "inconsistencies: " << inconsistencies.size() << "\n";
  for (const auto& inc : inconsistencies)
    out << "  " << inc.check << " e=" << inc.e << " predicted=" << inc.predicted << " observed=" << inc.observed
        << " sub-op [" << inc.sub_op << "] " << inc.witness << "\n    lattice: " << inc.lattice << "\n";
}

void SweepReport::write_cases(std::ostream& out) const {
  out << "# certificate\te\tsubop\ttheorem\tpredicted\tobserved\tconsistent\trepresentative\n";
  char hash[17];
  for (const auto& c : cases) {
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(c.sub_op));
    out << c.certificate << '\t' << c.e << '\t' << hash << '\t' << to_string(c.theorem) << '\t' << c.predicted
        << '\t' << c.observed << '\t' << (c.predicted == c.observed) << '\t' << c.representative_only << '\n';
  }
}

namespace {

struct Task {
  Elem e;
  TheoremId theorem;
  const OpTable* sub_op;
  bool representative;
};

struct TaskResult {
  bool predicted = false;
  bool observed = false;
  std::vector<std::string> branches;
  std::size_t emitted = 0;
  std::size_t replayed = 0;
  std::string witness;
  std::string error;
};

std::string single_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

TaskResult run_task(const BoundedLattice& L, const Task& t, bool replay) {
  TaskResult r;
  const Verdict v = verify_characterization(L, t.e, t.theorem, *t.sub_op, Exec::Serial);
  r.predicted = v.predicted;
  r.observed = v.observed;
  r.branches = clause_branches(L, t.e, t.theorem, *t.sub_op, v);
  if (replay) {
    for (const auto& w : v.report.witnesses()) {
      ++r.emitted;
      r.replayed += v.table && replay_witness(L, *v.table, w);
    }
    for (const auto& [id, res] : v.conditions) {
      if (res.holds) continue;
      ++r.emitted;
      r.replayed += replay_condition(L, t.e, id, res, t.sub_op);
    }
  }
  if (!v.conflicts.empty())
    r.witness = "conflict " + describe(L, piecewise_spec(binding(t.theorem).kind), v.conflicts.front());
  else if (auto ws = v.report.witnesses(); !ws.empty())
    r.witness = describe(L, ws.front());
  for (const auto& [id, res] : v.conditions)
    if (!res.holds && res.witness) r.witness += " | " + std::string(to_string(id)) + " " + describe(L, *res.witness);
  return r;
}

}  // namespace

SweepReport sweep(std::size_t n_max, std::span<const TheoremId> theorems, const SweepOptions& options) {
  if (n_max > options.lattice_cap || options.lattice_cap > kHardLatticeCap)
    throw Error(ErrorCode::CapExceeded, "max n " + std::to_string(n_max) + " above cap " +
                                            std::to_string(options.lattice_cap));
  SweepReport report;
  for (TheoremId t : theorems) {
    auto& cov = report.coverage[std::string(to_string(t))];
    for (const auto& b : required_branches(t)) cov[b];
    report.verdicts[std::string(to_string(t))] = {0, 0};
  }

  for (std::size_t n = std::max<std::size_t>(options.n_min, 1); n <= n_max; ++n) {
    for (const BoundedLattice& L : enumerate_bounded_lattices(n, options.lattice_cap)) {
      ++report.lattices_checked;
      const std::string cert = canonical_form(L).hex();

      // Sub-ops per (e, role), kept alive for the task list.
      std::vector<std::vector<OpTable>> pools;
      pools.reserve(2 * n);
      std::vector<Task> tasks;
      for (Elem e : L.order()) {
        if (e == L.bottom() || e == L.top()) continue;

        // Clause equivalences inside each theorem, independent of sub-ops.
        const auto mc = meet_closure_condition(L, e), jc = join_closure_condition(L, e);
        const auto mn = norm_on_ie01_condition(L, e, NormRole::TNorm);
        const auto jn = norm_on_ie01_condition(L, e, NormRole::TConorm);
        const auto inc = ie_incomp_condition(L, e);
        const bool p_empty = p_set(L, e).empty();
        const std::pair<std::string, std::pair<bool, bool>> clause_pairs[] = {
            {"clause-equivalence:MeetClosure=MeetNormOnIe01", {mc.holds, mn.holds}},
            {"clause-equivalence:JoinClosure=JoinConormOnIe01", {jc.holds, jn.holds}},
            {"clause-equivalence:IeIncomp=Pempty", {inc.holds, p_empty}},
        };
        for (const auto& [tag, vals] : clause_pairs) {
          ++report.clause_checks;
          if (vals.first != vals.second)
            report.inconsistencies.push_back({serialize_lattice(L), L.label(e), "", tag, vals.first, vals.second, ""});
        }
        if (options.replay_witnesses) {
          const std::pair<ConditionId, const ConditionResult*> results[] = {
              {ConditionId::MeetClosure, &mc},      {ConditionId::JoinClosure, &jc},
              {ConditionId::MeetNormOnIe01, &mn},   {ConditionId::JoinConormOnIe01, &jn},
              {ConditionId::IeIncompWithZeroE, &inc}};
          for (const auto& [id, res] : results) {
            if (res->holds) continue;
            ++report.witnesses_emitted;
            report.witnesses_replayed += replay_condition(L, e, id, *res);
          }
        }

        std::size_t pool_of[2] = {SIZE_MAX, SIZE_MAX};
        bool rep_of[2] = {false, false};
        for (TheoremId t : theorems) {
          const NormRole role = required_role(binding(t).kind);
          const auto r = static_cast<std::size_t>(role);
          if (pool_of[r] == SIZE_MAX) {
            pools.push_back(sub_ops_for(L, e, role, options.norm_cap, &rep_of[r]));
            pool_of[r] = pools.size() - 1;
          }
          for (const OpTable& op : pools[pool_of[r]]) tasks.push_back({e, t, &op, rep_of[r]});
        }
      }

      std::vector<TaskResult> results(tasks.size());
      const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 4)
      for (long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
          results[k] = run_task(L, tasks[k], options.replay_witnesses);
        } catch (const std::exception& ex) {
          results[k].error = ex.what();
        }
      }

      for (std::size_t k = 0; k < tasks.size(); ++k) {
        const Task& t = tasks[k];
        const TaskResult& r = results[k];
        if (!r.error.empty()) throw Error(ErrorCode::SubOpInvalid, "sweep case failed: " + r.error);
        const std::string thm(to_string(t.theorem));
        ++report.cases_checked;
        report.representative_only_cases += t.representative;
        report.witnesses_emitted += r.emitted;
        report.witnesses_replayed += r.replayed;
        ++report.verdicts[thm][r.predicted ? 0 : 1];
        for (const auto& b : r.branches) ++report.coverage[thm][b];
        if (r.predicted != r.observed)
          report.inconsistencies.push_back({serialize_lattice(L), L.label(t.e), render_compact(L, *t.sub_op), thm,
                                            r.predicted, r.observed, r.witness});
        if (options.keep_cases)
          report.cases.push_back(
              {cert, L.label(t.e), t.sub_op->fingerprint(), t.theorem, r.predicted, r.observed, t.representative});
      }
    }
  }
  for (auto& inc : report.inconsistencies) inc.lattice = single_line(inc.lattice);
  return report;
}

HuntResult search_counterexample(std::size_t n_max, ConstructionKind kind, Axiom target, const HuntOptions& options) {
  if (n_max > options.lattice_cap || options.lattice_cap > kHardLatticeCap)
    throw Error(ErrorCode::CapExceeded, "max n " + std::to_string(n_max) + " above cap " +
                                            std::to_string(options.lattice_cap));
  const NormRole role = required_role(kind);
  if (options.require == ConditionId::PAnnihilation && role != NormRole::TNorm)
    throw Error(ErrorCode::RoleMismatch, "PAnnihilation filter needs a t-norm construction");
  HuntResult result;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const BoundedLattice& L : enumerate_bounded_lattices(n, options.lattice_cap)) {
      for (Elem e : L.order()) {
        if (e == L.bottom() || e == L.top()) continue;
        for (const OpTable& op : sub_ops_for(L, e, role, options.norm_cap)) {
          if (options.require && !evaluate_condition(L, e, *options.require, &op).holds) continue;
          ++result.instances_checked;
          Construction c = construct(L, e, kind, op);
          if (!c.ok()) {
            result.outcome = HuntResult::Outcome::Conflict;
            result.conflicts = std::move(c.conflicts);
          } else if (auto w = check_axiom(L, *c.table, target, e)) {
            result.outcome = HuntResult::Outcome::Found;
            result.witness = std::move(w);
          } else {
            continue;
          }
          result.lattice = L;
          result.e = e;
          result.sub_op = op;
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace unilat
