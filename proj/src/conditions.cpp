#include "unilat/conditions.hpp"

#include <algorithm>
#include <string>

#include "unilat/axioms.hpp"
#include "unilat/error.hpp"
#include "unilat/norms.hpp"

namespace unilat {

std::string_view to_string(ConditionId id) {
  switch (id) {
    case ConditionId::MeetClosure: return "MeetClosure";
    case ConditionId::JoinClosure: return "JoinClosure";
    case ConditionId::MeetNormOnIe01: return "MeetNormOnIe01";
    case ConditionId::JoinConormOnIe01: return "JoinConormOnIe01";
    case ConditionId::PAnnihilation: return "PAnnihilation";
    case ConditionId::IeIncompWithZeroE: return "IeIncompWithZeroE";
  }
  return "?";
}

namespace {

ConditionResult fail(std::vector<Elem> elems, Elem value) { return {false, ConditionWitness{std::move(elems), value}}; }

bool contains(const ElemSet& s, Elem x) { return std::find(s.begin(), s.end(), x) != s.end(); }

}  // namespace

ConditionResult meet_closure_condition(const BoundedLattice& L, Elem e) {
  require_proper_neutral(L, e);
  const ElemSet ie = incomparables(L, e);
  for (Elem y : ie)
    for (Elem z : ie) {
      const Elem m = L.meet(y, z);
      if (m != L.bottom() && !contains(ie, m)) return fail({y, z}, m);
    }
  return {};
}

ConditionResult join_closure_condition(const BoundedLattice& L, Elem e) {
  require_proper_neutral(L, e);
  const ElemSet ie = incomparables(L, e);
  for (Elem y : ie)
    for (Elem z : ie) {
      const Elem j = L.join(y, z);
      if (j != L.top() && !contains(ie, j)) return fail({y, z}, j);
    }
  return {};
}

ConditionResult norm_on_ie01_condition(const BoundedLattice& L, Elem e, NormRole role) {
  require_proper_neutral(L, e);
  ElemSet dom = incomparables(L, e);
  dom.push_back(L.bottom());
  dom.push_back(L.top());
  const Elem unit = role == NormRole::TNorm ? L.top() : L.bottom();
  const OpTable op = OpTable::tabulate(
      L, std::move(dom), [&](Elem x, Elem y) { return role == NormRole::TNorm ? L.meet(x, y) : L.join(x, y); }, unit);
  const auto witnesses = check_operation_axioms(L, op, unit);
  if (witnesses.empty()) return {};
  const auto& w = witnesses.front();
  return fail(w.elems, w.lhs);
}

ElemSet p_set(const BoundedLattice& L, Elem e) {
  require_proper_neutral(L, e);
  const ElemSet ie = incomparables(L, e);
  ElemSet out;
  for (Elem x : interval(L, L.bottom(), e, Bound::Open, Bound::Open))
    if (std::any_of(ie.begin(), ie.end(), [&](Elem y) { return L.leq(x, y); })) out.push_back(x);
  return out;
}

ConditionResult p_annihilation_condition(const BoundedLattice& L, Elem e, const OpTable& t_norm) {
  require_proper_neutral(L, e);
  if (!check_norm_axioms(L, t_norm, NormRole::TNorm, e).empty())
    throw Error(ErrorCode::SubOpInvalid, "p-annihilation needs a valid t-norm on [0,e]");
  const ElemSet p = p_set(L, e);
  const ElemSet below = interval(L, L.bottom(), e, Bound::Closed, Bound::Open);
  for (Elem x : p)
    for (Elem y : below)
      if (t_norm(x, y) != L.bottom()) return fail({x, y}, t_norm(x, y));
  for (Elem y : below)
    for (Elem x : p)
      if (t_norm(y, x) != L.bottom()) return fail({y, x}, t_norm(y, x));
  return {};
}

ConditionResult ie_incomp_condition(const BoundedLattice& L, Elem e) {
  require_proper_neutral(L, e);
  const ElemSet ie = incomparables(L, e);
  for (Elem x : interval(L, L.bottom(), e, Bound::Open, Bound::Closed))
    for (Elem y : ie)
      if (L.comparable(x, y)) return fail({x, y}, L.meet(x, y));
  return {};
}

ConditionResult evaluate_condition(const BoundedLattice& L, Elem e, ConditionId id, const OpTable* t_norm) {
  switch (id) {
    case ConditionId::MeetClosure: return meet_closure_condition(L, e);
    case ConditionId::JoinClosure: return join_closure_condition(L, e);
    case ConditionId::MeetNormOnIe01: return norm_on_ie01_condition(L, e, NormRole::TNorm);
    case ConditionId::JoinConormOnIe01: return norm_on_ie01_condition(L, e, NormRole::TConorm);
    case ConditionId::PAnnihilation:
      if (!t_norm) throw Error(ErrorCode::SubOpInvalid, "p-annihilation needs a t-norm");
      return p_annihilation_condition(L, e, *t_norm);
    case ConditionId::IeIncompWithZeroE: return ie_incomp_condition(L, e);
  }
  return {};
}

bool replay_condition(const BoundedLattice& L, Elem e, ConditionId id, const ConditionResult& result,
                      const OpTable* t_norm) {
  if (result.holds) return !result.witness.has_value();
  if (!result.witness) return false;
  const auto& w = *result.witness;
  if (w.elems.size() != 2) return false;
  const Elem a = w.elems[0], b = w.elems[1];
  const bool a_inc = L.incomparable(a, e), b_inc = L.incomparable(b, e);
  switch (id) {
    case ConditionId::MeetClosure:
    case ConditionId::MeetNormOnIe01:
      // Both variants fail exactly on a meet of incomparables leaving I_e ∪ {0}.
      return a_inc && b_inc && L.meet(a, b) == w.value && w.value != L.bottom() && !L.incomparable(w.value, e);
    case ConditionId::JoinClosure:
    case ConditionId::JoinConormOnIe01:
      return a_inc && b_inc && L.join(a, b) == w.value && w.value != L.top() && !L.incomparable(w.value, e);
    case ConditionId::PAnnihilation: {
      if (!t_norm || !t_norm->in_domain(a) || !t_norm->in_domain(b)) return false;
      const ElemSet p = p_set(L, e);
      const bool oriented = (contains(p, a) && L.less(b, e)) || (contains(p, b) && L.less(a, e));
      return oriented && (*t_norm)(a, b) == w.value && w.value != L.bottom();
    }
    case ConditionId::IeIncompWithZeroE:
      return a != L.bottom() && L.leq(a, e) && b_inc && L.comparable(a, b) && w.value == L.meet(a, b);
  }
  return false;
}

}  // namespace unilat
