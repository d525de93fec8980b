#include "unilat/constructions.hpp"

#include <map>

#include "unilat/error.hpp"
#include "unilat/norms.hpp"

namespace unilat {

std::string_view to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::UT: return "UT";
    case ConstructionKind::US_corrected: return "US_corrected";
    case ConstructionKind::Ut_corrected: return "Ut_corrected";
    case ConstructionKind::Us_corrected: return "Us_corrected";
    case ConstructionKind::UTe: return "UTe";
    case ConstructionKind::USe: return "USe";
    case ConstructionKind::USe_corrected: return "USe_corrected";
    case ConstructionKind::US_legacy: return "US_legacy";
    case ConstructionKind::Ut_legacy: return "Ut_legacy";
    case ConstructionKind::Us_legacy: return "Us_legacy";
  }
  return "?";
}

ConstructionKind parse_kind(std::string_view name) {
  for (ConstructionKind k : kAllKinds)
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::SyntaxError, "unknown construction kind '" + std::string(name) + "'");
}

bool is_legacy(ConstructionKind k) {
  return k == ConstructionKind::US_legacy || k == ConstructionKind::Ut_legacy || k == ConstructionKind::Us_legacy;
}

NormRole required_role(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::UT:
    case ConstructionKind::Ut_corrected:
    case ConstructionKind::Ut_legacy:
    case ConstructionKind::UTe: return NormRole::TNorm;
    default: return NormRole::TConorm;
  }
}

namespace {

using namespace region;

std::string factor_name(CoordMask m) {
  switch (m) {
    case kBelowOpen: return "[0,e)";
    case kBelowClosed: return "[0,e]";
    case kAboveOpen: return "(e,1]";
    case kAboveClosed: return "[e,1]";
    case kIncomp: return "I_e";
    default: return "?";
  }
}

std::string rule_name(ValueRule r, NormRole role) {
  switch (r) {
    case ValueRule::ApplySubOp: return role == NormRole::TNorm ? "T_e(x,y)" : "S_e(x,y)";
    case ValueRule::TakeFirst: return "x";
    case ValueRule::TakeSecond: return "y";
    case ValueRule::MeetOf: return "x^y";
    case ValueRule::JoinOf: return "xvy";
    case ValueRule::ConstBottom: return "0";
    case ValueRule::ConstTop: return "1";
  }
  return "?";
}

PiecewiseCase make_case(std::vector<RegionBox> boxes, ValueRule rule, NormRole role) {
  PiecewiseCase c;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& b = boxes[i];
    c.label += (i ? " u " : "");
    c.label += b.first == b.second ? factor_name(b.first) + "^2" : factor_name(b.first) + "x" + factor_name(b.second);
  }
  c.label += " -> " + rule_name(rule, role);
  c.boxes = std::move(boxes);
  c.rule = rule;
  for (std::size_t p = 0; p < 16; ++p) {
    const RegionPair rp{static_cast<Coord>(p / 4), static_cast<Coord>(p % 4)};
    for (const auto& b : c.boxes) c.matches[p] = c.matches[p] || b.contains(rp);
  }
  return c;
}

PiecewiseCase otherwise_case(ValueRule rule, NormRole role, const std::vector<PiecewiseCase>& prior) {
  PiecewiseCase c;
  c.label = "otherwise -> " + rule_name(rule, role);
  c.otherwise = true;
  c.rule = rule;
  for (std::size_t p = 0; p < 16; ++p) {
    bool covered = false;
    for (const auto& other : prior) covered = covered || other.matches[p];
    c.matches[p] = !covered;
  }
  return c;
}

PiecewiseSpec build_spec(ConstructionKind kind) {
  const NormRole role = required_role(kind);
  using R = ValueRule;
  auto box = [](CoordMask a, CoordMask b) { return RegionBox{a, b}; };
  // A(e) = ([0,e] x [e,1]) u ([e,1] x [0,e])
  const std::vector<RegionBox> a_of_e_and_ii = {box(kBelowClosed, kAboveClosed), box(kAboveClosed, kBelowClosed),
                                                box(kIncomp, kIncomp)};
  std::vector<PiecewiseCase> cs;
  auto add = [&](std::vector<RegionBox> boxes, R rule) { cs.push_back(make_case(std::move(boxes), rule, role)); };
  R last = R::JoinOf;
  switch (kind) {
    case ConstructionKind::UT:
      add({box(kBelowClosed, kBelowClosed)}, R::ApplySubOp);
      add({box(kAboveOpen, kAboveOpen)}, R::ConstTop);
      add({box(kBelowClosed, kIncomp)}, R::TakeSecond);
      add({box(kIncomp, kBelowClosed)}, R::TakeFirst);
      last = R::JoinOf;
      break;
    case ConstructionKind::US_legacy:
      add({box(kBelowOpen, kBelowOpen)}, R::ConstBottom);
      add({box(kAboveClosed, kAboveClosed)}, R::ApplySubOp);
      add({box(kBelowClosed, kIncomp)}, R::TakeSecond);
      add({box(kIncomp, kBelowClosed)}, R::TakeFirst);
      last = R::MeetOf;
      break;
    case ConstructionKind::Ut_legacy:
      add({box(kBelowClosed, kBelowClosed)}, R::ApplySubOp);
      add(a_of_e_and_ii, R::JoinOf);
      add({box(kBelowClosed, kIncomp)}, R::TakeSecond);
      add({box(kIncomp, kBelowClosed)}, R::TakeFirst);
      last = R::ConstTop;
      break;
    case ConstructionKind::Us_legacy:
      add({box(kAboveClosed, kAboveClosed)}, R::ApplySubOp);
      add(a_of_e_and_ii, R::MeetOf);
      add({box(kAboveClosed, kIncomp)}, R::TakeSecond);
      add({box(kIncomp, kAboveClosed)}, R::TakeFirst);
      last = R::ConstBottom;
      break;
    case ConstructionKind::US_corrected:
      add({box(kBelowOpen, kBelowOpen)}, R::ConstBottom);
      add({box(kAboveClosed, kAboveClosed)}, R::ApplySubOp);
      add({box(kAboveClosed, kIncomp)}, R::TakeSecond);
      add({box(kIncomp, kAboveClosed)}, R::TakeFirst);
      last = R::MeetOf;
      break;
    case ConstructionKind::Ut_corrected:
      add({box(kBelowClosed, kBelowClosed)}, R::ApplySubOp);
      add({box(kBelowClosed, kAboveOpen), box(kAboveOpen, kBelowClosed), box(kIncomp, kIncomp)}, R::JoinOf);
      add({box(kBelowClosed, kIncomp)}, R::TakeSecond);
      add({box(kIncomp, kBelowClosed)}, R::TakeFirst);
      last = R::ConstTop;
      break;
    case ConstructionKind::Us_corrected:
      add({box(kAboveClosed, kAboveClosed)}, R::ApplySubOp);
      add({box(kBelowOpen, kAboveClosed), box(kAboveClosed, kBelowOpen), box(kIncomp, kIncomp)}, R::MeetOf);
      add({box(kAboveClosed, kIncomp)}, R::TakeSecond);
      add({box(kIncomp, kAboveClosed)}, R::TakeFirst);
      last = R::ConstBottom;
      break;
    case ConstructionKind::UTe:
    case ConstructionKind::USe:
    case ConstructionKind::USe_corrected:
      if (kind == ConstructionKind::UTe)
        add({box(kBelowClosed, kBelowClosed)}, R::ApplySubOp);
      else
        add({box(kAboveClosed, kAboveClosed)}, R::ApplySubOp);
      add({box(kAboveClosed, kIncomp)}, R::TakeSecond);
      add({box(kIncomp, kAboveClosed)}, R::TakeFirst);
      add({box(kBelowOpen, kIncomp), box(kIncomp, kBelowOpen)}, R::ConstBottom);
      add({box(kBelowOpen, kAboveClosed), box(kAboveClosed, kBelowOpen), box(kIncomp, kIncomp)}, R::MeetOf);
      // As displayed, the remaining block [0,e)^2 takes x v y; the corrected
      // kind takes x ^ y there.
      last = kind == ConstructionKind::USe_corrected ? R::MeetOf : R::JoinOf;
      break;
  }
  cs.push_back(otherwise_case(last, role, cs));
  return PiecewiseSpec{kind, std::move(cs)};
}

Elem apply_rule(const BoundedLattice& L, ValueRule rule, const OpTable& sub_op, Elem x, Elem y) {
  switch (rule) {
    case ValueRule::ApplySubOp: return sub_op(x, y);
    case ValueRule::TakeFirst: return x;
    case ValueRule::TakeSecond: return y;
    case ValueRule::MeetOf: return L.meet(x, y);
    case ValueRule::JoinOf: return L.join(x, y);
    case ValueRule::ConstBottom: return L.bottom();
    case ValueRule::ConstTop: return L.top();
  }
  return x;
}

void require_valid_sub_op(const BoundedLattice& L, Elem e, ConstructionKind kind, const OpTable& sub_op) {
  require_proper_neutral(L, e);
  const NormRole role = required_role(kind);
  const auto witnesses = check_norm_axioms(L, sub_op, role, e);
  if (!witnesses.empty())
    throw Error(ErrorCode::SubOpInvalid, "sub-operation is not a " + std::string(to_string(role)) + " (fails " +
                                             std::string(to_string(witnesses.front().axiom)) + ")");
}

// Evaluates every matching case at (x,y); appends a report per disagreeing
// pair of cases. Returns the first case's value.
Elem evaluate_pair(const BoundedLattice& L, const PiecewiseSpec& spec, const Regions& regions, const OpTable& sub_op,
                   Elem x, Elem y, std::vector<ConflictReport>& conflicts) {
  const auto cases = matching_cases(spec, regions.of(x, y));
  std::vector<Elem> values;
  values.reserve(cases.size());
  for (std::size_t c : cases) values.push_back(apply_rule(L, spec.cases[c].rule, sub_op, x, y));
  for (std::size_t a = 0; a < cases.size(); ++a)
    for (std::size_t b = a + 1; b < cases.size(); ++b)
      if (values[a] != values[b]) conflicts.push_back(ConflictReport{x, y, cases[a], values[a], cases[b], values[b]});
  return values.front();
}

}  // namespace

const PiecewiseSpec& piecewise_spec(ConstructionKind kind) {
  static const std::map<ConstructionKind, PiecewiseSpec> specs = [] {
    std::map<ConstructionKind, PiecewiseSpec> m;
    for (ConstructionKind k : kAllKinds) m.emplace(k, build_spec(k));
    return m;
  }();
  return specs.at(kind);
}

std::vector<std::size_t> matching_cases(const PiecewiseSpec& spec, RegionPair p) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < spec.cases.size(); ++c)
    if (spec.cases[c].matches_pair(p)) out.push_back(c);
  return out;
}

CaseAudit audit_cases(ConstructionKind kind) {
  const auto& spec = piecewise_spec(kind);
  CaseAudit audit;
  for (std::size_t p = 0; p < 16; ++p) {
    const RegionPair rp{static_cast<Coord>(p / 4), static_cast<Coord>(p % 4)};
    auto cases = matching_cases(spec, rp);
    if (cases.empty()) audit.gaps.push_back(rp);
    if (cases.size() > 1) audit.overlaps.push_back({rp, std::move(cases)});
  }
  return audit;
}

Construction construct(const BoundedLattice& L, Elem e, ConstructionKind kind, const OpTable& sub_op) {
  require_valid_sub_op(L, e, kind, sub_op);
  const auto& spec = piecewise_spec(kind);
  const Regions regions(L, e);
  Construction out;
  const ElemSet carrier(L.order().begin(), L.order().end());
  std::vector<Elem> values;
  values.reserve(carrier.size() * carrier.size());
  for (Elem x : carrier)
    for (Elem y : carrier) values.push_back(evaluate_pair(L, spec, regions, sub_op, x, y, out.conflicts));
  if (out.conflicts.empty()) out.table.emplace(L, carrier, std::move(values), e);
  return out;
}

Elem evaluate(const BoundedLattice& L, Elem e, ConstructionKind kind, const OpTable& sub_op, Elem x, Elem y) {
  require_valid_sub_op(L, e, kind, sub_op);
  std::vector<ConflictReport> conflicts;
  const Elem v = evaluate_pair(L, piecewise_spec(kind), Regions(L, e), sub_op, x, y, conflicts);
  if (!conflicts.empty()) {
    const auto& c = conflicts.front();
    const auto& spec = piecewise_spec(kind);
    throw Error(ErrorCode::ConflictAt, "(" + L.label(x) + "," + L.label(y) + "): case '" + spec.cases[c.case_a].label +
                                           "' gives " + L.label(c.value_a) + ", case '" + spec.cases[c.case_b].label +
                                           "' gives " + L.label(c.value_b));
  }
  return v;
}

}  // namespace unilat
