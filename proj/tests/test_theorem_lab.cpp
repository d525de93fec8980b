#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <sstream>

#include "fixtures.hpp"
#include "unilat/error.hpp"
#include "unilat/theorem_lab.hpp"

using namespace unilat;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::SyntaxError;
}

/// The predicates written directly against the order relation.
struct Structure {
  bool meet_closed = true, join_closed = true, ie_incomp = true;
  std::vector<int> p, below;  // P and [0,e)
};

Structure structure(const oracle::Rel& r, int e, int bot, int top) {
  const int n = static_cast<int>(r.size());
  Structure s;
  std::vector<int> ie;
  for (int x = 0; x < n; ++x) {
    if (oracle::where(r, e, x) == 3) ie.push_back(x);
    if (x != e && r[x][e]) s.below.push_back(x);
  }
  for (int y : ie)
    for (int z : ie) {
      const int m = oracle::glb(r, y, z), j = oracle::lub(r, y, z);
      if (m != bot && oracle::where(r, e, m) != 3) s.meet_closed = false;
      if (j != top && oracle::where(r, e, j) != 3) s.join_closed = false;
    }
  for (int x : s.below) {
    if (x == bot) continue;
    bool under = false;
    for (int y : ie) under = under || r[x][y];
    if (under) s.p.push_back(x);
  }
  for (int y : ie)
    if (r[e][y] || r[y][e]) s.ie_incomp = false;
  for (int x : s.below)
    for (int y : ie)
      if (x != bot && r[x][y]) s.ie_incomp = false;
  return s;
}

bool predicted_by_oracle(TheoremId t, const Structure& s, const oracle::Table& sub, int bot) {
  switch (t) {
    case TheoremId::UT_char:
    case TheoremId::Ut_char: return s.join_closed;
    case TheoremId::US_char:
    case TheoremId::Us_char: return s.meet_closed;
    case TheoremId::UTe_char: {
      bool ann = true;
      for (int x : s.p)
        for (int y : s.below) ann = ann && sub[x][y] == bot && sub[y][x] == bot;
      return ann && s.meet_closed;
    }
    case TheoremId::USe_char: return s.ie_incomp;
  }
  return false;
}

}  // namespace

TEST_CASE("names round-trip") {
  for (TheoremId t : kAllTheorems) CHECK(parse_theorem(to_string(t)) == t);
  CHECK(code_of([] { parse_theorem("nope"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("verify on the six-element lattice") {
  const BoundedLattice L = fixtures::ex3();
  const Elem e = L.at("e");

  const Verdict ut = verify_characterization(L, e, TheoremId::UT_char, canonical_tnorm_meet(L, e));
  CHECK(ut.predicted);
  CHECK(ut.observed);

  const Verdict use = verify_characterization(L, e, TheoremId::USe_char, canonical_tconorm_join(L, e));
  CHECK_FALSE(use.predicted);
  CHECK_FALSE(use.observed);

  const Verdict ute_meet = verify_characterization(L, e, TheoremId::UTe_char, canonical_tnorm_meet(L, e));
  CHECK_FALSE(ute_meet.predicted);
  CHECK_FALSE(ute_meet.observed);

  // b ^ c = a lies in (0,e), so meet closure fails and no t-norm rescues UTe.
  const Verdict ute_drastic = verify_characterization(L, e, TheoremId::UTe_char, drastic_tnorm(L, e));
  CHECK_FALSE(ute_drastic.predicted);
  CHECK_FALSE(ute_drastic.observed);
  REQUIRE(ute_drastic.table);
  const OpTable& U = *ute_drastic.table;
  const Elem b = L.at("b"), c = L.at("c");
  CHECK(U(b, U(b, c)) != U(U(b, b), c));
  for (const auto& [id, res] : ute_drastic.conditions)
    if (id == ConditionId::PAnnihilation) CHECK(res.holds);

  for (const OpTable& t : enumerate_norms(L, e, NormRole::TNorm)) {
    const Verdict v = verify_characterization(L, e, TheoremId::UTe_char, t);
    CHECK_FALSE(v.predicted);
    CHECK_FALSE(v.observed);
  }
}

TEST_CASE("verify input errors") {
  const BoundedLattice L = fixtures::ex3();
  const Elem e = L.at("e");
  CHECK(code_of([&] { verify_characterization(L, e, TheoremId::UT_char, canonical_tconorm_join(L, e)); }) ==
        ErrorCode::RoleMismatch);
  CHECK(code_of([&] { verify_characterization(L, e, TheoremId::US_char, canonical_tnorm_meet(L, e)); }) ==
        ErrorCode::RoleMismatch);
  CHECK(code_of([&] { verify_characterization(L, L.top(), TheoremId::UT_char, canonical_tnorm_meet(L, e)); }) ==
        ErrorCode::BadNeutral);
}

TEST_CASE("verdicts agree with the brute-force oracle for every case up to n = 6") {
  std::size_t cases = 0;
  for (const BoundedLattice& L : fixtures::all_lattices(6)) {
    const oracle::Rel r = oracle::relation_of(L);
    const int n = static_cast<int>(L.size());
    const int bot = L.bottom().index, top = L.top().index;
    for (Elem e : fixtures::inner(L)) {
      const Structure s = structure(r, e.index, bot, top);
      for (TheoremId t : kAllTheorems) {
        const TheoremBinding b = binding(t);
        const std::string kind(to_string(b.kind));
        for (const OpTable& sub : sub_ops_for(L, e, required_role(b.kind), kDefaultNormCap)) {
          const oracle::Table st = fixtures::to_table(L, sub);
          oracle::Table u(n, std::vector<int>(n));
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) u[x][y] = *oracle::construction_value(kind, r, e.index, st, x, y, bot, top);
          const bool observed = oracle::check_uninorm(r, u, e.index).all();
          const bool predicted = predicted_by_oracle(t, s, st, bot);
          const Verdict v = verify_characterization(L, e, t, sub, Exec::Serial);
          CHECK(v.observed == observed);
          CHECK(v.predicted == predicted);
          CHECK(predicted == observed);
          ++cases;
        }
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("sweep at n = 3 is all vacuous and all uninorms") {
  const SweepReport rep = sweep(3, kAllTheorems);
  CHECK(rep.consistent());
  CHECK(rep.lattices_checked == 3);
  for (const CaseRecord& c : rep.cases) {
    CHECK(c.predicted);
    CHECK(c.observed);
  }
  for (const auto& [thm, branches] : rep.coverage)
    for (const auto& [name, count] : branches)
      if (count > 0 && name != "P=empty") CHECK_MESSAGE(name == "vacuous", thm << ":" << name);
}

TEST_CASE("sweep up to n = 6") {
  const SweepReport rep = sweep(6, kAllTheorems);
  CHECK(rep.consistent());
  CHECK(rep.lattices_checked == 25);
  CHECK(rep.missing_branches(kAllTheorems).empty());
  CHECK(rep.witnesses_emitted > 0);
  CHECK(rep.witnesses_replayed == rep.witnesses_emitted);
  CHECK(rep.cases.size() == rep.cases_checked);
  CHECK(rep.clause_checks > 0);
  const auto& us = rep.coverage.at("US_char");
  for (const char* b : {"vacuous", "meet=0", "meet-in-Ie", "meet-escapes"}) CHECK(us.at(b) > 0);

  std::ostringstream lines;
  rep.write_cases(lines);
  std::size_t count = 0;
  for (char ch : lines.str()) count += ch == '\n';
  CHECK(count == rep.cases.size() + 1);
}

TEST_CASE("sweep results do not depend on the thread count") {
  omp_set_num_threads(1);
  const SweepReport one = sweep(6, kAllTheorems);
  omp_set_num_threads(4);
  const SweepReport four = sweep(6, kAllTheorems);
  std::ostringstream a, b, sa, sb;
  one.write_cases(a);
  four.write_cases(b);
  one.write_summary(sa);
  four.write_summary(sb);
  CHECK(a.str() == b.str());
  CHECK(sa.str() == sb.str());
}

TEST_CASE("norm cap switches to representatives") {
  SweepOptions opt;
  opt.norm_cap = 2;
  const SweepReport rep = sweep(6, kAllTheorems, opt);
  CHECK(rep.consistent());
  CHECK(rep.representative_only_cases > 0);
  const SweepReport full = sweep(6, kAllTheorems);
  CHECK(full.representative_only_cases == 0);
  CHECK(rep.cases_checked < full.cases_checked);
}

TEST_CASE("sweep caps") {
  CHECK(code_of([] { sweep(9, kAllTheorems); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { search_counterexample(9, ConstructionKind::UT, Axiom::Monotonicity); }) ==
        ErrorCode::CapExceeded);
}

TEST_CASE("hunt") {
  const HuntResult us = search_counterexample(6, ConstructionKind::US_legacy, Axiom::Monotonicity);
  REQUIRE(us.outcome == HuntResult::Outcome::Found);
  CHECK(us.lattice->size() == 4);
  REQUIRE(us.witness);
  REQUIRE(us.sub_op);
  const Construction c = construct(*us.lattice, us.e, ConstructionKind::US_legacy, *us.sub_op);
  REQUIRE(c.ok());
  CHECK(replay_witness(*us.lattice, *c.table, *us.witness));

  const HuntResult ut = search_counterexample(6, ConstructionKind::Ut_legacy, Axiom::Associativity);
  CHECK(ut.outcome == HuntResult::Outcome::Conflict);
  CHECK_FALSE(ut.conflicts.empty());
  CHECK(ut.lattice->size() == 3);

  HuntOptions opt;
  opt.require = ConditionId::JoinClosure;
  for (Axiom a : {Axiom::Commutativity, Axiom::Associativity, Axiom::Monotonicity, Axiom::Neutrality}) {
    const HuntResult none = search_counterexample(6, ConstructionKind::UT, a, opt);
    CHECK(none.outcome == HuntResult::Outcome::NotFound);
    CHECK(none.instances_checked > 0);
  }

  HuntOptions bad;
  bad.require = ConditionId::PAnnihilation;
  CHECK(code_of([&] { search_counterexample(5, ConstructionKind::US_corrected, Axiom::Monotonicity, bad); }) ==
        ErrorCode::RoleMismatch);
}
