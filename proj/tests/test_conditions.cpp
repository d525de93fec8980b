#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "unilat/conditions.hpp"
#include "unilat/error.hpp"
#include "unilat/norms.hpp"

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

std::vector<Elem> elems(const BoundedLattice& L, std::initializer_list<const char*> names) {
  std::vector<Elem> out;
  for (const char* s : names) out.push_back(L.at(s));
  return out;
}

}  // namespace

TEST_CASE("meet closure") {
  const BoundedLattice l = fixtures::l1();
  CHECK(meet_closure_condition(l, l.at("e")).holds);
  const BoundedLattice c = chain_lattice(4);
  CHECK(meet_closure_condition(c, c.at("m1")).holds);
  const BoundedLattice ex = fixtures::ex3();
  const auto r = meet_closure_condition(ex, ex.at("e"));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->elems == elems(ex, {"b", "c"}));
  CHECK(r.witness->value == ex.at("a"));
  CHECK(code_of([&] { meet_closure_condition(ex, ex.top()); }) == ErrorCode::BadNeutral);
}

TEST_CASE("join closure") {
  const BoundedLattice ex = fixtures::ex3();
  CHECK(join_closure_condition(ex, ex.at("e")).holds);
  const BoundedLattice c = chain_lattice(4);
  CHECK(join_closure_condition(c, c.at("m2")).holds);
  // y, z incomparable with e, y v z strictly between e and 1
  const BoundedLattice L =
      parse_lattice_file("elements: 0 e y z w 1\ncovers: 0<e 0<y 0<z e<w y<w z<w w<1\n");
  const auto r = join_closure_condition(L, L.at("e"));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->value == L.at("w"));
}

TEST_CASE("norm on I_e u {0,1}") {
  const BoundedLattice ex = fixtures::ex3();
  CHECK(norm_on_ie01_condition(ex, ex.at("e"), NormRole::TConorm).holds);
  const auto m = norm_on_ie01_condition(ex, ex.at("e"), NormRole::TNorm);
  CHECK_FALSE(m.holds);
  REQUIRE(m.witness);
  CHECK(m.witness->value == ex.at("a"));
  const BoundedLattice c = chain_lattice(3);
  CHECK(norm_on_ie01_condition(c, c.at("m1"), NormRole::TNorm).holds);
  CHECK(norm_on_ie01_condition(c, c.at("m1"), NormRole::TConorm).holds);
}

TEST_CASE("P set") {
  const BoundedLattice ex = fixtures::ex3();
  CHECK(p_set(ex, ex.at("e")) == elems(ex, {"a"}));
  const BoundedLattice l = fixtures::l1();
  CHECK(p_set(l, l.at("e")).empty());
  const BoundedLattice c = chain_lattice(5);
  CHECK(p_set(c, c.at("m3")).empty());
}

TEST_CASE("P annihilation") {
  const BoundedLattice ex = fixtures::ex3();
  const Elem e = ex.at("e");
  const auto m = p_annihilation_condition(ex, e, canonical_tnorm_meet(ex, e));
  CHECK_FALSE(m.holds);
  REQUIRE(m.witness);
  CHECK(m.witness->elems == elems(ex, {"a", "a"}));
  CHECK(m.witness->value == ex.at("a"));
  CHECK(p_annihilation_condition(ex, e, drastic_tnorm(ex, e)).holds);

  const BoundedLattice l = fixtures::l1();
  for (const OpTable& t : enumerate_norms(l, l.at("e"), NormRole::TNorm))
    CHECK(p_annihilation_condition(l, l.at("e"), t).holds);

  CHECK(code_of([&] { p_annihilation_condition(ex, e, canonical_tconorm_join(ex, e)); }) ==
        ErrorCode::DomainMismatch);
  const OpTable bad = OpTable::tabulate(ex, norm_domain(ex, e, NormRole::TNorm), [&](Elem x, Elem y) {
    return x == e ? y : (y == e ? x : e);
  });
  CHECK(code_of([&] { p_annihilation_condition(ex, e, bad); }) == ErrorCode::SubOpInvalid);
}

TEST_CASE("I_e incomparable with (0,e]") {
  const BoundedLattice ex = fixtures::ex3();
  const auto r = ie_incomp_condition(ex, ex.at("e"));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->elems == elems(ex, {"a", "b"}));
  const BoundedLattice d = fixtures::diamond();
  CHECK(ie_incomp_condition(d, d.at("x")).holds);
  const BoundedLattice c = chain_lattice(4);
  CHECK(ie_incomp_condition(c, c.at("m1")).holds);
}

TEST_CASE("conditions against direct scans on every lattice up to n = 6") {
  for (const BoundedLattice& L : fixtures::all_lattices(6)) {
    const oracle::Rel r = oracle::relation_of(L);
    const int n = static_cast<int>(L.size());
    const int bot = L.bottom().index, top = L.top().index;
    for (Elem e : fixtures::inner(L)) {
      const int ei = e.index;
      std::vector<int> ie, open_below;
      for (int x = 0; x < n; ++x) {
        if (oracle::where(r, ei, x) == 3) ie.push_back(x);
        if (x != bot && x != ei && r[x][ei]) open_below.push_back(x);
      }
      bool meet_ok = true, join_ok = true;
      for (int y : ie)
        for (int z : ie) {
          const int m = oracle::glb(r, y, z), j = oracle::lub(r, y, z);
          if (m != bot && oracle::where(r, ei, m) != 3) meet_ok = false;
          if (j != top && oracle::where(r, ei, j) != 3) join_ok = false;
        }
      std::vector<int> p;
      for (int x : open_below)
        for (int y : ie)
          if (r[x][y]) {
            p.push_back(x);
            break;
          }
      bool incomp = true;
      for (int x = 0; x < n; ++x)
        if (x != bot && r[x][ei])
          for (int y : ie)
            if (r[x][y] || r[y][x]) incomp = false;

      const auto mc = meet_closure_condition(L, e);
      const auto jc = join_closure_condition(L, e);
      const auto mn = norm_on_ie01_condition(L, e, NormRole::TNorm);
      const auto jn = norm_on_ie01_condition(L, e, NormRole::TConorm);
      const auto ic = ie_incomp_condition(L, e);
      CHECK(mc.holds == meet_ok);
      CHECK(jc.holds == join_ok);
      CHECK(mn.holds == meet_ok);
      CHECK(jn.holds == join_ok);
      CHECK(ic.holds == incomp);
      CHECK(p_set(L, e).size() == p.size());
      if (ic.holds) CHECK(p_set(L, e).empty());
      CHECK(ic.holds == p_set(L, e).empty());

      const std::pair<ConditionId, ConditionResult> results[] = {{ConditionId::MeetClosure, mc},
                                                                 {ConditionId::JoinClosure, jc},
                                                                 {ConditionId::MeetNormOnIe01, mn},
                                                                 {ConditionId::JoinConormOnIe01, jn},
                                                                 {ConditionId::IeIncompWithZeroE, ic}};
      for (const auto& [id, res] : results) {
        CHECK(res.holds != res.witness.has_value());
        CHECK(replay_condition(L, e, id, res));
        CHECK(evaluate_condition(L, e, id).holds == res.holds);
      }
      for (const OpTable& t : enumerate_norms(L, e, NormRole::TNorm)) {
        bool annihilated = true;
        for (int x : p)
          for (Elem y : interval(L, L.bottom(), e, Bound::Closed, Bound::Open))
            if (t(Elem(x), y) != L.bottom() || t(y, Elem(x)) != L.bottom()) annihilated = false;
        const auto pa = p_annihilation_condition(L, e, t);
        CHECK(pa.holds == annihilated);
        CHECK(replay_condition(L, e, ConditionId::PAnnihilation, pa, &t));
      }
    }
  }
}

TEST_CASE("replay rejects forged witnesses") {
  const BoundedLattice ex = fixtures::ex3();
  ConditionResult forged{false, ConditionWitness{elems(ex, {"b", "b"}), ex.at("b")}};
  CHECK_FALSE(replay_condition(ex, ex.at("e"), ConditionId::MeetClosure, forged));
  ConditionResult ok{true, std::nullopt};
  CHECK(replay_condition(ex, ex.at("e"), ConditionId::JoinClosure, ok));
}
