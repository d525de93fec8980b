#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "unilat/error.hpp"

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

ElemSet labelled(const BoundedLattice& L, std::initializer_list<const char*> names) {
  ElemSet out;
  for (const char* s : names) out.push_back(L.at(s));
  L.normalize(out);
  return out;
}

}  // namespace

TEST_CASE("build_poset closes the cover relation") {
  const std::vector<std::string> labels = {"0", "e", "a", "b", "1"};
  const std::vector<CoverPair> covers = {{"0", "e"}, {"e", "a"}, {"a", "1"}, {"0", "b"}, {"b", "a"}};
  const Poset p = build_poset(labels, covers);
  CHECK(p.size() == 5);
  CHECK(p.leq(p.at("0"), p.at("1")));
  CHECK(p.leq(p.at("b"), p.at("1")));
  CHECK_FALSE(p.comparable(p.at("b"), p.at("e")));
}

TEST_CASE("singleton poset") {
  const std::vector<std::string> labels = {"0"};
  const Poset p = build_poset(labels, {});
  CHECK(p.size() == 1);
  CHECK(p.leq(Elem(0), Elem(0)));
  const BoundedLattice L = validate_bounded_lattice(p);
  CHECK(L.bottom() == L.top());
}

TEST_CASE("build_poset errors") {
  const std::vector<std::string> two = {"0", "1"};
  const std::vector<CoverPair> cyc = {{"0", "1"}, {"1", "0"}};
  CHECK(code_of([&] { build_poset(two, cyc); }) == ErrorCode::CycleDetected);
  try {
    build_poset(two, cyc);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("0<1<0") != std::string::npos);
  }
  const std::vector<CoverPair> self = {{"0", "0"}};
  CHECK(code_of([&] { build_poset(two, self); }) == ErrorCode::CycleDetected);
  const std::vector<std::string> dup = {"0", "0"};
  CHECK(code_of([&] { build_poset(dup, {}); }) == ErrorCode::DuplicateLabel);
  const std::vector<CoverPair> unknown = {{"0", "z"}};
  CHECK(code_of([&] { build_poset(two, unknown); }) == ErrorCode::UnknownLabel);
  CHECK(code_of([&] { build_poset({}, {}); }) == ErrorCode::EmptyCarrier);
}

TEST_CASE("validate_bounded_lattice on the six-element fixture") {
  const BoundedLattice L = fixtures::ex3();
  CHECK(L.label(L.meet(L.at("b"), L.at("c"))) == "a");
  CHECK(L.label(L.join(L.at("b"), L.at("c"))) == "1");
  CHECK(L.label(L.bottom()) == "0");
  CHECK(L.label(L.top()) == "1");
}

TEST_CASE("validate_bounded_lattice rejections") {
  const std::vector<std::string> v = {"0", "x", "y"};
  const std::vector<CoverPair> c = {{"0", "x"}, {"0", "y"}};
  CHECK(code_of([&] { validate_bounded_lattice(build_poset(v, c)); }) == ErrorCode::NotBounded);

  // Bounded, but c and d share two maximal lower bounds.
  const std::vector<std::string> w = {"0", "a", "b", "c", "d", "1"};
  const std::vector<CoverPair> wc = {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
                                     {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}};
  const ErrorCode code = code_of([&] { validate_bounded_lattice(build_poset(w, wc)); });
  CHECK((code == ErrorCode::NoMeet || code == ErrorCode::NoJoin));
  std::optional<Error> err;
  CHECK_FALSE(try_validate_bounded_lattice(build_poset(w, wc), &err));
  REQUIRE(err);
}

TEST_CASE("diamond") {
  const BoundedLattice L = fixtures::diamond();
  CHECK(L.meet(L.at("x"), L.at("y")) == L.bottom());
  CHECK(L.join(L.at("x"), L.at("y")) == L.top());
}

TEST_CASE("meet and join lookups") {
  const BoundedLattice L = fixtures::l1();
  CHECK(L.label(L.join(L.at("e"), L.at("b"))) == "a");
  for (std::size_t i = 0; i < L.size(); ++i) {
    CHECK(L.meet(Elem(i), Elem(i)) == Elem(i));
    CHECK(L.join(Elem(i), Elem(i)) == Elem(i));
  }
}

TEST_CASE("interval") {
  const BoundedLattice ex = fixtures::ex3();
  CHECK(interval(ex, ex.bottom(), ex.at("e")) == labelled(ex, {"0", "a", "e"}));
  CHECK(interval(ex, ex.at("a"), ex.at("a")) == labelled(ex, {"a"}));
  const BoundedLattice l = fixtures::l1();
  CHECK(interval(l, l.bottom(), l.at("e"), Bound::Open, Bound::Open).empty());
  CHECK(code_of([&] { interval(ex, ex.at("b"), ex.at("c")); }) == ErrorCode::NotComparable);
}

TEST_CASE("incomparables") {
  const BoundedLattice l = fixtures::l1();
  CHECK(incomparables(l, l.at("e")) == labelled(l, {"b"}));
  const BoundedLattice ex = fixtures::ex3();
  CHECK(incomparables(ex, ex.at("e")) == labelled(ex, {"b", "c"}));
  const BoundedLattice ch = chain_lattice(5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(incomparables(ch, Elem(i)).empty());
}

TEST_CASE("sets_incomparable") {
  const BoundedLattice ex = fixtures::ex3();
  const ElemSet ie = labelled(ex, {"b", "c"});
  const ElemSet low = labelled(ex, {"a", "e"});
  CHECK_FALSE(sets_incomparable(ex, ie, low));
  CHECK(sets_incomparable(ex, ElemSet{}, low));
  const BoundedLattice d = fixtures::diamond();
  CHECK(sets_incomparable(d, labelled(d, {"y"}), labelled(d, {"x"})));
}

TEST_CASE("classify") {
  const BoundedLattice ex = fixtures::ex3();
  CHECK(classify(ex, ex.at("e"), ex.at("b")) == Coord::Incomp);
  CHECK(classify(ex, ex.at("e"), ex.at("e")) == Coord::Equal);
  const BoundedLattice l = fixtures::l1();
  CHECK(classify_pair(l, l.at("e"), l.at("0"), l.at("a")) == RegionPair{Coord::Below, Coord::Above});
}

TEST_CASE("singleton and two-element lattices") {
  CHECK(chain_lattice(1).size() == 1);
  const BoundedLattice two = chain_lattice(2);
  CHECK(two.less(two.bottom(), two.top()));
}

TEST_CASE("product lattice") {
  const BoundedLattice sq = product_lattice(chain_lattice(2), chain_lattice(2));
  CHECK(sq.size() == 4);
  CHECK(oracle::isomorphic(oracle::relation_of(sq), oracle::relation_of(fixtures::diamond())));
}

TEST_CASE("properties over every lattice with at most six elements") {
  for (const BoundedLattice& L : fixtures::all_lattices(6)) {
    const oracle::Rel r = oracle::relation_of(L);
    const std::size_t n = L.size();
    CHECK(oracle::is_partial_order(r));
    for (std::size_t i = 0; i < n; ++i) {
      const Elem x(i);
      CHECK(L.leq(L.bottom(), x));
      CHECK(L.leq(x, L.top()));
      for (std::size_t j = 0; j < n; ++j) {
        const Elem y(j);
        // bound tables equal the brute-force scan
        CHECK(L.meet(x, y).index == oracle::glb(r, static_cast<int>(i), static_cast<int>(j)));
        CHECK(L.join(x, y).index == oracle::lub(r, static_cast<int>(i), static_cast<int>(j)));
        CHECK(L.meet(x, y) == L.meet(y, x));
        CHECK(L.meet(x, L.join(x, y)) == x);
        CHECK(L.join(x, L.meet(x, y)) == x);
        CHECK((L.meet(x, y) == x) == L.leq(x, y));
        for (std::size_t k = 0; k < n; ++k) {
          const Elem z(k);
          CHECK(L.meet(x, L.meet(y, z)) == L.meet(L.meet(x, y), z));
          CHECK(L.join(x, L.join(y, z)) == L.join(L.join(x, y), z));
        }
      }
    }

    // order() is a linear extension
    const auto ord = L.order();
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) CHECK_FALSE(L.less(ord[q], ord[p]));

    // covers round-trip through build_poset
    std::vector<CoverPair> covers;
    for (auto [lo, hi] : L.poset().covers()) covers.emplace_back(L.label(lo), L.label(hi));
    std::vector<std::string> labels(L.poset().labels().begin(), L.poset().labels().end());
    const Poset rebuilt = build_poset(labels, covers);
    CHECK(std::equal(rebuilt.relation().begin(), rebuilt.relation().end(), L.poset().relation().begin()));
    std::set<std::pair<Elem, Elem>> again;
    for (auto c : rebuilt.covers()) again.insert(c);
    std::set<std::pair<Elem, Elem>> first;
    for (auto c : L.poset().covers()) first.insert(c);
    CHECK(again == first);

    for (std::size_t ei = 0; ei < n; ++ei) {
      const Elem e(ei);
      const Regions regions(L, e);
      ElemSet below_eq, above_eq, inc;
      for (std::size_t i = 0; i < n; ++i) {
        const Elem x(i);
        const Coord c = classify(L, e, x);
        CHECK(regions.of(x) == c);
        CHECK((c == Coord::Below) == L.less(x, e));
        CHECK((c == Coord::Above) == L.less(e, x));
        CHECK((c == Coord::Equal) == (x == e));
        if (c == Coord::Below || c == Coord::Equal) below_eq.push_back(x);
        if (c == Coord::Above || c == Coord::Equal) above_eq.push_back(x);
        if (c == Coord::Incomp) inc.push_back(x);
      }
      L.normalize(below_eq);
      L.normalize(above_eq);
      L.normalize(inc);
      CHECK(below_eq == interval(L, L.bottom(), e));
      CHECK(above_eq == interval(L, e, L.top()));
      CHECK(inc == incomparables(L, e));
      ElemSet closed = interval(L, L.bottom(), e);
      closed.erase(std::remove(closed.begin(), closed.end(), e), closed.end());
      CHECK(closed == interval(L, L.bottom(), e, Bound::Closed, Bound::Open));
    }
  }
}
