#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "unilat/enumerate.hpp"
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

/// Same order, labels and declaration order shuffled.
BoundedLattice relabelled(const BoundedLattice& L, std::mt19937& rng) {
  const std::size_t n = L.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[perm[i]] = "v" + std::to_string(i);
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[perm[i] * n + perm[j]] = L.leq(Elem(i), Elem(j));
  return validate_bounded_lattice(Poset::from_relation(labels, rel));
}

}  // namespace

TEST_CASE("lattice counts") {
  const std::size_t known[] = {1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(enumerate_bounded_lattices(n).size() == known[n - 1]);
}

TEST_CASE("counts match the permutation-dedup oracle for n <= 5") {
  for (int n = 1; n <= 5; ++n)
    CHECK(enumerate_bounded_lattices(static_cast<std::size_t>(n)).size() == oracle::count_lattices(n));
}

TEST_CASE("certificates are unique and the enumeration is deterministic") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto a = enumerate_bounded_lattices(n);
    const auto b = enumerate_bounded_lattices(n);
    std::set<CanonicalForm> certs;
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      certs.insert(canonical_form(a[i]));
      CHECK(canonical_form(a[i]) == canonical_form(b[i]));
      CHECK(std::equal(a[i].poset().relation().begin(), a[i].poset().relation().end(),
                       b[i].poset().relation().begin()));
    }
    CHECK(certs.size() == a.size());
  }
}

TEST_CASE("certificate equality matches isomorphism") {
  std::vector<BoundedLattice> pool = fixtures::all_lattices(5);
  std::mt19937 rng(17);
  const std::size_t base = pool.size();
  for (std::size_t i = 0; i < base; ++i) pool.push_back(relabelled(pool[i], rng));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      const bool iso = oracle::isomorphic(oracle::relation_of(pool[i]), oracle::relation_of(pool[j]));
      CHECK((canonical_form(pool[i]) == canonical_form(pool[j])) == iso);
    }
}

TEST_CASE("certificates survive relabelling at n = 6 and n = 7") {
  std::mt19937 rng(23);
  for (std::size_t n : {6u, 7u})
    for (const BoundedLattice& L : enumerate_bounded_lattices(n))
      for (int k = 0; k < 3; ++k) CHECK(canonical_form(relabelled(L, rng)) == canonical_form(L));
}

TEST_CASE("natural labels") {
  const auto ls = enumerate_bounded_lattices(6);
  for (const BoundedLattice& L : ls) {
    CHECK(L.label(L.bottom()) == "0");
    CHECK(L.label(L.top()) == "1");
    for (std::size_t i = 0; i < L.size(); ++i) CHECK(L.label(Elem(i)) != "e");
  }
}

TEST_CASE("caps") {
  CHECK(code_of([] { enumerate_bounded_lattices(0); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { enumerate_bounded_lattices(8); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { enumerate_bounded_lattices(5, 9); }) == ErrorCode::CapExceeded);
}

TEST_CASE("hex certificate") {
  const auto h = canonical_form(chain_lattice(2)).hex();
  CHECK(h.substr(0, 4) == "0002");
}
