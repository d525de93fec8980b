#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "unilat/enumerate.hpp"
#include "unilat/format.hpp"
#include "unilat/lattice.hpp"
#include "unilat/op_table.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(UNILAT_DATA_DIR) + "/" + name; }

inline unilat::BoundedLattice ex3() { return unilat::load_lattice(data_path("ex3.lat")); }
inline unilat::BoundedLattice l1() { return unilat::load_lattice(data_path("l1.lat")); }

inline unilat::BoundedLattice diamond() {
  return unilat::parse_lattice_file("elements: 0 x y 1\ncovers: 0<x 0<y x<1 y<1\n");
}

/// Every lattice with 1..n_max elements.
inline std::vector<unilat::BoundedLattice> all_lattices(std::size_t n_max) {
  std::vector<unilat::BoundedLattice> out;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto& L : unilat::enumerate_bounded_lattices(n)) out.push_back(std::move(L));
  return out;
}

inline std::vector<unilat::Elem> inner(const unilat::BoundedLattice& L) {
  std::vector<unilat::Elem> out;
  for (unilat::Elem x : L.order())
    if (x != L.bottom() && x != L.top()) out.push_back(x);
  return out;
}

/// Full n x n table; entries outside the domain are -1.
inline oracle::Table to_table(const unilat::BoundedLattice& L, const unilat::OpTable& op) {
  const int n = static_cast<int>(L.size());
  oracle::Table t(n, std::vector<int>(n, -1));
  for (unilat::Elem x : op.domain())
    for (unilat::Elem y : op.domain()) t[x.index][y.index] = op(x, y).index;
  return t;
}

}  // namespace fixtures
