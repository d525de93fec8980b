#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unilat/conditions.hpp"
#include "unilat/constructions.hpp"
#include "unilat/lattice.hpp"
#include "unilat/op_table.hpp"

namespace unilat {

// The .lat text format, one directive per line, '#' starts a comment:
//
//   elements: 0 a b c e 1
//   covers: 0<a a<b a<c a<e b<1 c<1 e<1
//   bottom: 0
//   top: 1
//
// `elements:` and `covers:` may repeat (their tokens accumulate); a cover
// token may be a chain such as 0<a<1. `bottom:` and `top:` are optional but
// must match the computed bounds when present.

struct LatticeFile {
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  std::vector<std::size_t> cover_lines;  // source line of each cover
  std::optional<std::string> bottom;
  std::optional<std::string> top;
};

/// Syntax only. Throws SyntaxError with line and column.
LatticeFile parse_lattice_text(std::string_view text);

/// Parse, close, validate. Lattice-core errors are forwarded (cycles gain the
/// line of an offending cover); declared bounds that disagree raise
/// BoundTopMismatch.
BoundedLattice parse_lattice_file(std::string_view text);

/// Reads and parses a file; an unreadable path is a SyntaxError.
BoundedLattice load_lattice(const std::filesystem::path& path);

/// Declaration order, transitive reduction, bottom and top.
std::string serialize_lattice(const BoundedLattice& L);

/// Tab-separated grid with a header row and a header column of labels.
/// `order` must be a permutation of U's domain (BadOrder otherwise).
std::string render_cayley_table(const BoundedLattice& L, const OpTable& U, std::span<const Elem> order,
                                std::string_view corner = "");

/// Hasse diagram, bottom at the bottom.
std::string export_dot(const BoundedLattice& L, std::string_view graph_name = "lattice");

/// "x*y=v" entries over the domain, space separated, for one-line logs.
std::string render_compact(const BoundedLattice& L, const OpTable& U);

std::string describe(const BoundedLattice& L, const AxiomWitness& w);
std::string describe(const BoundedLattice& L, const ConditionWitness& w);
std::string describe(const BoundedLattice& L, const PiecewiseSpec& spec, const ConflictReport& c);

}  // namespace unilat
