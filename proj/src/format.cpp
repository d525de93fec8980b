#include "unilat/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "unilat/error.hpp"

namespace unilat {

namespace {

constexpr std::string_view kSpace = " \t\r";

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

struct Token {
  std::string_view text;
  std::size_t col;  // 1-based
};

std::vector<Token> split_tokens(std::string_view s, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    i = s.find_first_not_of(kSpace, i);
    if (i == std::string_view::npos) break;
    std::size_t j = s.find_first_of(kSpace, i);
    if (j == std::string_view::npos) j = s.size();
    out.push_back({s.substr(i, j - i), offset + i + 1});
    i = j;
  }
  return out;
}

void check_label(const Token& t, std::size_t line) {
  if (t.text.find_first_of("<:#") != std::string_view::npos)
    syntax_error(line, t.col, "bad label '" + std::string(t.text) + "'");
}

}  // namespace

LatticeFile parse_lattice_text(std::string_view text) {
  LatticeFile file;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(kSpace) == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }

    const std::size_t key_at = line.find_first_not_of(kSpace);
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) syntax_error(line_no, key_at + 1, "expected 'key:'");
    std::string_view key = line.substr(key_at, colon - key_at);
    key = key.substr(0, key.find_last_not_of(kSpace) + 1);
    const auto tokens = split_tokens(line.substr(colon + 1), colon + 1);

    if (key == "elements") {
      for (const auto& t : tokens) {
        check_label(t, line_no);
        file.labels.emplace_back(t.text);
      }
    } else if (key == "covers") {
      for (const auto& t : tokens) {
        std::vector<std::string_view> parts;
        std::size_t p = 0;
        while (true) {
          const std::size_t q = t.text.find('<', p);
          parts.push_back(t.text.substr(p, q == std::string_view::npos ? std::string_view::npos : q - p));
          if (q == std::string_view::npos) break;
          p = q + 1;
        }
        if (parts.size() < 2) syntax_error(line_no, t.col, "expected 'x<y', got '" + std::string(t.text) + "'");
        for (const auto& part : parts)
          if (part.empty() || part.find(':') != std::string_view::npos)
            syntax_error(line_no, t.col, "malformed cover '" + std::string(t.text) + "'");
        for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
          file.covers.emplace_back(std::string(parts[k]), std::string(parts[k + 1]));
          file.cover_lines.push_back(line_no);
        }
      }
    } else if (key == "bottom" || key == "top") {
      if (tokens.size() != 1)
        syntax_error(line_no, colon + 2, std::string(key) + " takes exactly one label");
      check_label(tokens[0], line_no);
      auto& slot = key == "bottom" ? file.bottom : file.top;
      if (slot) syntax_error(line_no, key_at + 1, "duplicate '" + std::string(key) + ":'");
      slot = std::string(tokens[0].text);
    } else {
      syntax_error(line_no, key_at + 1, "unknown key '" + std::string(key) + "'");
    }
    if (end == text.size()) break;
  }
  return file;
}

BoundedLattice parse_lattice_file(std::string_view text) {
  const LatticeFile file = parse_lattice_text(text);
  Poset poset = [&] {
    try {
      return build_poset(file.labels, file.covers);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::CycleDetected) throw;
      // Locate a cover that lies on the reported cycle "a<b<...<a".
      const std::string msg = err.what();
      const auto colon = msg.rfind(": ");
      const std::string cycle = colon == std::string::npos ? msg : msg.substr(colon + 2);
      std::vector<std::string> nodes;
      std::stringstream ss(cycle);
      for (std::string part; std::getline(ss, part, '<');) nodes.push_back(part);
      for (std::size_t k = 0; k < file.covers.size(); ++k)
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
          if (file.covers[k].first == nodes[i] && file.covers[k].second == nodes[i + 1])
            throw Error(ErrorCode::CycleDetected, "cycle " + cycle + " (cover " + nodes[i] + "<" + nodes[i + 1] +
                                                      " on line " + std::to_string(file.cover_lines[k]) + ")");
      throw;
    }
  }();
  BoundedLattice L = validate_bounded_lattice(std::move(poset));
  auto check_bound = [&](const std::optional<std::string>& declared, Elem actual, const char* what) {
    if (declared && *declared != L.label(actual))
      throw Error(ErrorCode::BoundTopMismatch, std::string("declared ") + what + " '" + *declared +
                                                   "' but the computed " + what + " is '" + L.label(actual) + "'");
  };
  check_bound(file.bottom, L.bottom(), "bottom");
  check_bound(file.top, L.top(), "top");
  return L;
}

BoundedLattice load_lattice(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice_file(buf.str());
}

std::string serialize_lattice(const BoundedLattice& L) {
  std::string out = "elements:";
  for (Elem x : L.declared()) out += " " + L.label(x);
  out += "\ncovers:";
  for (auto [lo, hi] : L.poset().covers()) out += " " + L.label(lo) + "<" + L.label(hi);
  out += "\nbottom: " + L.label(L.bottom()) + "\ntop: " + L.label(L.top()) + "\n";
  return out;
}

std::string render_cayley_table(const BoundedLattice& L, const OpTable& U, std::span<const Elem> order,
                                std::string_view corner) {
  ElemSet sorted(order.begin(), order.end());
  L.normalize(sorted);
  if (sorted.size() != order.size() || sorted != U.domain())
    throw Error(ErrorCode::BadOrder, "row order is not a permutation of the table's domain");
  std::string out(corner);
  for (Elem y : order) out += "\t" + L.label(y);
  out += "\n";
  for (Elem x : order) {
    out += L.label(x);
    for (Elem y : order) out += "\t" + L.label(U(x, y));
    out += "\n";
  }
  return out;
}

namespace {

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const BoundedLattice& L, std::string_view graph_name) {
  std::string out = "digraph " + dot_id(graph_name) + " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem x : L.declared()) out += "  " + dot_id(L.label(x)) + ";\n";
  for (auto [lo, hi] : L.poset().covers()) out += "  " + dot_id(L.label(lo)) + " -> " + dot_id(L.label(hi)) + ";\n";
  return out + "}\n";
}

std::string render_compact(const BoundedLattice& L, const OpTable& U) {
  std::string out;
  for (Elem x : U.domain())
    for (Elem y : U.domain()) {
      if (!out.empty()) out += ' ';
      out += L.label(x) + "*" + L.label(y) + "=" + L.label(U(x, y));
    }
  return out;
}

std::string describe(const BoundedLattice& L, const AxiomWitness& w) {
  auto lbl = [&](std::size_t i) { return L.label(w.elems.at(i)); };
  switch (w.axiom) {
    case Axiom::Commutativity:
      return "U(" + lbl(0) + "," + lbl(1) + ")=" + L.label(w.lhs) + " but U(" + lbl(1) + "," + lbl(0) +
             ")=" + L.label(w.rhs);
    case Axiom::Associativity:
      return "U(" + lbl(0) + ",U(" + lbl(1) + "," + lbl(2) + "))=" + L.label(w.lhs) + " but U(U(" + lbl(0) + "," +
             lbl(1) + ")," + lbl(2) + ")=" + L.label(w.rhs);
    case Axiom::Monotonicity:
      if (w.argument == 0)
        return lbl(0) + "<" + lbl(1) + " but U(" + lbl(0) + "," + lbl(2) + ")=" + L.label(w.lhs) + " is not <= U(" +
               lbl(1) + "," + lbl(2) + ")=" + L.label(w.rhs);
      return lbl(0) + "<" + lbl(1) + " but U(" + lbl(2) + "," + lbl(0) + ")=" + L.label(w.lhs) + " is not <= U(" +
             lbl(2) + "," + lbl(1) + ")=" + L.label(w.rhs);
    case Axiom::Neutrality:
      return "U(" + lbl(0) + "," + lbl(1) + ")=" + L.label(w.lhs) + " but should be " + L.label(w.rhs);
    case Axiom::Closure:
      return "U(" + lbl(0) + "," + lbl(1) + ")=" + L.label(w.lhs) + " leaves the domain";
  }
  return "?";
}

std::string describe(const BoundedLattice& L, const ConditionWitness& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.elems.size(); ++i) out += (i ? "," : "") + L.label(w.elems[i]);
  return out + ") -> " + L.label(w.value);
}

std::string describe(const BoundedLattice& L, const PiecewiseSpec& spec, const ConflictReport& c) {
  return "at (" + L.label(c.x) + "," + L.label(c.y) + "): case '" + spec.cases.at(c.case_a).label + "' gives " +
         L.label(c.value_a) + ", case '" + spec.cases.at(c.case_b).label + "' gives " + L.label(c.value_b);
}

}  // namespace unilat
