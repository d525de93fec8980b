#include "unilat/norms.hpp"

#include <string>

#include "unilat/axioms.hpp"
#include "unilat/error.hpp"

namespace unilat {

void require_proper_neutral(const BoundedLattice& L, Elem e) {
  if (e.index >= L.size()) throw Error(ErrorCode::UnknownLabel, "neutral element outside the carrier");
  if (e == L.bottom() || e == L.top())
    throw Error(ErrorCode::BadNeutral, "neutral element " + L.label(e) + " must differ from 0 and 1");
}

ElemSet norm_domain(const BoundedLattice& L, Elem e, NormRole role) {
  return role == NormRole::TNorm ? interval(L, L.bottom(), e) : interval(L, e, L.top());
}

std::vector<AxiomWitness> check_operation_axioms(const BoundedLattice& L, const OpTable& op, Elem neutral) {
  std::vector<AxiomWitness> out;
  for (Axiom a : {Axiom::Closure, Axiom::Commutativity, Axiom::Associativity, Axiom::Monotonicity, Axiom::Neutrality})
    if (auto w = check_axiom(L, op, a, neutral, Exec::Serial)) out.push_back(std::move(*w));
  return out;
}

std::vector<AxiomWitness> check_norm_axioms(const BoundedLattice& L, const OpTable& op, NormRole role, Elem e) {
  if (op.domain() != norm_domain(L, e, role))
    throw Error(ErrorCode::DomainMismatch, std::string(to_string(role)) + " must be defined on exactly " +
                                               (role == NormRole::TNorm ? "[0,e]" : "[e,1]"));
  return check_operation_axioms(L, op, e);
}

OpTable canonical_tnorm_meet(const BoundedLattice& L, Elem e) {
  require_proper_neutral(L, e);
  return OpTable::tabulate(L, norm_domain(L, e, NormRole::TNorm), [&](Elem x, Elem y) { return L.meet(x, y); }, e);
}

OpTable canonical_tconorm_join(const BoundedLattice& L, Elem e) {
  require_proper_neutral(L, e);
  return OpTable::tabulate(L, norm_domain(L, e, NormRole::TConorm), [&](Elem x, Elem y) { return L.join(x, y); }, e);
}

OpTable drastic_tnorm(const BoundedLattice& L, Elem e) {
  require_proper_neutral(L, e);
  return OpTable::tabulate(
      L, norm_domain(L, e, NormRole::TNorm),
      [&](Elem x, Elem y) { return (x == e || y == e) ? L.meet(x, y) : L.bottom(); }, e);
}

OpTable drastic_tconorm(const BoundedLattice& L, Elem e) {
  require_proper_neutral(L, e);
  return OpTable::tabulate(
      L, norm_domain(L, e, NormRole::TConorm),
      [&](Elem x, Elem y) { return (x == e || y == e) ? L.join(x, y) : L.top(); }, e);
}

namespace {

// Backtracking over symmetric tables with the neutral row pinned. Cells of
// the upper triangle are filled row-major, candidates in ascending slot
// order, so leaves come out in lexicographic order of the full table.
class NormSearch {
 public:
  NormSearch(const BoundedLattice& L, ElemSet domain, Elem e, NormRole role,
             const std::function<bool(const OpTable&)>& visit)
      : L_(L), dom_(std::move(domain)), d_(dom_.size()), e_(e), role_(role), visit_(visit),
        table_(d_ * d_, -1) {
    for (std::size_t i = 0; i < d_; ++i)
      if (dom_[i] == e) ne_ = i;
    for (std::size_t i = 0; i < d_; ++i) {
      set(ne_, i, static_cast<int>(i));
    }
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = i; j < d_; ++j)
        if (i != ne_ && j != ne_) cells_.emplace_back(i, j);
  }

  void run() { descend(0); }

 private:
  bool leq(std::size_t a, std::size_t b) const { return L_.leq(dom_[a], dom_[b]); }
  int get(std::size_t i, std::size_t j) const { return table_[i * d_ + j]; }
  void set(std::size_t i, std::size_t j, int v) {
    table_[i * d_ + j] = v;
    table_[j * d_ + i] = v;
  }

  // v at (i,j) must respect every assigned entry of row i (second argument
  // varies) and row j (first argument varies, by symmetry).
  bool monotone_with(std::size_t i, std::size_t j, std::size_t v) const {
    for (auto [row, col] : {std::pair{i, j}, std::pair{j, i}}) {
      for (std::size_t k = 0; k < d_; ++k) {
        const int w = get(row, k);
        if (w < 0 || k == col) continue;
        if (leq(col, k) && !leq(v, static_cast<std::size_t>(w))) return false;
        if (leq(k, col) && !leq(static_cast<std::size_t>(w), v)) return false;
      }
    }
    return true;
  }

  bool associative() const {
    for (std::size_t a = 0; a < d_; ++a)
      for (std::size_t b = 0; b < d_; ++b)
        for (std::size_t c = 0; c < d_; ++c) {
          const auto ab = static_cast<std::size_t>(get(a, b));
          const auto bc = static_cast<std::size_t>(get(b, c));
          if (get(a, bc) != get(ab, c)) return false;
        }
    return true;
  }

  bool descend(std::size_t cell) {
    if (cell == cells_.size()) {
      if (!associative()) return true;
      std::vector<Elem> values(d_ * d_);
      for (std::size_t k = 0; k < d_ * d_; ++k) values[k] = dom_[static_cast<std::size_t>(table_[k])];
      return visit_(OpTable(L_, dom_, std::move(values), e_));
    }
    const auto [i, j] = cells_[cell];
    const Elem bound = role_ == NormRole::TNorm ? L_.meet(dom_[i], dom_[j]) : L_.join(dom_[i], dom_[j]);
    for (std::size_t v = 0; v < d_; ++v) {
      const bool within = role_ == NormRole::TNorm ? L_.leq(dom_[v], bound) : L_.leq(bound, dom_[v]);
      if (!within || !monotone_with(i, j, v)) continue;
      set(i, j, static_cast<int>(v));
      const bool more = descend(cell + 1);
      set(i, j, -1);
      if (!more) return false;
    }
    return true;
  }

  const BoundedLattice& L_;
  ElemSet dom_;
  std::size_t d_;
  Elem e_;
  NormRole role_;
  const std::function<bool(const OpTable&)>& visit_;
  std::vector<int> table_;
  std::size_t ne_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

}  // namespace

void for_each_norm(const BoundedLattice& L, Elem e, NormRole role, const std::function<bool(const OpTable&)>& visit,
                   std::size_t cap) {
  require_proper_neutral(L, e);
  ElemSet dom = norm_domain(L, e, role);
  if (dom.size() > cap)
    throw Error(ErrorCode::DomainTooLarge, "interval has " + std::to_string(dom.size()) + " elements, cap is " +
                                               std::to_string(cap));
  NormSearch(L, std::move(dom), e, role, visit).run();
}

std::vector<OpTable> enumerate_norms(const BoundedLattice& L, Elem e, NormRole role, std::size_t cap) {
  std::vector<OpTable> out;
  for_each_norm(
      L, e, role,
      [&](const OpTable& t) {
        out.push_back(t);
        return true;
      },
      cap);
  return out;
}

}  // namespace unilat
