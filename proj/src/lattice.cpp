#include "unilat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "unilat/error.hpp"
#include "unilat/kernels.hpp"

namespace unilat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NoMeet: return "NoMeet";
    case ErrorCode::NoJoin: return "NoJoin";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::BadNeutral: return "BadNeutral";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::SubOpInvalid: return "SubOpInvalid";
    case ErrorCode::ConflictAt: return "ConflictAt";
    case ErrorCode::RoleMismatch: return "RoleMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::MissingNeutralParam: return "MissingNeutralParam";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BoundTopMismatch: return "BoundTopMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Poset

Poset Poset::from_relation(std::vector<std::string> labels, std::vector<std::uint8_t> leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::EmptyCarrier, "carrier has no elements");
  if (n > kMaxCarrier) throw Error(ErrorCode::CapExceeded, "carrier larger than " + std::to_string(kMaxCarrier));
  if (leq.size() != n * n) throw Error(ErrorCode::NotAPartialOrder, "relation is not n x n");
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x * n + x]) throw Error(ErrorCode::NotAPartialOrder, "not reflexive at " + labels[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && leq[x * n + y] && leq[y * n + x])
        throw Error(ErrorCode::NotAPartialOrder, "not antisymmetric at " + labels[x] + ", " + labels[y]);
      if (!leq[x * n + y]) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (leq[y * n + z] && !leq[x * n + z])
          throw Error(ErrorCode::NotAPartialOrder,
                      "not transitive at " + labels[x] + " <= " + labels[y] + " <= " + labels[z]);
    }
  }
  return Poset(std::move(labels), std::move(leq));
}

std::optional<Elem> Poset::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return Elem(i);
  return std::nullopt;
}

Elem Poset::at(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorCode::UnknownLabel, "no element labelled '" + std::string(label) + "'");
}

std::vector<std::pair<Elem, Elem>> Poset::covers() const {
  const std::size_t n = size();
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!less(Elem(x), Elem(y))) continue;
      bool direct = true;
      for (std::size_t z = 0; z < n && direct; ++z)
        if (less(Elem(x), Elem(z)) && less(Elem(z), Elem(y))) direct = false;
      if (direct) out.emplace_back(Elem(x), Elem(y));
    }
  return out;
}

namespace {

// Returns a cycle in the cover digraph as a list of vertices (first repeated
// at the end), or an empty vector.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& succ) {
  const std::size_t n = succ.size();
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(n, kWhite);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != kWhite) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == succ[v].size()) {
        colour[v] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t w = succ[v][next++];
      if (colour[w] == kGrey) {
        std::vector<std::size_t> cycle{w};
        for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (colour[w] == kWhite) {
        colour[w] = kGrey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace

Poset build_poset(std::span<const std::string> labels, std::span<const CoverPair> covers) {
  if (labels.empty()) throw Error(ErrorCode::EmptyCarrier, "carrier has no elements");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' declared twice");

  const std::size_t n = labels.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    const auto a = index.find(lo);
    const auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorCode::UnknownLabel, "cover references unknown label '" + lo + "'");
    if (b == index.end()) throw Error(ErrorCode::UnknownLabel, "cover references unknown label '" + hi + "'");
    if (a->second == b->second) throw Error(ErrorCode::CycleDetected, lo + "<" + hi);
    succ[a->second].push_back(b->second);
    rel[a->second * n + b->second] = 1;
  }
  if (auto cycle = find_cycle(succ); !cycle.empty()) {
    std::ostringstream msg;
    for (std::size_t i = 0; i < cycle.size(); ++i) msg << (i ? "<" : "") << labels[cycle[i]];
    throw Error(ErrorCode::CycleDetected, msg.str());
  }
  kernels::omp::transitive_closure(rel, n);
  return Poset::from_relation(std::vector<std::string>(labels.begin(), labels.end()), std::move(rel));
}

// ------------------------------------------------------- BoundedLattice

BoundedLattice::BoundedLattice(Poset poset, std::vector<Elem> meet, std::vector<Elem> join, Elem bottom,
                               Elem top)
    : poset_(std::move(poset)), meet_(std::move(meet)), join_(std::move(join)), bottom_(bottom), top_(top) {
  const std::size_t n = poset_.size();
  // Kahn's algorithm, always taking the smallest ready index.
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (poset_.less(Elem(y), Elem(x))) ++pending[x];
  std::vector<bool> placed(n, false);
  rank_.assign(n, 0);
  while (order_.size() < n) {
    std::size_t pick = n;
    for (std::size_t x = 0; x < n; ++x)
      if (!placed[x] && pending[x] == 0) {
        pick = x;
        break;
      }
    placed[pick] = true;
    rank_[pick] = order_.size();
    order_.emplace_back(pick);
    for (std::size_t y = 0; y < n; ++y)
      if (poset_.less(Elem(pick), Elem(y))) --pending[y];
  }
}

ElemSet BoundedLattice::declared() const {
  ElemSet out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

void BoundedLattice::normalize(ElemSet& set) const {
  std::sort(set.begin(), set.end(), [&](Elem a, Elem b) { return rank(a) < rank(b); });
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

namespace {

std::string describe_set(const Poset& p, const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + p.label(Elem(xs[i]));
  return out + "}";
}

// Maximal elements of the common lower bounds (or minimal common upper bounds
// when `upper`), for error reporting.
std::vector<std::size_t> extremal_bounds(const Poset& p, std::size_t x, std::size_t y, bool upper) {
  const std::size_t n = p.size();
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < n; ++z) {
    const bool is_bound = upper ? p.leq(Elem(x), Elem(z)) && p.leq(Elem(y), Elem(z))
                                : p.leq(Elem(z), Elem(x)) && p.leq(Elem(z), Elem(y));
    if (is_bound) bounds.push_back(z);
  }
  std::vector<std::size_t> out;
  for (std::size_t z : bounds) {
    bool extremal = true;
    for (std::size_t w : bounds)
      if (upper ? p.less(Elem(w), Elem(z)) : p.less(Elem(z), Elem(w))) extremal = false;
    if (extremal) out.push_back(z);
  }
  return out;
}

}  // namespace

std::optional<BoundedLattice> try_validate_bounded_lattice(Poset poset, std::optional<Error>* error) {
  auto fail = [&](ErrorCode code, const std::string& msg) -> std::optional<BoundedLattice> {
    if (error) error->emplace(code, msg);
    return std::nullopt;
  };
  const std::size_t n = poset.size();
  std::optional<std::size_t> bottom, top;
  for (std::size_t x = 0; x < n; ++x) {
    bool below_all = true, above_all = true;
    for (std::size_t y = 0; y < n; ++y) {
      below_all = below_all && poset.leq(Elem(x), Elem(y));
      above_all = above_all && poset.leq(Elem(y), Elem(x));
    }
    if (below_all) bottom = x;
    if (above_all) top = x;
  }
  if (!bottom || !top)
    return fail(ErrorCode::NotBounded, !bottom ? "no element lies below every other" : "no element lies above every other");

  std::vector<std::uint16_t> meet(n * n), join(n * n);
  kernels::omp::bound_tables(poset.relation(), n, meet, join);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (meet[x * n + y] == kernels::kNoBound)
        return fail(ErrorCode::NoMeet, poset.label(Elem(x)) + ", " + poset.label(Elem(y)) +
                                           " have maximal lower bounds " +
                                           describe_set(poset, extremal_bounds(poset, x, y, false)));
      if (join[x * n + y] == kernels::kNoBound)
        return fail(ErrorCode::NoJoin, poset.label(Elem(x)) + ", " + poset.label(Elem(y)) +
                                           " have minimal upper bounds " +
                                           describe_set(poset, extremal_bounds(poset, x, y, true)));
    }
  std::vector<Elem> m(n * n), j(n * n);
  std::transform(meet.begin(), meet.end(), m.begin(), [](std::uint16_t v) { return Elem(v); });
  std::transform(join.begin(), join.end(), j.begin(), [](std::uint16_t v) { return Elem(v); });
  return BoundedLattice(std::move(poset), std::move(m), std::move(j), Elem(*bottom), Elem(*top));
}

BoundedLattice validate_bounded_lattice(Poset poset) {
  std::optional<Error> error;
  auto lattice = try_validate_bounded_lattice(std::move(poset), &error);
  if (!lattice) throw *error;
  return std::move(*lattice);
}

// ---------------------------------------------------- intervals & regions

ElemSet interval(const BoundedLattice& L, Elem a, Elem b, Bound lower, Bound upper) {
  if (!L.leq(a, b))
    throw Error(ErrorCode::NotComparable, L.label(a) + " is not below " + L.label(b));
  ElemSet out;
  for (Elem x : L.order()) {
    if (!L.leq(a, x) || !L.leq(x, b)) continue;
    if (lower == Bound::Open && x == a) continue;
    if (upper == Bound::Open && x == b) continue;
    out.push_back(x);
  }
  return out;
}

ElemSet incomparables(const BoundedLattice& L, Elem e) {
  ElemSet out;
  for (Elem x : L.order())
    if (L.incomparable(x, e)) out.push_back(x);
  return out;
}

bool sets_incomparable(const BoundedLattice& L, std::span<const Elem> A, std::span<const Elem> B) {
  for (Elem x : A)
    for (Elem y : B)
      if (L.comparable(x, y)) return false;
  return true;
}

std::string_view to_string(Coord c) {
  switch (c) {
    case Coord::Below: return "Below";
    case Coord::Equal: return "Equal";
    case Coord::Above: return "Above";
    case Coord::Incomp: return "Incomp";
  }
  return "?";
}

Coord classify(const BoundedLattice& L, Elem e, Elem x) {
  if (x == e) return Coord::Equal;
  if (L.leq(x, e)) return Coord::Below;
  if (L.leq(e, x)) return Coord::Above;
  return Coord::Incomp;
}

RegionPair classify_pair(const BoundedLattice& L, Elem e, Elem x, Elem y) {
  return {classify(L, e, x), classify(L, e, y)};
}

Regions::Regions(const BoundedLattice& L, Elem e) : e_(e), coords_(L.size()) {
  for (std::size_t i = 0; i < L.size(); ++i) coords_[i] = classify(L, e, Elem(i));
}

// ------------------------------------------------------------- builders

BoundedLattice chain_lattice(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyCarrier, "chain needs at least one element");
  std::vector<std::string> labels;
  labels.emplace_back("0");
  for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back("m" + std::to_string(i));
  if (n > 1) labels.emplace_back("1");
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) rel[x * n + y] = 1;
  return validate_bounded_lattice(Poset::from_relation(std::move(labels), std::move(rel)));
}

BoundedLattice product_lattice(const BoundedLattice& a, const BoundedLattice& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a.label(Elem(i)) + "," + b.label(Elem(j)) + ")");
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      rel[x * n + y] = a.leq(Elem(x / nb), Elem(y / nb)) && b.leq(Elem(x % nb), Elem(y % nb));
  return validate_bounded_lattice(Poset::from_relation(std::move(labels), std::move(rel)));
}

}  // namespace unilat
