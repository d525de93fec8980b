#include "unilat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "unilat/error.hpp"

namespace unilat {

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

namespace {

std::vector<std::size_t> refined_colours(const BoundedLattice& L) {
  const std::size_t n = L.size();
  const auto covers = L.poset().covers();
  std::vector<std::size_t> lower_covers(n, 0), upper_covers(n, 0);
  for (auto [lo, hi] : covers) {
    ++upper_covers[lo.index];
    ++lower_covers[hi.index];
  }
  using Sig = std::vector<std::size_t>;
  std::vector<Sig> sig(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t down = 0, up = 0;
    for (std::size_t y = 0; y < n; ++y) {
      down += L.leq(Elem(y), Elem(x));
      up += L.leq(Elem(x), Elem(y));
    }
    sig[x] = {down, up, lower_covers[x], upper_covers[x]};
  }
  auto compress = [&](const std::vector<Sig>& s) {
    std::vector<Sig> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> c(n);
    for (std::size_t x = 0; x < n; ++x)
      c[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), s[x]) - sorted.begin());
    return std::pair{c, sorted.size()};
  };
  auto [colour, classes] = compress(sig);
  while (true) {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t> below, above;
      for (std::size_t y = 0; y < n; ++y) {
        if (L.less(Elem(y), Elem(x))) below.push_back(colour[y]);
        if (L.less(Elem(x), Elem(y))) above.push_back(colour[y]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      Sig s{colour[x], below.size()};
      s.insert(s.end(), below.begin(), below.end());
      s.insert(s.end(), above.begin(), above.end());
      sig[x] = std::move(s);
    }
    auto [next, next_classes] = compress(sig);
    colour = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colour;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const BoundedLattice& L, const std::vector<std::size_t>& colour) : L_(L), n_(L.size()) {
    std::map<std::size_t, std::vector<std::size_t>> by_colour;
    for (std::size_t x = 0; x < n_; ++x) by_colour[colour[x]].push_back(x);
    for (auto& [c, members] : by_colour) classes_.push_back(members);
  }

  std::vector<std::uint8_t> run() {
    order_.clear();
    search(0);
    return best_;
  }

 private:
  std::vector<std::uint8_t> matrix() const {
    std::vector<std::uint8_t> bits((n_ * n_ + 7) / 8, 0);
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q)
        if (L_.leq(Elem(order_[p]), Elem(order_[q]))) {
          const std::size_t k = p * n_ + q;
          bits[k / 8] |= static_cast<std::uint8_t>(1u << (7 - k % 8));
        }
    return bits;
  }

  void search(std::size_t cls) {
    if (cls == classes_.size()) {
      auto m = matrix();
      if (best_.empty() || m < best_) best_ = std::move(m);
      return;
    }
    std::vector<std::size_t> members = classes_[cls];
    std::sort(members.begin(), members.end());
    do {
      order_.insert(order_.end(), members.begin(), members.end());
      search(cls + 1);
      order_.resize(order_.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  }

  const BoundedLattice& L_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> order_;
  std::vector<std::uint8_t> best_;
};

std::vector<std::string> natural_labels(std::size_t n) {
  std::vector<std::string> labels{"0"};
  char next = 'a';
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (next == 'e') ++next;  // keep "e" free for the neutral element
    labels.emplace_back(1, next++);
  }
  if (n > 1) labels.emplace_back("1");
  return labels;
}

}  // namespace

CanonicalForm canonical_form(const BoundedLattice& L) {
  const std::size_t n = L.size();
  CanonicalForm out;
  out.bytes = {static_cast<std::uint8_t>(n >> 8), static_cast<std::uint8_t>(n & 0xFF)};
  const auto bits = CanonicalSearch(L, refined_colours(L)).run();
  out.bytes.insert(out.bytes.end(), bits.begin(), bits.end());
  return out;
}

std::vector<BoundedLattice> enumerate_bounded_lattices(std::size_t n, std::size_t cap) {
  if (cap > kHardLatticeCap) throw Error(ErrorCode::CapExceeded, "lattice cap above " + std::to_string(kHardLatticeCap));
  if (n == 0 || n > cap)
    throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " outside 1.." + std::to_string(cap));

  const auto labels = natural_labels(n);
  std::vector<BoundedLattice> out;
  if (n <= 2) {
    std::vector<std::uint8_t> rel(n * n, 1);
    if (n == 2) rel[1 * 2 + 0] = 0;
    out.push_back(validate_bounded_lattice(Poset::from_relation(labels, rel)));
    return out;
  }

  // Middle elements 1..m sit strictly between 0 and n-1. Every order on them
  // has a natural labelling, so it suffices to walk the upper-triangular
  // relations that are already transitively closed.
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  std::set<CanonicalForm> seen;
  std::vector<std::uint8_t> mid(m * m);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::fill(mid.begin(), mid.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (bits >> k & 1) mid[pairs[k].first * m + pairs[k].second] = 1;
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i)
      for (std::size_t j = i + 1; j < m && closed; ++j)
        if (mid[i * m + j])
          for (std::size_t k = j + 1; k < m && closed; ++k)
            if (mid[j * m + k] && !mid[i * m + k]) closed = false;
    if (!closed) continue;

    std::vector<std::uint8_t> rel(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      rel[x * n + x] = 1;
      rel[0 * n + x] = 1;
      rel[x * n + (n - 1)] = 1;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (mid[i * m + j]) rel[(i + 1) * n + (j + 1)] = 1;

    auto lattice = try_validate_bounded_lattice(Poset::from_relation(labels, std::move(rel)));
    if (!lattice) continue;
    if (seen.insert(canonical_form(*lattice)).second) out.push_back(std::move(*lattice));
  }
  return out;
}

}  // namespace unilat
