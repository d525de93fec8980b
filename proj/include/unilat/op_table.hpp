#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "unilat/lattice.hpp"

namespace unilat {

/// A total binary operation on a domain (a sub-interval or the whole
/// carrier). Values are elements of the carrier; whether they stay inside the
/// domain is a checkable property (Axiom::Closure), not an invariant.
class OpTable {
 public:
  /// `values` is row-major over `domain`, which must already be in the
  /// lattice's linear-extension order (throws BadOrder otherwise).
  OpTable(const BoundedLattice& L, ElemSet domain, std::vector<Elem> values, std::optional<Elem> neutral = {});

  template <class Fn>
  static OpTable tabulate(const BoundedLattice& L, ElemSet domain, Fn&& fn, std::optional<Elem> neutral = {}) {
    L.normalize(domain);
    std::vector<Elem> values;
    values.reserve(domain.size() * domain.size());
    for (Elem x : domain)
      for (Elem y : domain) values.push_back(fn(x, y));
    return OpTable(L, std::move(domain), std::move(values), neutral);
  }

  const ElemSet& domain() const noexcept { return domain_; }
  std::size_t domain_size() const noexcept { return domain_.size(); }
  std::size_t carrier_size() const noexcept { return slot_.size(); }
  bool covers_carrier() const noexcept { return domain_.size() == slot_.size(); }
  bool in_domain(Elem x) const noexcept { return x.index < slot_.size() && slot_[x.index] >= 0; }
  /// Position of x in the domain, or -1.
  std::int32_t slot(Elem x) const noexcept { return slot_[x.index]; }
  std::optional<Elem> neutral() const noexcept { return neutral_; }

  /// Both arguments must lie in the domain.
  Elem operator()(Elem x, Elem y) const noexcept {
    return values_[static_cast<std::size_t>(slot_[x.index]) * domain_.size() + static_cast<std::size_t>(slot_[y.index])];
  }
  Elem at_slot(std::size_t i, std::size_t j) const noexcept { return values_[i * domain_.size() + j]; }
  std::span<const Elem> values() const noexcept { return values_; }

  /// FNV-1a over the domain and values; stable across runs and platforms.
  std::uint64_t fingerprint() const noexcept;

  bool operator==(const OpTable& other) const {
    return domain_ == other.domain_ && values_ == other.values_;
  }

 private:
  ElemSet domain_;
  std::vector<std::int32_t> slot_;
  std::vector<Elem> values_;
  std::optional<Elem> neutral_;
};

enum class Axiom { Commutativity, Associativity, Monotonicity, Neutrality, Closure };

std::string_view to_string(Axiom a);
/// Throws SyntaxError on an unknown name.
Axiom parse_axiom(std::string_view name);

/// A concrete axiom violation.
///  Commutativity: elems (x,y),   lhs U(x,y),        rhs U(y,x)
///  Associativity: elems (x,y,z), lhs U(x,U(y,z)),   rhs U(U(x,y),z)
///  Monotonicity:  elems (x,y,z) with x < y, argument 0: lhs U(x,z), rhs U(y,z);
///                 argument 1: lhs U(z,x), rhs U(z,y); lhs is not <= rhs
///  Neutrality:    elems (e,x),   lhs U(e,x),        rhs x
///  Closure:       elems (x,y),   lhs = rhs = U(x,y), which lies outside the domain
struct AxiomWitness {
  Axiom axiom = Axiom::Commutativity;
  std::vector<Elem> elems;
  Elem lhs;
  Elem rhs;
  int argument = 0;

  bool operator==(const AxiomWitness&) const = default;
};

enum class NormRole { TNorm, TConorm };

std::string_view to_string(NormRole r);

}  // namespace unilat
