#include "unilat/op_table.hpp"

#include <string>

#include "unilat/error.hpp"

namespace unilat {

OpTable::OpTable(const BoundedLattice& L, ElemSet domain, std::vector<Elem> values, std::optional<Elem> neutral)
    : domain_(std::move(domain)), slot_(L.size(), -1), values_(std::move(values)), neutral_(neutral) {
  if (values_.size() != domain_.size() * domain_.size())
    throw Error(ErrorCode::DomainMismatch, "table has " + std::to_string(values_.size()) + " entries for a domain of " +
                                               std::to_string(domain_.size()));
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i].index >= L.size()) throw Error(ErrorCode::UnknownLabel, "domain element outside the carrier");
    if (i > 0 && L.rank(domain_[i - 1]) >= L.rank(domain_[i]))
      throw Error(ErrorCode::BadOrder, "domain is not in linear-extension order");
    slot_[domain_[i].index] = static_cast<std::int32_t>(i);
  }
  for (Elem v : values_)
    if (v.index >= L.size()) throw Error(ErrorCode::UnknownLabel, "table value outside the carrier");
}

std::uint64_t OpTable::fingerprint() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint16_t v) {
    for (int shift = 0; shift < 16; shift += 8) {
      h ^= static_cast<std::uint8_t>(v >> shift);
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint16_t>(domain_.size()));
  for (Elem x : domain_) mix(x.index);
  for (Elem v : values_) mix(v.index);
  return h;
}

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::Commutativity: return "Commutativity";
    case Axiom::Associativity: return "Associativity";
    case Axiom::Monotonicity: return "Monotonicity";
    case Axiom::Neutrality: return "Neutrality";
    case Axiom::Closure: return "Closure";
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::Commutativity, Axiom::Associativity, Axiom::Monotonicity, Axiom::Neutrality, Axiom::Closure})
    if (to_string(a) == name) return a;
  throw Error(ErrorCode::SyntaxError, "unknown axiom '" + std::string(name) + "'");
}

std::string_view to_string(NormRole r) { return r == NormRole::TNorm ? "TNorm" : "TConorm"; }

}  // namespace unilat
