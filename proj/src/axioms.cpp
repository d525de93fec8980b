#include "unilat/axioms.hpp"

#include "unilat/error.hpp"
#include "unilat/kernels.hpp"

namespace unilat {

namespace {

// Slot-space copy of an OpTable for the scan kernels.
struct SlotBuffers {
  std::vector<std::int32_t> slot;
  std::vector<std::uint16_t> raw;
  std::vector<std::uint8_t> dom_leq;
  kernels::SlotTable view;

  SlotBuffers(const BoundedLattice& L, const OpTable& U) {
    const std::size_t d = U.domain_size();
    slot.resize(d * d);
    raw.resize(d * d);
    for (std::size_t i = 0; i < d * d; ++i) {
      const Elem v = U.values()[i];
      raw[i] = v.index;
      slot[i] = U.slot(v);
    }
    dom_leq.resize(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) dom_leq[i * d + j] = L.leq(U.domain()[i], U.domain()[j]);
    view = kernels::SlotTable{d, slot, raw, L.poset().relation(), L.size()};
  }
};

std::optional<AxiomWitness> first_non_commutative(const OpTable& U) {
  const std::size_t d = U.domain_size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (U.at_slot(i, j) != U.at_slot(j, i))
        return AxiomWitness{Axiom::Commutativity, {U.domain()[i], U.domain()[j]}, U.at_slot(i, j), U.at_slot(j, i)};
  return std::nullopt;
}

std::optional<AxiomWitness> first_non_neutral(const OpTable& U, Elem e) {
  if (!U.in_domain(e)) return AxiomWitness{Axiom::Neutrality, {e, e}, e, e};
  for (Elem x : U.domain())
    if (U(e, x) != x) return AxiomWitness{Axiom::Neutrality, {e, x}, U(e, x), x};
  return std::nullopt;
}

std::optional<AxiomWitness> first_escape(const OpTable& U) {
  const std::size_t d = U.domain_size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!U.in_domain(U.at_slot(i, j)))
        return AxiomWitness{Axiom::Closure, {U.domain()[i], U.domain()[j]}, U.at_slot(i, j), U.at_slot(i, j)};
  return std::nullopt;
}

AxiomWitness to_witness(const OpTable& U, Axiom axiom, const kernels::ScanHit& hit, int argument) {
  const auto& dom = U.domain();
  return AxiomWitness{axiom,
                      {dom[hit.slots[0]], dom[hit.slots[1]], dom[hit.slots[2]]},
                      Elem(hit.lhs),
                      Elem(hit.rhs),
                      argument};
}

}  // namespace

std::optional<AxiomWitness> check_axiom(const BoundedLattice& L, const OpTable& U, Axiom axiom, std::optional<Elem> e,
                                        Exec exec) {
  switch (axiom) {
    case Axiom::Commutativity: return first_non_commutative(U);
    case Axiom::Neutrality:
      if (!e) throw Error(ErrorCode::MissingNeutralParam, "neutrality check needs a neutral element");
      return first_non_neutral(U, *e);
    case Axiom::Closure: return first_escape(U);
    case Axiom::Associativity: {
      SlotBuffers buf(L, U);
      auto hit = exec == Exec::Serial ? kernels::serial::first_non_associative(buf.view)
                                      : kernels::omp::first_non_associative(buf.view);
      if (!hit) return std::nullopt;
      return to_witness(U, Axiom::Associativity, *hit, 0);
    }
    case Axiom::Monotonicity: {
      SlotBuffers buf(L, U);
      // The second argument only needs its own scan when U is not symmetric.
      const int last_argument = first_non_commutative(U) ? 1 : 0;
      for (int arg = 0; arg <= last_argument; ++arg) {
        auto hit = exec == Exec::Serial ? kernels::serial::first_non_monotone(buf.view, buf.dom_leq, arg)
                                        : kernels::omp::first_non_monotone(buf.view, buf.dom_leq, arg);
        if (hit) return to_witness(U, Axiom::Monotonicity, *hit, arg);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool replay_witness(const BoundedLattice& L, const OpTable& U, const AxiomWitness& w) {
  auto in = [&](Elem x) { return U.in_domain(x); };
  for (Elem x : w.elems)
    if (!in(x) && w.axiom != Axiom::Neutrality) return false;
  switch (w.axiom) {
    case Axiom::Commutativity: {
      if (w.elems.size() != 2) return false;
      const Elem l = U(w.elems[0], w.elems[1]), r = U(w.elems[1], w.elems[0]);
      return l == w.lhs && r == w.rhs && l != r;
    }
    case Axiom::Associativity: {
      if (w.elems.size() != 3) return false;
      const Elem x = w.elems[0], y = w.elems[1], z = w.elems[2];
      if (!in(U(y, z)) || !in(U(x, y))) return false;
      const Elem l = U(x, U(y, z)), r = U(U(x, y), z);
      return l == w.lhs && r == w.rhs && l != r;
    }
    case Axiom::Monotonicity: {
      if (w.elems.size() != 3) return false;
      const Elem x = w.elems[0], y = w.elems[1], z = w.elems[2];
      if (!L.leq(x, y)) return false;
      const Elem l = w.argument == 0 ? U(x, z) : U(z, x);
      const Elem r = w.argument == 0 ? U(y, z) : U(z, y);
      return l == w.lhs && r == w.rhs && !L.leq(l, r);
    }
    case Axiom::Neutrality: {
      if (w.elems.size() != 2) return false;
      const Elem e = w.elems[0], x = w.elems[1];
      if (!in(e)) return true;  // the neutral element is not even in the domain
      return in(x) && U(e, x) == w.lhs && w.rhs == x && w.lhs != x;
    }
    case Axiom::Closure: {
      if (w.elems.size() != 2) return false;
      const Elem v = U(w.elems[0], w.elems[1]);
      return v == w.lhs && !in(v);
    }
  }
  return false;
}

std::vector<AxiomWitness> UninormReport::witnesses() const {
  std::vector<AxiomWitness> out;
  for (const AxiomOutcome* o : {&commutative, &associative, &monotone, &neutral})
    if (o->witness) out.push_back(*o->witness);
  return out;
}

UninormReport is_uninorm(const BoundedLattice& L, const OpTable& U, Elem e, Exec exec, bool short_circuit) {
  if (!U.covers_carrier())
    throw Error(ErrorCode::DomainMismatch, "uninorm check needs a table on the whole carrier");
  UninormReport report;
  bool failed = false;
  auto run = [&](AxiomOutcome& out, Axiom axiom) {
    if (failed && short_circuit) return;
    out.witness = check_axiom(L, U, axiom, e, exec);
    out.status = out.witness ? CheckStatus::Failed : CheckStatus::Passed;
    failed = failed || out.witness.has_value();
  };
  run(report.commutative, Axiom::Commutativity);
  run(report.associative, Axiom::Associativity);
  run(report.monotone, Axiom::Monotonicity);
  run(report.neutral, Axiom::Neutrality);
  report.is_uninorm = !failed;
  return report;
}

}  // namespace unilat
