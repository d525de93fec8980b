#include <benchmark/benchmark.h>

#include <vector>

#include "unilat/axioms.hpp"
#include "unilat/kernels.hpp"
#include "unilat/lattice.hpp"
#include "unilat/op_table.hpp"

using namespace unilat;

namespace {

BoundedLattice grid(std::size_t side) { return product_lattice(chain_lattice(side), chain_lattice(side)); }

OpTable meet_table(const BoundedLattice& L) {
  return OpTable::tabulate(L, L.declared(), [&](Elem x, Elem y) { return L.meet(x, y); });
}

template <Exec exec>
void BM_Associativity(benchmark::State& state) {
  const BoundedLattice L = grid(static_cast<std::size_t>(state.range(0)));
  const OpTable U = meet_table(L);
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom(L, U, Axiom::Associativity, std::nullopt, exec));
  state.SetLabel(std::to_string(L.size()) + " elements");
}

template <Exec exec>
void BM_Monotonicity(benchmark::State& state) {
  const BoundedLattice L = grid(static_cast<std::size_t>(state.range(0)));
  const OpTable U = meet_table(L);
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom(L, U, Axiom::Monotonicity, std::nullopt, exec));
  state.SetLabel(std::to_string(L.size()) + " elements");
}

template <bool parallel>
void BM_BoundTables(benchmark::State& state) {
  const BoundedLattice L = grid(static_cast<std::size_t>(state.range(0)));
  const std::size_t n = L.size();
  std::vector<std::uint16_t> meet(n * n), join(n * n);
  for (auto _ : state) {
    if constexpr (parallel) kernels::omp::bound_tables(L.poset().relation(), n, meet, join);
    else kernels::serial::bound_tables(L.poset().relation(), n, meet, join);
    benchmark::DoNotOptimize(meet.data());
  }
  state.SetLabel(std::to_string(n) + " elements");
}

template <bool parallel>
void BM_TransitiveClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::uint8_t> base(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    base[i * n + i] = 1;
    if (i + 1 < n) base[i * n + i + 1] = 1;
  }
  for (auto _ : state) {
    auto rel = base;
    if constexpr (parallel) kernels::omp::transitive_closure(rel, n);
    else kernels::serial::transitive_closure(rel, n);
    benchmark::DoNotOptimize(rel.data());
  }
}

}  // namespace

BENCHMARK(BM_Associativity<Exec::Serial>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Associativity<Exec::Parallel>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Monotonicity<Exec::Serial>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Monotonicity<Exec::Parallel>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundTables<false>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundTables<true>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitiveClosure<false>)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitiveClosure<true>)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
