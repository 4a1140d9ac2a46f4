#include <benchmark/benchmark.h>

#include <random>

#include "superdiv/catalog.hpp"
#include "superdiv/spanalg.hpp"
#include "superdiv/supersym.hpp"

using namespace superdiv;

namespace {

Element random_element(const Context& ctx, u64 degree, std::mt19937_64& rng) {
  const auto monos = monomials_of_degree(ctx, degree);
  std::vector<Term> terms;
  std::uniform_int_distribution<u32> coeff(0, ctx.p - 1);
  for (const Monomial& mono : monos) {
    if (const u32 c = coeff(rng)) terms.push_back({mono, c});
  }
  return Element(ctx, std::move(terms));
}

void BM_Multiply(benchmark::State& state) {
  const Context ctx(3, 2, 2);
  std::mt19937_64 rng(7);
  const Element a = random_element(ctx, state.range(0), rng);
  const Element b = random_element(ctx, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(6);

void BM_BasisSk(benchmark::State& state) {
  const Context ctx(3, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(basis_Sk(ctx, state.range(0)));
}
BENCHMARK(BM_BasisSk)->DenseRange(4, 10, 2);

void BM_Oracle(benchmark::State& state) {
  const Context ctx(3, 2, 2);
  const SkBasis basis = basis_Sk(ctx, state.range(0));
  for (auto _ : state) {
    for (const Element& e : basis.elements) benchmark::DoNotOptimize(oracle_is_supersymmetric(e));
  }
}
BENCHMARK(BM_Oracle)->Arg(6)->Arg(9);

void BM_SpanCheck(benchmark::State& state) {
  const u64 bound = state.range(0);
  const GeneratorList list = theorem_generators(TheoremCase::TWO_TWO, 2, bound, 3);
  const std::vector<Element> gens = list.elements();
  const Context ctx(3, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(span_check(ctx, gens, SpanTarget::SUPERSYM, bound));
}
BENCHMARK(BM_SpanCheck)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
