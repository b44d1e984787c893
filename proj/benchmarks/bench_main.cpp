#include "lefgamma/exceptional_sets.hpp"
#include "lefgamma/gamma.hpp"
#include "lefgamma/minuscule.hpp"
#include "lefgamma/stabilizer.hpp"
#include "lefgamma/variety.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lefgamma;

VarietyProduct make_product(std::size_t count) {
  std::vector<SimpleFactor> factors;
  const AlbertType types[] = {AlbertType::I, AlbertType::II, AlbertType::III};
  for (std::size_t i = 0; i < count; ++i) {
    factors.emplace_back(types[i % 3], 1 + i % 2, 1 + i % 4, 1 + i % 3);
  }
  return VarietyProduct(std::move(factors));
}

void bm_gamma_product(benchmark::State& state) {
  const VarietyProduct v = make_product(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_product(v));
  }
}

void bm_sigma_prime_enumeration(benchmark::State& state) {
  const Integer bound(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_set(SetTag::sigma_prime, bound));
  }
}

void bm_sigma_prime_membership(benchmark::State& state) {
  Integer h = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_sigma_prime(h));
    h = h % 100000 + 1;
  }
}

void bm_exclusion_generator(benchmark::State& state) {
  const Integer bound(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exclusion_dimensions(bound));
  }
}

void bm_stabilizer_oracle(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const FormSpace space(n, FormKind::orthogonal);
  std::vector<std::vector<std::int64_t>> basis;
  for (unsigned i = 0; i < n / 2; ++i) {
    std::vector<std::int64_t> v(n, 0);
    v[i] = 1;
    basis.push_back(std::move(v));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(stabilizer_dim_oracle(space, basis));
  }
}

void bm_point_count(benchmark::State& state) {
  const FiltrationProfile profile({{1, 1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(point_count_index(5, 2, profile));
  }
}

}  // namespace

BENCHMARK(bm_gamma_product)->Arg(4)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_sigma_prime_enumeration)->Arg(1000)->Arg(100000)->Arg(10000000);
BENCHMARK(bm_sigma_prime_membership);
BENCHMARK(bm_exclusion_generator)->Arg(2000)->Arg(200000);
BENCHMARK(bm_stabilizer_oracle)->Arg(4)->Arg(8);
BENCHMARK(bm_point_count);

BENCHMARK_MAIN();
