#include <benchmark/benchmark.h>

#include "potsum/characters.hpp"
#include "potsum/charsums.hpp"
#include "potsum/numtheory.hpp"
#include "potsum/potents.hpp"
#include "potsum/summation.hpp"
#include "potsum/sumset.hpp"

using namespace potsum;

static void BM_check_all_serial(benchmark::State& state) {
  const SearchConfig config{4, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(check_all_serial(config));
}
BENCHMARK(BM_check_all_serial)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_check_all_parallel(benchmark::State& state) {
  const SearchConfig config{4, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(check_all(config));
}
BENCHMARK(BM_check_all_parallel)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

// C_4 + C_n for the largest proper divisor n - 1 of q - 1: the widest sumset a sweep meets.
static void covers_args(benchmark::internal::Benchmark* b) {
  for (auto q : {9973, 6561, 4096, 3125}) b->Arg(q);
}

PotentSet widest(const Field& field) {
  const std::uint64_t n = field.order() - 1;
  return n_potents(field, n / prime_factors(n).front() + 1);
}

static void BM_sumset_kernel(benchmark::State& state) {
  const Field field = Field::of_order(state.range(0));
  const auto a = n_potents(field, 4);
  const auto b = widest(field);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(field, a, b));
}
BENCHMARK(BM_sumset_kernel)->Apply(covers_args);

static void BM_sumset_reference(benchmark::State& state) {
  const Field field = Field::of_order(state.range(0));
  const auto a = n_potents(field, 4);
  const auto b = widest(field);
  for (auto _ : state) benchmark::DoNotOptimize(sumset_reference(field, a, b));
}
BENCHMARK(BM_sumset_reference)->Apply(covers_args);

static void BM_sum_excluding(benchmark::State& state) {
  const Field field = Field::of_order(state.range(0));
  const std::array<Element, 1> none{field.zero()};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sum_excluding(field, none, [&](Element a) { return cubic_character(field, a, 1); }));
}
BENCHMARK(BM_sum_excluding)->Arg(997)->Arg(99991);

static void BM_sum_excluding_serial(benchmark::State& state) {
  const Field field = Field::of_order(state.range(0));
  const std::array<Element, 1> none{field.zero()};
  for (auto _ : state)
    benchmark::DoNotOptimize(sum_excluding_serial(
        field, none, [&](Element a) { return cubic_character(field, a, 1); }));
}
BENCHMARK(BM_sum_excluding_serial)->Arg(997)->Arg(99991);

static void BM_compute_Mq(benchmark::State& state) {
  const Field field = Field::of_order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_Mq(field));
}
BENCHMARK(BM_compute_Mq)->Arg(271)->Arg(997);

BENCHMARK_MAIN();
