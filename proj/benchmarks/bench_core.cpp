#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include <goodstein/evaluate.hpp>
#include <goodstein/form.hpp>
#include <goodstein/grammar.hpp>
#include <goodstein/random_forms.hpp>
#include <goodstein/sequence.hpp>
#include <goodstein/shape.hpp>
#include <goodstein/towers.hpp>

namespace {

using namespace goodstein;

void BM_FromNatural(benchmark::State& state) {
  BigNat m = BigNat(1) << static_cast<unsigned>(state.range(0));
  m -= 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_natural(m, Base(3)));
  }
}
BENCHMARK(BM_FromNatural)->Arg(32)->Arg(128)->Arg(512);

void BM_ClassicStep(benchmark::State& state) {
  // steady-state stepping from a start big enough to carry real structure
  for (auto _ : state) {
    state.PauseTiming();
    SequenceState s = initial_state(BigNat(state.range(0)), Base(2));
    state.ResumeTiming();
    for (int i = 0; i < 64 && !s.terminated; ++i) s = step(s, 1);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ClassicStep)->Arg(16)->Arg(100)->Arg(10'000);

void BM_TowerStep(benchmark::State& state) {
  HForm start = tower_form(Base(2), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    SequenceState s = initial_state(start);
    state.ResumeTiming();
    for (int i = 0; i < 64; ++i) s = step(s, 1);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_TowerStep)->Arg(4)->Arg(8);

void BM_CompareValue(benchmark::State& state) {
  std::mt19937_64 rng(42);
  RandomFormOptions opt;
  opt.base_min = 5;
  opt.base_max = 5;
  std::vector<HForm> forms;
  for (int i = 0; i < 64; ++i) forms.push_back(random_form(rng, opt));
  std::size_t i = 0;
  for (auto _ : state) {
    const HForm& a = forms[i % forms.size()];
    const HForm& b = forms[(i * 7 + 3) % forms.size()];
    benchmark::DoNotOptimize(compare_value(a, b));
    ++i;
  }
}
BENCHMARK(BM_CompareValue);

void BM_ParseRender(benchmark::State& state) {
  SequenceState s = initial_state(BigNat(10'000), Base(2));
  for (int i = 0; i < 32; ++i) s = step(s, 1);
  std::string text = render(s.form);
  for (auto _ : state) {
    HForm f = parse_form(text);
    benchmark::DoNotOptimize(render(f));
  }
}
BENCHMARK(BM_ParseRender);

void BM_Evaluate(benchmark::State& state) {
  SequenceState s = initial_state(BigNat(16), Base(2));
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) s = step(s, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(s.form, 100'000));
  }
}
BENCHMARK(BM_Evaluate)->Arg(4)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
