// Hot paths: squarefree decomposition, terminality testing, link enumeration,
// and the bounded path search.
#include <benchmark/benchmark.h>

#include "sarkisov/binary_form.hpp"
#include "sarkisov/links.hpp"
#include "sarkisov/spaces.hpp"
#include "sarkisov/toric.hpp"

using namespace sarkisov;

static void BM_SquarefreeDecomposition(benchmark::State& state) {
  BinaryForm g = parse_form(
      "u0^12 - 3*u0^10*u1^2 + 3*u0^8*u1^4 - u0^6*u1^6 + u0^2*u1^10 - u1^12");
  for (auto _ : state) {
    auto layers = squarefree_decomposition(g);
    benchmark::DoNotOptimize(layers);
  }
}
BENCHMARK(BM_SquarefreeDecomposition);

static void BM_TerminalityW(benchmark::State& state) {
  Fan fan = fan_of(MoriFibreSpace::W(state.range(0)));
  for (auto _ : state) {
    bool t = is_terminal(fan);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TerminalityW)->Arg(2)->Arg(6);

static void BM_EnumerateLinksSweep(benchmark::State& state) {
  std::vector<MoriFibreSpace> grid;
  for (long long a : {0LL, 2LL, 3LL})
    for (long long b = 0; b <= 4; ++b)
      for (long long c = -4; c <= 4; ++c) {
        MoriFibreSpace s = MoriFibreSpace::F(a, b, c);
        if (validate(s).ok) grid.push_back(normalize(s));
      }
  for (auto _ : state) {
    size_t total = 0;
    for (const auto& s : grid) total += enumerate_links(s).links.size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateLinksSweep);

static void BM_FindPath(benchmark::State& state) {
  MoriFibreSpace src = MoriFibreSpace::R(3, 1);
  MoriFibreSpace dst = MoriFibreSpace::W(2);
  for (auto _ : state) {
    auto p = find_path(src, dst, 6, 12);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_FindPath);

BENCHMARK_MAIN();
