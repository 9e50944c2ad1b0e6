#include <benchmark/benchmark.h>

#include <random>

#include "arithcomp/composition.hpp"
#include "arithcomp/expression.hpp"
#include "arithcomp/factorization.hpp"
#include "arithcomp/functions.hpp"
#include "arithcomp/ratio.hpp"
#include "arithcomp/sieve.hpp"
#include "arithcomp/verify.hpp"

using namespace arithcomp;

static void BM_SpfSieve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_spf_sieve(static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_SpfSieve)->Arg(1 << 16)->Arg(1 << 20)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

// Random odd 64-bit inputs: mostly a few small factors plus a large cofactor.
static void BM_FactorizeU64(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> inputs(256);
  for (auto& v : inputs) {
    v = rng() | 1;
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize_u64(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_FactorizeU64)->Unit(benchmark::kMicrosecond);

// Worst case for rho: a product of two 32-bit primes.
static void BM_FactorizeSemiprime(benchmark::State& state) {
  const std::uint64_t n = 4294967291ULL * 4294967279ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize_u64(n));
  }
}
BENCHMARK(BM_FactorizeSemiprime)->Unit(benchmark::kMicrosecond);

static void BM_EvalBase(benchmark::State& state) {
  const Factorization f = factorize(BigInt(2'329'089'562'800ULL));
  const auto fid = static_cast<FunctionId>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_base(fid, f));
  }
  state.SetLabel(std::string(function_name(fid)));
}
BENCHMARK(BM_EvalBase)->DenseRange(0, static_cast<int>(kAllFunctions.size()) - 1);

static void BM_EvaluateComposition(benchmark::State& state) {
  const Composition c = parse_composition("sigma(phistar(psi(n)))");
  const Evaluator ev(std::make_shared<const SieveTable>(1 << 20));
  std::uint64_t n = 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.evaluate(c, n));
    n = n == 200000 ? 100000 : n + 1;
  }
}
BENCHMARK(BM_EvaluateComposition);

static void BM_ScanRecords(benchmark::State& state) {
  const RatioSpec spec = parse_ratio("sigma(phistar(n))/(n*loglog(n))");
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_records(spec, 3, static_cast<std::uint64_t>(state.range(0)),
                                          ScanMode::Max, {.workers = 1}));
  }
}
BENCHMARK(BM_ScanRecords)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_VerifyChain(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_chain(static_cast<std::uint64_t>(state.range(0)), {.workers = 1}));
  }
}
BENCHMARK(BM_VerifyChain)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
