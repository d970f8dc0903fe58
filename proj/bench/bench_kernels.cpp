// Serial reference kernels vs their OpenMP counterparts. Thread count comes
// from TRS_THREADS (or the OpenMP default).

#include <benchmark/benchmark.h>

#include "trs/cryptosystem.hpp"
#include "trs/decoder.hpp"
#include "trs/kernels.hpp"
#include "trs/twisted_code.hpp"

using namespace trs;

namespace {

const KeyPair& full_key() {
  static const KeyPair kp = keygen(255, 117, 1, 8, FamilyVariant::F, seed_from_u64(1));
  return kp;
}

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Exec::serial : kernels::Exec::parallel;
}

void BM_SchurProducts(benchmark::State& state) {
  const auto g = public_generator(full_key().pub);
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::schur_products(g, exec));
}

void BM_SquareRank(benchmark::State& state) {
  const auto prod = kernels::omp::schur_products(public_generator(full_key().pub));
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank(prod, exec));
}

void BM_AllMinors(benchmark::State& state) {
  Rng rng(9);
  const auto g = generator_matrix(tower_params(14, 6, 2, 4, FamilyVariant::F, rng));
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::all_maximal_minors_nonzero(g, exec));
}

// Exhaustive scan over all q = 256 guesses of a (15,5) tower code.
void BM_DecodeScan(benchmark::State& state) {
  Rng rng(10);
  const auto p = tower_params(15, 5, 1, 4, FamilyVariant::F, rng);
  std::vector<Elem> m(5);
  for (auto& x : m) x = p.field->random_element(rng);
  auto r = encode(p, m);
  const auto e = random_error(*p.field, 15, 5, rng);
  for (std::size_t i = 0; i < 15; ++i) r[i] ^= e[i];
  TwistedDecodeOptions opt;
  opt.mode = ScanMode::exhaustive;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(twisted_decode(r, p, 5, opt));
}

}  // namespace

BENCHMARK(BM_SchurProducts)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareRank)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllMinors)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeScan)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  kernels::apply_thread_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
