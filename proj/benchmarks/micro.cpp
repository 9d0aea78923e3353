// Microbenchmarks for the field, matrix, and decoder hot paths.
#include <benchmark/benchmark.h>

#include "mcss/chameleon.hpp"
#include "mcss/goppa.hpp"

using namespace mcss;

namespace {

RandomSource bench_rng(uint64_t seed) {
  std::vector<uint8_t> bytes(8);
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<uint8_t>(seed >> (8 * i));
  return RandomSource(bytes);
}

void BM_FieldMul(benchmark::State& state) {
  const Field& F = Field::get(static_cast<unsigned>(state.range(0)));
  auto rng = bench_rng(1);
  std::vector<Fe> a(1024), b(1024);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = static_cast<Fe>(rng.uniform(F.order()));
    b[i] = static_cast<Fe>(rng.uniform(F.order()));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(F.mul(a[i & 1023], b[i & 1023]));
    ++i;
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(12);

void BM_PolyInvMod(benchmark::State& state) {
  const Field& F = Field::get(12);
  auto rng = bench_rng(2);
  Poly g = F.random_irreducible(static_cast<unsigned>(state.range(0)), rng);
  std::vector<Fe> c(g.deg());
  for (auto& x : c) x = static_cast<Fe>(rng.uniform(F.order()));
  Poly S(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(F.poly_inv_mod(S, g));
}
BENCHMARK(BM_PolyInvMod)->Arg(16)->Arg(64);

void BM_VecMatTransposeMul(benchmark::State& state) {
  auto rng = bench_rng(3);
  std::size_t nk = static_cast<std::size_t>(state.range(0));
  std::size_t n = static_cast<std::size_t>(state.range(1));
  BitMatrix M(nk, n);
  for (std::size_t i = 0; i < nk; ++i) M.set_row(i, random_bitvec(n, rng));
  BitVec v = random_bitvec(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(vec_mat_transpose_mul(v, M));
}
BENCHMARK(BM_VecMatTransposeMul)->Args({128, 256})->Args({768, 3488});

void BM_PattersonDecode(benchmark::State& state) {
  auto params = params_by_name(state.range(0) == 0 ? "toy" : "secure");
  auto rng = bench_rng(4);
  GoppaCode code = generate_code(params, rng);
  std::vector<BitVec> syndromes;
  for (int i = 0; i < 64; ++i) {
    BitVec e(params.n);
    while (e.weight() < params.t) e.set(rng.uniform(params.n), true);
    syndromes.push_back(syndrome_of(code, e));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(patterson_decode(code, syndromes[i & 63]));
    ++i;
  }
}
BENCHMARK(BM_PattersonDecode)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_GenerateCode(benchmark::State& state) {
  auto params = params_by_name("toy");
  auto rng = bench_rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(generate_code(params, rng));
}
BENCHMARK(BM_GenerateCode)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
