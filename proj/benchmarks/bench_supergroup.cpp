#include <benchmark/benchmark.h>

#include "supergroup/conjecture.hpp"
#include "supergroup/grassmann.hpp"
#include "supergroup/integrals.hpp"
#include "supergroup/sampling.hpp"

using namespace supergroup;

namespace {

SuperEigenvalues eigenvalues(long m, long n, Bits bits) {
  SuperEigenvalues ev{{}, {}, BigComplex(BigRational(1, 2), bits)};
  for (long i = 0; i < m; ++i) ev.bosonic.emplace_back(make_rational(3 + 2 * i, 5), make_rational(1, 7 + i), bits);
  for (long j = 0; j < n; ++j) ev.fermionic.emplace_back(make_rational(-2 - j, 3), make_rational(1, 4 + j), bits);
  return ev;
}

void BM_LsClosedForm(benchmark::State& state) {
  Precision prec;
  prec.bits = static_cast<Bits>(state.range(2));
  const SuperEigenvalues ev = eigenvalues(state.range(0), state.range(1), prec.bits);
  for (auto _ : state) benchmark::DoNotOptimize(ls_closed_form(ev, prec));
}
BENCHMARK(BM_LsClosedForm)->Args({1, 1, 256})->Args({2, 1, 256})->Args({3, 3, 256})->Args({3, 3, 1024});

void BM_LsConfluent(benchmark::State& state) {
  const Precision prec;
  SuperEigenvalues ev = eigenvalues(3, 1, prec.bits);
  ev.bosonic[1] = ev.bosonic[0];
  ev.bosonic[2] = ev.bosonic[0];
  for (auto _ : state) benchmark::DoNotOptimize(ls_closed_form(ev, prec));
}
BENCHMARK(BM_LsConfluent);

void BM_BkClosedForm(benchmark::State& state) {
  const Precision prec;
  const SuperEigenvalues lambda = eigenvalues(state.range(0), state.range(1), prec.bits);
  SuperEigenvalues mu = eigenvalues(state.range(0), state.range(1), prec.bits);
  for (auto& x : mu.bosonic) x = x * BigComplex(2, prec.bits);
  for (auto _ : state) benchmark::DoNotOptimize(bk_closed_form(lambda, mu, prec));
}
BENCHMARK(BM_BkClosedForm)->Args({1, 1})->Args({2, 2});

void BM_BruteForceLs(benchmark::State& state) {
  const Precision prec;
  const long m = state.range(0);
  BruteForceLsInput in;
  in.m = m;
  in.n = 1;
  in.beta = BigComplex(BigRational(1, 2), prec.bits);
  for (long i = 0; i <= m; ++i) {
    in.a.emplace_back(make_rational(2 + i, 3), make_rational(1, 5), prec.bits);
    in.b.emplace_back(make_rational(5, 4 + i), make_rational(-1, 3), prec.bits);
  }
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ls(in, prec));
}
BENCHMARK(BM_BruteForceLs)->Arg(1)->Arg(2);

void BM_JSeries(benchmark::State& state) {
  const Precision prec;
  const long N = state.range(0);
  std::vector<BigComplex> z;
  for (const auto& g : sample_disk(42, 0, N, 2)) z.push_back(g.to_complex(prec.working_bits()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(j0_truncated(z, 64, prec));
    benchmark::DoNotOptimize(jm_truncated(z, N / 2, 64, prec));
  }
}
BENCHMARK(BM_JSeries)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LrSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lr_sweep(state.range(0), 2, 2));
}
BENCHMARK(BM_LrSweep)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SuperSchurTableaux(benchmark::State& state) {
  const std::vector<BigRational> bos{make_rational(1, 2), make_rational(-3, 4)};
  const std::vector<BigRational> ferm{make_rational(2, 3), make_rational(5, 7)};
  const auto shapes = partitions_of(state.range(0));
  for (auto _ : state) {
    for (const Partition& t : shapes) benchmark::DoNotOptimize(super_schur_tableaux(t, bos, ferm));
  }
}
BENCHMARK(BM_SuperSchurTableaux)->Arg(4)->Arg(6)->Arg(8);

void BM_BkCharacterExpansion(benchmark::State& state) {
  const Precision prec;
  const SuperEigenvalues lambda = eigenvalues(1, 1, prec.bits);
  const SuperEigenvalues mu = eigenvalues(1, 1, prec.bits);
  for (auto _ : state) benchmark::DoNotOptimize(bk_character_expansion(lambda, mu, state.range(0), prec));
}
BENCHMARK(BM_BkCharacterExpansion)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
