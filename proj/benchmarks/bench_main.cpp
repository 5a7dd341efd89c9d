#include <benchmark/benchmark.h>

#include "uebkit/counterexample165.hpp"
#include "uebkit/nice.hpp"
#include "uebkit/ueb.hpp"

using namespace uebkit;

static void BM_CyclotomicProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Cyclotomic a = Cyclotomic::zeta(n, 1) + Cyclotomic::zeta(n, 3) + Cyclotomic(Rational(2, 3), n);
    Cyclotomic b = Cyclotomic::zeta(n, 2) - Cyclotomic::zeta(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct)->Arg(15)->Arg(165);

static void BM_FourierProduct(benchmark::State& state) {
    const ExactMatrix f = fourier_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_FourierProduct)->Arg(4)->Arg(8)->Arg(16);

static void BM_VerifyUebPauli(benchmark::State& state) {
    const auto b = pauli_basis(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_ueb(b).valid);
}
BENCHMARK(BM_VerifyUebPauli)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_VerifyNicePauli(benchmark::State& state) {
    const auto rep = pauli_rep(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_nice(rep).passed);
}
BENCHMARK(BM_VerifyNicePauli)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Wickedness(benchmark::State& state) {
    auto alpha = make_alphabet({"t"});
    const auto b = shift_and_multiply(cyclic_latin(4), HadamardSequence::constant(h_alpha(alpha)));
    for (auto _ : state) benchmark::DoNotOptimize(wickedness_witness(b).has_value());
}
BENCHMARK(BM_Wickedness);

static void BM_G165MuTrace(benchmark::State& state) {
    static const G165 g = build_g165();
    const auto& grp = g.group();
    std::size_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.mu(grp.element_at(i)).trace());
        i = (i * 7919 + 1) % grp.order();
    }
}
BENCHMARK(BM_G165MuTrace)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
