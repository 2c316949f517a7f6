#include <benchmark/benchmark.h>

#include <qv/appell_lerch.hpp>
#include <qv/bailey.hpp>
#include <qv/indefinite_theta.hpp>
#include <qv/products.hpp>
#include <qv/registry.hpp>
#include <qv/verifier.hpp>

using namespace qv;

namespace {

void BM_PochInfinite(benchmark::State &state)
{
    rational N = state.range(0);
    for (auto _ : state) {
        clear_product_caches();
        benchmark::DoNotOptimize(poch_infinite(monomial::q(1), 1, N));
    }
}
BENCHMARK(BM_PochInfinite)->Arg(50)->Arg(100)->Arg(200);

void BM_Invert(benchmark::State &state)
{
    rational N = state.range(0);
    series euler = poch_infinite(monomial::q(1), 1, N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(euler, N));
    }
}
BENCHMARK(BM_Invert)->Arg(50)->Arg(100)->Arg(200);

void BM_JTheta(benchmark::State &state)
{
    rational N = state.range(0);
    for (auto _ : state) {
        clear_product_caches();
        benchmark::DoNotOptimize(j_theta(monomial(-1, 2), 5, N));
    }
}
BENCHMARK(BM_JTheta)->Arg(50)->Arg(100);

void BM_MSum(benchmark::State &state)
{
    rational N = state.range(0);
    for (auto _ : state) {
        clear_product_caches();
        benchmark::DoNotOptimize(m_sum(monomial(-1, 2), 5, monomial::q(4), N));
    }
}
BENCHMARK(BM_MSum)->Arg(40)->Arg(100);

void BM_FIndef(benchmark::State &state)
{
    rational N = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_indef(quad_form{3, 7, 3}, monomial::q(3), monomial::q(3), N));
    }
}
BENCHMARK(BM_FIndef)->Arg(40)->Arg(100);

void BM_VerifyPair(benchmark::State &state)
{
    bailey_pair p = builtin_pair("fifth_order");
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_pair(p, state.range(0), 40));
    }
}
BENCHMARK(BM_VerifyPair)->Arg(6)->Arg(12);

void BM_MainTheorem(benchmark::State &state)
{
    const identity_spec *main = nullptr;
    for (const auto &id : builtin_identities()) {
        if (id.name == "thm-main") {
            main = &id;
        }
    }
    rational N = state.range(0);
    for (auto _ : state) {
        clear_product_caches();
        benchmark::DoNotOptimize(check_identity(*main, N));
    }
}
BENCHMARK(BM_MainTheorem)->Arg(50)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_RunSuite(benchmark::State &state)
{
    auto ids = select(builtin_identities(), {std::nullopt, std::string("m-props")});
    for (auto _ : state) {
        clear_product_caches();
        benchmark::DoNotOptimize(run_suite(ids, rational(41), static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_RunSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
