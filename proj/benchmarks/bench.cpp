#include <benchmark/benchmark.h>

#include "somos/family.hpp"
#include "somos/laurent.hpp"
#include "somos/linear.hpp"
#include "somos/scan.hpp"
#include "somos/sequence.hpp"
#include "somos/symbolic.hpp"

using namespace somos;

namespace {

void bm_generate(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    const std::size_t count = static_cast<std::size_t>(state.range(1));
    auto rec = make_family_K(K);
    for (auto _ : state) {
        auto s = generate(rec, ones(2 * K + 1), count);
        benchmark::DoNotOptimize(s.at(count));
    }
}
BENCHMARK(bm_generate)->Args({1, 120})->Args({1, 400})->Args({5, 120})->Args({5, 400});

void bm_guess(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    auto s = generate(make_family_K(K), ones(2 * K + 1), 18 * K + 9);
    std::vector<mpz_class> seq;
    for (const auto& v : s.terms()) seq.push_back(v.get_num());
    for (auto _ : state) {
        auto res = guess_minimal(seq, 6 * static_cast<std::size_t>(K) + 4);
        benchmark::DoNotOptimize(res.found);
    }
}
BENCHMARK(bm_guess)->Arg(1)->Arg(3)->Arg(5);

void bm_symbolic(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    const std::size_t count = 2 * static_cast<std::size_t>(K) + 1 + 11;
    auto rec = make_family_K(K);
    for (auto _ : state) {
        SymbolicState st(2 * K + 1);
        symbolic_extend(rec, st, count);
        benchmark::DoNotOptimize(st.size());
    }
}
BENCHMARK(bm_symbolic)->Arg(1)->Arg(2);

void bm_laurent_mul(benchmark::State& state) {
    // the t12 * t11 product dominating a k=3 symbolic step
    SymbolicState st(3);
    symbolic_extend(make_family({3, 1, 1}), st, 12);
    const auto& a = st.at(12);
    const auto& b = st.at(11);
    for (auto _ : state) {
        auto p = mul(a, b);
        benchmark::DoNotOptimize(p.monomial_count());
    }
}
BENCHMARK(bm_laurent_mul);

void bm_exact_div(benchmark::State& state) {
    SymbolicState st(3);
    symbolic_extend(make_family({3, 1, 1}), st, 12);
    auto num = mul(st.at(12), st.at(11));
    const auto& den = st.at(11);
    for (auto _ : state) {
        auto q = exact_div(num, den);
        benchmark::DoNotOptimize(q.has_value());
    }
}
BENCHMARK(bm_exact_div);

void bm_scan_small(benchmark::State& state) {
    ScanConfig cfg;
    cfg.k_min = 3;
    cfg.k_max = 6;
    cfg.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto rep = scan(cfg);
        benchmark::DoNotOptimize(rep.cells.size());
    }
}
BENCHMARK(bm_scan_small)->Arg(1)->Arg(4);

} // namespace

BENCHMARK_MAIN();
