#include "wittforge/wittforge.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>

using namespace wittforge;

namespace {

PreMetricGroup cyclic(std::int64_t n, std::int64_t a, std::int64_t d) {
    return PreMetricGroup::from_gram(FiniteAbelianGroup::make({n}), {QmodZ(a, d)});
}

void BM_WittSpan2(benchmark::State& state) {
    const std::vector<WittClass> gens{witt_class(cyclic(2, 1, 4)), witt_class(cyclic(4, 1, 8))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(generated_subgroup(gens).size());
    }
}
BENCHMARK(BM_WittSpan2)->Unit(benchmark::kMillisecond);

void BM_ReduceAnisotropic(benchmark::State& state) {
    const auto p = state.range(0);
    // (Z/p)^3 with diagonal form, reduced down to rank <= 2
    const PreMetricGroup pm = PreMetricGroup::from_gram(FiniteAbelianGroup::make({p, p, p}),
                                                        {QmodZ(1, p), QmodZ(1, p), QmodZ(1, p)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_anisotropic(pm).order());
    }
}
BENCHMARK(BM_ReduceAnisotropic)->Arg(3)->Arg(5)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMicrosecond);

void BM_Isometric(benchmark::State& state) {
    const PreMetricGroup a = PreMetricGroup::from_gram(FiniteAbelianGroup::make({2, 4, 8}),
                                                       {QmodZ(1, 4), QmodZ(1, 8), QmodZ(3, 16)});
    const PreMetricGroup b = PreMetricGroup::from_gram(FiniteAbelianGroup::make({2, 4, 8}),
                                                       {QmodZ(1, 4), QmodZ(1, 8), QmodZ(11, 16)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(isometric(a, b));
    }
}
BENCHMARK(BM_Isometric)->Unit(benchmark::kMicrosecond);

void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-50, 50);
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = entry(rng);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(m).d(0, 0));
    }
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_GaussSum(benchmark::State& state) {
    const PreMetricGroup pm = cyclic(state.range(0), 1, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(additive_charge(pm));
    }
}
BENCHMARK(BM_GaussSum)->Arg(101)->Arg(1009)->Unit(benchmark::kMicrosecond);

void BM_VerifyEmbeddings(benchmark::State& state) {
    std::ifstream in(std::string(WITTFORGE_BENCH_DATA_DIR) + "/conformal_embeddings.txt");
    const auto entries = parse_embeddings(in, "conformal_embeddings.txt");
    VerifyOptions opt;
    opt.parallel = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_embeddings(entries, opt).count(Status::Ok));
    }
}
BENCHMARK(BM_VerifyEmbeddings)->Unit(benchmark::kMillisecond);

void BM_FPDimsVerlinde(benchmark::State& state) {
    const FusionRing r = verlinde_sl2(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fpdims(r).total);
    }
}
BENCHMARK(BM_FPDimsVerlinde)->Arg(4)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
