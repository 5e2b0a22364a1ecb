// Serial and OpenMP orbit kernels on the translates of a gallery embedding.

#include <benchmark/benchmark.h>

#include "bt/gallery.hpp"
#include "bt/orbit_kernel.hpp"
#include "bt/realization.hpp"

namespace {

struct Workload {
    bt::EmbeddingSpec spec;
    std::vector<bt::Mat2> words;
    std::vector<bt::BtVertex> base;

    explicit Workload(int L)
        : spec(bt::free_product(2, 3, 3, 1))
    {
        const auto en = bt::amalgam_enumerate(spec.tog, L);
        for (const auto& stratum : en.strata)
            for (const auto& w : stratum) {
                auto m = bt::Mat2::identity(spec.field);
                for (int li : w.letters) {
                    const auto& a = en.letters[static_cast<size_t>(li)];
                    m = m * spec.reps[static_cast<size_t>(a.vertex)][static_cast<size_t>(a.element)].matrix();
                }
                words.push_back(m);
            }
        base = spec.image(spec.radius()).vertices;
    }
};

const Workload& workload(int L)
{
    static std::map<int, Workload> cache;
    auto it = cache.find(L);
    if (it == cache.end()) it = cache.emplace(L, Workload(L)).first;
    return it->second;
}

void BM_translate_serial(benchmark::State& state)
{
    const auto& w = workload(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bt::translate_serial(w.words, w.base));
    state.counters["words"] = static_cast<double>(w.words.size());
}

void BM_translate_parallel(benchmark::State& state)
{
    const auto& w = workload(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bt::translate_parallel(w.words, w.base));
    state.counters["words"] = static_cast<double>(w.words.size());
    state.counters["threads"] = bt::kernel_threads();
}

}  // namespace

BENCHMARK(BM_translate_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_translate_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
