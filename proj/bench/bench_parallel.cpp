#include "mtv/indices.hpp"
#include "mtv/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace mtv;

namespace {

// All admissible indices of weight <= wmax at every level N <= 3.
std::vector<TValueRequest> workload(int wmax) {
    std::vector<TValueRequest> reqs;
    for (long N = 1; N <= 3; ++N)
        for (long a = 1; a <= N; ++a)
            for (int w = 2; w <= wmax; ++w)
                for (int n = 1; n < w; ++n)
                    for (const auto& k : enumerate_I0(w, n)) {
                        reqs.push_back({{N, a}, k, false});
                        reqs.push_back({{N, a}, k, true});
                    }
    return reqs;
}

void BM_batch_serial(benchmark::State& state) {
    const auto reqs = workload(static_cast<int>(state.range(0)));
    const Precision p(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(t_values_batch_serial(reqs, p));
    state.counters["values"] = static_cast<double>(reqs.size());
}

void BM_batch_openmp(benchmark::State& state) {
    const auto reqs = workload(static_cast<int>(state.range(0)));
    const Precision p(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(t_values_batch(reqs, p));
    state.counters["values"] = static_cast<double>(reqs.size());
    state.counters["threads"] = parallel_threads();
}

}  // namespace

BENCHMARK(BM_batch_serial)->Args({6, 30})->Args({8, 30})->Args({6, 60})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_batch_openmp)->Args({6, 30})->Args({8, 30})->Args({6, 60})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
