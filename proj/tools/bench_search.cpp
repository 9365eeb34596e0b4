#include <benchmark/benchmark.h>

#include "citax/search.hpp"

namespace {

using namespace citax;

SearchBounds improvement_bounds(std::size_t max_papers, Count max_citations) {
    SearchBounds bounds;
    bounds.max_papers = max_papers;
    bounds.max_citations = max_citations;
    bounds.improvements = {RelativeImprovement{Ratio{2, 1}, RoundingMode::Floor},
                           RelativeImprovement{Ratio{3, 2}, RoundingMode::Floor},
                           AbsoluteImprovement{5}};
    bounds.thresholds = {Threshold(5), Threshold(10)};
    bounds.properties = {ConsistencyProperty::RelativeImprovement,
                         ConsistencyProperty::AbsoluteImprovement};
    return bounds;
}

SearchBounds aggregation_bounds(std::size_t max_papers, Count max_citations) {
    SearchBounds bounds;
    bounds.max_papers = max_papers;
    bounds.max_citations = max_citations;
    bounds.thresholds = {Threshold(5)};
    bounds.properties = {ConsistencyProperty::Aggregation};
    bounds.max_periods = 2;
    return bounds;
}

void BM_improvement_search_serial(benchmark::State& state) {
    const SearchBounds bounds = improvement_bounds(static_cast<std::size_t>(state.range(0)),
                                                   static_cast<Count>(state.range(1)));
    for (auto _ : state) {
        auto results = find_counterexamples_serial(IndicatorKind::HcpCount, bounds);
        benchmark::DoNotOptimize(results);
    }
}

void BM_improvement_search_parallel(benchmark::State& state) {
    const SearchBounds bounds = improvement_bounds(static_cast<std::size_t>(state.range(0)),
                                                   static_cast<Count>(state.range(1)));
    for (auto _ : state) {
        auto results = find_counterexamples(IndicatorKind::HcpCount, bounds);
        benchmark::DoNotOptimize(results);
    }
}

void BM_aggregation_search_serial(benchmark::State& state) {
    const SearchBounds bounds = aggregation_bounds(static_cast<std::size_t>(state.range(0)),
                                                   static_cast<Count>(state.range(1)));
    for (auto _ : state) {
        auto results = find_counterexamples_serial(IndicatorKind::HcpCount, bounds);
        benchmark::DoNotOptimize(results);
    }
}

void BM_aggregation_search_parallel(benchmark::State& state) {
    const SearchBounds bounds = aggregation_bounds(static_cast<std::size_t>(state.range(0)),
                                                   static_cast<Count>(state.range(1)));
    for (auto _ : state) {
        auto results = find_counterexamples(IndicatorKind::HcpCount, bounds);
        benchmark::DoNotOptimize(results);
    }
}

BENCHMARK(BM_improvement_search_serial)
    ->Args({2, 16})
    ->Args({3, 8})
    ->Args({4, 6})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_improvement_search_parallel)
    ->Args({2, 16})
    ->Args({3, 8})
    ->Args({4, 6})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_aggregation_search_serial)->Args({2, 6})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_aggregation_search_parallel)
    ->Args({2, 6})
    ->Args({3, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
