#include <benchmark/benchmark.h>

#include <random>

#include "cr/crcheck.hpp"

using namespace cr;

static void BM_ClassifySubgroups(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_subgroups(n).size());
}
BENCHMARK(BM_ClassifySubgroups)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Collect(benchmark::State& state) {
    LabeledRootSystem s =
        LabeledRootSystem::build(DiagramType::E6, 0, LabelTable::E6);
    GF2m F(2);
    std::mt19937 rng(7);
    const auto& labels = s.radical_labels();
    std::vector<std::vector<std::pair<int, MPoly>>> inputs;
    for (int i = 0; i < 64; ++i) {
        std::vector<std::pair<int, MPoly>> fac;
        for (long j = 0; j < state.range(0); ++j)
            fac.emplace_back(labels[rng() % labels.size()],
                             MPoly::constant(&F, 1 + rng() % 3));
        inputs.push_back(std::move(fac));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(collect(&s, inputs[i % inputs.size()]));
        ++i;
    }
}
BENCHMARK(BM_Collect)->Arg(8)->Arg(32)->Arg(128);

static void BM_ScanClass(benchmark::State& state) {
    LabeledRootSystem s =
        LabeledRootSystem::build(DiagramType::E6, 0, LabelTable::E6);
    GF2m F(2);
    auto classes = classify_subgroups(6);
    // The order-6 class of the worked rank-6 example.
    const SubgroupClass* target = nullptr;
    for (const auto& c : classes)
        if (c.order == 6 && !target) target = &c;
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_class(&s, &F, *target).non_separable);
}
BENCHMARK(BM_ScanClass)->Unit(benchmark::kMillisecond);

static void BM_VerifyCase(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_case(case_by_id("E6/4"), 2).complete);
}
BENCHMARK(BM_VerifyCase)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
