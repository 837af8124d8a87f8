#include <benchmark/benchmark.h>

#include <string>

#include "rulekit/ingest.hpp"
#include "rulekit/mine.hpp"
#include "rulekit/predicates.hpp"

namespace {

const rulekit::Transactions& zoo() {
    static const auto t =
        rulekit::transactions_from_table(rulekit::read_csv_file(std::string(RULEKIT_DATA_DIR) + "/Zoo.csv"));
    return t;
}

rulekit::MiningParams params(double support, double confidence, rulekit::MiningTarget target) {
    rulekit::MiningParams p;
    p.support = support;
    p.confidence = confidence;
    p.target = target;
    return p;
}

void BM_ZooIngest(benchmark::State& state) {
    const auto path = std::string(RULEKIT_DATA_DIR) + "/Zoo.csv";
    for (auto _ : state) benchmark::DoNotOptimize(rulekit::transactions_from_table(rulekit::read_csv_file(path)));
}
BENCHMARK(BM_ZooIngest)->Unit(benchmark::kMicrosecond);

void BM_ZooRules(benchmark::State& state) {
    const auto p = params(0.01, 0.7, rulekit::MiningTarget::rules);
    for (auto _ : state) benchmark::DoNotOptimize(rulekit::apriori_rules(zoo(), p).size());
}
BENCHMARK(BM_ZooRules)->Unit(benchmark::kMillisecond);

void BM_ZooAprioriItemsets(benchmark::State& state) {
    const auto p = params(state.range(0) / 100.0, 0, rulekit::MiningTarget::frequent_itemsets);
    for (auto _ : state) benchmark::DoNotOptimize(rulekit::apriori_itemsets(zoo(), p).size());
}
BENCHMARK(BM_ZooAprioriItemsets)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ZooEclat(benchmark::State& state) {
    const auto p = params(state.range(0) / 100.0, 0, rulekit::MiningTarget::frequent_itemsets);
    for (auto _ : state) benchmark::DoNotOptimize(rulekit::eclat(zoo(), p).size());
}
BENCHMARK(BM_ZooEclat)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RandomApriori(benchmark::State& state) {
    const auto t = rulekit::random_transactions(50, static_cast<std::size_t>(state.range(0)), 0.1, 1);
    const auto p = params(0.01, 0.5, rulekit::MiningTarget::frequent_itemsets);
    for (auto _ : state) benchmark::DoNotOptimize(rulekit::apriori_itemsets(t, p).size());
}
BENCHMARK(BM_RandomApriori)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_RandomEclat(benchmark::State& state) {
    const auto t = rulekit::random_transactions(50, static_cast<std::size_t>(state.range(0)), 0.1, 1);
    const auto p = params(0.01, 0.5, rulekit::MiningTarget::frequent_itemsets);
    for (auto _ : state) benchmark::DoNotOptimize(rulekit::eclat(t, p).size());
}
BENCHMARK(BM_RandomEclat)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ZooRedundancy(benchmark::State& state) {
    const auto r = rulekit::apriori_rules(zoo(), params(0.01, 0.7, rulekit::MiningTarget::rules));
    for (auto _ : state) benchmark::DoNotOptimize(rulekit::is_redundant(r));
}
BENCHMARK(BM_ZooRedundancy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
