// Parallel subset-scan kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "decmin/core.hpp"
#include "decmin/instances.hpp"
#include "decmin/reference.hpp"
#include "decmin/scan.hpp"

using namespace decmin;

namespace {

MultiGraph random_graph(int nodes, int edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  std::vector<std::string> names;
  for (int i = 0; i < nodes; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> e;
  while (static_cast<int>(e.size()) < edges) {
    int u = pick(rng), v = pick(rng);
    if (u != v) e.emplace_back(u, v);
  }
  return MultiGraph(GroundSet(names), e);
}

SupermodularInstance graph_instance(int nodes) {
  return tabulate(orientation_instance(random_graph(nodes, 3 * nodes, 42)).with_scan_limit(24));
}

void BM_MaxRatio(benchmark::State& state, bool parallel) {
  const auto inst = graph_instance(static_cast<int>(state.range(0)));
  const std::int64_t count = scan::subset_count(inst.full());
  auto f = [&](std::int64_t k) -> std::optional<std::int64_t> {
    if (k == 0) return std::nullopt;
    Subset x(static_cast<Mask>(k));
    return ceil_div(inst(x).value(), x.size());
  };
  for (auto _ : state) {
    auto best = parallel ? scan::max_value(count, f) : scan::serial::max_value(count, f);
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(state.iterations() * count);
}

void BM_TightIntersection(benchmark::State& state, bool parallel) {
  const auto inst = graph_instance(static_cast<int>(state.range(0)));
  const std::int64_t count = scan::subset_count(inst.full());
  std::vector<int> order(inst.size());
  std::iota(order.begin(), order.end(), 0);
  const IntVector m = greedy_vertex(inst, order);
  auto tight = [&](std::int64_t k) {
    Subset x(static_cast<Mask>(k));
    return x.contains(0) && inst(x) == ExtInt(subset_sum(m, x));
  };
  auto id = [](std::int64_t k) { return static_cast<Mask>(k); };
  for (auto _ : state) {
    Mask acc = parallel ? scan::and_reduce(count, tight, id, inst.full().mask)
                        : scan::serial::and_reduce(count, tight, id, inst.full().mask);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * count);
}

void BM_Audit(benchmark::State& state, bool parallel) {
  const auto inst = graph_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto v = parallel ? audit_supermodular(inst) : audit_supermodular_serial(inst);
    benchmark::DoNotOptimize(v);
  }
}

void BM_Enumerate(benchmark::State& state, bool parallel) {
  const auto inst = orientation_instance(random_graph(static_cast<int>(state.range(0)), 10, 7));
  const auto box = *natural_bounds(inst);
  for (auto _ : state) {
    auto pts = parallel ? enumerate_members(inst, box) : enumerate_members_serial(inst, box);
    benchmark::DoNotOptimize(pts);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_MaxRatio, serial, false)->Arg(16)->Arg(20);
BENCHMARK_CAPTURE(BM_MaxRatio, parallel, true)->Arg(16)->Arg(20);
BENCHMARK_CAPTURE(BM_TightIntersection, serial, false)->Arg(16)->Arg(20);
BENCHMARK_CAPTURE(BM_TightIntersection, parallel, true)->Arg(16)->Arg(20);
BENCHMARK_CAPTURE(BM_Audit, serial, false)->Arg(8)->Arg(10);
BENCHMARK_CAPTURE(BM_Audit, parallel, true)->Arg(8)->Arg(10);
BENCHMARK_CAPTURE(BM_Enumerate, serial, false)->Arg(5)->Arg(6);
BENCHMARK_CAPTURE(BM_Enumerate, parallel, true)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
