#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "evg/evolving_graph.hpp"

namespace evg {

/// Growing-edge benchmark family: nodes and slices fixed, static edges
/// increased geometrically from start_edges to max_edges.
struct BenchConfig {
  NodeId nodes = 10000;
  TimeIndex times = 10;
  std::uint64_t start_edges = 100000;
  std::uint64_t max_edges = 1000000;
  std::size_t steps = 5;
  std::size_t repetitions = 5;  // timed runs per size; one extra warm-up is discarded
  std::uint64_t seed = 1;
  Directedness directedness = Directedness::Directed;
};

struct BenchRow {
  std::uint64_t edges = 0;
  double seconds = 0.0;          // median over repetitions
  std::size_t iterations = 0;    // BFS frontier expansions
  std::size_t reached = 0;
  std::size_t active_nodes = 0;
};

/// Strictly increasing, geometric, first = start_edges, last = max_edges.
std::vector<std::uint64_t> bench_schedule(const BenchConfig& config);

/// Root used for a benchmark graph: the earliest-time active node with the
/// largest out-degree (ties to the smaller id).
TemporalNode bench_root(const EvolvingGraph& g);

std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const std::function<void(const BenchRow&)>& on_row = {});

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace evg
