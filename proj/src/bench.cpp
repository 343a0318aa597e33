#include "evg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "evg/generator.hpp"
#include "evg/traversal.hpp"

namespace evg {

std::vector<std::uint64_t> bench_schedule(const BenchConfig& config) {
  if (config.steps == 0 || config.start_edges == 0 || config.max_edges < config.start_edges)
    throw std::invalid_argument("bench schedule needs steps > 0 and 0 < start <= max");
  std::vector<std::uint64_t> out;
  if (config.steps == 1) return {config.start_edges};
  const double ratio = static_cast<double>(config.max_edges) / static_cast<double>(config.start_edges);
  for (std::size_t i = 0; i < config.steps; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(config.steps - 1);
    auto e = static_cast<std::uint64_t>(std::llround(config.start_edges * std::pow(ratio, f)));
    if (!out.empty() && e <= out.back())
      throw std::invalid_argument("bench schedule is not strictly increasing; use fewer steps");
    out.push_back(e);
  }
  out.back() = config.max_edges;
  return out;
}

TemporalNode bench_root(const EvolvingGraph& g) {
  for (TimeIndex t = 0; t < g.time_count(); ++t) {
    auto active = g.active_nodes(t);
    if (active.empty()) continue;
    NodeId best = active.front();
    for (NodeId v : active)
      if (g.out_neighbors(v, t).size() > g.out_neighbors(best, t).size()) best = v;
    return {best, t};
  }
  throw std::invalid_argument("graph has no active node");
}

std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const std::function<void(const BenchRow&)>& on_row) {
  using Clock = std::chrono::steady_clock;
  const auto schedule = bench_schedule(config);
  std::vector<BenchRow> rows;

  SplitMix64 seeds(config.seed);
  EvolvingGraph g = random_graph({config.nodes, config.times, schedule.front(), seeds.next(),
                                  config.directedness});
  for (std::size_t step = 0; step < schedule.size(); ++step) {
    if (step > 0) g = grow(g, schedule[step] - g.static_edge_count(), seeds.next());
    const TemporalNode root = bench_root(g);

    BenchRow row;
    row.edges = g.static_edge_count();
    row.active_nodes = g.active_count();
    std::vector<double> times;
    for (std::size_t rep = 0; rep <= config.repetitions; ++rep) {
      const auto start = Clock::now();
      ReachedMap reached = bfs(g, root);
      const std::chrono::duration<double> elapsed = Clock::now() - start;
      row.iterations = reached.iterations();
      row.reached = reached.size();
      if (rep > 0) times.push_back(elapsed.count());
    }
    std::sort(times.begin(), times.end());
    row.seconds = times.empty() ? 0.0
                  : times.size() % 2 ? times[times.size() / 2]
                                     : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
    rows.push_back(row);
    if (on_row) on_row(row);
  }
  return rows;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit needs >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx == 0 ? 0 : sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

}  // namespace evg
