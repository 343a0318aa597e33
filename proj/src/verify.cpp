#include "evg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "evg/algebra.hpp"
#include "evg/flatten.hpp"
#include "evg/traversal.hpp"

namespace evg {

namespace {

// Empty string when all roots agree, else a description of the first miss.
std::string check_graph(const EvolvingGraph& g, std::size_t& roots) {
  const StaticExpansion x = expand(g);
  for (const TemporalNode root : x.active_nodes()) {
    ++roots;
    const ReachedMap list = bfs(g, root);
    const ReachedMap flat = static_bfs(x, root);
    const ReachedMap algebraic = algebraic_bfs(g, root);
    if (list != flat || list != algebraic) {
      return "root (" + std::to_string(root.node) + ", " + std::to_string(root.time) +
             "): bfs reached " + std::to_string(list.size()) + ", static " +
             std::to_string(flat.size()) + ", algebraic " + std::to_string(algebraic.size());
    }
  }
  return {};
}

}  // namespace

VerifyOutcome verify_graph(const EvolvingGraph& g) {
  VerifyOutcome out;
  out.graphs = 1;
  std::string failure = check_graph(g, out.roots);
  if (failure.empty())
    out.agreeing = 1;
  else
    out.failures.push_back(std::move(failure));
  return out;
}

GenSpec random_small_spec(SplitMix64& rng, NodeId max_nodes, TimeIndex max_times) {
  GenSpec spec;
  spec.n_nodes = 2 + static_cast<NodeId>(rng.below(max_nodes - 1));
  spec.n_times = 1 + static_cast<TimeIndex>(rng.below(max_times));
  spec.directedness = rng.below(2) ? Directedness::Directed : Directedness::Undirected;
  const std::uint64_t capacity = edge_capacity(spec.n_nodes, spec.n_times, spec.directedness);
  // Edge budget up to about two edges per temporal node keeps the mix of
  // sparse and well-connected slices.
  const std::uint64_t budget =
      std::min<std::uint64_t>(capacity, 2ULL * spec.n_nodes * spec.n_times);
  spec.n_static_edges = 1 + rng.below(budget);
  spec.seed = rng.next();
  return spec;
}

VerifyOutcome verify_random(std::size_t count, std::uint64_t seed, std::size_t threads) {
  SplitMix64 rng(seed);
  std::vector<GenSpec> specs;
  specs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) specs.push_back(random_small_spec(rng));

  std::vector<std::string> failures(count);
  std::vector<std::size_t> roots(count, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      failures[i] = check_graph(random_graph(specs[i]), roots[i]);
  };
  threads = std::max<std::size_t>(1, std::min(threads, count));
  std::vector<std::jthread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerifyOutcome out;
  out.graphs = count;
  for (std::size_t i = 0; i < count; ++i) {
    out.roots += roots[i];
    if (failures[i].empty())
      ++out.agreeing;
    else
      out.failures.push_back("graph " + std::to_string(i) + ": " + failures[i]);
  }
  return out;
}

}  // namespace evg
