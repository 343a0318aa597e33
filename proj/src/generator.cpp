#include "evg/generator.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "evg/errors.hpp"

namespace evg {

namespace {

// Triples are encoded as t * n^2 + u * n + v.
struct TripleCodec {
  std::uint64_t n;

  std::uint64_t encode(NodeId u, NodeId v, TimeIndex t) const { return (t * n + u) * n + v; }
  IndexedEdge decode(std::uint64_t key) const {
    return {static_cast<NodeId>((key / n) % n), static_cast<NodeId>(key % n),
            static_cast<TimeIndex>(key / (n * n))};
  }
};

IndexedEdge random_triple(SplitMix64& rng, NodeId n, TimeIndex times, bool directed) {
  const auto t = static_cast<TimeIndex>(rng.below(times));
  const auto u = static_cast<NodeId>(rng.below(n));
  auto v = static_cast<NodeId>(rng.below(n - 1));
  if (v >= u) ++v;
  if (!directed && u > v) return {v, u, t};
  return {u, v, t};
}

// Draws `count` new triples avoiding `taken`. Rejection sampling while the
// request is small relative to what is left; otherwise enumerate the free
// triples and take a prefix of a partial shuffle.
std::vector<IndexedEdge> sample_edges(SplitMix64& rng, NodeId n, TimeIndex times, bool directed,
                                      std::unordered_set<std::uint64_t>& taken, std::uint64_t count) {
  const TripleCodec codec{n};
  const std::uint64_t capacity = edge_capacity(n, times, directed ? Directedness::Directed
                                                                   : Directedness::Undirected);
  const std::uint64_t remaining = capacity - taken.size();
  std::vector<IndexedEdge> out;
  out.reserve(count);

  if (count * 2 <= remaining) {
    while (out.size() < count) {
      IndexedEdge e = random_triple(rng, n, times, directed);
      if (taken.insert(codec.encode(e.src, e.dst, e.time)).second) out.push_back(e);
    }
    return out;
  }

  std::vector<std::uint64_t> free;
  free.reserve(remaining);
  for (TimeIndex t = 0; t < times; ++t)
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
        if (u == v) continue;
        const std::uint64_t key = codec.encode(u, v, t);
        if (!taken.contains(key)) free.push_back(key);
      }
  for (std::uint64_t i = 0; i < count; ++i) {
    std::swap(free[i], free[i + rng.below(free.size() - i)]);
    taken.insert(free[i]);
    out.push_back(codec.decode(free[i]));
  }
  return out;
}

std::vector<TimeLabel> default_labels(TimeIndex times) {
  std::vector<TimeLabel> labels(times);
  for (TimeIndex t = 0; t < times; ++t) labels[t] = static_cast<TimeLabel>(t) + 1;
  return labels;
}

}  // namespace

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // Lemire's multiply-shift with rejection of the biased low range.
  __extension__ using u128 = unsigned __int128;
  u128 m = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t edge_capacity(NodeId n_nodes, TimeIndex n_times, Directedness directedness) {
  const std::uint64_t n = n_nodes;
  const std::uint64_t pairs = n < 2 ? 0 : n * (n - 1);
  return (directedness == Directedness::Directed ? pairs : pairs / 2) * n_times;
}

EvolvingGraph random_graph(const GenSpec& spec) {
  const std::uint64_t capacity = edge_capacity(spec.n_nodes, spec.n_times, spec.directedness);
  if (spec.n_static_edges > capacity)
    throw InfeasibleError("requested " + std::to_string(spec.n_static_edges) +
                          " edges but only " + std::to_string(capacity) + " distinct slice edges exist");

  SplitMix64 rng(spec.seed);
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(spec.n_static_edges);
  auto edges = sample_edges(rng, spec.n_nodes, spec.n_times,
                            spec.directedness == Directedness::Directed, taken, spec.n_static_edges);
  return EvolvingGraph::from_indexed({}, spec.n_nodes, default_labels(spec.n_times), std::move(edges),
                                     spec.directedness);
}

EvolvingGraph grow(const EvolvingGraph& g, std::uint64_t extra_edges, std::uint64_t seed) {
  const std::uint64_t capacity = edge_capacity(g.node_count(), g.time_count(), g.directedness());
  if (g.static_edge_count() + extra_edges > capacity)
    throw InfeasibleError("cannot add " + std::to_string(extra_edges) + " edges: only " +
                          std::to_string(capacity - g.static_edge_count()) + " slots remain");

  const TripleCodec codec{g.node_count()};
  auto edges = g.edges();
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(edges.size() + extra_edges);
  for (const auto& e : edges) taken.insert(codec.encode(e.src, e.dst, e.time));

  SplitMix64 rng(seed);
  auto fresh = sample_edges(rng, g.node_count(), g.time_count(), g.directed(), taken, extra_edges);
  edges.insert(edges.end(), fresh.begin(), fresh.end());
  return EvolvingGraph::from_indexed(std::vector<std::string>(g.names().begin(), g.names().end()),
                                     g.node_count(),
                                     std::vector<TimeLabel>(g.labels().begin(), g.labels().end()),
                                     std::move(edges), g.directedness());
}

}  // namespace evg
