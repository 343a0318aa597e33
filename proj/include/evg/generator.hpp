#pragma once

#include <cstdint>
#include <limits>

#include "evg/evolving_graph.hpp"

namespace evg {

/// SplitMix64. Fixed arithmetic, so the stream is identical on every
/// platform; split() derives an independent child stream.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return std::numeric_limits<std::uint64_t>::max(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  SplitMix64 split() noexcept { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  NodeId n_nodes = 0;
  TimeIndex n_times = 0;
  std::uint64_t n_static_edges = 0;
  std::uint64_t seed = 0;
  Directedness directedness = Directedness::Directed;
};

/// Number of distinct (u, v, t) triples without self-loops; unordered pairs
/// when undirected.
std::uint64_t edge_capacity(NodeId n_nodes, TimeIndex n_times, Directedness directedness);

/// Uniform sample of n_static_edges distinct slice edges. Nodes are named
/// "0".."n-1" and slices carry labels 1..n_times (empty slices are kept).
/// Throws InfeasibleError when n_static_edges exceeds the capacity.
EvolvingGraph random_graph(const GenSpec& spec);

/// g plus extra_edges fresh distinct random edges over the same nodes and
/// slices. Throws InfeasibleError if that exceeds the remaining capacity.
EvolvingGraph grow(const EvolvingGraph& g, std::uint64_t extra_edges, std::uint64_t seed);

}  // namespace evg
