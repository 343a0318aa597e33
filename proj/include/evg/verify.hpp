#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "evg/evolving_graph.hpp"
#include "evg/generator.hpp"

namespace evg {

struct VerifyOutcome {
  std::size_t graphs = 0;
  std::size_t agreeing = 0;
  std::size_t roots = 0;
  std::vector<std::string> failures;  // one line per disagreeing graph

  bool passed() const noexcept { return graphs == agreeing; }
};

/// Runs bfs, static_bfs on the expansion, and algebraic_bfs from every
/// active root and requires all three maps to be identical.
VerifyOutcome verify_graph(const EvolvingGraph& g);

/// Spec for a small random graph: 2..max_nodes nodes, 1..max_times slices,
/// a random edge budget, random directedness.
GenSpec random_small_spec(SplitMix64& rng, NodeId max_nodes = 50, TimeIndex max_times = 6);

/// verify_graph over `count` seeded random graphs on `threads` workers.
/// Results do not depend on the thread count.
VerifyOutcome verify_random(std::size_t count, std::uint64_t seed, std::size_t threads = 1);

}  // namespace evg
