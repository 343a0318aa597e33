#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evg/evolving_graph.hpp"
#include "evg/traversal.hpp"

namespace evg {

/// Directed edge between two positions of StaticExpansion::active_nodes().
struct ExpansionEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;

  friend bool operator==(const ExpansionEdge&, const ExpansionEdge&) = default;
  friend auto operator<=>(const ExpansionEdge&, const ExpansionEdge&) = default;
};

/// The equivalent static digraph (V, static ∪ causal) of an evolving graph.
///
/// V is the set of active temporal nodes in (time, node) order; that order
/// also fixes row/column positions for the block matrices. Static edges are
/// stored explicitly. Causal edges are quadratic in the number of active
/// times per node and are kept implicit as per-node chains of positions;
/// causal_edges() materializes them on request.
class StaticExpansion {
 public:
  std::span<const TemporalNode> active_nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::optional<std::uint32_t> index_of(TemporalNode tn) const;

  std::span<const ExpansionEdge> static_edges() const noexcept { return static_edges_; }
  std::vector<ExpansionEdge> causal_edges() const;
  std::size_t causal_edge_count() const noexcept { return causal_count_; }

  std::span<const std::uint32_t> static_successors(std::uint32_t pos) const;
  /// Later active copies of the same node, in time order.
  std::span<const std::uint32_t> causal_successors(std::uint32_t pos) const;

 private:
  friend StaticExpansion expand(const EvolvingGraph& g);

  std::vector<TemporalNode> nodes_;
  std::vector<ExpansionEdge> static_edges_;  // sorted
  std::vector<std::size_t> static_offsets_;  // CSR over static_edges_ by source
  std::vector<std::uint32_t> static_targets_;
  std::vector<std::uint32_t> chains_;        // positions grouped by node, time ascending
  std::vector<std::size_t> chain_end_;       // per position: end of its node's chain in chains_
  std::vector<std::size_t> chain_slot_;      // per position: its own index in chains_
  std::size_t causal_count_ = 0;
};

/// Builds V from the endpoints of slice edges (not from the graph's active
/// index), both directions of each undirected edge, and every same-node
/// increasing-time pair of active copies.
StaticExpansion expand(const EvolvingGraph& g);

/// Classical queue BFS on (V, static ∪ causal).
/// Throws InactiveRootError when root is not in V.
ReachedMap static_bfs(const StaticExpansion& x, TemporalNode root);

using TemporalNodeFormat = std::function<std::string(TemporalNode)>;

/// One line per edge: `STATIC|CAUSAL <TAB> from <TAB> to`, static edges
/// first, each group sorted. The default format is `name@label`.
void write_expansion_edges(const StaticExpansion& x, const EvolvingGraph& g, std::ostream& out,
                           const TemporalNodeFormat& format = {});

}  // namespace evg
