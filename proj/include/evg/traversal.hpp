#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "evg/evolving_graph.hpp"

namespace evg {

/// Temporal nodes reached from a root, each with its hop distance.
///
/// Entries are kept sorted by (time, node). A map is `degenerate` when the
/// root was inactive: it then holds only {root: 0} and reaches nothing.
class ReachedMap {
 public:
  struct Entry {
    TemporalNode node;
    Distance distance = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ReachedMap() = default;
  ReachedMap(TemporalNode root, std::vector<Entry> entries, bool degenerate = false,
             std::size_t iterations = 0);

  TemporalNode root() const noexcept { return root_; }
  bool degenerate() const noexcept { return degenerate_; }
  /// Number of frontier expansions the producing search performed.
  std::size_t iterations() const noexcept { return iterations_; }

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::optional<Distance> find(TemporalNode tn) const;
  bool contains(TemporalNode tn) const { return find(tn).has_value(); }

  /// Entries ordered by (distance, time, node).
  std::vector<Entry> by_distance() const;
  /// For each reached node, the entry with the earliest time.
  std::vector<Entry> earliest_by_node() const;

  /// Compares root, degeneracy and entries; iteration counts are ignored.
  friend bool operator==(const ReachedMap& a, const ReachedMap& b) {
    return a.root_ == b.root_ && a.degenerate_ == b.degenerate_ && a.entries_ == b.entries_;
  }

 private:
  TemporalNode root_{};
  std::vector<Entry> entries_;
  bool degenerate_ = false;
  std::size_t iterations_ = 0;
};

/// Level-synchronous BFS over temporal paths. Each frontier is expanded in
/// (time, node) order.
ReachedMap bfs(const EvolvingGraph& g, TemporalNode root);

/// Same search, returning the frontiers: layer k holds exactly the temporal
/// nodes at distance k, sorted. Empty for an inactive root.
std::vector<std::vector<TemporalNode>> bfs_layers(const EvolvingGraph& g, TemporalNode root);

/// Hop distance along temporal paths; absent when unreachable or when src
/// is inactive.
std::optional<Distance> distance(const EvolvingGraph& g, TemporalNode src, TemporalNode dst);

bool is_reachable(const EvolvingGraph& g, TemporalNode src, TemporalNode dst);

/// Reverses the clock (label t becomes -t, slice order flips) and, for
/// directed graphs, every edge. BFS on the result from (a, t) finds the
/// temporal nodes that reach (a, t) in g. An involution.
EvolvingGraph reverse_time(const EvolvingGraph& g);

/// Position of slice t after reverse_time.
inline TimeIndex reversed_index(const EvolvingGraph& g, TimeIndex t) {
  return g.time_count() - 1 - t;
}

}  // namespace evg
