#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace evg {

using NodeId = std::uint32_t;
using TimeIndex = std::uint32_t;  // dense position in the sorted label list
using TimeLabel = std::int64_t;   // timestamp as supplied by the caller
using Distance = std::uint32_t;

/// A (node, time) pair. Ordered time-major so iteration follows the clock.
struct TemporalNode {
  NodeId node = 0;
  TimeIndex time = 0;

  friend bool operator==(const TemporalNode&, const TemporalNode&) = default;
  friend std::strong_ordering operator<=>(const TemporalNode& a, const TemporalNode& b) {
    if (auto c = a.time <=> b.time; c != 0) return c;
    return a.node <=> b.node;
  }
};

enum class Directedness { Directed, Undirected };

/// How external node names are mapped onto dense ids.
///  Natural: names that parse as integers come first in numeric order,
///           everything else follows in byte order.
///  Lexicographic: plain byte order.
enum class NameOrder { Natural, Lexicographic };

struct EdgeRecord {
  std::string src;
  std::string dst;
  TimeLabel time = 0;
};

struct IndexedEdge {
  NodeId src = 0;
  NodeId dst = 0;
  TimeIndex time = 0;

  friend bool operator==(const IndexedEdge&, const IndexedEdge&) = default;
  friend std::strong_ordering operator<=>(const IndexedEdge& a, const IndexedEdge& b) {
    if (auto c = a.time <=> b.time; c != 0) return c;
    if (auto c = a.src <=> b.src; c != 0) return c;
    return a.dst <=> b.dst;
  }
};

struct SliceEdge {
  NodeId src = 0;
  NodeId dst = 0;

  friend bool operator==(const SliceEdge&, const SliceEdge&) = default;
  friend auto operator<=>(const SliceEdge&, const SliceEdge&) = default;
};

/// An immutable sequence of time-stamped static graphs over a shared node
/// universe.
///
/// Each slice keeps its canonical edge list (undirected edges stored once
/// with src < dst), CSR out- and in-adjacency, and the sorted list of nodes
/// active in it. A per-node index of active times backs the causal hops.
/// Self-loops never reach this type; the builders drop them.
class EvolvingGraph {
 public:
  EvolvingGraph() = default;

  /// Builds from already-indexed edges. `labels` must strictly increase and
  /// may include slices that end up with no edges. `names` is either empty
  /// (decimal ids are used) or has exactly `node_count` unique entries.
  static EvolvingGraph from_indexed(std::vector<std::string> names, NodeId node_count,
                                    std::vector<TimeLabel> labels,
                                    std::vector<IndexedEdge> edges, Directedness directedness);

  bool directed() const noexcept { return directed_; }
  Directedness directedness() const noexcept {
    return directed_ ? Directedness::Directed : Directedness::Undirected;
  }
  NodeId node_count() const noexcept { return static_cast<NodeId>(names_.size()); }
  TimeIndex time_count() const noexcept { return static_cast<TimeIndex>(labels_.size()); }

  TimeLabel label(TimeIndex t) const { return labels_.at(t); }
  std::span<const TimeLabel> labels() const noexcept { return labels_; }
  std::optional<TimeIndex> time_of(TimeLabel label) const;

  const std::string& name(NodeId v) const { return names_.at(v); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<NodeId> node_of(std::string_view name) const;

  /// Traversable successors of v in slice t; for undirected graphs every
  /// neighbour. Sorted ascending.
  std::span<const NodeId> out_neighbors(NodeId v, TimeIndex t) const;
  /// Predecessors of v in slice t; equals out_neighbors when undirected.
  std::span<const NodeId> in_neighbors(NodeId v, TimeIndex t) const;
  bool has_edge(NodeId src, NodeId dst, TimeIndex t) const;

  /// Canonical edges of slice t, sorted.
  std::span<const SliceEdge> slice_edges(TimeIndex t) const { return slices_.at(t).edges; }
  /// All canonical edges, sorted by (time, src, dst).
  std::vector<IndexedEdge> edges() const;
  std::size_t static_edge_count() const noexcept { return edge_count_; }

  /// Sorted times at which v is active.
  std::span<const TimeIndex> active_times(NodeId v) const;
  /// Sorted nodes active in slice t.
  std::span<const NodeId> active_nodes(TimeIndex t) const { return slices_.at(t).active; }
  /// Number of active temporal nodes.
  std::size_t active_count() const noexcept { return active_times_.size(); }

  bool is_active(NodeId v, TimeIndex t) const;
  bool is_active(TemporalNode tn) const { return is_active(tn.node, tn.time); }

  /// Static successors at the same time, then the same node at every later
  /// active time. Nothing for inactive nodes.
  template <class Visit>
  void for_each_forward_neighbor(TemporalNode tn, Visit&& visit) const {
    if (!is_active(tn)) return;
    for (NodeId u : out_neighbors(tn.node, tn.time)) visit(TemporalNode{u, tn.time});
    auto times = active_times(tn.node);
    for (auto it = std::upper_bound(times.begin(), times.end(), tn.time); it != times.end(); ++it)
      visit(TemporalNode{tn.node, *it});
  }

  /// Forward neighbours sorted by (time, node).
  std::vector<TemporalNode> forward_neighbors(TemporalNode tn) const;

  /// Consecutive-pair check: every element active, and each step either
  /// waits on the same node (time strictly increases) or follows an edge of
  /// the current slice.
  bool is_temporal_path(std::span<const TemporalNode> seq) const;

  friend bool operator==(const EvolvingGraph& a, const EvolvingGraph& b);

 private:
  struct Slice {
    std::vector<SliceEdge> edges;
    std::vector<std::size_t> out_offsets;
    std::vector<NodeId> out_targets;
    std::vector<std::size_t> in_offsets;  // empty when undirected
    std::vector<NodeId> in_sources;
    std::vector<NodeId> active;
  };

  bool directed_ = true;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<TimeLabel> labels_;
  std::vector<Slice> slices_;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> active_offsets_;  // CSR by node into active_times_
  std::vector<TimeIndex> active_times_;
};

inline std::span<const NodeId> EvolvingGraph::out_neighbors(NodeId v, TimeIndex t) const {
  if (v >= node_count() || t >= time_count()) return {};
  const Slice& s = slices_[t];
  return std::span<const NodeId>(s.out_targets).subspan(s.out_offsets[v],
                                                        s.out_offsets[v + 1] - s.out_offsets[v]);
}

inline std::span<const NodeId> EvolvingGraph::in_neighbors(NodeId v, TimeIndex t) const {
  if (!directed_) return out_neighbors(v, t);
  if (v >= node_count() || t >= time_count()) return {};
  const Slice& s = slices_[t];
  return std::span<const NodeId>(s.in_sources).subspan(s.in_offsets[v],
                                                       s.in_offsets[v + 1] - s.in_offsets[v]);
}

inline std::span<const TimeIndex> EvolvingGraph::active_times(NodeId v) const {
  if (v >= node_count()) return {};
  return std::span<const TimeIndex>(active_times_)
      .subspan(active_offsets_[v], active_offsets_[v + 1] - active_offsets_[v]);
}

inline bool EvolvingGraph::is_active(NodeId v, TimeIndex t) const {
  auto times = active_times(v);
  return std::binary_search(times.begin(), times.end(), t);
}

/// Ingests named edges. Self-loops are dropped, duplicates collapse, and the
/// result does not depend on the order of `edges`.
/// Throws EmptyGraphError if nothing but self-loops (or nothing) is given.
EvolvingGraph build_graph(std::span<const EdgeRecord> edges, Directedness directedness,
                          NameOrder order = NameOrder::Natural);

/// Flips every edge; time order is untouched. Identity on undirected graphs.
EvolvingGraph transpose(const EvolvingGraph& g);

/// Strict weak ordering used for NameOrder::Natural.
bool natural_name_less(std::string_view a, std::string_view b);

}  // namespace evg
