#include "evg/evolving_graph.hpp"

#include <charconv>
#include <stdexcept>

#include "evg/errors.hpp"

namespace evg {

namespace {

std::optional<std::int64_t> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// CSR over `node_count` rows from (row, col) pairs already sorted by row then col.
void fill_csr(NodeId node_count, const std::vector<SliceEdge>& pairs,
              std::vector<std::size_t>& offsets, std::vector<NodeId>& targets) {
  offsets.assign(static_cast<std::size_t>(node_count) + 1, 0);
  targets.resize(pairs.size());
  for (const auto& e : pairs) ++offsets[e.src + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  for (std::size_t i = 0; i < pairs.size(); ++i) targets[i] = pairs[i].dst;
}

}  // namespace

bool natural_name_less(std::string_view a, std::string_view b) {
  auto ia = parse_integer(a);
  auto ib = parse_integer(b);
  if (ia && ib) {
    if (*ia != *ib) return *ia < *ib;
    return a < b;
  }
  if (ia || ib) return ia.has_value();
  return a < b;
}

EvolvingGraph EvolvingGraph::from_indexed(std::vector<std::string> names, NodeId node_count,
                                          std::vector<TimeLabel> labels,
                                          std::vector<IndexedEdge> edges,
                                          Directedness directedness) {
  EvolvingGraph g;
  g.directed_ = directedness == Directedness::Directed;

  if (names.empty()) {
    names.reserve(node_count);
    for (NodeId v = 0; v < node_count; ++v) names.push_back(std::to_string(v));
  } else if (names.size() != node_count) {
    throw std::invalid_argument("name table size does not match node count");
  }
  g.names_ = std::move(names);
  g.ids_.reserve(g.names_.size());
  for (NodeId v = 0; v < node_count; ++v) {
    if (!g.ids_.emplace(g.names_[v], v).second)
      throw std::invalid_argument("duplicate node name '" + g.names_[v] + "'");
  }

  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] >= labels[i]) throw std::invalid_argument("time labels must strictly increase");
  }
  g.labels_ = std::move(labels);
  const auto time_count = static_cast<TimeIndex>(g.labels_.size());

  // Canonicalize, drop self-loops, dedup.
  std::erase_if(edges, [](const IndexedEdge& e) { return e.src == e.dst; });
  for (auto& e : edges) {
    if (e.src >= node_count || e.dst >= node_count || e.time >= time_count)
      throw std::invalid_argument("edge refers to an unknown node or time");
    if (!g.directed_ && e.src > e.dst) std::swap(e.src, e.dst);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edge_count_ = edges.size();

  g.slices_.resize(time_count);
  std::vector<std::vector<TimeIndex>> per_node_times(node_count);
  auto it = edges.begin();
  for (TimeIndex t = 0; t < time_count; ++t) {
    Slice& slice = g.slices_[t];
    auto end = std::find_if(it, edges.end(), [t](const IndexedEdge& e) { return e.time != t; });
    for (; it != end; ++it) slice.edges.push_back({it->src, it->dst});

    std::vector<SliceEdge> forward = slice.edges;
    std::vector<SliceEdge> backward;
    backward.reserve(slice.edges.size());
    for (const auto& e : slice.edges) backward.push_back({e.dst, e.src});
    if (!g.directed_) {
      forward.insert(forward.end(), backward.begin(), backward.end());
      backward.clear();
    }
    std::sort(forward.begin(), forward.end());
    fill_csr(node_count, forward, slice.out_offsets, slice.out_targets);
    if (g.directed_) {
      std::sort(backward.begin(), backward.end());
      fill_csr(node_count, backward, slice.in_offsets, slice.in_sources);
    }

    for (const auto& e : slice.edges) {
      slice.active.push_back(e.src);
      slice.active.push_back(e.dst);
    }
    std::sort(slice.active.begin(), slice.active.end());
    slice.active.erase(std::unique(slice.active.begin(), slice.active.end()), slice.active.end());
    for (NodeId v : slice.active) per_node_times[v].push_back(t);
  }

  g.active_offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (NodeId v = 0; v < node_count; ++v)
    g.active_offsets_[v + 1] = g.active_offsets_[v] + per_node_times[v].size();
  g.active_times_.reserve(g.active_offsets_.back());
  for (const auto& times : per_node_times)
    g.active_times_.insert(g.active_times_.end(), times.begin(), times.end());
  return g;
}

std::optional<TimeIndex> EvolvingGraph::time_of(TimeLabel label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<TimeIndex>(it - labels_.begin());
}

std::optional<NodeId> EvolvingGraph::node_of(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool EvolvingGraph::has_edge(NodeId src, NodeId dst, TimeIndex t) const {
  auto out = out_neighbors(src, t);
  return std::binary_search(out.begin(), out.end(), dst);
}

std::vector<IndexedEdge> EvolvingGraph::edges() const {
  std::vector<IndexedEdge> out;
  out.reserve(edge_count_);
  for (TimeIndex t = 0; t < time_count(); ++t)
    for (const auto& e : slices_[t].edges) out.push_back({e.src, e.dst, t});
  return out;
}

std::vector<TemporalNode> EvolvingGraph::forward_neighbors(TemporalNode tn) const {
  std::vector<TemporalNode> out;
  for_each_forward_neighbor(tn, [&](TemporalNode x) { out.push_back(x); });
  // Same-time neighbours come first in node order, causal hops follow in
  // time order, so the list is already sorted.
  return out;
}

bool EvolvingGraph::is_temporal_path(std::span<const TemporalNode> seq) const {
  for (const auto& tn : seq)
    if (!is_active(tn)) return false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const TemporalNode& a = seq[i - 1];
    const TemporalNode& b = seq[i];
    if (a.node == b.node) {
      if (!(a.time < b.time)) return false;
    } else {
      if (a.time != b.time || !has_edge(a.node, b.node, a.time)) return false;
    }
  }
  return true;
}

bool operator==(const EvolvingGraph& a, const EvolvingGraph& b) {
  if (a.directed_ != b.directed_ || a.names_ != b.names_ || a.labels_ != b.labels_) return false;
  for (TimeIndex t = 0; t < a.time_count(); ++t)
    if (a.slices_[t].edges != b.slices_[t].edges) return false;
  return true;
}

EvolvingGraph build_graph(std::span<const EdgeRecord> edges, Directedness directedness,
                          NameOrder order) {
  std::vector<const EdgeRecord*> kept;
  kept.reserve(edges.size());
  for (const auto& e : edges)
    if (e.src != e.dst) kept.push_back(&e);
  if (kept.empty()) throw EmptyGraphError();

  std::vector<std::string> names;
  std::vector<TimeLabel> labels;
  for (const auto* e : kept) {
    names.push_back(e->src);
    names.push_back(e->dst);
    labels.push_back(e->time);
  }
  if (order == NameOrder::Natural)
    std::sort(names.begin(), names.end(), natural_name_less);
  else
    std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::unordered_map<std::string_view, NodeId> ids;
  ids.reserve(names.size());
  for (NodeId v = 0; v < names.size(); ++v) ids.emplace(names[v], v);

  std::vector<IndexedEdge> indexed;
  indexed.reserve(kept.size());
  for (const auto* e : kept) {
    auto t = std::lower_bound(labels.begin(), labels.end(), e->time) - labels.begin();
    indexed.push_back({ids.at(e->src), ids.at(e->dst), static_cast<TimeIndex>(t)});
  }
  const auto node_count = static_cast<NodeId>(names.size());
  return EvolvingGraph::from_indexed(std::move(names), node_count, std::move(labels),
                                     std::move(indexed), directedness);
}

EvolvingGraph transpose(const EvolvingGraph& g) {
  auto edges = g.edges();
  if (g.directed())
    for (auto& e : edges) std::swap(e.src, e.dst);
  return EvolvingGraph::from_indexed(std::vector<std::string>(g.names().begin(), g.names().end()),
                                     g.node_count(),
                                     std::vector<TimeLabel>(g.labels().begin(), g.labels().end()),
                                     std::move(edges), g.directedness());
}

}  // namespace evg
