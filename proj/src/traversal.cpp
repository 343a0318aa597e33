#include "evg/traversal.hpp"

#include <algorithm>
#include <limits>
#include <iterator>
#include <stdexcept>
#include <utility>

namespace evg {

namespace {

constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

// Distances in slot order t * n + v, which is (time, node) order.
struct Search {
  std::size_t nodes = 0;
  std::vector<Distance> dist;
  std::size_t iterations = 0;
  Distance depth = 0;  // number of non-empty layers
  std::size_t reached = 0;
};

// LSD radix sort of slot numbers below `bound`; scratch is reused.
void sort_slots(std::vector<std::size_t>& keys, std::vector<std::size_t>& scratch, std::size_t bound) {
  if (keys.size() < 64) {
    std::sort(keys.begin(), keys.end());
    return;
  }
  constexpr unsigned kBits = 10;
  constexpr std::size_t kBuckets = std::size_t{1} << kBits;
  std::size_t count[kBuckets];
  scratch.resize(keys.size());
  for (unsigned shift = 0; (bound - 1) >> shift; shift += kBits) {
    std::fill(std::begin(count), std::end(count), 0);
    for (std::size_t k : keys) ++count[(k >> shift) & (kBuckets - 1)];
    std::size_t sum = 0;
    for (auto& c : count) sum += std::exchange(c, sum);
    for (std::size_t k : keys) scratch[count[(k >> shift) & (kBuckets - 1)]++] = k;
    keys.swap(scratch);
  }
}

Search run_bfs(const EvolvingGraph& g, TemporalNode root) {
  Search out;
  if (!g.is_active(root)) return out;

  const std::size_t n = g.node_count();
  auto slot = [n](NodeId v, TimeIndex t) { return static_cast<std::size_t>(t) * n + v; };
  out.nodes = n;
  out.dist.assign(n * g.time_count(), kUnreached);
  auto& dist = out.dist;

  dist[slot(root.node, root.time)] = 0;
  // Frontiers hold slots and are expanded in (time, node) order, which keeps
  // the adjacency and activity lookups moving forward through memory.
  std::vector<std::size_t> frontier{slot(root.node, root.time)};
  std::vector<std::size_t> next, scratch;
  Distance k = 0;
  for (; !frontier.empty(); ++k) {
    ++out.iterations;
    next.clear();
    out.reached += frontier.size();
    TimeIndex t = 0;
    std::size_t base = 0;
    for (const std::size_t s : frontier) {
      while (s >= base + n) {
        ++t;
        base += n;
      }
      const auto v = static_cast<NodeId>(s - base);
      for (NodeId u : g.out_neighbors(v, t)) {
        Distance& d = dist[slot(u, t)];
        if (d == kUnreached) {
          d = k + 1;
          next.push_back(slot(u, t));
        }
      }
      auto times = g.active_times(v);
      for (auto it = std::upper_bound(times.begin(), times.end(), t); it != times.end(); ++it) {
        Distance& d = dist[slot(v, *it)];
        if (d == kUnreached) {
          d = k + 1;
          next.push_back(slot(v, *it));
        } else if (d <= k) {
          // That copy was (or is being) expanded at distance <= k and hops
          // to every later time itself, so nothing further can improve.
          break;
        }
      }
    }
    sort_slots(next, scratch, dist.size());
    frontier.swap(next);
  }
  out.depth = k;
  return out;
}

template <typename Visit>
void for_each_reached(const Search& s, Visit&& visit) {
  const Distance* d = s.dist.data();
  const std::size_t times = s.nodes ? s.dist.size() / s.nodes : 0;
  for (TimeIndex t = 0; t < times; ++t)
    for (NodeId v = 0; v < s.nodes; ++v, ++d)
      if (*d != kUnreached) visit(TemporalNode{v, t}, *d);
}

}  // namespace

ReachedMap::ReachedMap(TemporalNode root, std::vector<Entry> entries, bool degenerate,
                       std::size_t iterations)
    : root_(root), entries_(std::move(entries)), degenerate_(degenerate), iterations_(iterations) {
  auto by_node = [](const Entry& a, const Entry& b) { return a.node < b.node; };
  if (!std::is_sorted(entries_.begin(), entries_.end(), by_node))
    std::sort(entries_.begin(), entries_.end(), by_node);
  auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                [](const Entry& a, const Entry& b) { return a.node == b.node; });
  if (dup != entries_.end()) throw std::invalid_argument("reached map has a repeated temporal node");
}

std::optional<Distance> ReachedMap::find(TemporalNode tn) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), tn,
                             [](const Entry& e, const TemporalNode& x) { return e.node < x; });
  if (it == entries_.end() || it->node != tn) return std::nullopt;
  return it->distance;
}

std::vector<ReachedMap::Entry> ReachedMap::by_distance() const {
  std::vector<Entry> out = entries_;
  std::stable_sort(out.begin(), out.end(),
                   [](const Entry& a, const Entry& b) { return a.distance < b.distance; });
  return out;
}

std::vector<ReachedMap::Entry> ReachedMap::earliest_by_node() const {
  std::vector<Entry> out;
  std::vector<bool> seen;
  for (const auto& e : entries_) {  // time-major, so the first hit is the earliest
    if (e.node.node >= seen.size()) seen.resize(e.node.node + 1, false);
    if (seen[e.node.node]) continue;
    seen[e.node.node] = true;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return a.node.node < b.node.node; });
  return out;
}

ReachedMap bfs(const EvolvingGraph& g, TemporalNode root) {
  const Search s = run_bfs(g, root);
  if (s.iterations == 0) return ReachedMap(root, {{root, 0}}, /*degenerate=*/true, 0);
  std::vector<ReachedMap::Entry> entries;
  entries.reserve(s.reached);
  for_each_reached(s, [&](TemporalNode tn, Distance d) { entries.push_back({tn, d}); });
  return ReachedMap(root, std::move(entries), false, s.iterations);
}

std::vector<std::vector<TemporalNode>> bfs_layers(const EvolvingGraph& g, TemporalNode root) {
  const Search s = run_bfs(g, root);
  std::vector<std::vector<TemporalNode>> layers(s.depth);
  for_each_reached(s, [&](TemporalNode tn, Distance d) { layers[d].push_back(tn); });
  return layers;
}

std::optional<Distance> distance(const EvolvingGraph& g, TemporalNode src, TemporalNode dst) {
  ReachedMap reached = bfs(g, src);
  if (reached.degenerate()) return std::nullopt;
  return reached.find(dst);
}

bool is_reachable(const EvolvingGraph& g, TemporalNode src, TemporalNode dst) {
  return distance(g, src, dst).has_value();
}

EvolvingGraph reverse_time(const EvolvingGraph& g) {
  const TimeIndex n = g.time_count();
  std::vector<TimeLabel> labels(n);
  for (TimeIndex i = 0; i < n; ++i) {
    TimeLabel old = g.label(n - 1 - i);
    if (old == std::numeric_limits<TimeLabel>::min())
      throw std::overflow_error("time label cannot be negated");
    labels[i] = -old;
  }
  auto edges = g.edges();
  for (auto& e : edges) {
    e.time = n - 1 - e.time;
    if (g.directed()) std::swap(e.src, e.dst);
  }
  return EvolvingGraph::from_indexed(std::vector<std::string>(g.names().begin(), g.names().end()),
                                     g.node_count(), std::move(labels), std::move(edges),
                                     g.directedness());
}

}  // namespace evg
