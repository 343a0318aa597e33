#include "evg/flatten.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>

#include "evg/errors.hpp"

namespace evg {

std::optional<std::uint32_t> StaticExpansion::index_of(TemporalNode tn) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), tn);
  if (it == nodes_.end() || *it != tn) return std::nullopt;
  return static_cast<std::uint32_t>(it - nodes_.begin());
}

std::vector<ExpansionEdge> StaticExpansion::causal_edges() const {
  std::vector<ExpansionEdge> out;
  out.reserve(causal_count_);
  for (std::uint32_t p = 0; p < nodes_.size(); ++p)
    for (std::uint32_t q : causal_successors(p)) out.push_back({p, q});
  std::sort(out.begin(), out.end());
  return out;
}

std::span<const std::uint32_t> StaticExpansion::static_successors(std::uint32_t pos) const {
  return std::span<const std::uint32_t>(static_targets_)
      .subspan(static_offsets_[pos], static_offsets_[pos + 1] - static_offsets_[pos]);
}

std::span<const std::uint32_t> StaticExpansion::causal_successors(std::uint32_t pos) const {
  const std::size_t begin = chain_slot_[pos] + 1;
  return std::span<const std::uint32_t>(chains_).subspan(begin, chain_end_[pos] - begin);
}

StaticExpansion expand(const EvolvingGraph& g) {
  StaticExpansion x;

  for (TimeIndex t = 0; t < g.time_count(); ++t) {
    for (const SliceEdge& e : g.slice_edges(t)) {
      x.nodes_.push_back({e.src, t});
      x.nodes_.push_back({e.dst, t});
    }
  }
  std::sort(x.nodes_.begin(), x.nodes_.end());
  x.nodes_.erase(std::unique(x.nodes_.begin(), x.nodes_.end()), x.nodes_.end());

  auto pos = [&x](NodeId v, TimeIndex t) { return *x.index_of({v, t}); };
  for (TimeIndex t = 0; t < g.time_count(); ++t) {
    for (const SliceEdge& e : g.slice_edges(t)) {
      x.static_edges_.push_back({pos(e.src, t), pos(e.dst, t)});
      if (!g.directed()) x.static_edges_.push_back({pos(e.dst, t), pos(e.src, t)});
    }
  }
  std::sort(x.static_edges_.begin(), x.static_edges_.end());

  const std::size_t n = x.nodes_.size();
  x.static_offsets_.assign(n + 1, 0);
  for (const auto& e : x.static_edges_) ++x.static_offsets_[e.from + 1];
  for (std::size_t i = 1; i <= n; ++i) x.static_offsets_[i] += x.static_offsets_[i - 1];
  x.static_targets_.reserve(x.static_edges_.size());
  for (const auto& e : x.static_edges_) x.static_targets_.push_back(e.to);

  // Chains: stable sort of positions by node keeps time order within a node.
  x.chains_.resize(n);
  for (std::uint32_t p = 0; p < n; ++p) x.chains_[p] = p;
  std::stable_sort(x.chains_.begin(), x.chains_.end(), [&x](std::uint32_t a, std::uint32_t b) {
    return x.nodes_[a].node < x.nodes_[b].node;
  });
  x.chain_end_.resize(n);
  x.chain_slot_.resize(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && x.nodes_[x.chains_[j]].node == x.nodes_[x.chains_[i]].node) ++j;
    const std::size_t len = j - i;
    x.causal_count_ += len * (len - 1) / 2;
    for (std::size_t k = i; k < j; ++k) {
      x.chain_slot_[x.chains_[k]] = k;
      x.chain_end_[x.chains_[k]] = j;
    }
    i = j;
  }
  return x;
}

ReachedMap static_bfs(const StaticExpansion& x, TemporalNode root) {
  auto start = x.index_of(root);
  if (!start) throw InactiveRootError("root is not an active temporal node");

  constexpr Distance kUnseen = std::numeric_limits<Distance>::max();
  std::vector<Distance> dist(x.size(), kUnseen);
  std::deque<std::uint32_t> queue{*start};
  dist[*start] = 0;
  Distance deepest = 0;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    deepest = std::max(deepest, dist[u]);
    auto relax = [&](std::uint32_t w) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    };
    for (std::uint32_t w : x.static_successors(u)) relax(w);
    for (std::uint32_t w : x.causal_successors(u)) relax(w);
  }

  std::vector<ReachedMap::Entry> entries;
  for (std::uint32_t p = 0; p < x.size(); ++p)
    if (dist[p] != kUnseen) entries.push_back({x.active_nodes()[p], dist[p]});
  return ReachedMap(root, std::move(entries), false, deepest + 1);
}

void write_expansion_edges(const StaticExpansion& x, const EvolvingGraph& g, std::ostream& out,
                           const TemporalNodeFormat& format) {
  auto text = [&](TemporalNode tn) {
    if (format) return format(tn);
    return g.name(tn.node) + "@" + std::to_string(g.label(tn.time));
  };
  auto put = [&](const char* tag, const ExpansionEdge& e) {
    out << tag << '\t' << text(x.active_nodes()[e.from]) << '\t' << text(x.active_nodes()[e.to])
        << '\n';
  };
  for (const auto& e : x.static_edges()) put("STATIC", e);
  for (const auto& e : x.causal_edges()) put("CAUSAL", e);
}

}  // namespace evg
