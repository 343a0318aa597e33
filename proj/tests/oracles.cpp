#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace oracle {

namespace {

using Key = std::tuple<NodeId, NodeId, TimeIndex>;

// Traversable (u, v, t) triples, self-loops removed.
std::set<Key> arcs(const RawGraph& g) {
  std::set<Key> out;
  for (const Edge& e : g.edges) {
    if (e.src == e.dst) continue;
    out.insert({e.src, e.dst, e.time});
    if (!g.directed) out.insert({e.dst, e.src, e.time});
  }
  return out;
}

std::set<TemporalNode> active_set(const RawGraph& g) {
  std::set<TemporalNode> out;
  for (const Edge& e : g.edges) {
    if (e.src == e.dst) continue;
    out.insert({e.src, e.time});
    out.insert({e.dst, e.time});
  }
  return out;
}

struct Model {
  std::set<Key> arcs;
  std::set<TemporalNode> active;

  explicit Model(const RawGraph& g) : arcs(oracle::arcs(g)), active(active_set(g)) {}

  bool step(TemporalNode a, TemporalNode b) const {
    if (!active.count(a) || !active.count(b)) return false;
    if (a.node == b.node) return a.time < b.time;
    return a.time == b.time && arcs.count({a.node, b.node, a.time});
  }
};

std::map<TemporalNode, std::uint32_t> relax(const Model& m, TemporalNode start, bool backward) {
  std::map<TemporalNode, std::uint32_t> dist;
  if (!m.active.count(start)) return dist;
  dist[start] = 0;
  for (std::uint32_t k = 0;; ++k) {
    bool grew = false;
    for (const auto& [a, d] : std::map(dist)) {
      if (d != k) continue;
      for (const TemporalNode& b : m.active) {
        if (dist.count(b)) continue;
        if (backward ? m.step(b, a) : m.step(a, b)) {
          dist[b] = k + 1;
          grew = true;
        }
      }
    }
    if (!grew) return dist;
  }
}

}  // namespace

evg::EvolvingGraph build(const RawGraph& raw) {
  std::vector<evg::TimeLabel> labels;
  for (TimeIndex t = 0; t < raw.times; ++t) labels.push_back(t + 1);
  std::vector<evg::IndexedEdge> edges;
  for (const Edge& e : raw.edges) edges.push_back({e.src, e.dst, e.time});
  return evg::EvolvingGraph::from_indexed({}, raw.nodes, std::move(labels), std::move(edges),
                                          raw.directed ? Directedness::Directed
                                                       : Directedness::Undirected);
}

bool is_active(const RawGraph& g, TemporalNode tn) {
  for (const Edge& e : g.edges)
    if (e.time == tn.time && e.src != e.dst && (e.src == tn.node || e.dst == tn.node)) return true;
  return false;
}

bool has_edge(const RawGraph& g, NodeId u, NodeId v, TimeIndex t) {
  for (const Edge& e : g.edges) {
    if (e.time != t || e.src == e.dst) continue;
    if (e.src == u && e.dst == v) return true;
    if (!g.directed && e.src == v && e.dst == u) return true;
  }
  return false;
}

bool is_step(const RawGraph& g, TemporalNode a, TemporalNode b) {
  if (!is_active(g, a) || !is_active(g, b)) return false;
  if (a.node == b.node) return a.time < b.time;
  return a.time == b.time && has_edge(g, a.node, b.node, a.time);
}

std::vector<TemporalNode> active_nodes(const RawGraph& g) {
  auto s = active_set(g);
  return {s.begin(), s.end()};
}

std::vector<TemporalNode> forward_neighbors(const RawGraph& g, TemporalNode tn) {
  const Model m(g);
  std::vector<TemporalNode> out;
  for (TimeIndex t = 0; t < g.times; ++t)
    for (NodeId v = 0; v < g.nodes; ++v)
      if (m.step(tn, {v, t})) out.push_back({v, t});
  return out;
}

std::map<TemporalNode, std::uint32_t> distances(const RawGraph& g, TemporalNode root) {
  return relax(Model(g), root, false);
}

std::map<TemporalNode, std::uint32_t> distances_to(const RawGraph& g, TemporalNode target) {
  return relax(Model(g), target, true);
}

std::uint64_t count_paths(const RawGraph& g, TemporalNode src, TemporalNode dst, std::size_t hops) {
  const Model m(g);
  if (!m.active.count(src)) return 0;
  std::function<std::uint64_t(TemporalNode, std::size_t)> go = [&](TemporalNode at, std::size_t left) {
    if (left == 0) return std::uint64_t{at == dst};
    std::uint64_t total = 0;
    for (const TemporalNode& next : m.active)
      if (m.step(at, next)) total += go(next, left - 1);
    return total;
  };
  return go(src, hops);
}

std::vector<std::map<TemporalNode, std::uint64_t>> count_paths_from(const RawGraph& g, TemporalNode src,
                                                                   std::size_t max_hops) {
  const Model m(g);
  std::vector<std::map<TemporalNode, std::uint64_t>> out(max_hops + 1);
  if (!m.active.count(src)) return out;
  std::function<void(TemporalNode, std::size_t)> go = [&](TemporalNode at, std::size_t depth) {
    ++out[depth][at];
    if (depth == max_hops) return;
    for (const TemporalNode& next : m.active)
      if (m.step(at, next)) go(next, depth + 1);
  };
  go(src, 0);
  return out;
}

std::optional<std::vector<TemporalNode>> witness(const RawGraph& g, TemporalNode root,
                                                 TemporalNode target, std::size_t max_hops) {
  const Model m(g);
  if (!m.active.count(root)) return std::nullopt;
  std::vector<TemporalNode> path{root};
  std::function<bool(std::size_t)> go = [&](std::size_t left) {
    if (path.back() == target) return true;
    if (left == 0) return false;
    for (const TemporalNode& next : m.active) {
      if (!m.step(path.back(), next)) continue;
      path.push_back(next);
      if (go(left - 1)) return true;
      path.pop_back();
    }
    return false;
  };
  for (std::size_t depth = 0; depth <= max_hops; ++depth) {
    path.assign(1, root);
    if (go(depth)) return path;
  }
  return std::nullopt;
}

std::vector<std::vector<std::uint64_t>> naive_sum_by_subsets(const RawGraph& g, TimeIndex upto) {
  using Matrix = std::vector<std::vector<std::uint64_t>>;
  const std::size_t n = g.nodes;
  const auto a = arcs(g);
  auto slice = [&](TimeIndex t) {
    Matrix m(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& [u, v, s] : a)
      if (s == t) m[u][v] = 1;
    return m;
  };
  auto mul = [&](const Matrix& x, const Matrix& y) {
    Matrix z(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k])
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  Matrix sum(n, std::vector<std::uint64_t>(n, 0));
  if (upto == 0) return sum;
  const std::size_t inner = upto - 1;  // slices strictly between the first and upto
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
    Matrix p = slice(0);
    for (std::size_t i = 0; i < inner; ++i)
      if (mask >> i & 1) p = mul(p, slice(static_cast<TimeIndex>(i + 1)));
    p = mul(p, slice(upto));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += p[i][j];
  }
  return sum;
}

std::vector<std::vector<int>> expansion_matrix(const RawGraph& g) {
  const Model m(g);
  const std::vector<TemporalNode> v(m.active.begin(), m.active.end());
  std::vector<std::vector<int>> a(v.size(), std::vector<int>(v.size(), 0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) a[i][j] = m.step(v[i], v[j]) ? 1 : 0;
  return a;
}

std::optional<std::size_t> nilpotency_by_powers(const RawGraph& g) {
  const auto a = expansion_matrix(g);
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<int>> p = a;  // A^1
  for (std::size_t k = 1; k <= n + 1; ++k) {
    bool zero = true;
    for (const auto& row : p)
      for (int x : row) zero = zero && x == 0;
    if (zero) return k;
    std::vector<std::vector<int>> q(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (p[i][l])
          for (std::size_t j = 0; j < n; ++j) q[i][j] |= a[l][j];
    p = std::move(q);
  }
  return std::nullopt;
}

RawGraph random_raw(std::mt19937_64& rng, NodeId max_nodes, TimeIndex max_times,
                    std::size_t max_edges, std::optional<bool> directed, bool dag_slices) {
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  RawGraph g;
  g.nodes = static_cast<NodeId>(pick(2, max_nodes));
  g.times = static_cast<TimeIndex>(pick(1, max_times));
  g.directed = directed.value_or(pick(0, 1) == 1);
  const std::size_t count = pick(1, max_edges);
  for (std::size_t i = 0; i < count; ++i) {
    auto u = static_cast<NodeId>(pick(0, g.nodes - 1));
    auto v = static_cast<NodeId>(pick(0, g.nodes - 1));
    if (dag_slices && u > v) std::swap(u, v);
    g.edges.push_back({u, v, static_cast<TimeIndex>(pick(0, g.times - 1))});
  }
  return g;
}

RawGraph influence_graph(const RawGraph& citations) {
  RawGraph out = citations;
  for (Edge& e : out.edges) std::swap(e.src, e.dst);
  return out;
}

std::set<NodeId> influenced_authors(const RawGraph& citations, TemporalNode root) {
  std::set<NodeId> out;
  for (const auto& [tn, d] : distances(influence_graph(citations), root))
    if (tn.node != root.node) out.insert(tn.node);
  return out;
}

std::set<NodeId> influencer_authors(const RawGraph& citations, TemporalNode root) {
  std::set<NodeId> out;
  for (const auto& [tn, d] : distances_to(influence_graph(citations), root))
    if (tn.node != root.node) out.insert(tn.node);
  return out;
}

std::set<TemporalNode> influencer_leaves(const RawGraph& citations, TemporalNode root) {
  const RawGraph g = influence_graph(citations);
  const Model m(g);
  const auto back = distances_to(g, root);
  std::set<TemporalNode> out;
  for (const auto& [tn, d] : back) {
    bool extends = false;
    for (const auto& [other, e] : back)
      if (e == d + 1 && m.step(other, tn)) extends = true;
    if (!extends) out.insert(tn);
  }
  return out;
}

std::set<NodeId> community(const RawGraph& citations, TemporalNode root) {
  std::set<NodeId> out;
  for (const TemporalNode& leaf : influencer_leaves(citations, root))
    for (NodeId a : influenced_authors(citations, leaf)) out.insert(a);
  return out;
}

RawGraph read_tsv(const std::string& path, const evg::EvolvingGraph& ids) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  RawGraph g{ids.node_count(), ids.time_count(), true, {}};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string citing, cited;
    long long year = 0;
    std::getline(fields, citing, '\t');
    std::getline(fields, cited, '\t');
    fields >> year;
    g.edges.push_back({ids.node_of(citing).value(), ids.node_of(cited).value(),
                       ids.time_of(year).value()});
  }
  return g;
}

}  // namespace oracle
