#include "evg/algebra.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "evg/flatten.hpp"

namespace evg {

namespace {

PathCount checked_add(PathCount a, PathCount b) {
  PathCount r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("temporal path count overflowed 64 bits");
  return r;
}

PathCount checked_mul(PathCount a, PathCount b) {
  PathCount r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("temporal path count overflowed 64 bits");
  return r;
}

void require_conforming(const EvolvingGraph& g, TimeIndex times, NodeId nodes) {
  if (times != g.time_count() || nodes != g.node_count())
    throw ShapeError("block vector is " + std::to_string(times) + "x" + std::to_string(nodes) +
                     ", graph partition is " + std::to_string(g.time_count()) + "x" +
                     std::to_string(g.node_count()));
}

using Dense = DenseMatrix<PathCount>;

Dense multiply(const Dense& a, const Dense& b) {
  Dense c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return c;
}

Dense slice_dense(const EvolvingGraph& g, TimeIndex t) {
  Dense a(g.node_count(), g.node_count());
  for (const SliceEdge& e : g.slice_edges(t)) {
    a(e.src, e.dst) = 1;
    if (!g.directed()) a(e.dst, e.src) = 1;
  }
  return a;
}

}  // namespace

CscMatrix::CscMatrix(std::size_t rows, std::size_t cols,
                     std::vector<std::pair<std::uint32_t, std::uint32_t>> entries)
    : rows_(rows), cols_(cols) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  col_ptr_.assign(cols + 1, 0);
  row_idx_.reserve(entries.size());
  for (const auto& [i, j] : entries) {
    if (i >= rows || j >= cols) throw std::out_of_range("matrix entry outside shape");
    ++col_ptr_[j + 1];
    row_idx_.push_back(i);
  }
  for (std::size_t j = 1; j <= cols; ++j) col_ptr_[j] += col_ptr_[j - 1];
}

bool CscMatrix::at(std::size_t i, std::size_t j) const {
  auto col = column(j);
  return std::binary_search(col.begin(), col.end(), static_cast<std::uint32_t>(i));
}

std::vector<SliceMatrix> slice_matrices(const EvolvingGraph& g) {
  std::vector<SliceMatrix> out;
  out.reserve(g.time_count());
  for (TimeIndex t = 0; t < g.time_count(); ++t) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
    for (const SliceEdge& e : g.slice_edges(t)) {
      entries.emplace_back(e.src, e.dst);
      if (!g.directed()) entries.emplace_back(e.dst, e.src);
    }
    out.push_back({t, CscMatrix(g.node_count(), g.node_count(), std::move(entries))});
  }
  return out;
}

std::vector<PathCount> causal_propagate(const EvolvingGraph& g, std::span<const PathCount> b,
                                        TimeIndex from, TimeIndex to) {
  if (from >= to) throw TimeOrderError("causal propagation needs from < to");
  if (to >= g.time_count()) throw ShapeError("time index outside the graph");
  if (b.size() != g.node_count()) throw ShapeError("vector length differs from node count");
  std::vector<PathCount> out(b.size(), 0);
  for (NodeId v = 0; v < b.size(); ++v)
    if (b[v] != 0 && g.is_active(v, from) && g.is_active(v, to)) out[v] = b[v];
  return out;
}

std::vector<PathCount> odot(const EvolvingGraph& g, TimeIndex t, std::span<const PathCount> b) {
  if (t >= g.time_count()) throw ShapeError("time index outside the graph");
  if (b.size() != g.node_count()) throw ShapeError("vector length differs from node count");
  std::vector<PathCount> out(b.size(), 0);
  for (NodeId v : g.active_nodes(t)) out[v] = b[v];
  return out;
}

BlockAdjacency::BlockAdjacency(const EvolvingGraph& g)
    : times_(g.time_count()), nodes_(g.node_count()), slices_(slice_matrices(g)) {
  active_.assign(static_cast<std::size_t>(times_) * nodes_, 0);
  for (TimeIndex t = 0; t < times_; ++t)
    for (NodeId v : g.active_nodes(t)) active_[static_cast<std::size_t>(t) * nodes_ + v] = 1;
}

template <class T, class Add>
BlockVector<T> BlockAdjacency::apply(const BlockVector<T>& b, Add add) const {
  if (b.times() != times_ || b.nodes() != nodes_)
    throw ShapeError("block vector does not conform to the graph partition");
  BlockVector<T> out(times_, nodes_);
  // carry[v] = sum of b_s[v] over earlier slices s in which v is active
  std::vector<T> carry(nodes_, T{});
  for (TimeIndex t = 0; t < times_; ++t) {
    auto in = b.block(t);
    auto y = out.block(t);
    const CscMatrix& a = slices_[t].adjacency;
    for (NodeId j = 0; j < nodes_; ++j)
      for (std::uint32_t i : a.column(j))
        if (in[i] != T{}) y[j] = add(y[j], in[i]);
    const std::uint8_t* act = active_.data() + static_cast<std::size_t>(t) * nodes_;
    for (NodeId v = 0; v < nodes_; ++v) {
      if (!act[v]) continue;
      if (carry[v] != T{}) y[v] = add(y[v], carry[v]);
      if (in[v] != T{}) carry[v] = add(carry[v], in[v]);
    }
  }
  return out;
}

CountVector BlockAdjacency::multiply_transpose(const CountVector& b) const {
  return apply(b, checked_add);
}

ReachVector BlockAdjacency::reach_transpose(const ReachVector& b) const {
  return apply(b, [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return (x | y) ? 1 : 0; });
}

CountVector block_matvec(const EvolvingGraph& g, const CountVector& b) {
  require_conforming(g, b.times(), b.nodes());
  return BlockAdjacency(g).multiply_transpose(b);
}

ReachedMap algebraic_bfs(const EvolvingGraph& g, TemporalNode root) {
  if (!g.is_active(root)) throw InactiveRootError("algebraic BFS needs an active root");

  const BlockAdjacency a(g);
  const NodeId n = g.node_count();
  constexpr Distance kUnseen = std::numeric_limits<Distance>::max();
  std::vector<Distance> reached(static_cast<std::size_t>(g.time_count()) * n, kUnseen);
  reached[static_cast<std::size_t>(root.time) * n + root.node] = 0;
  std::vector<ReachedMap::Entry> entries{{root, 0}};

  ReachVector b = ReachVector::indicator(g.time_count(), n, root);
  const std::size_t limit = g.active_count() + 1;
  std::size_t iterations = 0;
  for (Distance k = 1; !b.is_zero(); ++k) {
    if (++iterations > limit)
      throw std::logic_error("algebraic BFS exceeded |V| + 1 iterations");
    b = a.reach_transpose(b);
    auto data = b.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data[i] == 0) continue;
      if (reached[i] != kUnseen) {
        data[i] = 0;
        continue;
      }
      reached[i] = k;
      entries.push_back({{static_cast<NodeId>(i % n), static_cast<TimeIndex>(i / n)}, k});
    }
  }
  return ReachedMap(root, std::move(entries), false, iterations);
}

PathCount count_temporal_paths(const EvolvingGraph& g, TemporalNode src, TemporalNode dst,
                               std::size_t hops) {
  if (!g.is_active(src) || !g.is_active(dst)) return 0;
  if (hops == 0) return src == dst ? 1 : 0;
  if (dst.time < src.time) return 0;

  const BlockAdjacency a(g);
  CountVector b = CountVector::indicator(g.time_count(), g.node_count(), src);
  for (std::size_t h = 0; h < hops; ++h) {
    b = a.multiply_transpose(b);
    if (b.is_zero()) return 0;
  }
  return b[dst];
}

std::optional<DenseMatrix<PathCount>> naive_path_sum(const EvolvingGraph& g, TimeIndex upto) {
  if (upto >= g.time_count()) throw ShapeError("time index outside the graph");
  if (upto + 1 > kNaiveSumTimeLimit)
    throw TooLargeError("naive path sum is limited to " + std::to_string(kNaiveSumTimeLimit) +
                        " time stamps");
  if (g.node_count() > kNaiveSumNodeLimit)
    throw TooLargeError("naive path sum is limited to " + std::to_string(kNaiveSumNodeLimit) +
                        " nodes");
  if (upto == 0) return std::nullopt;

  // Summing over subsets of the intermediate slices factorises as
  // A^[t_0] (I + A^[t_1]) ... (I + A^[t_{upto-1}]) A^[t_upto].
  Dense prefix = slice_dense(g, 0);
  for (TimeIndex t = 1; t < upto; ++t) {
    Dense step = multiply(prefix, slice_dense(g, t));
    for (std::size_t i = 0; i < prefix.rows(); ++i)
      for (std::size_t j = 0; j < prefix.cols(); ++j) prefix(i, j) = checked_add(prefix(i, j), step(i, j));
  }
  return multiply(prefix, slice_dense(g, upto));
}

NaiveSumReport naive_sum_report(const EvolvingGraph& g, TimeIndex upto) {
  NaiveSumReport report;
  report.upto = upto;
  auto sum = naive_path_sum(g, upto);
  if (!sum) return report;
  report.defined = true;

  const BlockAdjacency a(g);
  const std::size_t active = g.active_count();
  auto targets = g.active_nodes(upto);
  for (NodeId src : g.active_nodes(0)) {
    std::vector<PathCount> total(g.node_count(), 0);
    std::vector<bool> unbounded(g.node_count(), false);
    CountVector b = CountVector::indicator(g.time_count(), g.node_count(), {src, 0});
    try {
      // A walk with at least |V| hops repeats a temporal node, so anything
      // still arriving after that many hops can be pumped without bound.
      for (std::size_t h = 1; h <= 3 * active && !b.is_zero(); ++h) {
        b = a.multiply_transpose(b);
        for (NodeId dst : targets) {
          const PathCount c = b[{dst, upto}];
          if (c == 0) continue;
          if (h >= active) unbounded[dst] = true;
          else total[dst] = checked_add(total[dst], c);
        }
      }
    } catch (const OverflowError&) {
      for (NodeId dst : targets) unbounded[dst] = true;
    }
    for (NodeId dst : targets) {
      NaiveSumRow row{src, dst, (*sum)(src, dst), std::nullopt};
      if (!unbounded[dst]) row.temporal = total[dst];
      if (row.naive != 0 || row.temporal != PathCount{0}) report.rows.push_back(row);
    }
  }
  return report;
}

std::optional<std::size_t> nilpotency_index(const EvolvingGraph& g) {
  const StaticExpansion x = expand(g);
  const std::size_t n = x.size();
  if (n == 0) return 1;

  // Only the next copy on each causal chain matters: longer causal jumps are
  // shortcuts of the chain and never lengthen a walk or close a cycle.
  auto successors = [&x](std::uint32_t p, auto&& visit) {
    for (std::uint32_t q : x.static_successors(p)) visit(q);
    auto causal = x.causal_successors(p);
    if (!causal.empty()) visit(causal.front());
  };
  std::vector<std::size_t> indegree(n, 0);
  for (std::uint32_t p = 0; p < n; ++p) successors(p, [&](std::uint32_t q) { ++indegree[q]; });

  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::uint32_t p = 0; p < n; ++p)
    if (indegree[p] == 0) order.push_back(p);
  std::vector<std::size_t> longest(n, 0);  // edges on the longest walk ending here
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t p = order[i];
    successors(p, [&](std::uint32_t q) {
      longest[q] = std::max(longest[q], longest[p] + 1);
      if (--indegree[q] == 0) order.push_back(q);
    });
  }
  if (order.size() != n) return std::nullopt;  // a cycle survives
  return *std::max_element(longest.begin(), longest.end()) + 1;
}

DenseMatrix<std::uint8_t> materialize_block_adjacency(const EvolvingGraph& g) {
  if (g.active_count() > kDenseActiveLimit)
    throw TooLargeError("dense block adjacency is limited to " + std::to_string(kDenseActiveLimit) +
                        " active nodes");
  const StaticExpansion x = expand(g);
  DenseMatrix<std::uint8_t> a(x.size(), x.size());
  for (const auto& e : x.static_edges()) a(e.from, e.to) = 1;
  for (const auto& e : x.causal_edges()) a(e.from, e.to) = 1;
  return a;
}

CountVector dense_reference_matvec(const EvolvingGraph& g, const CountVector& b) {
  require_conforming(g, b.times(), b.nodes());
  const DenseMatrix<std::uint8_t> a = materialize_block_adjacency(g);
  const StaticExpansion x = expand(g);
  const auto nodes = x.active_nodes();
  CountVector out(g.time_count(), g.node_count());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    PathCount acc = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (a(i, j)) acc = checked_add(acc, b[nodes[i]]);
    out[nodes[j]] = acc;
  }
  return out;
}

void write_matrix_market(const EvolvingGraph& g, MatrixForm form, std::ostream& out) {
  const StaticExpansion x = expand(g);
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  std::size_t dim = 0;
  if (form == MatrixForm::Restricted) {
    dim = x.size();
    for (const auto& e : x.static_edges()) entries.emplace_back(e.from, e.to);
    for (const auto& e : x.causal_edges()) entries.emplace_back(e.from, e.to);
  } else {
    const std::size_t n = g.node_count();
    dim = n * g.time_count();
    auto slot = [n](TemporalNode tn) { return static_cast<std::size_t>(tn.time) * n + tn.node; };
    const auto nodes = x.active_nodes();
    for (const auto& e : x.static_edges()) entries.emplace_back(slot(nodes[e.from]), slot(nodes[e.to]));
    for (const auto& e : x.causal_edges()) entries.emplace_back(slot(nodes[e.from]), slot(nodes[e.to]));
  }
  std::sort(entries.begin(), entries.end());
  out << "%%MatrixMarket matrix coordinate pattern general\n";
  out << (form == MatrixForm::Restricted ? "% A_n over active temporal nodes"
                                         : "% M_n over all temporal nodes")
      << ", ordered by (time, node)\n";
  out << dim << ' ' << dim << ' ' << entries.size() << '\n';
  for (const auto& [i, j] : entries) out << i + 1 << ' ' << j + 1 << '\n';
}

}  // namespace evg
