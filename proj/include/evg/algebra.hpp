#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "evg/errors.hpp"
#include "evg/evolving_graph.hpp"
#include "evg/traversal.hpp"

namespace evg {

using PathCount = std::uint64_t;

inline constexpr std::size_t kDenseActiveLimit = 5000;  // dense_reference_matvec guard on |V|
inline constexpr TimeIndex kNaiveSumTimeLimit = 12;
inline constexpr NodeId kNaiveSumNodeLimit = 512;

/// 0/1 matrix in compressed sparse column layout. Column j lists the rows i
/// with a nonzero (i, j), i.e. the in-edges of j.
class CscMatrix {
 public:
  CscMatrix() = default;
  /// `entries` are (row, col) pairs; duplicates collapse.
  CscMatrix(std::size_t rows, std::size_t cols,
            std::vector<std::pair<std::uint32_t, std::uint32_t>> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return row_idx_.size(); }
  std::span<const std::uint32_t> column(std::size_t j) const {
    return std::span<const std::uint32_t>(row_idx_).subspan(col_ptr_[j], col_ptr_[j + 1] - col_ptr_[j]);
  }
  bool at(std::size_t i, std::size_t j) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> col_ptr_{0};
  std::vector<std::uint32_t> row_idx_;
};

/// Adjacency matrix A^[t] of one slice over the global node set. Undirected
/// slices are stored symmetrically.
struct SliceMatrix {
  TimeIndex time = 0;
  CscMatrix adjacency;
};

std::vector<SliceMatrix> slice_matrices(const EvolvingGraph& g);

/// Vector over every temporal node (the full partition of M_n): one block of
/// length node_count per time.
template <class T>
class BlockVector {
 public:
  BlockVector() = default;
  BlockVector(TimeIndex times, NodeId nodes)
      : times_(times), nodes_(nodes), data_(static_cast<std::size_t>(times) * nodes, T{}) {}

  static BlockVector indicator(TimeIndex times, NodeId nodes, TemporalNode tn) {
    BlockVector b(times, nodes);
    b[tn] = T{1};
    return b;
  }

  TimeIndex times() const noexcept { return times_; }
  NodeId nodes() const noexcept { return nodes_; }

  std::span<T> block(TimeIndex t) {
    return std::span<T>(data_).subspan(static_cast<std::size_t>(t) * nodes_, nodes_);
  }
  std::span<const T> block(TimeIndex t) const {
    return std::span<const T>(data_).subspan(static_cast<std::size_t>(t) * nodes_, nodes_);
  }
  T& operator[](TemporalNode tn) { return data_.at(slot(tn)); }
  const T& operator[](TemporalNode tn) const { return data_.at(slot(tn)); }
  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  bool is_zero() const {
    for (const T& x : data_)
      if (x != T{}) return false;
    return true;
  }

  /// Sorted by (time, node).
  std::vector<TemporalNode> nonzeros() const {
    std::vector<TemporalNode> out;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] != T{})
        out.push_back({static_cast<NodeId>(i % nodes_), static_cast<TimeIndex>(i / nodes_)});
    return out;
  }

  friend bool operator==(const BlockVector&, const BlockVector&) = default;

 private:
  std::size_t slot(TemporalNode tn) const { return static_cast<std::size_t>(tn.time) * nodes_ + tn.node; }

  TimeIndex times_ = 0;
  NodeId nodes_ = 0;
  std::vector<T> data_;
};

using CountVector = BlockVector<PathCount>;
using ReachVector = BlockVector<std::uint8_t>;

/// Row-major dense matrix, used for the materialized references only.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Causal block M^[from,to] applied to a node vector: keeps b_v when v is
/// active at both times. Throws TimeOrderError unless from < to.
std::vector<PathCount> causal_propagate(const EvolvingGraph& g, std::span<const PathCount> b,
                                        TimeIndex from, TimeIndex to);

/// (A^[t])^T ⊙ b, taken componentwise: b_v survives iff v is active at t.
std::vector<PathCount> odot(const EvolvingGraph& g, TimeIndex t, std::span<const PathCount> b);

/// Applies A_n^T block by block without forming A_n: diagonal blocks are the
/// CSC slice matrices, off-diagonal blocks are activity masks folded into a
/// running per-node carry.
class BlockAdjacency {
 public:
  explicit BlockAdjacency(const EvolvingGraph& g);

  TimeIndex times() const noexcept { return times_; }
  NodeId nodes() const noexcept { return nodes_; }
  std::span<const SliceMatrix> slices() const noexcept { return slices_; }

  /// Integer path counts. Throws OverflowError instead of wrapping.
  CountVector multiply_transpose(const CountVector& b) const;
  /// Boolean semiring: nonzero pattern of A_n^T b.
  ReachVector reach_transpose(const ReachVector& b) const;

 private:
  template <class T, class Add>
  BlockVector<T> apply(const BlockVector<T>& b, Add add) const;

  TimeIndex times_ = 0;
  NodeId nodes_ = 0;
  std::vector<SliceMatrix> slices_;
  std::vector<std::uint8_t> active_;  // t * nodes + v
};

/// One application of A_n^T. Throws ShapeError for a nonconforming b.
CountVector block_matvec(const EvolvingGraph& g, const CountVector& b);

/// BFS as repeated A_n^T products with visited entries zeroed each round.
/// ReachedMap::iterations() is the number of loop iterations, which is
/// checked against |V| + 1. Throws InactiveRootError for an inactive root.
ReachedMap algebraic_bfs(const EvolvingGraph& g, TemporalNode root);

/// Number of temporal paths with exactly hops + 1 temporal nodes.
PathCount count_temporal_paths(const EvolvingGraph& g, TemporalNode src, TemporalNode dst,
                               std::size_t hops);

/// The sum over products A^[t_0] ... A^[upto] of slice matrices, ordered in
/// time, with any subset of the intermediate slices. Counts only paths that
/// take an edge in every chosen slice, which is why it undercounts temporal
/// paths. Absent when upto == 0 (no product spans two times).
std::optional<DenseMatrix<PathCount>> naive_path_sum(const EvolvingGraph& g, TimeIndex upto);

struct NaiveSumRow {
  NodeId src = 0;
  NodeId dst = 0;
  PathCount naive = 0;
  std::optional<PathCount> temporal;  // absent: unbounded (cycle) or overflow
};

struct NaiveSumReport {
  TimeIndex upto = 0;
  bool defined = false;
  std::vector<NaiveSumRow> rows;  // (src @ t_0) -> (dst @ upto), sorted by (src, dst)
};

/// Compares naive_path_sum entries with the true number of temporal paths
/// (all lengths) between active (src, t_0) and active (dst, upto).
NaiveSumReport naive_sum_report(const EvolvingGraph& g, TimeIndex upto);

/// Smallest k with A_n^k = 0, or absent when A_n is not nilpotent.
std::optional<std::size_t> nilpotency_index(const EvolvingGraph& g);

/// A_n as a dense 0/1 matrix in (time, node) order of the active nodes.
/// Throws TooLargeError above kDenseActiveLimit active nodes.
DenseMatrix<std::uint8_t> materialize_block_adjacency(const EvolvingGraph& g);

/// A_n^T b through the materialized matrix.
CountVector dense_reference_matvec(const EvolvingGraph& g, const CountVector& b);

enum class MatrixForm { Restricted, Full };  // A_n over active nodes, or M_n over all

/// Matrix Market coordinate pattern file, rows/columns in (time, node) order.
void write_matrix_market(const EvolvingGraph& g, MatrixForm form, std::ostream& out);

}  // namespace evg
