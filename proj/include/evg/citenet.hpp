#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "evg/edge_list.hpp"
#include "evg/evolving_graph.hpp"
#include "evg/traversal.hpp"

namespace evg {

// Citation graphs are stored citing -> cited. Influence runs the other way:
// a cited author influences whoever cites them later. Forward influence
// queries therefore search the transposed slices; influencer queries search
// the transposed slices with the clock reversed.

enum class Orientation {
  Influence,    // T(a, t): who was influenced by a from t on
  Influencers,  // T^-1(a, t): who influenced a up to t
};

const char* to_string(Orientation o) noexcept;

struct InfluenceEntry {
  TemporalNode node;  // time is an index into the citation graph
  Distance distance = 0;

  friend bool operator==(const InfluenceEntry&, const InfluenceEntry&) = default;
};

struct InfluenceReport {
  Orientation orientation = Orientation::Influence;
  TemporalNode root;
  /// Every reached temporal node except the root itself, sorted by (time, node).
  std::vector<InfluenceEntry> reached;
  /// One entry per distinct author other than the root author: the first
  /// copy met in search order (earliest for Influence, latest for
  /// Influencers). Sorted by author id.
  std::vector<InfluenceEntry> authors;
};

class CitationNetwork {
 public:
  explicit CitationNetwork(EvolvingGraph citations);

  const EvolvingGraph& citations() const noexcept { return citations_; }
  /// The influence-oriented graph (transposed citations).
  const EvolvingGraph& influence_graph() const noexcept { return forward_; }

  /// T(author, t). Throws InactiveRootError if (author, t) is inactive.
  InfluenceReport influence_set(NodeId author, TimeIndex t) const;
  /// T^-1(author, t). Throws InactiveRootError if (author, t) is inactive.
  InfluenceReport influencers_set(NodeId author, TimeIndex t) const;

  /// Leaves of the backward search from (author, t): reached temporal nodes
  /// with no backward forward-neighbour one hop further out. Sorted.
  std::vector<TemporalNode> influencer_leaves(NodeId author, TimeIndex t) const;

  /// Union of T(l) over the leaves l of T^-1(author, t), as sorted author ids.
  std::vector<NodeId> community(NodeId author, TimeIndex t) const;

 private:
  EvolvingGraph citations_;
  EvolvingGraph forward_;   // transpose(citations_)
  EvolvingGraph backward_;  // reverse_time(forward_)
};

InfluenceReport influence_set(const EvolvingGraph& citations, NodeId author, TimeIndex t);
InfluenceReport influencers_set(const EvolvingGraph& citations, NodeId author, TimeIndex t);
std::vector<NodeId> community(const EvolvingGraph& citations, NodeId author, TimeIndex t);

/// Reads a `citing<TAB>cited<TAB>year` file into a directed citation graph.
LoadedGraph load_citations(const std::filesystem::path& path, NameOrder order = NameOrder::Natural);

}  // namespace evg
