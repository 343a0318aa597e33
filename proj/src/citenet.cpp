#include "evg/citenet.hpp"

#include <algorithm>
#include <set>

#include "evg/errors.hpp"

namespace evg {

namespace {

InfluenceReport make_report(Orientation orientation, TemporalNode root, const ReachedMap& reached,
                            const EvolvingGraph& citations, bool reversed) {
  InfluenceReport report;
  report.orientation = orientation;
  report.root = root;
  auto original = [&](TemporalNode tn) {
    return reversed ? TemporalNode{tn.node, reversed_index(citations, tn.time)} : tn;
  };

  // earliest_by_node() is earliest in the searched graph's clock.
  for (const auto& e : reached.earliest_by_node())
    if (e.node.node != root.node) report.authors.push_back({original(e.node), e.distance});
  for (const auto& e : reached.entries())
    if (original(e.node) != root) report.reached.push_back({original(e.node), e.distance});
  std::sort(report.reached.begin(), report.reached.end(),
            [](const InfluenceEntry& a, const InfluenceEntry& b) { return a.node < b.node; });
  return report;
}

}  // namespace

const char* to_string(Orientation o) noexcept {
  return o == Orientation::Influence ? "influence" : "influencers";
}

CitationNetwork::CitationNetwork(EvolvingGraph citations)
    : citations_(std::move(citations)),
      forward_(transpose(citations_)),
      backward_(reverse_time(forward_)) {}

InfluenceReport CitationNetwork::influence_set(NodeId author, TimeIndex t) const {
  const TemporalNode root{author, t};
  if (!forward_.is_active(root)) throw InactiveRootError("author is not active at that time");
  return make_report(Orientation::Influence, root, bfs(forward_, root), citations_, false);
}

InfluenceReport CitationNetwork::influencers_set(NodeId author, TimeIndex t) const {
  const TemporalNode root{author, t};
  if (!forward_.is_active(root)) throw InactiveRootError("author is not active at that time");
  const TemporalNode back_root{author, reversed_index(citations_, t)};
  return make_report(Orientation::Influencers, root, bfs(backward_, back_root), citations_, true);
}

std::vector<TemporalNode> CitationNetwork::influencer_leaves(NodeId author, TimeIndex t) const {
  const TemporalNode root{author, t};
  if (!forward_.is_active(root)) throw InactiveRootError("author is not active at that time");
  const ReachedMap back = bfs(backward_, {author, reversed_index(citations_, t)});

  std::vector<TemporalNode> leaves;
  for (const auto& e : back.entries()) {
    bool extends = false;
    backward_.for_each_forward_neighbor(e.node, [&](TemporalNode next) {
      if (back.find(next) == e.distance + 1) extends = true;
    });
    if (!extends) leaves.push_back({e.node.node, reversed_index(citations_, e.node.time)});
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

std::vector<NodeId> CitationNetwork::community(NodeId author, TimeIndex t) const {
  std::set<NodeId> members;
  for (const TemporalNode& leaf : influencer_leaves(author, t))
    for (const auto& e : influence_set(leaf.node, leaf.time).authors) members.insert(e.node.node);
  return {members.begin(), members.end()};
}

InfluenceReport influence_set(const EvolvingGraph& citations, NodeId author, TimeIndex t) {
  return CitationNetwork(citations).influence_set(author, t);
}

InfluenceReport influencers_set(const EvolvingGraph& citations, NodeId author, TimeIndex t) {
  return CitationNetwork(citations).influencers_set(author, t);
}

std::vector<NodeId> community(const EvolvingGraph& citations, NodeId author, TimeIndex t) {
  return CitationNetwork(citations).community(author, t);
}

LoadedGraph load_citations(const std::filesystem::path& path, NameOrder order) {
  return read_edge_list_file(path, Directedness::Directed, order);
}

}  // namespace evg
