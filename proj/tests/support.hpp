#pragma once

#include <string>

#include "evg/cli.hpp"
#include "evg/evolving_graph.hpp"

namespace evg::test {

// 1->2 at t1, 1->3 at t2, 2->3 at t3.
inline EvolvingGraph three_slice() { return build_graph(three_slice_records(), Directedness::Directed); }

// Temporal node by external name and time label.
inline TemporalNode at(const EvolvingGraph& g, const std::string& name, TimeLabel label) {
  return {g.node_of(name).value(), g.time_of(label).value()};
}

inline std::string data_path(const std::string& file) { return std::string(EVG_DATA_DIR) + "/" + file; }

}  // namespace evg::test
