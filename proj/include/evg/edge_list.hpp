#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "evg/evolving_graph.hpp"

namespace evg {

/// What ingestion kept and dropped.
struct IngestSummary {
  std::size_t lines = 0;
  std::size_t comments = 0;     // '#' lines and blank lines
  std::size_t records = 0;      // data lines
  std::size_t self_loops = 0;   // dropped
  std::size_t duplicates = 0;   // collapsed onto an earlier record
  std::size_t nodes = 0;
  std::size_t times = 0;
  std::size_t edges = 0;        // distinct slice edges kept
  bool t_prefixed = false;      // every time field was written as t<integer>
};

struct LoadedGraph {
  EvolvingGraph graph;
  IngestSummary summary;
};

/// Reads `src<TAB>dst<TAB>time` records. Blank lines and lines starting with
/// '#' are skipped. The time field is an integer, optionally written with a
/// leading 't' (so `t3` and `3` are the same slice).
/// Throws ParseError (with line number) on malformed lines and
/// EmptyGraphError if no usable edge remains.
LoadedGraph read_edge_list(std::istream& in, Directedness directedness,
                           NameOrder order = NameOrder::Natural, std::string_view source = "<input>");

LoadedGraph read_edge_list_file(const std::filesystem::path& path, Directedness directedness,
                                NameOrder order = NameOrder::Natural);

/// Writes the canonical edges in the same format, sorted by (time, src, dst).
void write_edge_list(const EvolvingGraph& g, std::ostream& out, bool t_prefixed = false);

/// `name@label`, with the label as `t<label>` when t_prefixed.
std::string format_temporal_node(const EvolvingGraph& g, TemporalNode tn, bool t_prefixed = false);

/// Parses a time field: an integer with an optional leading 't'.
bool parse_time_label(std::string_view text, TimeLabel& label, bool* had_prefix = nullptr);

/// Parses `name@label` against g (the split is at the last '@').
/// Throws evg::Error naming the unknown part.
TemporalNode parse_temporal_node(const EvolvingGraph& g, std::string_view text);

}  // namespace evg
