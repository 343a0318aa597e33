#include "evg/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "evg/errors.hpp"

namespace evg {

bool parse_time_label(std::string_view text, TimeLabel& label, bool* had_prefix) {
  const bool prefixed = !text.empty() && text.front() == 't';
  if (prefixed) text.remove_prefix(1);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), label);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return false;
  if (had_prefix) *had_prefix = prefixed;
  return true;
}

LoadedGraph read_edge_list(std::istream& in, Directedness directedness, NameOrder order,
                           std::string_view source) {
  IngestSummary summary;
  std::vector<EdgeRecord> records;
  bool all_prefixed = true;
  std::string line;
  while (std::getline(in, line)) {
    ++summary.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') {
      ++summary.comments;
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (auto tab = rest.find('\t'); tab != std::string_view::npos; tab = rest.find('\t')) {
      fields.push_back(rest.substr(0, tab));
      rest.remove_prefix(tab + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 3)
      throw ParseError(std::string(source), summary.lines, "expected 3 tab-separated fields");
    if (fields[0].empty() || fields[1].empty())
      throw ParseError(std::string(source), summary.lines, "empty node name");
    EdgeRecord record{std::string(fields[0]), std::string(fields[1]), 0};
    bool prefixed = false;
    if (!parse_time_label(fields[2], record.time, &prefixed))
      throw ParseError(std::string(source), summary.lines,
                       "time field '" + std::string(fields[2]) + "' is not an integer");
    all_prefixed = all_prefixed && prefixed;
    ++summary.records;
    if (record.src == record.dst) {
      ++summary.self_loops;
      continue;
    }
    records.push_back(std::move(record));
  }

  LoadedGraph out{build_graph(records, directedness, order), summary};
  out.summary.nodes = out.graph.node_count();
  out.summary.times = out.graph.time_count();
  out.summary.edges = out.graph.static_edge_count();
  out.summary.duplicates = records.size() - out.summary.edges;
  out.summary.t_prefixed = all_prefixed;
  return out;
}

LoadedGraph read_edge_list_file(const std::filesystem::path& path, Directedness directedness,
                                NameOrder order) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_edge_list(in, directedness, order, path.string());
}

void write_edge_list(const EvolvingGraph& g, std::ostream& out, bool t_prefixed) {
  const char* prefix = t_prefixed ? "t" : "";
  for (TimeIndex t = 0; t < g.time_count(); ++t)
    for (const SliceEdge& e : g.slice_edges(t))
      out << g.name(e.src) << '\t' << g.name(e.dst) << '\t' << prefix << g.label(t) << '\n';
}

std::string format_temporal_node(const EvolvingGraph& g, TemporalNode tn, bool t_prefixed) {
  return g.name(tn.node) + (t_prefixed ? "@t" : "@") + std::to_string(g.label(tn.time));
}

TemporalNode parse_temporal_node(const EvolvingGraph& g, std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos)
    throw Error("temporal node '" + std::string(text) + "' must look like node@time");
  const std::string_view name = text.substr(0, at);
  TimeLabel label = 0;
  if (!parse_time_label(text.substr(at + 1), label))
    throw Error("bad time in '" + std::string(text) + "'");
  auto node = g.node_of(name);
  if (!node) throw Error("unknown node '" + std::string(name) + "'");
  auto time = g.time_of(label);
  if (!time) throw Error("unknown time stamp in '" + std::string(text) + "'");
  return {*node, *time};
}

}  // namespace evg
