#include "evg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "evg/algebra.hpp"
#include "evg/bench.hpp"
#include "evg/citenet.hpp"
#include "evg/edge_list.hpp"
#include "evg/errors.hpp"
#include "evg/flatten.hpp"
#include "evg/generator.hpp"
#include "evg/traversal.hpp"
#include "evg/verify.hpp"

namespace evg {

namespace {

struct InputOptions {
  std::string path;
  bool undirected = false;
  std::string name_order = "natural";

  Directedness directedness() const {
    return undirected ? Directedness::Undirected : Directedness::Directed;
  }
  NameOrder order() const {
    return name_order == "lexicographic" ? NameOrder::Lexicographic : NameOrder::Natural;
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool required) {
  auto* opt = cmd->add_option("-i,--input", in.path, "edge list: src<TAB>dst<TAB>time per line");
  if (required) opt->required();
  cmd->add_flag("-u,--undirected", in.undirected, "treat edges as undirected");
  cmd->add_option("--name-order", in.name_order, "node id assignment order")
      ->check(CLI::IsMember({"natural", "lexicographic"}));
}

LoadedGraph load(const InputOptions& in) {
  return read_edge_list_file(in.path, in.directedness(), in.order());
}

std::size_t thread_count() {
  if (const char* env = std::getenv("EVG_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void print_naive_report(const EvolvingGraph& g, bool prefixed, TimeIndex upto, std::ostream& out) {
  const NaiveSumReport report = naive_sum_report(g, upto);
  const std::string first = (prefixed ? "t" : "") + std::to_string(g.label(0));
  const std::string last = (prefixed ? "t" : "") + std::to_string(g.label(upto));
  out << "# naive sum of slice-matrix products from " << first << " to " << last
      << " vs. temporal path counts\n";
  if (!report.defined) {
    out << "# only one time stamp selected: no product spans two times, the sum is empty\n";
    return;
  }
  out << "src\tdst\tnaive_sum\ttemporal_paths\n";
  for (const auto& row : report.rows) {
    out << g.name(row.src) << '@' << first << '\t' << g.name(row.dst) << '@' << last << '\t'
        << row.naive << '\t';
    if (row.temporal)
      out << *row.temporal;
    else
      out << "unbounded";
    out << (row.temporal && *row.temporal != row.naive ? "\tMISCOUNT" : "") << '\n';
  }
}

}  // namespace

std::vector<EdgeRecord> three_slice_records() {
  return {{"1", "2", 1}, {"1", "3", 2}, {"2", "3", 3}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Breadth-first search and path algebra on evolving graphs", "evgraph"};
  app.require_subcommand(1);
  std::function<int()> action;

  // bfs
  InputOptions bfs_in;
  std::string bfs_root, bfs_format = "text";
  auto* bfs_cmd = app.add_subcommand("bfs", "temporal BFS from a root, sorted by (distance, time, node)");
  add_input_options(bfs_cmd, bfs_in, true);
  bfs_cmd->add_option("-r,--root", bfs_root, "root as node@time")->required();
  bfs_cmd->add_option("--format", bfs_format)->check(CLI::IsMember({"text", "jsonl"}));
  bfs_cmd->callback([&] {
    action = [&] {
      const LoadedGraph loaded = load(bfs_in);
      const EvolvingGraph& g = loaded.graph;
      const TemporalNode root = parse_temporal_node(g, bfs_root);
      const ReachedMap reached = bfs(g, root);
      if (reached.degenerate())
        err << "warning: root " << bfs_root << " is inactive; it reaches nothing\n";
      for (const auto& e : reached.by_distance()) {
        if (bfs_format == "jsonl") {
          nlohmann::json j{{"node", g.name(e.node.node)},
                           {"time", g.label(e.node.time)},
                           {"distance", e.distance}};
          out << j.dump() << '\n';
        } else {
          out << format_temporal_node(g, e.node, loaded.summary.t_prefixed) << ' ' << e.distance << '\n';
        }
      }
      return kExitOk;
    };
  });

  // distance
  InputOptions dist_in;
  std::string dist_from, dist_to;
  auto* dist_cmd = app.add_subcommand("distance", "hop distance between two temporal nodes");
  add_input_options(dist_cmd, dist_in, true);
  dist_cmd->add_option("--from", dist_from)->required();
  dist_cmd->add_option("--to", dist_to)->required();
  dist_cmd->callback([&] {
    action = [&] {
      const LoadedGraph loaded = load(dist_in);
      auto d = distance(loaded.graph, parse_temporal_node(loaded.graph, dist_from),
                        parse_temporal_node(loaded.graph, dist_to));
      if (d)
        out << *d << '\n';
      else
        out << "unreachable\n";
      return kExitOk;
    };
  });

  // count-paths
  InputOptions count_in;
  std::string count_from, count_to;
  std::size_t count_hops = 0;
  auto* count_cmd = app.add_subcommand("count-paths", "number of temporal paths with exactly k hops");
  add_input_options(count_cmd, count_in, true);
  count_cmd->add_option("--from", count_from)->required();
  count_cmd->add_option("--to", count_to)->required();
  count_cmd->add_option("-k,--hops", count_hops)->required();
  count_cmd->callback([&] {
    action = [&] {
      const LoadedGraph loaded = load(count_in);
      out << count_temporal_paths(loaded.graph, parse_temporal_node(loaded.graph, count_from),
                                  parse_temporal_node(loaded.graph, count_to), count_hops)
          << '\n';
      return kExitOk;
    };
  });

  // flatten
  InputOptions flat_in;
  std::string flat_mm;
  bool flat_full = false;
  auto* flat_cmd = app.add_subcommand("flatten", "static expansion edges (STATIC / CAUSAL)");
  add_input_options(flat_cmd, flat_in, true);
  flat_cmd->add_option("--matrix-market", flat_mm, "also write the block adjacency matrix here");
  flat_cmd->add_flag("--full", flat_full, "matrix over all temporal nodes instead of active ones");
  flat_cmd->callback([&] {
    action = [&] {
      const LoadedGraph loaded = load(flat_in);
      const EvolvingGraph& g = loaded.graph;
      const StaticExpansion x = expand(g);
      write_expansion_edges(x, g, out, [&](TemporalNode tn) {
        return format_temporal_node(g, tn, loaded.summary.t_prefixed);
      });
      if (!flat_mm.empty()) {
        std::ofstream mm(flat_mm);
        if (!mm) throw Error("cannot write '" + flat_mm + "'");
        write_matrix_market(g, flat_full ? MatrixForm::Full : MatrixForm::Restricted, mm);
      }
      return kExitOk;
    };
  });

  // verify
  InputOptions verify_in;
  std::size_t verify_random_count = 0;
  std::uint64_t verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check list, static-expansion and algebraic BFS");
  add_input_options(verify_cmd, verify_in, false);
  verify_cmd->add_option("--random", verify_random_count, "number of seeded random graphs");
  verify_cmd->add_option("--seed", verify_seed);
  verify_cmd->callback([&] {
    action = [&] {
      if (verify_in.path.empty() && verify_random_count == 0)
        throw CLI::ValidationError("verify", "give --input or --random N");
      VerifyOutcome total;
      if (!verify_in.path.empty()) {
        VerifyOutcome one = verify_graph(load(verify_in).graph);
        total.graphs += one.graphs;
        total.agreeing += one.agreeing;
        total.roots += one.roots;
        total.failures.insert(total.failures.end(), one.failures.begin(), one.failures.end());
      }
      if (verify_random_count > 0) {
        VerifyOutcome many = verify_random(verify_random_count, verify_seed, thread_count());
        total.graphs += many.graphs;
        total.agreeing += many.agreeing;
        total.roots += many.roots;
        total.failures.insert(total.failures.end(), many.failures.begin(), many.failures.end());
      }
      for (const auto& f : total.failures) out << "mismatch: " << f << '\n';
      out << "verify: " << total.graphs << " graphs, " << total.roots << " roots, " << total.agreeing
          << '/' << total.graphs << " agree\n";
      out << (total.passed() ? "PASS" : "FAIL") << '\n';
      return total.passed() ? kExitOk : kExitVerifyFailed;
    };
  });

  // demo-naive-sum
  InputOptions demo_in;
  std::string demo_upto;
  auto* demo_cmd = app.add_subcommand("demo-naive-sum",
                                      "compare the naive adjacency-product sum with true path counts");
  add_input_options(demo_cmd, demo_in, false);
  demo_cmd->add_option("--upto", demo_upto, "last time stamp for the input graph (default: last)");
  demo_cmd->callback([&] {
    action = [&] {
      const auto records = three_slice_records();
      const EvolvingGraph example = build_graph(records, Directedness::Directed);
      out << "# built-in example: 1->2 @t1, 1->3 @t2, 2->3 @t3\n";
      print_naive_report(example, true, 2, out);
      const auto sum = naive_path_sum(example, 2);
      out << "# S[1,3] = " << (*sum)(0, 2) << " while count-paths 1@t1 -> 3@t3 with 3 hops = "
          << count_temporal_paths(example, {0, 0}, {2, 2}, 3) << '\n';
      if (!demo_in.path.empty()) {
        const LoadedGraph loaded = load(demo_in);
        const EvolvingGraph& g = loaded.graph;
        TimeIndex upto = g.time_count() - 1;
        if (!demo_upto.empty()) {
          TimeLabel label = 0;
          if (!parse_time_label(demo_upto, label) || !g.time_of(label))
            throw Error("unknown time stamp '" + demo_upto + "'");
          upto = *g.time_of(label);
        }
        out << "# input: " << demo_in.path << '\n';
        print_naive_report(g, loaded.summary.t_prefixed, upto, out);
      }
      return kExitOk;
    };
  });

  // bench
  BenchConfig bench;
  bool bench_undirected = false;
  auto* bench_cmd = app.add_subcommand("bench", "BFS time over a growing random edge family (CSV)");
  bench_cmd->add_option("--nodes", bench.nodes);
  bench_cmd->add_option("--times", bench.times);
  bench_cmd->add_option("--start-edges", bench.start_edges);
  bench_cmd->add_option("--max-edges", bench.max_edges);
  bench_cmd->add_option("--steps", bench.steps);
  bench_cmd->add_option("--reps", bench.repetitions);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_flag("-u,--undirected", bench_undirected);
  bench_cmd->callback([&] {
    action = [&] {
      bench.directedness = bench_undirected ? Directedness::Undirected : Directedness::Directed;
      out << "edges,seconds,iterations\n";
      run_bench(bench, [&](const BenchRow& row) {
        std::ostringstream line;
        line << row.edges << ',' << std::fixed << std::setprecision(9) << row.seconds << ','
             << row.iterations << '\n';
        out << line.str() << std::flush;
      });
      return kExitOk;
    };
  });

  // generate
  GenSpec gen;
  bool gen_undirected = false;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("generate", "write a seeded random evolving graph as an edge list");
  gen_cmd->add_option("--nodes", gen.n_nodes)->required();
  gen_cmd->add_option("--times", gen.n_times)->required();
  gen_cmd->add_option("--edges", gen.n_static_edges)->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_flag("-u,--undirected", gen_undirected);
  gen_cmd->add_option("-o,--output", gen_output);
  gen_cmd->callback([&] {
    action = [&] {
      gen.directedness = gen_undirected ? Directedness::Undirected : Directedness::Directed;
      const EvolvingGraph g = random_graph(gen);
      if (gen_output.empty()) {
        write_edge_list(g, out);
      } else {
        std::ofstream file(gen_output);
        if (!file) throw Error("cannot write '" + gen_output + "'");
        write_edge_list(g, file);
      }
      return kExitOk;
    };
  });

  // influence / community share report formatting
  auto print_report = [](const EvolvingGraph& g, bool prefixed, const InfluenceReport& report,
                         bool temporal, const std::string& format, std::ostream& os) {
    const auto& rows = temporal ? report.reached : report.authors;
    if (format == "tsv") {
      os << "# " << to_string(report.orientation) << " of "
         << format_temporal_node(g, report.root, prefixed) << '\n';
      os << (temporal ? "author\ttime\tdistance\n" : "author\tfirst_time\tdistance\n");
    }
    for (const auto& e : rows) {
      if (format == "jsonl") {
        nlohmann::json j{{"orientation", to_string(report.orientation)},
                         {"author", g.name(e.node.node)},
                         {"time", g.label(e.node.time)},
                         {"distance", e.distance}};
        os << j.dump() << '\n';
      } else {
        os << g.name(e.node.node) << '\t' << (prefixed ? "t" : "") << g.label(e.node.time) << '\t'
           << e.distance << '\n';
      }
    }
  };

  InputOptions infl_in;
  std::string infl_root, infl_format = "tsv";
  bool infl_backward = false, infl_temporal = false;
  auto* infl_cmd = app.add_subcommand("influence", "authors influenced by (or influencing) a root");
  add_input_options(infl_cmd, infl_in, true);
  infl_cmd->add_option("-r,--root", infl_root, "author@year")->required();
  infl_cmd->add_flag("--backward", infl_backward, "influencers instead of influenced");
  infl_cmd->add_flag("--temporal", infl_temporal, "list every reached (author, year)");
  infl_cmd->add_option("--format", infl_format)->check(CLI::IsMember({"tsv", "jsonl"}));
  infl_cmd->callback([&] {
    action = [&] {
      infl_in.undirected = false;
      const LoadedGraph loaded = load(infl_in);
      const CitationNetwork net(loaded.graph);
      const TemporalNode root = parse_temporal_node(loaded.graph, infl_root);
      const InfluenceReport report = infl_backward ? net.influencers_set(root.node, root.time)
                                                   : net.influence_set(root.node, root.time);
      print_report(loaded.graph, loaded.summary.t_prefixed, report, infl_temporal, infl_format, out);
      return kExitOk;
    };
  });

  InputOptions comm_in;
  std::string comm_root, comm_format = "tsv";
  auto* comm_cmd = app.add_subcommand("community", "authors influenced by the root's earliest influencers");
  add_input_options(comm_cmd, comm_in, true);
  comm_cmd->add_option("-r,--root", comm_root, "author@year")->required();
  comm_cmd->add_option("--format", comm_format)->check(CLI::IsMember({"tsv", "jsonl"}));
  comm_cmd->callback([&] {
    action = [&] {
      comm_in.undirected = false;
      const LoadedGraph loaded = load(comm_in);
      const EvolvingGraph& g = loaded.graph;
      const CitationNetwork net(g);
      const TemporalNode root = parse_temporal_node(g, comm_root);
      const auto members = net.community(root.node, root.time);
      if (comm_format == "tsv") out << "# community of " << comm_root << '\n' << "author\n";
      for (NodeId a : members) {
        if (comm_format == "jsonl")
          out << nlohmann::json{{"community_of", comm_root}, {"author", g.name(a)}}.dump() << '\n';
        else
          out << g.name(a) << '\n';
      }
      return kExitOk;
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace evg
