#include "pathgraph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "pathgraph/certificate.hpp"
#include "pathgraph/generators.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/recognition.hpp"

namespace pathgraph {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PATHTREE_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("PATHTREE_SEED is not a number: ") + env);
    }
  }
  return kDefaultSeed;
}

std::string labeled_set(const VertexSet& s, const std::vector<std::int64_t>& labels) {
  std::vector<std::int64_t> xs;
  for (Vertex v : s) xs.push_back(labels.empty() ? v : labels[static_cast<std::size_t>(v)]);
  std::sort(xs.begin(), xs.end());
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? "," : "") << xs[k];
  out << '}';
  return out.str();
}

std::string gamma(int id) { return "gamma" + std::to_string(id + 1); }

std::string block_name(SetLabel l) {
  return l.pair() ? "D_" + std::to_string(l.i) + "," + std::to_string(l.j) : "D_" + std::to_string(l.i);
}

void print_trace(const std::vector<SeparatorTrace>& trace, const std::vector<std::int64_t>& labels,
                 std::ostream& out) {
  for (const auto& t : trace) {
    out << "separator " << labeled_set(t.separator, labels) << " depth " << t.depth << "\n";
    for (std::size_t k = 0; k < t.private_sets.size(); ++k) {
      out << "  " << gamma(static_cast<int>(k)) << " private " << labeled_set(t.private_sets[k], labels) << " W "
          << labeled_set(t.attachments[k], labels) << (t.flat[k] ? " flat" : "") << "\n";
    }
    for (const auto& r : t.relations) {
      if (r.relation == Relation::Unattached) continue;
      out << "  " << gamma(r.a) << " " << to_string(r.relation) << " " << gamma(r.b) << "\n";
    }
    out << "  uppers";
    for (int u : t.uppers) out << " " << gamma(u);
    out << "\n";
    for (const auto& b : t.blocks) {
      out << "  " << block_name(b.label) << ":";
      for (int m : b.members) out << " " << gamma(m);
      for (std::size_t k = 0; k < b.members.size(); ++k) {
        for (int p : b.dag_parents[k]) out << " [" << gamma(p) << "->" << gamma(b.members[k]) << "]";
      }
      out << "\n";
    }
    if (!t.colors.empty()) {
      out << "  colors";
      for (std::size_t k = 0; k < t.colors.size(); ++k) out << " " << gamma(static_cast<int>(k)) << "=" << t.colors[k];
      out << "\n";
    }
  }
}

int cmd_recognize(const std::string& input, bool directed, const std::string& emit, bool trace,
                  const std::string& output, std::ostream& out, std::ostream& err) {
  auto g = parse_graph(read_file(input));
  RecognizerOptions options;
  options.collect_trace = trace;
  auto start = std::chrono::steady_clock::now();
  auto rec = directed ? recognize_directed_path_graph(g.graph, options) : recognize_path_graph(g.graph, options);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (trace) print_trace(rec.trace, g.labels, err);
  err << "verdict: " << (rec.accepted ? "accept" : "reject") << "\n";
  err << "class: " << (directed ? "directed path graph" : "path graph") << "\n";
  err << "cliques: " << rec.clique_count << "\n";
  if (rec.rejection) {
    err << "reason: " << to_string(rec.rejection->reason) << "\n";
    err << "stage: " << rec.rejection->stage << "\n";
    err << "detail: " << rec.rejection->detail << "\n";
    if (rec.rejection->depth >= 0) {
      err << "separator: " << labeled_set(rec.rejection->separator, g.labels) << "\n";
      err << "depth: " << rec.rejection->depth << "\n";
    }
    if (!rec.rejection->vertices.empty()) err << "vertices: " << labeled_set(rec.rejection->vertices, g.labels) << "\n";
  }
  err << "elapsed_ms: " << std::fixed << std::setprecision(3) << ms << "\n";

  if (rec.accepted && emit != "none") {
    std::string text = emit == "json" ? certificate_to_json(*rec.tree, g.labels) : certificate_to_dot(*rec.tree, g.labels);
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output);
      if (!file) throw InputError("cannot write " + output);
      file << text;
    }
  }
  return rec.accepted ? 0 : 1;
}

int cmd_check(const std::string& graph_path, const std::string& tree_path, bool directed, std::ostream& out) {
  auto g = parse_graph(read_file(graph_path));
  auto cert = parse_certificate(read_file(tree_path), g);
  bool ok = check_certificate(g.graph, cert, directed);
  out << (ok ? "valid" : "invalid") << (directed ? " directed" : "") << " clique path tree\n";
  return ok ? 0 : 1;
}

// Drops vertices one at a time while the disagreement persists.
Graph minimize(Graph g, const std::function<bool(const Graph&)>& disagrees) {
  bool progress = true;
  while (progress && g.vertex_count() > 1) {
    progress = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::vector<Vertex> keep;
      for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (w != v) keep.push_back(w);
      }
      auto smaller = induced_subgraph(g, keep).graph;
      if (disagrees(smaller)) {
        g = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return g;
}

int cmd_fuzz(int count, int max_cliques, std::uint64_t seed, bool directed, const std::string& witness_path,
             bool inject, std::ostream& out, std::ostream& err) {
  const int limit = directed ? kOracleMaxDirectedCliques : kOracleMaxCliques;
  if (max_cliques > limit || max_cliques < 1) {
    err << "max-cliques must be in [1, " << limit << "] for the " << (directed ? "directed " : "") << "oracle\n";
    return 2;
  }
  std::mt19937_64 seeds(seed);
  auto recognizer_says = [&](const Graph& g) {
    auto rec = directed ? recognize_directed_path_graph(g) : recognize_path_graph(g);
    // An accept with a broken certificate counts as a wrong answer.
    return rec.accepted && check_certificate(g, *rec.tree, directed);
  };
  auto oracle_says = [&](const Graph& g) {
    return directed ? oracle_is_directed_path_graph(g) : oracle_is_path_graph(g);
  };

  int agree = 0;
  int positives = 0;
  std::optional<Graph> witness;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seeds();
    Graph g = random_fuzz_instance(max_cliques, directed, s);
    bool flip = inject && i == 0;
    auto disagrees = [&](const Graph& h) { return (recognizer_says(h) != flip) != oracle_says(h); };
    bool truth = oracle_says(g);
    positives += truth ? 1 : 0;
    if (!disagrees(g)) {
      ++agree;
    } else if (!witness) {
      witness = minimize(g, disagrees);
    }
  }
  out << agree << "/" << count << " agree (" << positives << " positive, " << count - positives << " negative)\n";
  if (witness) {
    std::ofstream file(witness_path);
    file << "# recognizer and oracle disagree on this graph\n" << serialize_graph(*witness);
    err << "witness written to " << witness_path << " (" << witness->vertex_count() << " vertices)\n";
    return 1;
  }
  return 0;
}

int cmd_gen(const std::string& cls, int k, int width, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  Graph g;
  if (cls == "chordal") {
    g = random_chordal(k, width, seed);
  } else if (cls == "interval") {
    g = random_interval_graph(k, seed);
  } else if (cls == "path") {
    g = random_path_graph_positive(k, seed);
  } else if (cls == "rooted") {
    g = random_rooted_path_positive(k, seed);
  } else {
    err << "unknown class '" << cls << "' (expected chordal, interval, path or rooted)\n";
    return 2;
  }
  // Labels start at 1; isolated vertices cannot be written in this format.
  std::vector<std::int64_t> labels(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<std::int64_t>(v) + 1;
  out << serialize_graph(g, labels);
  return 0;
}

int cmd_bench(const std::vector<int>& sizes, int max_length, std::uint64_t seed, bool directed, std::ostream& out) {
  out << "n\tm\tcliques\tverdict\tseconds\n";
  int status = 0;
  for (int n : sizes) {
    Graph g = random_path_graph_sized(n, max_length, seed, directed);
    auto start = std::chrono::steady_clock::now();
    auto rec = directed ? recognize_directed_path_graph(g) : recognize_path_graph(g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << n << "\t" << g.edge_count() << "\t" << rec.clique_count << "\t" << (rec.accepted ? "accept" : "reject")
        << "\t" << std::fixed << std::setprecision(4) << secs << "\n";
    if (!rec.accepted && !directed) status = 1;
  }
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path graph and directed path graph recognition", "pathtree"};
  app.require_subcommand(1);

  std::string input, tree_path, emit = "dot", output, witness = "fuzz-witness.txt", cls;
  bool directed = false, trace = false, inject = false;
  std::optional<std::uint64_t> seed;
  int count = 300, max_cliques = 7, k = 7, width = 3, max_length = 5;
  std::vector<int> sizes{2000, 4000, 8000};

  auto* rec = app.add_subcommand("recognize", "decide membership and emit a certificate");
  rec->add_option("input", input, "edge-list file")->required();
  rec->add_flag("--directed", directed, "recognize directed path graphs");
  rec->add_option("--emit", emit, "certificate format")->check(CLI::IsMember({"dot", "json", "none"}));
  rec->add_option("-o,--output", output, "write the certificate here instead of standard output");
  rec->add_flag("--trace", trace, "print the per-separator partition and coloring");

  auto* chk = app.add_subcommand("check", "verify a clique path tree against a graph");
  chk->add_option("graph", input, "edge-list file")->required();
  chk->add_option("tree", tree_path, "DOT or JSON certificate")->required();
  chk->add_flag("--directed", directed, "require a directed clique path tree");

  auto* fuzz = app.add_subcommand("fuzz", "compare the recognizer with the brute-force oracle");
  fuzz->add_option("--count", count)->check(CLI::NonNegativeNumber);
  fuzz->add_option("--max-cliques", max_cliques);
  fuzz->add_option("--seed", seed);
  fuzz->add_flag("--directed", directed);
  fuzz->add_option("--witness", witness, "where to write a minimized disagreement");
  fuzz->add_flag("--inject-disagreement", inject)->group("");  // harness self-test

  auto* gen = app.add_subcommand("gen", "print a random instance as an edge list");
  gen->add_option("class", cls, "chordal, interval, path or rooted")->required();
  gen->add_option("k", k, "host tree size (bounds the clique count)")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed);
  gen->add_option("--width", width, "subtree size cap for chordal")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "time the recognizer on large path-graph positives");
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--max-length", max_length)->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);
  bench->add_flag("--directed", directed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*rec) return cmd_recognize(input, directed, emit, trace, output, out, err);
    if (*chk) return cmd_check(input, tree_path, directed, out);
    if (*fuzz) return cmd_fuzz(count, max_cliques, resolve_seed(seed), directed, witness, inject, out, err);
    if (*gen) return cmd_gen(cls, k, width, resolve_seed(seed), out, err);
    if (*bench) return cmd_bench(sizes, max_length, resolve_seed(seed), directed, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const ContractError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace pathgraph
