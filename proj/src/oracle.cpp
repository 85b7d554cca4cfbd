#include "pathgraph/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace pathgraph {

namespace {

struct Dart {
  int to;
  bool out;
};

bool check_impl(const Graph& g, const CliqueSet& cs, const CliqueTree& t, bool directed) {
  if (t.node_count != cs.size()) throw ContractError("tree nodes do not match the clique set");
  if (!t.is_tree()) return false;
  std::vector<std::vector<Dart>> adj(static_cast<std::size_t>(t.node_count));
  for (auto e : t.edges) {
    adj[static_cast<std::size_t>(e.from)].push_back({e.to, true});
    adj[static_cast<std::size_t>(e.to)].push_back({e.from, false});
  }
  std::vector<int> stamp(static_cast<std::size_t>(t.node_count), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& nodes = cs.containing[static_cast<std::size_t>(v)];
    if (nodes.empty()) return false;
    for (int x : nodes) stamp[static_cast<std::size_t>(x)] = v;
    std::size_t twice_edges = 0;
    for (int x : nodes) {
      int deg = 0;
      int in = 0;
      int out = 0;
      for (auto d : adj[static_cast<std::size_t>(x)]) {
        if (stamp[static_cast<std::size_t>(d.to)] != v) continue;
        ++deg;
        (d.out ? out : in) += 1;
      }
      if (deg > 2) return false;
      if (directed && (in > 1 || out > 1)) return false;
      twice_edges += static_cast<std::size_t>(deg);
    }
    // In a forest, |nodes| - 1 induced edges means connected.
    if (twice_edges != 2 * (nodes.size() - 1)) return false;
  }
  return true;
}

}  // namespace

bool check_clique_path_tree(const Graph& g, const CliqueSet& cs, const CliqueTree& t) {
  return check_impl(g, cs, t, false);
}

bool check_directed_clique_path_tree(const Graph& g, const CliqueSet& cs, const CliqueTree& t) {
  return check_impl(g, cs, t, true);
}

std::optional<std::vector<int>> match_cliques(const CliqueSet& cs, const std::vector<VertexSet>& cliques) {
  if (static_cast<int>(cliques.size()) != cs.size()) return std::nullopt;
  std::map<VertexSet, int> index;
  for (int id = 0; id < cs.size(); ++id) index.emplace(cs[id], id);
  std::vector<int> out;
  std::vector<char> used(cliques.size(), 0);
  for (auto k : cliques) {
    std::sort(k.begin(), k.end());
    auto it = index.find(k);
    if (it == index.end() || used[static_cast<std::size_t>(it->second)]) return std::nullopt;
    used[static_cast<std::size_t>(it->second)] = 1;
    out.push_back(it->second);
  }
  return out;
}

bool check_certificate(const Graph& g, const CliquePathTree& cert, bool directed) {
  auto order = mcs_order(g);
  if (!is_perfect_elimination_order(g, order)) return false;
  auto cs = maximal_cliques(g, order);
  auto map = match_cliques(cs, cert.cliques);
  if (!map) throw ContractError("certificate cliques are not the maximal cliques of the graph");
  if (cert.tree.node_count != cs.size()) throw ContractError("certificate tree size mismatch");
  CliqueTree t;
  t.node_count = cert.tree.node_count;
  t.directed = cert.tree.directed;
  for (auto e : cert.tree.edges) {
    if (e.from < 0 || e.to < 0 || e.from >= t.node_count || e.to >= t.node_count) return false;
    t.edges.push_back({(*map)[static_cast<std::size_t>(e.from)], (*map)[static_cast<std::size_t>(e.to)]});
  }
  return directed ? check_directed_clique_path_tree(g, cs, t) : check_clique_path_tree(g, cs, t);
}

std::vector<TreeEdge> prufer_decode(std::span<const int> code, int p) {
  if (p <= 1) {
    if (!code.empty()) throw ContractError("Pruefer code too long");
    return {};
  }
  if (static_cast<int>(code.size()) != p - 2) throw ContractError("Pruefer code has the wrong length");
  std::vector<int> degree(static_cast<std::size_t>(p), 1);
  for (int x : code) {
    if (x < 0 || x >= p) throw ContractError("Pruefer code entry out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int x = 0; x < p; ++x) {
    if (degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  std::vector<TreeEdge> edges;
  for (int x : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return edges;
}

std::vector<int> prufer_encode(const CliqueTree& t) {
  if (!t.is_tree()) throw ContractError("not a tree");
  const int p = t.node_count;
  if (p <= 2) return {};
  auto adj = t.adjacency();
  std::vector<int> degree(static_cast<std::size_t>(p));
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int x = 0; x < p; ++x) {
    degree[static_cast<std::size_t>(x)] = static_cast<int>(adj[static_cast<std::size_t>(x)].size());
    if (degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  std::vector<char> removed(static_cast<std::size_t>(p), 0);
  std::vector<int> code;
  while (static_cast<int>(code.size()) < p - 2) {
    int leaf = leaves.top();
    leaves.pop();
    removed[static_cast<std::size_t>(leaf)] = 1;
    for (int w : adj[static_cast<std::size_t>(leaf)]) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      code.push_back(w);
      if (--degree[static_cast<std::size_t>(w)] == 1) leaves.push(w);
    }
  }
  return code;
}

bool for_each_labeled_tree(int p, const std::function<bool(const std::vector<TreeEdge>&)>& visit) {
  if (p <= 2) {
    std::vector<TreeEdge> edges;
    if (p == 2) edges.push_back({0, 1});
    return visit(edges);
  }
  std::vector<int> code(static_cast<std::size_t>(p - 2), 0);
  while (true) {
    if (visit(prufer_decode(code, p))) return true;
    std::size_t k = code.size();
    while (k > 0 && code[k - 1] == p - 1) code[--k] = 0;
    if (k == 0) return false;
    ++code[k - 1];
  }
}

namespace {

std::optional<CliqueSet> cliques_within(const Graph& g, int max_cliques) {
  auto order = mcs_order(g);
  if (!is_perfect_elimination_order(g, order)) return std::nullopt;
  auto cs = maximal_cliques(g, order);
  if (cs.size() > max_cliques) {
    throw CapacityError("oracle limited to " + std::to_string(max_cliques) + " cliques, got " +
                        std::to_string(cs.size()));
  }
  return cs;
}

}  // namespace

bool oracle_is_path_graph(const Graph& g, int max_cliques) {
  auto cs = cliques_within(g, max_cliques);
  if (!cs) return false;
  CliqueTree t;
  t.node_count = cs->size();
  return for_each_labeled_tree(t.node_count, [&](const std::vector<TreeEdge>& edges) {
    t.edges = edges;
    return check_clique_path_tree(g, *cs, t);
  });
}

bool oracle_is_directed_path_graph(const Graph& g, int max_cliques) {
  auto cs = cliques_within(g, max_cliques);
  if (!cs) return false;
  CliqueTree t;
  t.node_count = cs->size();
  t.directed = true;
  return for_each_labeled_tree(t.node_count, [&](const std::vector<TreeEdge>& edges) {
    const std::size_t e = edges.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << e); ++mask) {
      // Flipping every dart preserves validity, so fix the first one.
      if (e > 0 && (mask & 1u)) continue;
      t.edges = edges;
      for (std::size_t k = 0; k < e; ++k) {
        if (mask >> k & 1u) std::swap(t.edges[k].from, t.edges[k].to);
      }
      if (check_directed_clique_path_tree(g, *cs, t)) return true;
    }
    return false;
  });
}

}  // namespace pathgraph
