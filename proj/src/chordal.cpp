#include "pathgraph/chordal.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <unordered_map>

#include "pathgraph/detail/union_find.hpp"

namespace pathgraph {

EliminationOrder mcs_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  // buckets[k] holds the unnumbered vertices with label k; std::set keeps
  // the smallest id at begin().
  std::vector<std::set<Vertex>> buckets(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);

  EliminationOrder visit;
  visit.reserve(static_cast<std::size_t>(n));
  int top = 0;
  for (int step = 0; step < n; ++step) {
    while (top > 0 && buckets[static_cast<std::size_t>(top)].empty()) --top;
    auto& bucket = buckets[static_cast<std::size_t>(top)];
    Vertex v = *bucket.begin();
    bucket.erase(bucket.begin());
    numbered[static_cast<std::size_t>(v)] = 1;
    visit.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (numbered[static_cast<std::size_t>(w)]) continue;
      int& l = label[static_cast<std::size_t>(w)];
      buckets[static_cast<std::size_t>(l)].erase(w);
      ++l;
      buckets[static_cast<std::size_t>(l)].insert(w);
      top = std::max(top, l);
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

namespace {

std::vector<int> positions(const EliminationOrder& order, int n) {
  if (static_cast<int>(order.size()) != n) throw ContractError("order is not a permutation");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) {
      throw ContractError("order is not a permutation");
    }
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return pos;
}

// Earliest later neighbour of each vertex, or -1.
std::vector<Vertex> elimination_parents(const Graph& g, const std::vector<int>& pos) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] <= pos[static_cast<std::size_t>(v)]) continue;
      Vertex& p = parent[static_cast<std::size_t>(v)];
      if (p == -1 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(p)]) p = w;
    }
  }
  return parent;
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order) {
  auto pos = positions(order, g.vertex_count());
  auto parent = elimination_parents(g, pos);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex p = parent[static_cast<std::size_t>(v)];
    if (p == -1) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w == p || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)]) continue;
      if (!g.adjacent(p, w)) return false;
    }
  }
  return true;
}

bool is_chordal(const Graph& g) { return is_perfect_elimination_order(g, mcs_order(g)); }

CliqueSet CliqueSet::from_cliques(int vertex_count, std::vector<VertexSet> cliques) {
  CliqueSet cs;
  cs.containing.resize(static_cast<std::size_t>(vertex_count));
  for (std::size_t id = 0; id < cliques.size(); ++id) {
    auto& k = cliques[id];
    std::sort(k.begin(), k.end());
    for (Vertex v : k) cs.containing[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
  }
  cs.cliques = std::move(cliques);
  return cs;
}

std::optional<int> CliqueSet::find(const VertexSet& s) const {
  for (std::size_t id = 0; id < cliques.size(); ++id) {
    if (cliques[id] == s) return static_cast<int>(id);
  }
  return std::nullopt;
}

std::vector<std::vector<int>> CliqueTree::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
  for (auto e : edges) {
    adj[static_cast<std::size_t>(e.from)].push_back(e.to);
    adj[static_cast<std::size_t>(e.to)].push_back(e.from);
  }
  return adj;
}

bool CliqueTree::is_tree() const {
  if (node_count == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != node_count - 1) return false;
  detail::UnionFind uf(node_count);
  for (auto e : edges) {
    if (e.from < 0 || e.to < 0 || e.from >= node_count || e.to >= node_count) return false;
    if (!uf.unite(e.from, e.to)) return false;
  }
  return true;
}

void CliqueTree::reverse() {
  for (auto& e : edges) std::swap(e.from, e.to);
}

CliqueSet maximal_cliques(const Graph& g, const EliminationOrder& order) {
  if (!is_perfect_elimination_order(g, order)) {
    throw ContractError("maximal_cliques requires a chordal graph and a perfect elimination order");
  }
  const int n = g.vertex_count();
  auto pos = positions(order, n);
  auto parent = elimination_parents(g, pos);

  std::vector<int> later(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) {
        ++later[static_cast<std::size_t>(v)];
      }
    }
  }
  // {v} + later(v) is contained in {u} + later(u) exactly when parent(u) = v
  // and u has one more later neighbour.
  std::vector<char> dominated(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    Vertex p = parent[static_cast<std::size_t>(u)];
    if (p != -1 && later[static_cast<std::size_t>(u)] == later[static_cast<std::size_t>(p)] + 1) {
      dominated[static_cast<std::size_t>(p)] = 1;
    }
  }

  std::vector<VertexSet> cliques;
  for (Vertex v = 0; v < n; ++v) {
    if (dominated[static_cast<std::size_t>(v)]) continue;
    VertexSet k{v};
    for (Vertex w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) k.push_back(w);
    }
    std::sort(k.begin(), k.end());
    cliques.push_back(std::move(k));
  }
  std::sort(cliques.begin(), cliques.end());
  return CliqueSet::from_cliques(n, std::move(cliques));
}

CliqueTree clique_tree(const Graph& g, const CliqueSet& cs) {
  (void)g;
  const int p = cs.size();
  std::unordered_map<std::uint64_t, int> weight;
  for (const auto& ids : cs.containing) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        auto a = static_cast<std::uint64_t>(std::min(ids[i], ids[j]));
        auto b = static_cast<std::uint64_t>(std::max(ids[i], ids[j]));
        ++weight[(a << 32) | b];
      }
    }
  }
  std::vector<std::tuple<int, int, int>> candidates;  // (-w, a, b)
  candidates.reserve(weight.size());
  for (auto [key, w] : weight) {
    candidates.emplace_back(-w, static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
  }
  std::sort(candidates.begin(), candidates.end());

  CliqueTree t;
  t.node_count = p;
  detail::UnionFind uf(p);
  for (auto [w, a, b] : candidates) {
    if (uf.unite(a, b)) t.edges.push_back({a, b});
  }
  for (int k = 1; k < p; ++k) {
    if (uf.unite(0, k)) t.edges.push_back({0, k});
  }
  return t;
}

}  // namespace pathgraph
