#include "pathgraph/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

namespace pathgraph {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi]; the tail that would bias the modulo is rejected.
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

// parent[t] < t for t >= 1. `reach` bounds how far back the parent is
// chosen; a small reach gives long, path-like hosts.
std::vector<int> random_host(int k, int reach, Rng& rng) {
  std::vector<int> parent(static_cast<std::size_t>(k), -1);
  for (int t = 1; t < k; ++t) parent[static_cast<std::size_t>(t)] = t - 1 - rng.uniform(0, std::min(t - 1, reach));
  return parent;
}

std::vector<std::vector<int>> host_adjacency(const std::vector<int>& parent) {
  std::vector<std::vector<int>> adj(parent.size());
  for (std::size_t t = 1; t < parent.size(); ++t) {
    adj[t].push_back(parent[t]);
    adj[static_cast<std::size_t>(parent[t])].push_back(static_cast<int>(t));
  }
  return adj;
}

// Two vertices are adjacent when their node sets meet.
Graph intersection_graph(const std::vector<std::vector<int>>& sets, int host_nodes) {
  std::vector<std::vector<int>> at(static_cast<std::size_t>(host_nodes));
  for (std::size_t v = 0; v < sets.size(); ++v) {
    for (int t : sets[v]) at[static_cast<std::size_t>(t)].push_back(static_cast<int>(v));
  }
  std::set<Edge> edges;
  for (const auto& here : at) {
    for (std::size_t a = 0; a < here.size(); ++a) {
      for (std::size_t b = a + 1; b < here.size(); ++b) edges.emplace(here[a], here[b]);
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(static_cast<int>(sets.size()), list);
}

// Tree path between a and b via parent pointers and depths.
std::vector<int> host_path(int a, int b, const std::vector<int>& parent, const std::vector<int>& depth) {
  std::vector<int> left;
  std::vector<int> right;
  while (a != b) {
    if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
      left.push_back(a);
      a = parent[static_cast<std::size_t>(a)];
    } else {
      right.push_back(b);
      b = parent[static_cast<std::size_t>(b)];
    }
  }
  left.push_back(a);
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

std::vector<int> depths(const std::vector<int>& parent) {
  std::vector<int> depth(parent.size(), 0);
  for (std::size_t t = 1; t < parent.size(); ++t) depth[t] = depth[static_cast<std::size_t>(parent[t])] + 1;
  return depth;
}

int vertex_count_for(int k, Rng& rng) { return k + rng.uniform(0, k); }

}  // namespace

Graph random_chordal(int k, int width, std::uint64_t seed) {
  k = std::max(k, 1);
  width = std::max(width, 1);
  Rng rng(seed);
  auto parent = random_host(k, k, rng);
  auto adj = host_adjacency(parent);
  // One private vertex per host node keeps the k cliques distinct.
  std::vector<std::vector<int>> sets;
  for (int t = 0; t < k; ++t) sets.push_back({t});
  const int extra = rng.uniform(1, 2 * k);
  for (int v = 0; v < extra; ++v) {
    // Grow a connected subtree from a random node.
    std::vector<int> nodes{rng.uniform(0, k - 1)};
    const int size = rng.uniform(1, width);
    std::vector<int> frontier;
    for (int w : adj[static_cast<std::size_t>(nodes[0])]) frontier.push_back(w);
    while (static_cast<int>(nodes.size()) < size && !frontier.empty()) {
      std::size_t pick = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(frontier.size()) - 1));
      int t = frontier[pick];
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
      if (std::find(nodes.begin(), nodes.end(), t) != nodes.end()) continue;
      nodes.push_back(t);
      for (int w : adj[static_cast<std::size_t>(t)]) {
        if (std::find(nodes.begin(), nodes.end(), w) == nodes.end()) frontier.push_back(w);
      }
    }
    sets.push_back(std::move(nodes));
  }
  return intersection_graph(sets, k);
}

Graph random_path_graph_positive(int k, std::uint64_t seed) {
  k = std::max(k, 1);
  Rng rng(seed);
  auto parent = random_host(k, k, rng);
  auto depth = depths(parent);
  const int n = vertex_count_for(k, rng);
  std::vector<std::vector<int>> sets;
  for (int t = 0; t < k; ++t) sets.push_back({t});
  for (int v = 0; v < n; ++v) {
    sets.push_back(host_path(rng.uniform(0, k - 1), rng.uniform(0, k - 1), parent, depth));
  }
  return intersection_graph(sets, k);
}

Graph random_interval_graph(int k, std::uint64_t seed) {
  k = std::max(k, 1);
  Rng rng(seed);
  const int n = vertex_count_for(k, rng);
  std::vector<std::vector<int>> sets;
  for (int v = 0; v < n; ++v) {
    int a = rng.uniform(0, k - 1);
    int b = rng.uniform(0, k - 1);
    std::vector<int> nodes;
    for (int t = std::min(a, b); t <= std::max(a, b); ++t) nodes.push_back(t);
    sets.push_back(std::move(nodes));
  }
  return intersection_graph(sets, k);
}

Graph random_rooted_path_positive(int k, std::uint64_t seed) {
  k = std::max(k, 1);
  Rng rng(seed);
  auto parent = random_host(k, k, rng);
  auto depth = depths(parent);
  const int n = vertex_count_for(k, rng);
  std::vector<std::vector<int>> sets;
  for (int v = 0; v < n; ++v) {
    int low = rng.uniform(0, k - 1);
    int up = rng.uniform(0, depth[static_cast<std::size_t>(low)]);
    std::vector<int> nodes{low};
    for (int s = 0; s < up; ++s) nodes.push_back(parent[static_cast<std::size_t>(nodes.back())]);
    sets.push_back(std::move(nodes));
  }
  return intersection_graph(sets, k);
}

Graph random_path_graph_sized(int n, int max_length, std::uint64_t seed, bool rooted) {
  n = std::max(n, 1);
  max_length = std::max(max_length, 1);
  Rng rng(seed);
  const int k = std::max(1, n / 2);
  auto parent = random_host(k, 3, rng);
  auto adj = host_adjacency(parent);
  std::vector<std::vector<int>> sets;
  for (int v = 0; v < n; ++v) {
    // A walk that never turns back is a path in a tree.
    std::vector<int> nodes{rng.uniform(0, k - 1)};
    const int length = rng.uniform(1, max_length);
    int prev = -1;
    while (static_cast<int>(nodes.size()) < length) {
      const auto& nb = adj[static_cast<std::size_t>(nodes.back())];
      std::vector<int> options;
      for (int w : nb) {
        if (w != prev && (!rooted || w < nodes.back())) options.push_back(w);
      }
      if (options.empty()) break;
      prev = nodes.back();
      nodes.push_back(options[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(options.size()) - 1))]);
    }
    sets.push_back(std::move(nodes));
  }
  return intersection_graph(sets, k);
}

Graph random_fuzz_instance(int max_cliques, bool directed, std::uint64_t s) {
  max_cliques = std::max(max_cliques, 1);
  // Negatives need several cliques, so most instances sit near the limit.
  int k = 1 + static_cast<int>(s % static_cast<std::uint64_t>(max_cliques));
  if ((s >> 24) % 4 != 0) k = std::max(1, max_cliques - static_cast<int>((s >> 4) % 3));
  const int width = 1 + static_cast<int>((s >> 8) % static_cast<std::uint64_t>(k + 1));
  // Path graphs are all positive for the undirected question but not for
  // the directed one.
  if (directed && (s >> 16) % 2 == 1) return random_path_graph_positive(k, s);
  return random_chordal(k, width, s);
}

}  // namespace pathgraph
