#pragma once

#include <optional>
#include <vector>

#include "pathgraph/graph.hpp"

namespace pathgraph {

/// Permutation of the vertices; element 0 is eliminated first.
using EliminationOrder = std::vector<Vertex>;

/// Maximum cardinality search. Returns the reversed visit order, which is a
/// perfect elimination order iff the graph is chordal. Ties go to the
/// smallest vertex id.
EliminationOrder mcs_order(const Graph& g);

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order);

bool is_chordal(const Graph& g);

/// The maximal cliques of a graph plus, for every vertex, the ids of the
/// cliques that contain it.
struct CliqueSet {
  std::vector<VertexSet> cliques;
  std::vector<std::vector<int>> containing;

  int size() const noexcept { return static_cast<int>(cliques.size()); }
  const VertexSet& operator[](int id) const { return cliques[static_cast<std::size_t>(id)]; }

  /// Builds the membership index; each clique is sorted in place.
  static CliqueSet from_cliques(int vertex_count, std::vector<VertexSet> cliques);

  /// Index of the clique equal to `s`, if any.
  std::optional<int> find(const VertexSet& s) const;
};

struct TreeEdge {
  int from = 0;
  int to = 0;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// A tree over clique ids 0..node_count-1. When `directed` is set every edge
/// is a dart `from -> to`.
struct CliqueTree {
  int node_count = 0;
  std::vector<TreeEdge> edges;
  bool directed = false;

  std::vector<std::vector<int>> adjacency() const;
  bool is_tree() const;
  /// Reverses every dart.
  void reverse();
};

/// A certificate: cliques plus a tree over their indices.
struct CliquePathTree {
  std::vector<VertexSet> cliques;
  CliqueTree tree;
};

/// Maximal cliques from a perfect elimination order: each vertex together
/// with its later neighbours, dropping the candidates that are contained in
/// another. Cliques are returned sorted lexicographically.
/// Throws ContractError when `order` is not a perfect elimination order.
CliqueSet maximal_cliques(const Graph& g, const EliminationOrder& order);

/// Maximum-weight spanning tree of the clique intersection graph (weight
/// |K ∩ K'|), Kruskal with ties broken by the smaller clique-id pair.
/// Pieces of a disconnected graph are joined to node 0 by weight-0 edges.
CliqueTree clique_tree(const Graph& g, const CliqueSet& cs);

}  // namespace pathgraph
