#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathgraph {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a documented precondition of an operation does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Builds a graph from an edge list. Throws ContractError on loops,
  /// parallel edges or out-of-range ids.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// A graph read from text, together with the original integer label of each
/// dense vertex id.
struct LabeledGraph {
  Graph graph;
  std::vector<std::int64_t> labels;
};

/// Parses the edge-list format: one edge per line as two non-negative
/// integers; `#` lines and blank lines are skipped. Vertex ids are assigned
/// densely in order of first appearance.
LabeledGraph parse_graph(std::string_view text);

/// Writes the edge list using `labels` (or the dense ids when empty). For a
/// graph returned by parse_graph, parsing the output gives back the same
/// graph and labels.
std::string serialize_graph(const Graph& g, std::span<const std::int64_t> labels = {});

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  ///< new id -> old id
};

/// G(s). New ids follow the order of `s`.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool contains(const VertexSet& s, Vertex v);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);

}  // namespace pathgraph
