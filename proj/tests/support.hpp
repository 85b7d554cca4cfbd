#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"

namespace pathgraph::test {

inline std::string fixture_path(const std::string& name) { return std::string(PATHGRAPH_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline LabeledGraph load_fixture(const std::string& name) { return parse_graph(read_fixture(name)); }

/// Dense ids for a list of input labels.
inline VertexSet dense(const LabeledGraph& g, std::initializer_list<std::int64_t> labels) {
  VertexSet out;
  for (auto l : labels) {
    auto it = std::find(g.labels.begin(), g.labels.end(), l);
    out.push_back(static_cast<Vertex>(it - g.labels.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::int64_t> relabel(const LabeledGraph& g, const VertexSet& s) {
  std::vector<std::int64_t> out;
  for (Vertex v : s) out.push_back(g.labels[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::vector<std::int64_t>> labeled_cliques(const LabeledGraph& g, const std::vector<VertexSet>& cs) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& k : cs) out.insert(relabel(g, k));
  return out;
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) e.emplace_back(std::min(a, (a + 1) % n), std::max(a, (a + 1) % n));
  return Graph::from_edges(n, e);
}

}  // namespace pathgraph::test
