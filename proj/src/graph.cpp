#include "pathgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace pathgraph {

Graph::Graph(int vertex_count) : adj_(static_cast<std::size_t>(vertex_count)) {}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw ContractError("edge endpoint out of range");
    }
    if (u == v) throw ContractError("loop edge on vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw ContractError("parallel edge");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::int64_t parse_token(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  std::unordered_map<std::int64_t, Vertex> ids;
  std::vector<std::int64_t> labels;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;

  auto id_of = [&](std::int64_t label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex tokens, got " + std::to_string(tokens.size()));
    }
    std::int64_t a = parse_token(tokens[0], line_no);
    std::int64_t b = parse_token(tokens[1], line_no);
    if (a == b) throw ParseError(line_no, "loop edge on vertex " + std::to_string(a));
    Vertex u = id_of(a);
    Vertex v = id_of(b);
    edges.emplace_back(u, v);
    edge_line.push_back(line_no);
    if (end == text.size()) break;
  }

  // Duplicate detection with the offending line.
  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    auto lo = static_cast<std::uint64_t>(std::min(u, v));
    auto hi = static_cast<std::uint64_t>(std::max(u, v));
    auto [it, inserted] = seen.try_emplace((lo << 32) | hi, edge_line[k]);
    if (!inserted) {
      throw ParseError(edge_line[k], "duplicate edge (first seen on line " +
                                         std::to_string(it->second) + ")");
    }
  }

  LabeledGraph out;
  out.graph = Graph::from_edges(static_cast<int>(labels.size()), edges);
  out.labels = std::move(labels);
  return out;
}

std::string serialize_graph(const Graph& g, std::span<const std::int64_t> labels) {
  std::ostringstream os;
  auto name = [&](Vertex v) -> std::int64_t {
    return labels.empty() ? v : labels[static_cast<std::size_t>(v)];
  };
  // Lead with one edge introducing each vertex in id order, so parsing the
  // output assigns the same dense ids. Graphs that admit no such order
  // (isolated vertices, say) keep the plain sorted list after the prefix.
  std::vector<Edge> lead;
  for (Vertex x = 0; x < g.vertex_count();) {
    auto nb = g.neighbors(x);
    if (!nb.empty() && nb.front() < x) {
      lead.emplace_back(nb.front(), x);
      x += 1;
    } else if (x + 1 < g.vertex_count() && g.adjacent(x, x + 1)) {
      lead.emplace_back(x, x + 1);
      x += 2;
    } else {
      lead.clear();
      break;
    }
  }
  std::vector<Edge> sorted_lead = lead;
  std::sort(sorted_lead.begin(), sorted_lead.end());
  for (auto [u, v] : lead) os << name(u) << ' ' << name(v) << '\n';
  for (auto e : g.edges()) {
    if (!std::binary_search(sorted_lead.begin(), sorted_lead.end(), e)) os << name(e.first) << ' ' << name(e.second) << '\n';
  }
  return os.str();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Vertex v = s[i];
    if (v < 0 || v >= g.vertex_count()) throw ContractError("vertex id out of range");
    if (new_id[static_cast<std::size_t>(v)] != -1) throw ContractError("duplicate vertex in subset");
    new_id[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      Vertex j = new_id[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<int>(s.size()), edges);
  out.to_parent.assign(s.begin(), s.end());
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    queue.assign(1, s);
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  const VertexSet& small = a.size() <= b.size() ? a : b;
  const VertexSet& large = a.size() <= b.size() ? b : a;
  return std::any_of(small.begin(), small.end(), [&](Vertex v) { return contains(large, v); });
}

}  // namespace pathgraph
