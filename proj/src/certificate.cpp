#include "pathgraph/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <regex>
#include <sstream>
#include <unordered_map>

namespace pathgraph {

namespace {

std::int64_t label_of(Vertex v, std::span<const std::int64_t> labels) {
  return labels.empty() ? v : labels[static_cast<std::size_t>(v)];
}

std::vector<std::int64_t> labeled(const VertexSet& k, std::span<const std::int64_t> labels) {
  std::vector<std::int64_t> out;
  for (Vertex v : k) out.push_back(label_of(v, labels));
  std::sort(out.begin(), out.end());
  return out;
}

class LabelIndex {
 public:
  explicit LabelIndex(const LabeledGraph& g) {
    if (g.labels.empty()) {
      for (Vertex v = 0; v < g.graph.vertex_count(); ++v) index_.emplace(v, v);
    } else {
      for (std::size_t v = 0; v < g.labels.size(); ++v) index_.emplace(g.labels[v], static_cast<Vertex>(v));
    }
  }

  Vertex operator()(std::int64_t label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw ContractError("certificate mentions vertex " + std::to_string(label) + " not in the graph");
    return it->second;
  }

 private:
  std::unordered_map<std::int64_t, Vertex> index_;
};

CliquePathTree from_json(std::string_view text, const LabeledGraph& g) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON certificate: ") + e.what());
  }
  LabelIndex index(g);
  CliquePathTree cert;
  try {
    for (const auto& k : doc.at("cliques")) {
      VertexSet members;
      for (const auto& x : k) members.push_back(index(x.get<std::int64_t>()));
      std::sort(members.begin(), members.end());
      cert.cliques.push_back(std::move(members));
    }
    cert.tree.directed = doc.value("directed", false);
    const auto& list = cert.tree.directed && doc.contains("darts") ? doc.at("darts") : doc.at("edges");
    for (const auto& e : list) cert.tree.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  }
  cert.tree.node_count = static_cast<int>(cert.cliques.size());
  return cert;
}

CliquePathTree from_dot(std::string_view text, const LabeledGraph& g) {
  const std::string s(text);
  LabelIndex index(g);
  CliquePathTree cert;
  cert.tree.directed = s.find("digraph") != std::string::npos;

  std::unordered_map<std::string, int> node_id;
  static const std::regex node_re(R"re((\w+)\s*\[\s*label\s*=\s*"\{([^}]*)\}"\s*\])re");
  for (std::sregex_iterator it(s.begin(), s.end(), node_re), end; it != end; ++it) {
    VertexSet members;
    std::string body = (*it)[2];
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::int64_t x;
    while (in >> x) members.push_back(index(x));
    if (!in.eof()) throw ParseError(0, "bad clique label for node " + (*it)[1].str());
    std::sort(members.begin(), members.end());
    node_id.emplace((*it)[1].str(), static_cast<int>(cert.cliques.size()));
    cert.cliques.push_back(std::move(members));
  }
  if (cert.cliques.empty() && s.find("graph") == std::string::npos) throw ParseError(0, "not a DOT or JSON certificate");

  static const std::regex edge_re(R"((\w+)\s*(--|->)\s*(\w+))");
  for (std::sregex_iterator it(s.begin(), s.end(), edge_re), end; it != end; ++it) {
    auto a = node_id.find((*it)[1].str());
    auto b = node_id.find((*it)[3].str());
    if (a == node_id.end() || b == node_id.end()) throw ParseError(0, "edge names an undeclared node");
    cert.tree.edges.push_back({a->second, b->second});
  }
  cert.tree.node_count = static_cast<int>(cert.cliques.size());
  return cert;
}

}  // namespace

std::string certificate_to_json(const CliquePathTree& cert, std::span<const std::int64_t> labels) {
  nlohmann::json doc;
  doc["cliques"] = nlohmann::json::array();
  for (const auto& k : cert.cliques) doc["cliques"].push_back(labeled(k, labels));
  doc["edges"] = nlohmann::json::array();
  for (auto e : cert.tree.edges) doc["edges"].push_back({e.from, e.to});
  doc["directed"] = cert.tree.directed;
  if (cert.tree.directed) doc["darts"] = doc["edges"];
  return doc.dump() + "\n";
}

std::string certificate_to_dot(const CliquePathTree& cert, std::span<const std::int64_t> labels) {
  std::ostringstream out;
  const bool d = cert.tree.directed;
  out << (d ? "digraph" : "graph") << " clique_path_tree {\n";
  for (std::size_t k = 0; k < cert.cliques.size(); ++k) {
    out << "  n" << k << " [label=\"{";
    auto members = labeled(cert.cliques[k], labels);
    for (std::size_t j = 0; j < members.size(); ++j) out << (j ? "," : "") << members[j];
    out << "}\"];\n";
  }
  for (auto e : cert.tree.edges) out << "  n" << e.from << (d ? " -> " : " -- ") << "n" << e.to << ";\n";
  out << "}\n";
  return out.str();
}

CliquePathTree parse_certificate(std::string_view text, const LabeledGraph& g) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return from_json(text, g);
  return from_dot(text, g);
}

}  // namespace pathgraph
