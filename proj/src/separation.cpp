#include "pathgraph/separation.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pathgraph {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Unattached: return "unattached";
    case Relation::LeftDominates: return "left-dominates";
    case Relation::RightDominates: return "right-dominates";
    case Relation::Equivalent: return "equivalent";
    case Relation::Antipodal: return "antipodal";
  }
  return "?";
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::NonChordal: return "non-chordal";
    case RejectReason::FullAntipodalTriangle: return "full antipodal triangle";
    case RejectReason::PartitionFailure: return "partition failure";
    case RejectReason::ColoringConflict: return "2-coloring conflict";
    case RejectReason::CrossPairConflict: return "cross-pair conflict";
    case RejectReason::UpperNotBipartite: return "upper antipodality graph not bipartite";
    case RejectReason::UpperColorConflict: return "conflicting upper neighbours";
  }
  return "?";
}

int Component::furthest_clique(Vertex v) const {
  auto it = std::lower_bound(attachment.begin(), attachment.end(), v);
  if (it == attachment.end() || *it != v) return kAbsent;
  return furthest[static_cast<std::size_t>(it - attachment.begin())];
}

bool Component::flat() const {
  return std::adjacent_find(furthest.begin(), furthest.end(), std::not_equal_to<>()) == furthest.end();
}

std::vector<int> SeparationContext::representatives() const {
  std::vector<int> reps;
  reps.reserve(classes.size());
  for (const auto& cls : classes) reps.push_back(cls.front());
  std::sort(reps.begin(), reps.end());
  return reps;
}

int SeparationContext::position(Vertex v) const {
  auto it = std::lower_bound(separator.begin(), separator.end(), v);
  if (it == separator.end() || *it != v) return -1;
  return static_cast<int>(it - separator.begin());
}

std::optional<int> find_clique_separator(const CliqueSet& cs, const CliqueTree& t) {
  const int p = cs.size();
  if (p <= 2) return std::nullopt;
  if (t.node_count != p || !t.is_tree()) throw ContractError("clique tree does not match clique set");

  auto adj = t.adjacency();
  std::vector<int> parent(static_cast<std::size_t>(p), -1);
  std::vector<int> order{0};
  order.reserve(static_cast<std::size_t>(p));
  std::vector<char> seen(static_cast<std::size_t>(p), 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : adj[static_cast<std::size_t>(order[head])]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = order[head];
      order.push_back(w);
    }
  }
  std::vector<int> size(static_cast<std::size_t>(p), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int par = parent[static_cast<std::size_t>(*it)];
    if (par >= 0) size[static_cast<std::size_t>(par)] += size[static_cast<std::size_t>(*it)];
  }

  int best = -1;
  int best_branch = p + 1;
  for (int x = 0; x < p; ++x) {
    if (adj[static_cast<std::size_t>(x)].size() < 2) continue;
    int largest = p - size[static_cast<std::size_t>(x)];
    for (int w : adj[static_cast<std::size_t>(x)]) {
      if (w != parent[static_cast<std::size_t>(x)]) largest = std::max(largest, size[static_cast<std::size_t>(w)]);
    }
    if (largest < best_branch) {
      best_branch = largest;
      best = x;
    }
  }
  return best;
}

SeparationContext split(const Graph& g, const VertexSet& separator) {
  const int n = g.vertex_count();
  std::vector<char> in_sep(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < separator.size(); ++i) {
    Vertex v = separator[i];
    if (v < 0 || v >= n) throw ContractError("separator vertex out of range");
    if (i > 0 && separator[i - 1] >= v) throw ContractError("separator must be sorted and duplicate-free");
    in_sep[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < separator.size(); ++i) {
    for (std::size_t j = i + 1; j < separator.size(); ++j) {
      if (!g.adjacent(separator[i], separator[j])) throw ContractError("separator is not a clique");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_sep[static_cast<std::size_t>(v)]) continue;
    auto nb = g.neighbors(v);
    auto hits = std::count_if(nb.begin(), nb.end(), [&](Vertex w) { return in_sep[static_cast<std::size_t>(w)] != 0; });
    if (static_cast<std::size_t>(hits) == separator.size()) throw ContractError("separator is not a maximal clique");
  }

  SeparationContext ctx;
  ctx.separator = separator;
  std::vector<char> seen(in_sep);
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
    Component comp;
    comp.id = static_cast<int>(ctx.components.size());
    comp.private_set = queue;
    std::sort(comp.private_set.begin(), comp.private_set.end());
    std::merge(separator.begin(), separator.end(), comp.private_set.begin(), comp.private_set.end(),
               std::back_inserter(comp.ambient));
    ctx.components.push_back(std::move(comp));
  }
  if (ctx.components.size() < 2) throw ContractError("clique does not separate the graph");
  return ctx;
}

void attach_tree(Component& comp, const VertexSet& separator, std::vector<VertexSet> cliques,
                 CliqueTree tree) {
  if (static_cast<int>(cliques.size()) != tree.node_count) {
    throw ContractError("tree does not match the clique list");
  }
  for (auto& k : cliques) std::sort(k.begin(), k.end());
  auto it = std::find(cliques.begin(), cliques.end(), separator);
  if (it == cliques.end()) throw InternalError("separator is not a clique of its component");
  comp.c_node = static_cast<int>(it - cliques.begin());

  comp.n_node = -1;
  int degree = 0;
  for (auto e : tree.edges) {
    if (e.from == comp.c_node) {
      ++degree;
      comp.n_node = e.to;
    } else if (e.to == comp.c_node) {
      ++degree;
      comp.n_node = e.from;
    }
  }
  if (degree != 1) {
    throw InternalError("separator clique is not a leaf of its component tree (degree " +
                        std::to_string(degree) + ")");
  }
  comp.cliques = std::move(cliques);
  comp.tree = std::move(tree);
  comp.attachment = set_intersection(comp.cliques[static_cast<std::size_t>(comp.n_node)], separator);
  comp.furthest.assign(comp.attachment.size(), kAbsent);
}

void compute_F_table(Component& comp) {
  comp.furthest.assign(comp.attachment.size(), kAbsent);
  auto adj = comp.tree.adjacency();
  std::vector<char> seen(static_cast<std::size_t>(comp.tree.node_count), 0);
  seen[static_cast<std::size_t>(comp.c_node)] = 1;
  seen[static_cast<std::size_t>(comp.n_node)] = 1;
  std::vector<int> queue{comp.n_node};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int node = queue[head];
    const VertexSet& k = comp.cliques[static_cast<std::size_t>(node)];
    // Only W can reach beyond C: a vertex of C must pass through n_node.
    for (std::size_t i = 0; i < comp.attachment.size(); ++i) {
      if (contains(k, comp.attachment[i])) comp.furthest[i] = node;
    }
    for (int w : adj[static_cast<std::size_t>(node)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
}

bool dominated_by(const Component& lower, const Component& upper) {
  if (lower.attachment.empty()) return false;
  int node = kAbsent;
  for (Vertex v : lower.attachment) {
    int f = upper.furthest_clique(v);
    if (f == kAbsent) return false;
    if (node == kAbsent) {
      node = f;
    } else if (f != node) {
      return false;
    }
  }
  return true;
}

Relation compare(const Component& a, const Component& b) {
  if (!intersects(a.attachment, b.attachment)) return Relation::Unattached;
  bool b_le_a = dominated_by(b, a);
  bool a_le_b = dominated_by(a, b);
  if (b_le_a && a_le_b) return Relation::Equivalent;
  if (b_le_a) return Relation::LeftDominates;
  if (a_le_b) return Relation::RightDominates;
  return Relation::Antipodal;
}

void quotient(SeparationContext& ctx) {
  const auto s = ctx.components.size();
  ctx.classes.clear();
  ctx.representative.assign(s, -1);

  // Bucket by |W| (at most |C|), then group equal W inside a bucket.
  std::vector<std::vector<int>> buckets(ctx.separator.size() + 1);
  for (const auto& c : ctx.components) buckets[c.attachment.size()].push_back(c.id);

  for (auto bucket = buckets.rbegin(); bucket != buckets.rend(); ++bucket) {
    std::map<VertexSet, std::vector<int>> groups;
    for (int id : *bucket) groups[ctx.components[static_cast<std::size_t>(id)].attachment].push_back(id);
    for (auto& [w, ids] : groups) {
      std::vector<int> flat_class;
      std::vector<int> non_flat;
      for (int id : ids) {
        if (ctx.components[static_cast<std::size_t>(id)].flat()) {
          flat_class.push_back(id);
        } else {
          non_flat.push_back(id);
        }
      }
      if (non_flat.size() >= 3 && !w.empty()) {
        reject(RejectReason::FullAntipodalTriangle, "quotient",
               "three pairwise antipodal components share their attachment set");
      }
      if (!flat_class.empty()) ctx.classes.push_back(flat_class);
      for (int id : non_flat) ctx.classes.push_back({id});
    }
  }
  std::sort(ctx.classes.begin(), ctx.classes.end());
  for (const auto& cls : ctx.classes) {
    for (int id : cls) ctx.representative[static_cast<std::size_t>(id)] = cls.front();
  }
}

}  // namespace pathgraph
