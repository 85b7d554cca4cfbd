#include "pathgraph/partition.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace pathgraph {

namespace {

const Component& comp_of(const SeparationContext& ctx, int id) {
  return ctx.components[static_cast<std::size_t>(id)];
}

}  // namespace

std::vector<int> processing_order(const SeparationContext& ctx, std::vector<int> ids) {
  auto key = [&](int id) {
    const auto& c = comp_of(ctx, id);
    return std::make_tuple(-static_cast<long>(c.attachment.size()), !c.flat(), id);
  };
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return key(a) < key(b); });
  return ids;
}

PartitionState build_partition(const SeparationContext& ctx) {
  const auto s = ctx.components.size();
  PartitionState ps;
  ps.upper_index.assign(s, 0);
  ps.u_of_v.assign(ctx.separator.size(), {0, 0});
  ps.home.assign(s, SetLabel{});
  ps.order = processing_order(ctx, ctx.representatives());

  auto push_upper = [&](int pos, int k) {
    auto& slot = ps.u_of_v[static_cast<std::size_t>(pos)];
    if (slot[0] == 0) {
      slot[0] = k;
    } else if (slot[1] == 0) {
      slot[1] = k;
    } else {
      reject(RejectReason::FullAntipodalTriangle, "upper-set",
             "three upper components share a separator vertex",
             {ctx.separator[static_cast<std::size_t>(pos)]});
    }
  };

  // Dominators come first, so a component is upper iff no upper found so
  // far dominates it; any dominator holds W[0].
  std::vector<int> found;  // component ids, discovery order
  std::vector<int> slot_of(s, 0);
  for (int id : ps.order) {
    const auto& c = comp_of(ctx, id);
    if (c.attachment.empty()) {
      throw InternalError("component with empty attachment in a connected graph");
    }
    bool dominated = false;
    for (int k : ps.u_of_v[static_cast<std::size_t>(ctx.position(c.attachment.front()))]) {
      if (k != 0 && dominated_by(c, comp_of(ctx, found[static_cast<std::size_t>(k - 1)]))) {
        dominated = true;
      }
    }
    if (dominated) continue;
    found.push_back(id);
    slot_of[static_cast<std::size_t>(id)] = static_cast<int>(found.size());
    for (Vertex v : c.attachment) push_upper(ctx.position(v), static_cast<int>(found.size()));
  }

  // Renumber uppers by component id.
  ps.uppers = found;
  std::sort(ps.uppers.begin(), ps.uppers.end());
  std::vector<int> renumber(found.size() + 1, 0);
  for (std::size_t k = 0; k < ps.uppers.size(); ++k) {
    ps.upper_index[static_cast<std::size_t>(ps.uppers[k])] = static_cast<int>(k + 1);
    renumber[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(ps.uppers[k])])] =
        static_cast<int>(k + 1);
  }
  for (auto& slot : ps.u_of_v) {
    for (int& k : slot) k = renumber[static_cast<std::size_t>(k)];
    if (slot[0] > slot[1] && slot[1] != 0) std::swap(slot[0], slot[1]);
  }

  for (int id : ps.order) {
    const auto& c = comp_of(ctx, id);
    SetLabel label;
    if (int k = ps.upper_index[static_cast<std::size_t>(id)]; k != 0) {
      label = {k, 0};
    } else {
      std::vector<int> over;
      for (int k2 : ps.u_of_v[static_cast<std::size_t>(ctx.position(c.attachment.front()))]) {
        if (k2 != 0 && dominated_by(c, comp_of(ctx, ps.upper(k2)))) over.push_back(k2);
      }
      if (over.empty()) {
        reject(RejectReason::PartitionFailure, "partition",
               component_name(id) + " is dominated by no upper component");
      }
      if (over.size() == 1) {
        label = {over[0], 0};
      } else {
        label = {std::min(over[0], over[1]), std::max(over[0], over[1])};
      }
    }
    ps.home[static_cast<std::size_t>(id)] = label;
    ps.sets[label].push_back(id);
  }
  return ps;
}

std::vector<std::vector<int>> AntipodalDag::ancestors() const {
  std::vector<std::vector<int>> out(nodes.size());
  // Parents always precede children.
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::vector<int> acc;
    for (int p : parents[k]) {
      acc.push_back(p);
      acc.insert(acc.end(), out[static_cast<std::size_t>(p)].begin(), out[static_cast<std::size_t>(p)].end());
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    out[k] = std::move(acc);
  }
  return out;
}

AntipodalDag build_antipodal_dag(const SeparationContext& ctx, std::span<const int> members) {
  AntipodalDag dag;
  dag.nodes.assign(members.begin(), members.end());
  const auto d = dag.nodes.size();
  dag.parents.assign(d, {});

  // frontier[v]: the minimal nodes holding v, at most two.
  std::unordered_map<Vertex, std::array<int, 2>> frontier;
  // Memo of "node dominates the node being inserted", stamped by insertion.
  std::vector<int> stamp(d, -1);
  std::vector<char> memo(d, 0);
  std::vector<int> visited(d, -1);

  auto triangle = [&](int k, Vertex v) {
    reject(RejectReason::FullAntipodalTriangle, "dag",
           "three pairwise antipodal components meet " + component_name(dag.nodes[static_cast<std::size_t>(k)]) +
               " at a separator vertex",
           {v});
  };

  for (std::size_t k = 0; k < d; ++k) {
    const auto& e = comp_of(ctx, dag.nodes[k]);
    const int ki = static_cast<int>(k);
    auto dominates = [&](int x) {
      auto xi = static_cast<std::size_t>(x);
      if (stamp[xi] != ki) {
        stamp[xi] = ki;
        memo[xi] = dominated_by(e, comp_of(ctx, dag.nodes[xi])) ? 1 : 0;
      }
      return memo[xi] != 0;
    };

    // Minimal dominators: search upward from the frontier of W[0] through
    // non-dominators.
    const Vertex v0 = e.attachment.front();
    std::vector<int> stack;
    if (auto it = frontier.find(v0); it != frontier.end()) {
      for (int x : it->second) {
        if (x >= 0) stack.push_back(x);
      }
    }
    std::vector<int> found;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (visited[static_cast<std::size_t>(x)] == ki) continue;
      visited[static_cast<std::size_t>(x)] = ki;
      if (dominates(x)) {
        found.push_back(x);
      } else {
        for (int p : dag.parents[static_cast<std::size_t>(x)]) stack.push_back(p);
      }
    }
    std::vector<int> minimal;
    for (int x : found) {
      bool above_other = std::any_of(found.begin(), found.end(), [&](int y) {
        return y != x && dominated_by(comp_of(ctx, dag.nodes[static_cast<std::size_t>(y)]),
                                      comp_of(ctx, dag.nodes[static_cast<std::size_t>(x)]));
      });
      if (!above_other) minimal.push_back(x);
    }
    std::sort(minimal.begin(), minimal.end());
    if (minimal.size() > 2) triangle(ki, v0);
    dag.parents[k] = minimal;

    for (Vertex v : e.attachment) {
      auto [it, fresh] = frontier.try_emplace(v, std::array<int, 2>{-1, -1});
      auto& m = it->second;
      if (fresh || m[0] < 0) {
        m = {ki, -1};
      } else if (m[1] < 0) {
        int x = m[0];
        if (dominates(x)) {
          m = {ki, -1};
        } else {
          // Everything non-dominating above x is a chain; e differs from all.
          int cur = x;
          while (true) {
            dag.must_differ.emplace_back(cur, ki);
            int next = -1;
            for (int p : dag.parents[static_cast<std::size_t>(cur)]) {
              if (dominates(p)) continue;
              if (next >= 0) triangle(ki, v);
              next = p;
            }
            if (next < 0) break;
            cur = next;
          }
          m = {x, ki};
        }
      } else {
        bool dx = dominates(m[0]);
        bool dy = dominates(m[1]);
        if (dx && dy) {
          m = {ki, -1};
        } else if (!dx && !dy) {
          triangle(ki, v);
        } else {
          int other = dx ? m[1] : m[0];
          dag.must_differ.emplace_back(other, ki);
          m = {other, ki};
        }
      }
    }
  }
  std::sort(dag.must_differ.begin(), dag.must_differ.end());
  dag.must_differ.erase(std::unique(dag.must_differ.begin(), dag.must_differ.end()), dag.must_differ.end());
  return dag;
}

void extend_coloring(const AntipodalDag& dag, std::array<int, 2> palette, Coloring& f,
                     std::string_view stage) {
  const auto d = dag.nodes.size();
  std::vector<std::vector<int>> adj(d);
  for (auto [a, b] : dag.must_differ) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  auto color = [&](int k) -> int& { return f[static_cast<std::size_t>(dag.nodes[static_cast<std::size_t>(k)])]; };
  auto opposite = [&](int c) {
    if (c == palette[0]) return palette[1];
    if (c == palette[1]) return palette[0];
    throw InternalError("color outside the block palette");
  };

  std::vector<char> done(d, 0);
  std::vector<int> queue;
  auto flood = [&](int start) {
    queue.assign(1, start);
    done[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      int want = opposite(color(x));
      for (int y : adj[static_cast<std::size_t>(x)]) {
        int& cy = color(y);
        if (cy == kUnset) {
          cy = want;
        } else if (cy != want) {
          reject(RejectReason::ColoringConflict, std::string(stage),
                 component_name(dag.nodes[static_cast<std::size_t>(x)]) + " and " +
                     component_name(dag.nodes[static_cast<std::size_t>(y)]) +
                     " are antipodal but forced to the same color");
        }
        if (!done[static_cast<std::size_t>(y)]) {
          done[static_cast<std::size_t>(y)] = 1;
          queue.push_back(y);
        }
      }
    }
  };

  for (std::size_t k = 0; k < d; ++k) {
    if (!done[k] && color(static_cast<int>(k)) != kUnset) flood(static_cast<int>(k));
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (done[k]) continue;
    color(static_cast<int>(k)) = palette[0];
    flood(static_cast<int>(k));
  }
}

LowestMap compute_lowest_colored(const SeparationContext& ctx, std::span<const int> members,
                                 const Coloring& f, int target) {
  // Same-colored members sharing v form a chain; the last one in processing
  // order is the lowest.
  LowestMap lowest;
  for (int id : members) {
    if (f[static_cast<std::size_t>(id)] != target) continue;
    for (Vertex v : comp_of(ctx, id).attachment) lowest[v] = id;
  }
  return lowest;
}

bool antipodal_to_block(const SeparationContext& ctx, int gamma, const LowestMap& lowest) {
  const auto& g = comp_of(ctx, gamma);
  int last = -1;
  for (Vertex v : g.attachment) {
    auto it = lowest.find(v);
    if (it == lowest.end() || it->second == last) continue;
    last = it->second;
    if (!dominated_by(g, comp_of(ctx, it->second))) return true;
  }
  return false;
}

Coloring lift_quotient_coloring(const SeparationContext& ctx, const Coloring& f) {
  Coloring out(ctx.components.size(), kUnset);
  for (std::size_t id = 0; id < out.size(); ++id) {
    out[id] = f[static_cast<std::size_t>(ctx.representative[id])];
  }
  return out;
}

CliquePathTree assemble_clique_path_tree(const SeparationContext& ctx, const Coloring& f,
                                         bool directed) {
  CliquePathTree out;
  out.cliques.push_back(ctx.separator);
  const auto s = ctx.components.size();

  // Global node of each local node; c_node maps to 0.
  std::vector<std::vector<int>> global(s);
  for (std::size_t id = 0; id < s; ++id) {
    const auto& c = ctx.components[id];
    global[id].assign(c.cliques.size(), 0);
    for (std::size_t t = 0; t < c.cliques.size(); ++t) {
      if (static_cast<int>(t) == c.c_node) continue;
      global[id][t] = static_cast<int>(out.cliques.size());
      out.cliques.push_back(c.cliques[t]);
    }
  }
  out.tree.node_count = static_cast<int>(out.cliques.size());
  out.tree.directed = directed;

  std::vector<int> all(s);
  for (std::size_t id = 0; id < s; ++id) all[id] = static_cast<int>(id);
  std::map<std::pair<int, Vertex>, int> last_with;  // (color, v) -> component

  for (int id : processing_order(ctx, all)) {
    const auto& c = comp_of(ctx, id);
    const int color = f[static_cast<std::size_t>(id)];
    if (color == kUnset) throw InternalError("assembly with an uncolored component");
    const Vertex v0 = c.attachment.front();

    int attach = 0;
    if (auto it = last_with.find({color, v0}); it != last_with.end()) {
      const auto& parent = comp_of(ctx, it->second);
      if (!dominated_by(c, parent)) {
        throw InternalError("same-colored components sharing a vertex are not nested");
      }
      attach = global[static_cast<std::size_t>(it->second)][static_cast<std::size_t>(parent.furthest_clique(v0))];
    }
    for (Vertex v : c.attachment) last_with[{color, v}] = id;

    // Direction of the C - n_node dart inside the component tree.
    bool reverse = false;
    if (directed) {
      bool toward_c = std::any_of(c.tree.edges.begin(), c.tree.edges.end(), [&](const TreeEdge& e) {
        return e.from == c.n_node && e.to == c.c_node;
      });
      reverse = toward_c != (color == 0);
    }
    for (auto e : c.tree.edges) {
      if (e.from == c.c_node || e.to == c.c_node) continue;
      if (reverse) std::swap(e.from, e.to);
      out.tree.edges.push_back({global[static_cast<std::size_t>(id)][static_cast<std::size_t>(e.from)],
                                global[static_cast<std::size_t>(id)][static_cast<std::size_t>(e.to)]});
    }
    int n = global[static_cast<std::size_t>(id)][static_cast<std::size_t>(c.n_node)];
    if (directed && color == 1) {
      out.tree.edges.push_back({attach, n});
    } else {
      out.tree.edges.push_back({n, attach});
    }
  }
  return out;
}

}  // namespace pathgraph
