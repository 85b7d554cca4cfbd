#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>

#include "pathgraph/oracle.hpp"
#include "pathgraph/recognition.hpp"

namespace pathgraph {

bool InvariantReport::ok() const noexcept {
  return attachment_bound_violations == 0 && upper_overflow_violations == 0 && leaf_path_violations == 0 &&
         dag_violations == 0 && palette_violations == 0 && antipodal_violations == 0 &&
         monotone_violations == 0 && early_color_violations == 0 && lowest_violations == 0 &&
         cross_violations == 0 && assembly_violations == 0;
}

void InvariantReport::merge(const InvariantReport& o) {
  separators += o.separators;
  attachment_bound_violations += o.attachment_bound_violations;
  upper_overflow_violations += o.upper_overflow_violations;
  leaf_path_checks += o.leaf_path_checks;
  leaf_path_violations += o.leaf_path_violations;
  dag_checks += o.dag_checks;
  dag_violations += o.dag_violations;
  palette_violations += o.palette_violations;
  antipodal_checks += o.antipodal_checks;
  antipodal_violations += o.antipodal_violations;
  monotone_violations += o.monotone_violations;
  early_color_violations += o.early_color_violations;
  lowest_checks += o.lowest_checks;
  lowest_violations += o.lowest_violations;
  cross_checks += o.cross_checks;
  cross_violations += o.cross_violations;
  assembly_checks += o.assembly_checks;
  assembly_violations += o.assembly_violations;
  messages.insert(messages.end(), o.messages.begin(), o.messages.end());
}

namespace {

VertexSet to_root_set(const VertexSet& s, const std::vector<Vertex>& to_root) {
  VertexSet out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to_root[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

// Everything one separator produced, kept for the optional checks.
struct Stages {
  PartitionState ps;
  std::map<SetLabel, AntipodalDag> dags;
  std::map<int, LowestMap> lowest;
  Coloring f7, f8, f9, f10;
};

class Driver {
 public:
  Driver(bool directed, const RecognizerOptions& options) : directed_(directed), options_(options) {}

  CliquePathTree solve(const Graph& g, const std::vector<Vertex>& to_root, int depth,
                       const std::optional<VertexSet>& forced) {
    auto cs = maximal_cliques(g, mcs_order(g));
    auto t = clique_tree(g, cs);
    t.directed = directed_;
    VertexSet separator;
    if (forced) {
      separator = *forced;
      if (!cs.find(separator)) throw ContractError("requested separator is not a maximal clique");
    } else {
      auto x = find_clique_separator(cs, t);
      if (!x) return CliquePathTree{cs.cliques, t};
      separator = cs[*x];
    }

    auto ctx = split(g, separator);
    for (auto& comp : ctx.components) {
      auto sub = induced_subgraph(g, comp.ambient);
      std::vector<Vertex> sub_root(sub.to_parent.size());
      for (std::size_t k = 0; k < sub.to_parent.size(); ++k) {
        sub_root[k] = to_root[static_cast<std::size_t>(sub.to_parent[k])];
      }
      auto part = solve(sub.graph, sub_root, depth + 1, std::nullopt);
      for (auto& k : part.cliques) {
        for (Vertex& v : k) v = sub.to_parent[static_cast<std::size_t>(v)];
      }
      attach_tree(comp, separator, std::move(part.cliques), std::move(part.tree));
      compute_F_table(comp);
    }

    try {
      return solve_separator(g, cs, ctx, to_root, depth);
    } catch (const RejectSignal& signal) {
      Rejection r = signal.rejection();
      if (r.depth < 0) {
        r.separator = to_root_set(separator, to_root);
        r.depth = depth;
        r.vertices = to_root_set(r.vertices, to_root);
      }
      throw RejectSignal(std::move(r));
    }
  }

  std::vector<SeparatorTrace> trace;
  InvariantReport invariants;

 private:
  CliquePathTree solve_separator(const Graph& g, const CliqueSet& cs, SeparationContext& ctx,
                                 const std::vector<Vertex>& to_root, int depth) {
    const auto s = ctx.components.size();
    SeparatorTrace* tr = nullptr;
    if (options_.collect_trace) {
      trace.emplace_back();
      tr = &trace.back();
      tr->depth = depth;
      tr->separator = to_root_set(ctx.separator, to_root);
      for (const auto& c : ctx.components) {
        tr->private_sets.push_back(to_root_set(c.private_set, to_root));
        tr->attachments.push_back(to_root_set(c.attachment, to_root));
        tr->flat.push_back(c.flat());
        tr->attachment_total += c.attachment.size();
      }
      tr->graph_size = static_cast<std::size_t>(g.vertex_count()) + g.edge_count();
      if (s <= 12) {
        for (std::size_t a = 0; a < s; ++a) {
          for (std::size_t b = a + 1; b < s; ++b) {
            tr->relations.push_back({static_cast<int>(a), static_cast<int>(b),
                                     compare(ctx.components[a], ctx.components[b])});
          }
        }
      }
    }
    // trace may reallocate during recursion, but not below this point.

    quotient(ctx);
    if (tr) tr->classes = ctx.classes;

    Stages st;
    st.ps = build_partition(ctx);
    const auto& ps = st.ps;
    const int r = ps.r();
    if (tr) {
      tr->uppers = ps.uppers;
      for (const auto& slot : ps.u_of_v) {
        tr->max_uppers_per_vertex =
            std::max(tr->max_uppers_per_vertex, static_cast<int>((slot[0] != 0) + (slot[1] != 0)));
      }
    }

    Coloring f(s, kUnset);
    if (directed_) {
      color_upper_bipartite(ctx, ps, f);
      color_cross_upper_directed(ctx, ps, f);
    } else {
      for (int k = 1; k <= r; ++k) f[static_cast<std::size_t>(ps.upper(k))] = k;
      color_cross_upper(ctx, ps, f);
    }
    st.f7 = f;

    for (const auto& [label, members] : ps.sets) {
      if (label.pair()) continue;
      auto dag = build_antipodal_dag(ctx, members);
      std::array<int, 2> palette = directed_ ? std::array<int, 2>{0, 1} : std::array<int, 2>{label.i, r + 1};
      extend_coloring(dag, palette, f, "extend-single");
      st.dags.emplace(label, std::move(dag));
    }
    st.f8 = f;

    for (int k = 1; k <= r; ++k) {
      int target = directed_ ? f[static_cast<std::size_t>(ps.upper(k))] : k;
      st.lowest[k] = compute_lowest_colored(ctx, ps.sets.at(SetLabel{k, 0}), f, target);
    }
    if (directed_) {
      color_cross_pairs_directed(ctx, ps, st.lowest, f);
    } else {
      color_cross_pairs(ctx, ps, st.lowest, f);
    }
    st.f9 = f;

    for (const auto& [label, members] : ps.sets) {
      if (!label.pair()) continue;
      auto dag = build_antipodal_dag(ctx, members);
      std::array<int, 2> palette = directed_ ? std::array<int, 2>{0, 1} : std::array<int, 2>{label.i, label.j};
      extend_coloring(dag, palette, f, "extend-pair");
      st.dags.emplace(label, std::move(dag));
    }
    st.f10 = f;

    auto full = lift_quotient_coloring(ctx, f);
    auto tree = assemble_clique_path_tree(ctx, full, directed_);

    if (tr) {
      tr->colors = full;
      for (const auto& [label, members] : ps.sets) {
        BlockTrace b{label, members, {}};
        const auto& dag = st.dags.at(label);
        for (const auto& parents : dag.parents) {
          std::vector<int> ids;
          for (int p : parents) ids.push_back(dag.nodes[static_cast<std::size_t>(p)]);
          b.dag_parents.push_back(std::move(ids));
        }
        tr->blocks.push_back(std::move(b));
      }
    }
    if (options_.check_invariants) check(g, cs, ctx, st, tree);
    return tree;
  }

  void violation(std::size_t& counter, const std::string& what) {
    ++counter;
    if (invariants.messages.size() < 32) invariants.messages.push_back(what);
  }

  void check(const Graph& g, const CliqueSet& cs, const SeparationContext& ctx, const Stages& st,
             const CliquePathTree& tree) {
    auto& inv = invariants;
    const auto& ps = st.ps;
    const int r = ps.r();
    ++inv.separators;

    std::size_t total = 0;
    for (const auto& c : ctx.components) total += c.attachment.size();
    if (total > static_cast<std::size_t>(g.vertex_count()) + g.edge_count()) {
      violation(inv.attachment_bound_violations, "sum of |W| exceeds n + m");
    }
    for (const auto& slot : ps.u_of_v) {
      std::vector<int> seen;
      for (int k : slot) {
        if (k != 0) seen.push_back(k);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        violation(inv.upper_overflow_violations, "duplicate upper in u(v)");
      }
    }

    // Nodes holding v are exactly the tree path from C to F(v).
    for (const auto& c : ctx.components) {
      auto adj = c.tree.adjacency();
      std::vector<int> parent(c.cliques.size(), -1);
      std::vector<int> queue{c.c_node};
      parent[static_cast<std::size_t>(c.c_node)] = c.c_node;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : adj[static_cast<std::size_t>(queue[head])]) {
          if (parent[static_cast<std::size_t>(w)] < 0) {
            parent[static_cast<std::size_t>(w)] = queue[head];
            queue.push_back(w);
          }
        }
      }
      for (std::size_t k = 0; k < c.attachment.size(); ++k) {
        ++inv.leaf_path_checks;
        std::vector<int> path;
        for (int x = c.furthest[k]; x != c.c_node; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
        path.push_back(c.c_node);
        std::sort(path.begin(), path.end());
        std::vector<int> holding;
        for (std::size_t x = 0; x < c.cliques.size(); ++x) {
          if (contains(c.cliques[x], c.attachment[k])) holding.push_back(static_cast<int>(x));
        }
        if (path != holding) violation(inv.leaf_path_violations, "cliques holding v are not the C..F(v) path");
      }
    }

    auto rel = [&](int a, int b) {
      return compare(ctx.components[static_cast<std::size_t>(a)], ctx.components[static_cast<std::size_t>(b)]);
    };
    auto le = [&](int lower, int upper) {
      return dominated_by(ctx.components[static_cast<std::size_t>(lower)],
                          ctx.components[static_cast<std::size_t>(upper)]);
    };

    // Hasse diagram: ancestor <=> dominance, exhaustively on small contexts.
    if (ctx.components.size() <= 10) {
      for (const auto& [label, dag] : st.dags) {
        auto anc = dag.ancestors();
        for (std::size_t b = 0; b < dag.nodes.size(); ++b) {
          for (std::size_t a = 0; a < dag.nodes.size(); ++a) {
            if (a == b) continue;
            ++inv.dag_checks;
            bool is_anc = std::binary_search(anc[b].begin(), anc[b].end(), static_cast<int>(a));
            if (is_anc != le(dag.nodes[b], dag.nodes[a])) {
              violation(inv.dag_violations, "DAG ancestry disagrees with dominance");
            }
          }
        }
      }
    }

    for (int id : ps.order) {
      const auto label = ps.home[static_cast<std::size_t>(id)];
      const int c = st.f10[static_cast<std::size_t>(id)];
      bool ok;
      if (directed_) {
        ok = c == 0 || c == 1;
      } else if (ps.upper_index[static_cast<std::size_t>(id)] != 0) {
        ok = c == label.i;
      } else if (label.pair()) {
        ok = c == label.i || c == label.j;
      } else {
        ok = c == label.i || c == r + 1;
      }
      if (!ok) violation(inv.palette_violations, "color outside the palette of its block");
    }

    const std::vector<const Coloring*> snaps{&st.f7, &st.f8, &st.f9, &st.f10};
    for (std::size_t k = 0; k + 1 < snaps.size(); ++k) {
      for (std::size_t id = 0; id < st.f7.size(); ++id) {
        int before = (*snaps[k])[id];
        if (before != kUnset && before != (*snaps[k + 1])[id]) {
          violation(inv.monotone_violations, "a color changed after being set");
        }
      }
    }

    for (const auto& [label, members] : ps.sets) {
      const Coloring& snap = label.pair() ? st.f9 : st.f7;
      for (int a : members) {
        for (int b : members) {
          if (a >= b) continue;
          ++inv.antipodal_checks;
          Relation x = rel(a, b);
          if (x == Relation::Antipodal && st.f10[static_cast<std::size_t>(a)] == st.f10[static_cast<std::size_t>(b)]) {
            violation(inv.antipodal_violations, "antipodal pair inside a block share a color");
          }
          // Uncolored stays uncolored downward.
          auto early = [&](int upper, int lower) {
            if (snap[static_cast<std::size_t>(upper)] == kUnset && snap[static_cast<std::size_t>(lower)] != kUnset &&
                ps.upper_index[static_cast<std::size_t>(upper)] == 0) {
              violation(inv.early_color_violations, "a dominated member was colored before its dominator");
            }
          };
          if (x == Relation::LeftDominates) early(a, b);
          if (x == Relation::RightDominates) early(b, a);
        }
      }
    }

    for (int k = 1; k <= r; ++k) {
      const auto& members = ps.sets.at(SetLabel{k, 0});
      const int target = directed_ ? st.f9[static_cast<std::size_t>(ps.upper(k))] : k;
      for (Vertex v : ctx.components[static_cast<std::size_t>(ps.upper(k))].attachment) {
        ++inv.lowest_checks;
        std::vector<int> holding;
        for (int id : members) {
          if (st.f8[static_cast<std::size_t>(id)] == target &&
              contains(ctx.components[static_cast<std::size_t>(id)].attachment, v)) {
            holding.push_back(id);
          }
        }
        int lowest = -1;
        for (int x : holding) {
          if (std::all_of(holding.begin(), holding.end(), [&](int y) { return y == x || le(x, y); })) lowest = x;
        }
        auto it = st.lowest.at(k).find(v);
        int got = it == st.lowest.at(k).end() ? -1 : it->second;
        if (lowest != got) violation(inv.lowest_violations, "lowest same-colored member mismatch");
      }
    }

    // Cross-block antipodality: D_{i,j} partners lie in D_i or D_j and the
    // shortcut answers agree with a full scan; D_i partners force an
    // antipodal upper.
    for (int a : ps.order) {
      const auto la = ps.home[static_cast<std::size_t>(a)];
      bool into_i = false;
      bool into_j = false;
      for (int b : ps.order) {
        const auto lb = ps.home[static_cast<std::size_t>(b)];
        if (lb == la || rel(a, b) != Relation::Antipodal) continue;
        ++inv.cross_checks;
        if (la.pair()) {
          if (lb.pair() || (lb.i != la.i && lb.i != la.j)) {
            violation(inv.cross_violations, "pair-block member antipodal outside its two singles");
          }
          if (!lb.pair() && lb.i == la.i) into_i = true;
          if (!lb.pair() && lb.i == la.j) into_j = true;
        } else {
          bool found = false;
          for (int k = 1; k <= r; ++k) {
            const int u = ps.upper(k);
            // Dominance is reflexive; dominated_by only says so for flat pieces.
            if (k != la.i && (b == u || le(b, u)) && rel(a, u) == Relation::Antipodal) found = true;
          }
          if (!found) violation(inv.cross_violations, "single-block member antipodal without an antipodal upper");
        }
      }
      if (la.pair()) {
        ++inv.cross_checks;
        if (into_i != antipodal_to_block(ctx, a, st.lowest.at(la.i)) ||
            into_j != antipodal_to_block(ctx, a, st.lowest.at(la.j))) {
          violation(inv.cross_violations, "lowest-member shortcut disagrees with a full scan");
        }
      }
    }

    ++inv.assembly_checks;
    auto map = match_cliques(cs, tree.cliques);
    bool good = map.has_value() && tree.tree.is_tree();
    if (good) {
      CliqueTree t{tree.tree.node_count, {}, directed_};
      for (auto e : tree.tree.edges) {
        t.edges.push_back({(*map)[static_cast<std::size_t>(e.from)], (*map)[static_cast<std::size_t>(e.to)]});
      }
      good = directed_ ? check_directed_clique_path_tree(g, cs, t) : check_clique_path_tree(g, cs, t);
    }
    if (!good) violation(inv.assembly_violations, "assembled tree fails the checker");
  }

  bool directed_;
  const RecognizerOptions& options_;
};

Recognition recognize(const Graph& g, const RecognizerOptions& options, bool directed) {
  Recognition rec;
  auto order = mcs_order(g);
  if (!is_perfect_elimination_order(g, order)) {
    rec.rejection = Rejection{};
    rec.rejection->stage = "chordality";
    rec.rejection->detail = "graph has an induced cycle of length at least 4";
    return rec;
  }
  rec.clique_count = maximal_cliques(g, order).size();

  Driver driver(directed, options);
  bool forced_used = false;
  try {
    CliquePathTree whole;
    whole.tree.directed = directed;
    for (const auto& part_vertices : connected_components(g)) {
      auto sub = induced_subgraph(g, part_vertices);
      std::optional<VertexSet> forced;
      if (options.first_separator && !options.first_separator->empty() &&
          contains(part_vertices, options.first_separator->front())) {
        VertexSet local;
        for (Vertex v : *options.first_separator) {
          auto it = std::lower_bound(part_vertices.begin(), part_vertices.end(), v);
          if (it == part_vertices.end() || *it != v) throw ContractError("requested separator spans several components");
          local.push_back(static_cast<Vertex>(it - part_vertices.begin()));
        }
        std::sort(local.begin(), local.end());
        forced = std::move(local);
        forced_used = true;
      }
      auto part = driver.solve(sub.graph, sub.to_parent, 0, forced);
      const int offset = static_cast<int>(whole.cliques.size());
      for (auto& k : part.cliques) whole.cliques.push_back(to_root_set(k, sub.to_parent));
      for (auto e : part.tree.edges) whole.tree.edges.push_back({e.from + offset, e.to + offset});
      if (offset > 0) whole.tree.edges.push_back({0, offset});
    }
    if (options.first_separator && !forced_used) throw ContractError("requested separator is not in the graph");
    whole.tree.node_count = static_cast<int>(whole.cliques.size());
    rec.accepted = true;
    rec.tree = std::move(whole);
  } catch (const RejectSignal& signal) {
    rec.rejection = signal.rejection();
  }
  rec.trace = std::move(driver.trace);
  rec.invariants = std::move(driver.invariants);
  return rec;
}

}  // namespace

Recognition recognize_path_graph(const Graph& g, const RecognizerOptions& options) {
  return recognize(g, options, false);
}

Recognition recognize_directed_path_graph(const Graph& g, const RecognizerOptions& options) {
  return recognize(g, options, true);
}

}  // namespace pathgraph
