#include <string>

#include "pathgraph/partition.hpp"

namespace pathgraph {

void color_upper_bipartite(const SeparationContext& ctx, const PartitionState& ps, Coloring& f) {
  (void)ctx;
  const int r = ps.r();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(r) + 1);
  for (const auto& slot : ps.u_of_v) {
    if (slot[0] != 0 && slot[1] != 0) {
      adj[static_cast<std::size_t>(slot[0])].push_back(slot[1]);
      adj[static_cast<std::size_t>(slot[1])].push_back(slot[0]);
    }
  }
  auto color = [&](int k) -> int& { return f[static_cast<std::size_t>(ps.upper(k))]; };
  std::vector<int> queue;
  for (int seed = 1; seed <= r; ++seed) {
    if (color(seed) != kUnset) continue;
    color(seed) = 0;
    queue.assign(1, seed);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int a = queue[head];
      for (int b : adj[static_cast<std::size_t>(a)]) {
        if (color(b) == kUnset) {
          color(b) = 1 - color(a);
          queue.push_back(b);
        } else if (color(b) == color(a)) {
          reject(RejectReason::UpperNotBipartite, "upper-bipartite",
                 "odd cycle through uppers u_" + std::to_string(a) + " and u_" + std::to_string(b));
        }
      }
    }
  }
}

void color_cross_upper_directed(const SeparationContext& ctx, const PartitionState& ps,
                                Coloring& f) {
  for (const auto& [label, members] : ps.sets) {
    if (label.pair()) continue;
    for (int id : members) {
      if (ps.upper_index[static_cast<std::size_t>(id)] != 0) continue;
      int& c = f[static_cast<std::size_t>(id)];
      for (Vertex v : ctx.components[static_cast<std::size_t>(id)].attachment) {
        for (int k : ps.u_of_v[static_cast<std::size_t>(ctx.position(v))]) {
          if (k == 0 || k == label.i) continue;
          int want = 1 - f[static_cast<std::size_t>(ps.upper(k))];
          if (c != kUnset && c != want) {
            reject(RejectReason::UpperColorConflict, "cross-upper",
                   component_name(id) + " is antipodal to uppers of both colors");
          }
          c = want;
        }
      }
    }
  }
}

void color_cross_pairs_directed(const SeparationContext& ctx, const PartitionState& ps,
                                const std::map<int, LowestMap>& lowest, Coloring& f) {
  for (const auto& [label, members] : ps.sets) {
    if (!label.pair()) continue;
    for (int id : members) {
      bool into_i = antipodal_to_block(ctx, id, lowest.at(label.i));
      bool into_j = antipodal_to_block(ctx, id, lowest.at(label.j));
      if (into_i && into_j) {
        reject(RejectReason::CrossPairConflict, "cross-pairs",
               component_name(id) + " is antipodal into both D_" + std::to_string(label.i) +
                   " and D_" + std::to_string(label.j));
      }
      if (into_j) f[static_cast<std::size_t>(id)] = f[static_cast<std::size_t>(ps.upper(label.i))];
      if (into_i) f[static_cast<std::size_t>(id)] = f[static_cast<std::size_t>(ps.upper(label.j))];
    }
  }
}

}  // namespace pathgraph
