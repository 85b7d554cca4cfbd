#include <string>

#include "pathgraph/partition.hpp"

namespace pathgraph {

void color_cross_upper(const SeparationContext& ctx, const PartitionState& ps, Coloring& f) {
  for (const auto& [label, members] : ps.sets) {
    if (label.pair()) continue;
    for (int id : members) {
      if (ps.upper_index[static_cast<std::size_t>(id)] != 0) continue;
      // gamma cannot dominate an upper and is not below u_k, so sharing a
      // vertex with u_k means antipodality.
      for (Vertex v : ctx.components[static_cast<std::size_t>(id)].attachment) {
        for (int k : ps.u_of_v[static_cast<std::size_t>(ctx.position(v))]) {
          if (k != 0 && k != label.i) f[static_cast<std::size_t>(id)] = label.i;
        }
      }
    }
  }
}

void color_cross_pairs(const SeparationContext& ctx, const PartitionState& ps,
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
      if (into_j) f[static_cast<std::size_t>(id)] = label.i;
      if (into_i) f[static_cast<std::size_t>(id)] = label.j;
    }
  }
}

}  // namespace pathgraph
