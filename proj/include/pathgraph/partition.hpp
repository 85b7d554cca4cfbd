#pragma once

#include <array>
#include <compare>
#include <map>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathgraph/separation.hpp"

namespace pathgraph {

inline constexpr int kUnset = -1;

/// Partial map component id -> color. Undirected colors are 1..r+1,
/// directed colors are 0 and 1.
using Coloring = std::vector<int>;

/// Names one block of the partition: D_i when j == 0, else D_{i,j} with
/// i < j. Upper indices are 1-based.
struct SetLabel {
  int i = 0;
  int j = 0;
  bool pair() const noexcept { return j != 0; }
  friend auto operator<=>(const SetLabel&, const SetLabel&) = default;
};

struct PartitionState {
  std::vector<int> uppers;       ///< component ids of u_1..u_r
  std::vector<int> upper_index;  ///< per component id: k if it is u_k, else 0
  /// Per separator position: the (at most two) upper indices whose W holds
  /// that vertex, 0 padded.
  std::vector<std::array<int, 2>> u_of_v;
  std::vector<SetLabel> home;  ///< per component id; {0,0} for non-representatives
  std::vector<int> order;      ///< representatives in processing order
  std::map<SetLabel, std::vector<int>> sets;  ///< members in processing order

  int r() const noexcept { return static_cast<int>(uppers.size()); }
  int upper(int k) const { return uppers[static_cast<std::size_t>(k - 1)]; }
};

/// Sorts component ids by |W| descending, flat before non-flat, then id.
/// Every dominator of a component precedes it in this order.
std::vector<int> processing_order(const SeparationContext& ctx, std::vector<int> ids);

/// Upper set, its ordering (by component id, i.e. smallest private vertex)
/// and the D_i / D_{i,j} partition of the representatives.
PartitionState build_partition(const SeparationContext& ctx);

/// Hasse diagram of dominance over one block, plus the pairs that must get
/// different colors. The recorded pairs are a subset of the antipodal pairs
/// of the block; any 2-coloring honouring them honours them all.
struct AntipodalDag {
  std::vector<int> nodes;                          ///< component ids, processing order
  std::vector<std::vector<int>> parents;           ///< node indices
  std::vector<std::pair<int, int>> must_differ;    ///< node indices

  /// ancestors[k]: node indices reachable upward from k.
  std::vector<std::vector<int>> ancestors() const;
};

AntipodalDag build_antipodal_dag(const SeparationContext& ctx, std::span<const int> members);

/// Completes f on the block with colors from `palette`, propagating from the
/// already-colored nodes first. Nodes left unconstrained take palette[0],
/// one connected piece at a time starting from its smallest node.
void extend_coloring(const AntipodalDag& dag, std::array<int, 2> palette, Coloring& f,
                     std::string_view stage);

/// v -> the lowest member of `members` (a D_k in processing order) holding v
/// in its W and colored `target`.
using LowestMap = std::unordered_map<Vertex, int>;
LowestMap compute_lowest_colored(const SeparationContext& ctx, std::span<const int> members,
                                 const Coloring& f, int target);

/// True when `gamma` is antipodal to some member of the block that `lowest`
/// was computed for. Every v in W(gamma) is tried.
bool antipodal_to_block(const SeparationContext& ctx, int gamma, const LowestMap& lowest);

/// Gives every member of a class its representative's color.
Coloring lift_quotient_coloring(const SeparationContext& ctx, const Coloring& f);

/// Glues the component trees at C following the coloring: node 0 is C, then
/// the non-C cliques of each component in id order. Each component hangs
/// below the lowest earlier component of its color that holds W(gamma)[0],
/// or at C. With `directed`, color 0 points toward C and color 1 away.
CliquePathTree assemble_clique_path_tree(const SeparationContext& ctx, const Coloring& f,
                                         bool directed);

// Undirected rules.
void color_cross_upper(const SeparationContext& ctx, const PartitionState& ps, Coloring& f);
void color_cross_pairs(const SeparationContext& ctx, const PartitionState& ps,
                       const std::map<int, LowestMap>& lowest, Coloring& f);

// Directed rules.
void color_upper_bipartite(const SeparationContext& ctx, const PartitionState& ps, Coloring& f);
void color_cross_upper_directed(const SeparationContext& ctx, const PartitionState& ps,
                                Coloring& f);
void color_cross_pairs_directed(const SeparationContext& ctx, const PartitionState& ps,
                                const std::map<int, LowestMap>& lowest, Coloring& f);

}  // namespace pathgraph
