#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/rejection.hpp"

namespace pathgraph {

/// Outcome of comparing two components a, b hanging off the same separator.
/// LeftDominates means b <= a.
enum class Relation { Unattached, LeftDominates, RightDominates, Equivalent, Antipodal };

std::string_view to_string(Relation r);

inline constexpr int kAbsent = -1;

/// One piece G(C + V_i) of the decomposition at a clique separator C, with
/// the clique path tree returned for it by the recursive call.
struct Component {
  int id = 0;
  VertexSet ambient;      ///< C + V_i
  VertexSet private_set;  ///< V_i

  std::vector<VertexSet> cliques;  ///< cliques of the piece, ambient graph ids
  CliqueTree tree;
  int c_node = -1;  ///< the node of `tree` equal to C (always a leaf)
  int n_node = -1;  ///< its unique neighbour

  VertexSet attachment;       ///< W = n_node ∩ C
  std::vector<int> furthest;  ///< furthest[k] = F(attachment[k])

  /// F(v): the node furthest from C that contains v, or kAbsent if v ∉ W.
  int furthest_clique(Vertex v) const;

  /// True when F is constant on W, i.e. every relevant clique meets C in W.
  bool flat() const;
};

struct SeparationContext {
  VertexSet separator;
  std::vector<Component> components;

  /// The quotient by mutual dominance: classes[k] lists members, the first
  /// (smallest id) being the representative.
  std::vector<std::vector<int>> classes;
  std::vector<int> representative;  ///< per component id

  std::vector<int> representatives() const;
  /// Index of v inside `separator`, or -1.
  int position(Vertex v) const;
};

/// An internal node of the clique tree minimising the largest branch it
/// leaves behind (smallest id on ties); nullopt when p <= 2.
std::optional<int> find_clique_separator(const CliqueSet& cs, const CliqueTree& t);

/// One component per connected piece of g - C, ordered by smallest private
/// vertex. Throws ContractError if C is not a maximal clique separator.
SeparationContext split(const Graph& g, const VertexSet& separator);

/// Installs the recursive result for `comp`: locates C in the tree, checks
/// it is a leaf, and records n_node and W. Cliques are in ambient graph ids.
void attach_tree(Component& comp, const VertexSet& separator, std::vector<VertexSet> cliques,
                 CliqueTree tree);

/// Fills F with one breadth-first pass over the tree starting at n_node.
void compute_F_table(Component& comp);

/// lower <= upper: W sets meet and F(upper, .) is one non-absent node on
/// all of W(lower).
bool dominated_by(const Component& lower, const Component& upper);

Relation compare(const Component& a, const Component& b);

/// Computes the quotient by mutual dominance. Components sharing the same W
/// are equivalent exactly when both are flat; three non-flat ones with a
/// common W form a full antipodal triangle and reject.
void quotient(SeparationContext& ctx);

}  // namespace pathgraph
