#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/partition.hpp"
#include "pathgraph/rejection.hpp"
#include "pathgraph/separation.hpp"

namespace pathgraph {

struct RecognizerOptions {
  bool collect_trace = false;
  /// Separator to use at the top level (vertex ids of the input graph); it
  /// must be a maximal clique whose removal disconnects its component.
  std::optional<VertexSet> first_separator;
  /// Runs the (slower) internal consistency checks and fills
  /// Recognition::invariants.
  bool check_invariants = false;
};

/// One block D_i / D_{i,j} as seen by the trace. Component ids are local to
/// the separator; dag_parents lists component ids, not node indices.
struct BlockTrace {
  SetLabel label;
  std::vector<int> members;
  std::vector<std::vector<int>> dag_parents;
};

struct RelationTrace {
  int a = 0;
  int b = 0;
  Relation relation = Relation::Unattached;
};

/// Everything decided at one separator. Vertex sets use the ids of the
/// input graph; component k is the k-th piece by smallest private vertex.
struct SeparatorTrace {
  int depth = 0;
  VertexSet separator;
  std::vector<VertexSet> private_sets;
  std::vector<VertexSet> attachments;
  std::vector<bool> flat;
  std::vector<std::vector<int>> classes;
  std::vector<int> uppers;  ///< component ids of u_1..u_r
  std::vector<BlockTrace> blocks;
  Coloring colors;          ///< per component, after lifting
  std::size_t attachment_total = 0;  ///< sum of |W|
  std::size_t graph_size = 0;        ///< n + m of the graph being split
  int max_uppers_per_vertex = 0;
  /// All unordered pairs, only filled when there are at most 12 components.
  std::vector<RelationTrace> relations;
};

/// Counters from the internal checks; every `*_violations` must be zero.
struct InvariantReport {
  std::size_t separators = 0;
  std::size_t attachment_bound_violations = 0;
  std::size_t upper_overflow_violations = 0;
  std::size_t leaf_path_checks = 0;
  std::size_t leaf_path_violations = 0;
  std::size_t dag_checks = 0;
  std::size_t dag_violations = 0;
  std::size_t palette_violations = 0;
  std::size_t antipodal_checks = 0;
  std::size_t antipodal_violations = 0;
  std::size_t monotone_violations = 0;
  std::size_t early_color_violations = 0;
  std::size_t lowest_checks = 0;
  std::size_t lowest_violations = 0;
  std::size_t cross_checks = 0;
  std::size_t cross_violations = 0;
  std::size_t assembly_checks = 0;
  std::size_t assembly_violations = 0;
  std::vector<std::string> messages;

  bool ok() const noexcept;
  void merge(const InvariantReport& other);
};

struct Recognition {
  bool accepted = false;
  std::optional<CliquePathTree> tree;  ///< cliques in input vertex ids
  std::optional<Rejection> rejection;
  int clique_count = 0;
  std::vector<SeparatorTrace> trace;
  InvariantReport invariants;
};

Recognition recognize_path_graph(const Graph& g, const RecognizerOptions& options = {});
Recognition recognize_directed_path_graph(const Graph& g, const RecognizerOptions& options = {});

}  // namespace pathgraph
