#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"

namespace pathgraph {

/// The instance is larger than the brute-force search accepts.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kOracleMaxCliques = 9;
inline constexpr int kOracleMaxDirectedCliques = 6;

/// t is a tree over cs and every C_v induces a path in it.
/// Throws ContractError when t.node_count differs from cs.size().
bool check_clique_path_tree(const Graph& g, const CliqueSet& cs, const CliqueTree& t);

/// As above, and every C_v induces a consistently oriented path.
bool check_directed_clique_path_tree(const Graph& g, const CliqueSet& cs, const CliqueTree& t);

/// cert_index -> clique id of cs when `cliques` lists exactly the cliques of
/// cs (in any order, each in any order); nullopt otherwise.
std::optional<std::vector<int>> match_cliques(const CliqueSet& cs, const std::vector<VertexSet>& cliques);

/// Checks a certificate against g: its cliques must be the maximal cliques
/// of g (ContractError otherwise) and the tree must pass the checker.
bool check_certificate(const Graph& g, const CliquePathTree& cert, bool directed);

/// Labeled trees on p nodes <-> sequences of length p-2 over [0, p).
std::vector<TreeEdge> prufer_decode(std::span<const int> code, int p);
std::vector<int> prufer_encode(const CliqueTree& t);

/// Calls `visit` with the edges of every labeled tree on p nodes, in
/// lexicographic code order; stops early when it returns true.
bool for_each_labeled_tree(int p, const std::function<bool(const std::vector<TreeEdge>&)>& visit);

/// Exhaustive searches; CapacityError when the clique count exceeds the limit.
bool oracle_is_path_graph(const Graph& g, int max_cliques = kOracleMaxCliques);
bool oracle_is_directed_path_graph(const Graph& g, int max_cliques = kOracleMaxDirectedCliques);

}  // namespace pathgraph
