#pragma once

#include <cstdint>

#include "pathgraph/graph.hpp"

namespace pathgraph {

/// Intersection graph of random subtrees of a random host tree on k nodes.
/// Every host node also carries a vertex of its own, so the graph is chordal
/// with exactly k maximal cliques. `width` caps the size of each subtree.
/// Deterministic per seed.
Graph random_chordal(int k, int width, std::uint64_t seed);

/// Paths in a random host tree on k nodes, plus one single-node path per
/// host node so the graph has exactly k maximal cliques.
Graph random_path_graph_positive(int k, std::uint64_t seed);

/// Subpaths of a path on k nodes.
Graph random_interval_graph(int k, std::uint64_t seed);

/// Paths from a node toward the root of a random rooted tree on k nodes.
Graph random_rooted_path_positive(int k, std::uint64_t seed);

/// Large path-graph positives for timing: n paths of at most `max_length`
/// nodes in a long, lightly branching host tree. The host has n / 2 nodes,
/// so the edge count grows roughly linearly with n. With `rooted` every
/// path climbs toward node 0, which makes the graph a directed path graph.
Graph random_path_graph_sized(int n, int max_length, std::uint64_t seed, bool rooted = false);

/// The instance mix used for oracle comparison: chordal graphs with at most
/// `max_cliques` cliques, plus path graphs when `directed` is set.
Graph random_fuzz_instance(int max_cliques, bool directed, std::uint64_t seed);

}  // namespace pathgraph
