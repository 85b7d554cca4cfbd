#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"

namespace pathgraph {

/// {"cliques": [[labels]], "edges": [[i, j]], "directed": bool, "darts": [[from, to]]}
/// with "darts" present only for directed trees. Clique members are written
/// as `labels[v]` (dense ids when `labels` is empty).
std::string certificate_to_json(const CliquePathTree& cert, std::span<const std::int64_t> labels = {});

/// Graphviz text; node labels are the sorted member lists in braces.
std::string certificate_to_dot(const CliquePathTree& cert, std::span<const std::int64_t> labels = {});

/// Reads either format back, translating labels through `g.labels`.
/// Throws ParseError on malformed text and ContractError when a label is not
/// a vertex of g.
CliquePathTree parse_certificate(std::string_view text, const LabeledGraph& g);

}  // namespace pathgraph
