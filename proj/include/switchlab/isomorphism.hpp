#pragma once

#include <optional>
#include <vector>

#include "switchlab/labeled_graph.hpp"

namespace switchlab {

// Exact isomorphism test: color refinement interleaved with backtracking
// (individualize a vertex, refine, recurse). A candidate mapping is only
// accepted after a full adjacency check.
bool is_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

// True iff some vertex subset of g induces a graph isomorphic to h.
bool contains_induced(const LabeledGraph& g, const LabeledGraph& h);

// Like contains_induced but returns the witness vertex set (sorted) when one
// exists.
std::optional<std::vector<int>> find_induced(const LabeledGraph& g,
                                             const LabeledGraph& h);

// Power-of-two order, m-regular, connected, bipartite, then exact
// isomorphism against the generated hypercube.
bool is_hypercube(const LabeledGraph& g);

}  // namespace switchlab
