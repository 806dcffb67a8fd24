#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "switchlab/degree_sequence.hpp"
#include "switchlab/labeled_graph.hpp"
#include "switchlab/limits.hpp"
#include "switchlab/realization.hpp"

namespace switchlab {

// Canonical decomposition of a degree sequence: an ordered list of
// indecomposable splitted components followed by an indecomposable tail.
struct CanonicalDecomposition {
  std::vector<SplittedSequence> split_components;
  DegreeSequence tail;
};

// Smallest valid split-off (p = clique-side size, q = independent-side size,
// 1 <= p+q < n), minimizing p+q and then q. A pair is valid when
//   sum of the top p terms == p*(n-q-1) + sum of the bottom q terms,
// which forces, in every realization, the top p vertices to form a clique
// complete to the middle and the bottom q vertices to form an independent
// set with all edges into the top block. The extracted splitted sequence and
// the reduced middle are re-checked for realizability. Returns nothing if d
// is indecomposable.
std::optional<std::pair<int, int>> find_split_off(const DegreeSequence& d,
                                                  const Limits& lim = Limits{});

CanonicalDecomposition canonical_decomposition_seq(const DegreeSequence& d,
                                                   const Limits& lim = Limits{});

bool is_indecomposable_seq(const DegreeSequence& d, const Limits& lim = Limits{});

// Right fold of compose_sequences over the components.
DegreeSequence recompose(const CanonicalDecomposition& dec,
                         const Limits& lim = Limits{});

// Clique/independent-set partition of a split graph, located via
// q = max{ i : d_i >= i-1 }: the q highest-degree vertices form the clique.
// Returns (independent set, clique) as sorted original vertex lists. For an
// indecomposable split graph with more than one vertex this partition is the
// unique one. Throws NotSplitError when no such partition exists.
std::pair<std::vector<int>, std::vector<int>> unique_split_partition(
    const LabeledGraph& s);

struct GraphComponent {
  LabeledGraph graph;           // compact labels: clique block then indep block
  std::vector<int> indep;       // compact labels of the independent side
  std::vector<int> clique;      // compact labels of the clique side
  std::vector<int> orig_indep;  // the same sets in the input graph's labels
  std::vector<int> orig_clique;
};

struct GraphDecomposition {
  std::vector<GraphComponent> split_components;
  LabeledGraph tail;
  std::vector<int> orig_tail;      // tail vertices in the input graph's labels
  std::vector<int> sorted_to_orig; // degree-sorted position -> original label
};

// Component boundaries come from the sequence decomposition of the sorted
// degree sequence; membership is positional in degree-sorted order.
// recompose_graph inverts this exactly. Structural invariant violations
// throw std::logic_error (they indicate a bug, not bad input).
GraphDecomposition canonical_decomposition_graph(const LabeledGraph& g,
                                                 const Limits& lim = Limits{});

// Rebuilds the original labeled graph from its decomposition.
LabeledGraph recompose_graph(const GraphDecomposition& dec);

// Original-label vertex sets of the canonical components, split components
// first, tail last. Used to check that a 2-switch never crosses components.
std::vector<std::vector<int>> component_vertex_sets(
    const GraphDecomposition& dec);

}  // namespace switchlab
