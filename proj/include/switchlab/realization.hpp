#pragma once

#include <vector>

#include "switchlab/degree_sequence.hpp"
#include "switchlab/labeled_graph.hpp"
#include "switchlab/limits.hpp"

namespace switchlab {

// The 2-switch {ab,cd} -> {ad,bc}: in the source graph ab and cd are edges,
// ad and bc are not. The four presentations (a,b,c,d), (b,a,d,c), (c,d,a,b),
// (d,c,b,a) describe the same switch; normalized() picks the least.
struct TwoSwitch {
  int a, b, c, d;

  TwoSwitch normalized() const;
  bool operator==(const TwoSwitch&) const = default;
  bool operator<(const TwoSwitch& o) const;
};

// All labeled graphs on [n] whose vertex i has degree exactly d_i, in
// lexicographic edge-set order. Throws NotGraphicalError or
// BoundExceededError (n > max_n, or more than max_realizations found).
std::vector<LabeledGraph> enumerate_realizations(const DegreeSequence& d,
                                                 const Limits& lim = Limits{});

// Every 2-switch available in g, each one once, in a deterministic order.
std::vector<TwoSwitch> two_switches(const LabeledGraph& g);

// Applies s to a copy of g; throws InvalidSwitchError if the edge/non-edge
// preconditions fail.
LabeledGraph apply_two_switch(const LabeledGraph& g, const TwoSwitch& s);

// Meta-graph on all realizations of d: vertices are realization indices in
// canonical order, edges join realizations one 2-switch apart.
struct RealizationGraph {
  DegreeSequence sequence;
  std::vector<LabeledGraph> realizations;
  LabeledGraph meta;

  int count() const { return static_cast<int>(realizations.size()); }
};

RealizationGraph realization_graph(const DegreeSequence& d,
                                   const Limits& lim = Limits{});

// Composition of a partitioned split graph with an arbitrary graph.
// clique_b's vertices take positions 0..|B|-1 (ascending by original label),
// q's vertex i takes |B|+i, indep_a's vertices close the range. All edges
// between the B block and the q block are added. Throws
// InvalidPartitionError unless (A,B) partitions V(p) into an independent set
// and a clique.
LabeledGraph compose_graphs(const LabeledGraph& p,
                            const std::vector<int>& indep_a,
                            const std::vector<int>& clique_b,
                            const LabeledGraph& q);

// True iff some split graph has clique-side degrees p2 and independent-side
// degrees p1. Decided by enumeration at this scale.
bool is_splitted_realizable(const SplittedSequence& p,
                            const Limits& lim = Limits{});

}  // namespace switchlab
