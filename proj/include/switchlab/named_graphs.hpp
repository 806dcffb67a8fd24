#pragma once

#include <vector>

#include "switchlab/labeled_graph.hpp"

namespace switchlab {

enum class GraphKind {
  Complete,
  Path,
  Cycle,
  CompleteBipartite,
  KNet,
  NetComplement,
  Transposition,
  K66MinusMatching,
  Hypercube,
  Chair,
  Kite,
  PGraph,
  PComplement,
};

struct NamedGraph {
  GraphKind kind;
  std::vector<int> params;
};

LabeledGraph make_named(const NamedGraph& g);

LabeledGraph complete_graph(int n);
LabeledGraph path_graph(int n);
LabeledGraph cycle_graph(int n);
LabeledGraph complete_bipartite(int m, int n);

// Clique vertices b_1..b_k come first (0..k-1), pendants a_i = k+i with the
// matching edge a_i b_i.
LabeledGraph k_net(int k);
LabeledGraph net_complement(int k);

// Vertices are the permutations of {0..k-1} in lexicographic order; edges
// join permutations differing by exactly one transposition.
LabeledGraph transposition_graph(int k);

// The unique 5-regular bipartite graph on 12 vertices.
LabeledGraph k66_minus_matching();

LabeledGraph hypercube(int m);  // 2^m vertices, m >= 0

// Path 0-1-2-3 plus a pendant 4 attached to 1; degree sequence (3,2,1,1,1).
LabeledGraph chair();
// Complement of the chair: a diamond with a pendant at a degree-2 vertex.
LabeledGraph kite();

// Chordless 4-cycle with one pendant vertex.
LabeledGraph p_graph();
LabeledGraph p_complement();

}  // namespace switchlab
