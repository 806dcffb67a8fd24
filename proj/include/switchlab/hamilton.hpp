#pragma once

#include <vector>

#include "switchlab/labeled_graph.hpp"

namespace switchlab {

struct HamiltonResult {
  enum class Verdict {
    Found,   // cycle holds the witness
    None,    // search space exhausted, no Hamiltonian cycle
    Budget,  // expansion budget hit: unknown, never reported as "no"
    K1,      // single vertex, exempt by convention
    K2,      // a single edge, exempt by convention
  };
  Verdict verdict;
  std::vector<int> cycle;  // when Found: all n vertices; closing edge implied

  bool found() const { return verdict == Verdict::Found; }
  bool exempt() const {
    return verdict == Verdict::K1 || verdict == Verdict::K2;
  }
};

// Backtracking search for a Hamiltonian cycle, deterministic in the vertex
// order. Prunes on connectivity of the unvisited region and on unvisited
// vertices running out of usable neighbors.
HamiltonResult hamiltonian_cycle(const LabeledGraph& g,
                                 long long budget = 5000000);

}  // namespace switchlab
