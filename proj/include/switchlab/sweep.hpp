#pragma once

#include <optional>
#include <string>
#include <vector>

#include "switchlab/degree_sequence.hpp"
#include "switchlab/limits.hpp"

namespace switchlab {

// Desk-scale verification drives: run one check over every graphical
// sequence up to a given length, in parallel, with deterministic reporting.

enum class SweepTheorem {
  Product,       // direct realization graph vs Cartesian product of components
  TriangleFree,  // four-way equivalence (bipartite / triangle-free / product
                 // form / pseudo-split matrogenic realization)
  Hypercube,     // hypercube iff a split P4-reducible realization exists
  Hamilton,      // triangle-free realization graphs are Hamiltonian
  Connectivity,  // every realization graph is connected
  ComplementZero // complement and appended-zero invariance
};

struct SweepOptions {
  int max_n = 7;
  long long max_realizations = 5000;
  int jobs = 0;  // 0 = hardware concurrency
  // Hamilton sweep: skip triangle-free meta graphs larger than this.
  int hamilton_max_vertices = 200;
};

struct SweepResult {
  enum class Status { Ok, Violation, Skipped, NotApplicable, Budget };
  struct Item {
    DegreeSequence sequence;
    Status status;
    std::string detail;
  };

  std::vector<Item> items;  // in sequence enumeration order
  int total = 0;
  int checked = 0;
  int violations = 0;
  int skipped = 0;
  int not_applicable = 0;
  int budget_exhausted = 0;
};

// All graphical descending sequences of length exactly n with terms <= n-1.
std::vector<DegreeSequence> graphical_sequences(int n);

// All graphical sequences of length 1..max_n.
std::vector<DegreeSequence> graphical_sequences_up_to(int max_n);

SweepResult run_sweep(SweepTheorem theorem, const SweepOptions& opts,
                      const Limits& base = Limits{});

std::string sweep_theorem_name(SweepTheorem t);

}  // namespace switchlab
