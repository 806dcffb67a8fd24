#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "switchlab/degree_sequence.hpp"
#include "switchlab/hamilton.hpp"
#include "switchlab/labeled_graph.hpp"
#include "switchlab/limits.hpp"
#include "switchlab/realization.hpp"
#include "switchlab/tyshkevich.hpp"

namespace switchlab {

// Forbidden-subgraph recognizers. The test suite cross-checks each against a
// definitional recognizer (partition search, structural decomposition,
// per-vertex path counting).
bool is_split_graph(const LabeledGraph& g);             // {2K2, C4, C5}-free
bool is_pseudo_split(const LabeledGraph& g);            // {2K2, C4}-free
bool is_pseudo_split_matrogenic(const LabeledGraph& g); // + chair, kite
bool is_p4_reducible(const LabeledGraph& g);

struct ClassReport {
  bool split = false;
  bool pseudo_split = false;
  bool pseudo_split_matrogenic = false;
  bool p4_reducible = false;
  bool split_p4_reducible = false;

  struct Witness {
    std::string forbidden;      // name of the induced forbidden graph
    std::vector<int> vertices;  // 0-based vertex set inducing it
  };
  // keyed by the flag name, present for each false flag
  std::map<std::string, Witness> witnesses;
};

ClassReport classify_graph(const LabeledGraph& g);

// Predicted factorization of the realization graph, derived from the
// canonical decomposition: single-vertex components give K1, k-net and
// net-complement shapes give the transposition graph T_k, (2,2,2,2,2) gives
// the 5-regular bipartite graph on 12 vertices, anything else is Unknown and
// is resolved by direct construction where needed.
struct ProductPrediction {
  struct Factor {
    enum class Kind { K1, Transposition, K66, Unknown };
    Kind kind;
    int k = 0;                // for Kind::Transposition
    DegreeSequence component; // unsplitted component sequence
    bool is_tail = false;
  };
  std::vector<Factor> factors;
};

ProductPrediction predict_realization_graph(const DegreeSequence& d,
                                            const Limits& lim = Limits{});

// Builds the realization graph directly and as the Cartesian product of the
// component realization graphs, and tests the two for isomorphism.
bool verify_product_theorem(const DegreeSequence& d, const Limits& lim = Limits{});

// The four equivalent conditions for a triangle-free realization graph.
struct TriangleFreeReport {
  bool bipartite = false;            // (a)
  bool triangle_free = false;        // (b)
  bool product_form = false;         // (c)
  bool psm_realization = false;      // (d)
  bool consistent() const {
    return bipartite == triangle_free && triangle_free == product_form &&
           product_form == psm_realization;
  }
};

TriangleFreeReport verify_triangle_free_theorem(const DegreeSequence& d,
                                                const Limits& lim = Limits{});

struct HypercubeReport {
  bool hypercube = false;
  bool split_p4_realization = false;
  // when hypercube holds, every component sequence must be (0) or (2,2,1,1)
  bool components_ok = true;
  bool consistent() const {
    return hypercube == split_p4_realization && (!hypercube || components_ok);
  }
};

HypercubeReport verify_hypercube_theorem(const DegreeSequence& d,
                                         const Limits& lim = Limits{});

enum class HamiltonicityVerdict {
  Hamiltonian,
  ExemptK1,
  ExemptK2,
  UnknownBudget,   // reported, never treated as a refutation
  NotHamiltonian,  // would contradict the triangle-free corollary
  NotTriangleFree, // corollary does not apply
};

struct HamiltonicityReport {
  HamiltonicityVerdict verdict;
  std::vector<int> cycle;  // realization indices when Hamiltonian

  bool ok() const {
    return verdict == HamiltonicityVerdict::Hamiltonian ||
           verdict == HamiltonicityVerdict::ExemptK1 ||
           verdict == HamiltonicityVerdict::ExemptK2;
  }
};

HamiltonicityReport verify_hamiltonicity_corollary(const DegreeSequence& d,
                                                   const Limits& lim = Limits{});

}  // namespace switchlab
