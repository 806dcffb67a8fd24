#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "switchlab/degree_sequence.hpp"

namespace switchlab {

// Simple undirected graph on vertices 0..n-1 with one bitset row per vertex.
// Serialized formats (graph files, DOT, JSON) number vertices from 1; the
// in-memory API is 0-based throughout.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);
  static LabeledGraph from_edges(int n,
                                 const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1;
  }
  void add_edge(int u, int v);     // idempotent
  void remove_edge(int u, int v);  // idempotent

  int degree(int u) const { return degree_[u]; }
  const std::vector<int>& degrees() const { return degree_; }

  std::vector<int> neighbors(int u) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  const std::uint64_t* row(int u) const {
    return bits_.data() + static_cast<std::size_t>(u) * words_;
  }
  int words_per_row() const { return words_; }

  bool operator==(const LabeledGraph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  std::size_t hash() const;

 private:
  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degree_;
};

struct GraphHash {
  std::size_t operator()(const LabeledGraph& g) const { return g.hash(); }
};

LabeledGraph complement(const LabeledGraph& g);

// Vertex (u,v) of the product gets index u*n2+v. Vertices (u,v) and (w,x)
// are adjacent iff u==w and vx is an edge of g2, or v==x and uw is an edge
// of g1.
LabeledGraph cartesian_product(const LabeledGraph& g1, const LabeledGraph& g2);

DegreeSequence degree_sequence_of(const LabeledGraph& g);

bool is_connected(const LabeledGraph& g);
bool is_bipartite(const LabeledGraph& g);
bool is_triangle_free(const LabeledGraph& g);

// New graph with vertex i carrying the adjacency of old_of[i].
LabeledGraph relabel(const LabeledGraph& g, const std::vector<int>& old_of);

// Induced subgraph on the given vertices; vertex i of the result is
// vertices[i].
LabeledGraph induced_subgraph(const LabeledGraph& g,
                              const std::vector<int>& vertices);

}  // namespace switchlab
