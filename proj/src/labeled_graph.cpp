#include "switchlab/labeled_graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace switchlab {

LabeledGraph::LabeledGraph(int n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_),
      degree_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

LabeledGraph LabeledGraph::from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  LabeledGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void LabeledGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
}

void LabeledGraph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
  --degree_[u];
  --degree_[v];
  --edge_count_;
}

std::vector<int> LabeledGraph::neighbors(int u) const {
  std::vector<int> out;
  out.reserve(degree_[u]);
  const std::uint64_t* r = row(u);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word) {
      int b = std::countr_zero(word);
      out.push_back(w * 64 + b);
      word &= word - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

std::size_t LabeledGraph::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(n_);
  for (std::uint64_t w : bits_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

LabeledGraph complement(const LabeledGraph& g) {
  const int n = g.vertex_count();
  LabeledGraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

LabeledGraph cartesian_product(const LabeledGraph& g1, const LabeledGraph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  LabeledGraph out(n1 * n2);
  for (int u = 0; u < n1; ++u)
    for (auto [v, x] : g2.edges()) out.add_edge(u * n2 + v, u * n2 + x);
  for (auto [u, w] : g1.edges())
    for (int v = 0; v < n2; ++v) out.add_edge(u * n2 + v, w * n2 + v);
  return out;
}

DegreeSequence degree_sequence_of(const LabeledGraph& g) {
  return DegreeSequence(g.degrees());
}

bool is_connected(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> work;
  work.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!work.empty()) {
    int u = work.front();
    work.pop();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        work.push(v);
      }
  }
  return reached == n;
}

bool is_bipartite(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::queue<int> work;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    work.push(s);
    while (!work.empty()) {
      int u = work.front();
      work.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          work.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const LabeledGraph& g) {
  const int words = g.words_per_row();
  for (auto [u, v] : g.edges()) {
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    for (int w = 0; w < words; ++w)
      if (ru[w] & rv[w]) return false;
  }
  return true;
}

LabeledGraph relabel(const LabeledGraph& g, const std::vector<int>& old_of) {
  const int n = g.vertex_count();
  std::vector<int> new_of(n);
  for (int i = 0; i < n; ++i) new_of[old_of[i]] = i;
  LabeledGraph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(new_of[u], new_of[v]);
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g,
                              const std::vector<int>& vertices) {
  const int k = static_cast<int>(vertices.size());
  LabeledGraph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

}  // namespace switchlab
