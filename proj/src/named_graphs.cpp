#include "switchlab/named_graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace switchlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int param(const NamedGraph& g, std::size_t i) {
  require(g.params.size() > i, "missing generator parameter");
  return g.params[i];
}

}  // namespace

LabeledGraph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  LabeledGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  LabeledGraph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

LabeledGraph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  LabeledGraph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

LabeledGraph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite needs m,n >= 1");
  LabeledGraph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

LabeledGraph k_net(int k) {
  require(k >= 1, "net needs k >= 1");
  LabeledGraph g(2 * k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  for (int i = 0; i < k; ++i) g.add_edge(i, k + i);
  return g;
}

LabeledGraph net_complement(int k) { return complement(k_net(k)); }

LabeledGraph transposition_graph(int k) {
  require(k >= 1, "transposition graph needs k >= 1");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, int> index;
  do {
    index[perm] = static_cast<int>(perms.size());
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  LabeledGraph g(static_cast<int>(perms.size()));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    std::vector<int> other = perms[p];
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        std::swap(other[i], other[j]);
        g.add_edge(static_cast<int>(p), index.at(other));
        std::swap(other[i], other[j]);
      }
  }
  return g;
}

LabeledGraph k66_minus_matching() {
  LabeledGraph g(12);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) g.add_edge(i, 6 + j);
  return g;
}

LabeledGraph hypercube(int m) {
  require(m >= 0, "hypercube needs m >= 0");
  require(m < 20, "hypercube dimension too large");
  LabeledGraph g(1 << m);
  for (int x = 0; x < (1 << m); ++x)
    for (int b = 0; b < m; ++b)
      if (!(x & (1 << b))) g.add_edge(x, x | (1 << b));
  return g;
}

LabeledGraph chair() {
  return LabeledGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
}

LabeledGraph kite() { return complement(chair()); }

LabeledGraph p_graph() {
  return LabeledGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
}

LabeledGraph p_complement() { return complement(p_graph()); }

LabeledGraph make_named(const NamedGraph& g) {
  switch (g.kind) {
    case GraphKind::Complete: return complete_graph(param(g, 0));
    case GraphKind::Path: return path_graph(param(g, 0));
    case GraphKind::Cycle: return cycle_graph(param(g, 0));
    case GraphKind::CompleteBipartite:
      return complete_bipartite(param(g, 0), param(g, 1));
    case GraphKind::KNet: return k_net(param(g, 0));
    case GraphKind::NetComplement: return net_complement(param(g, 0));
    case GraphKind::Transposition: return transposition_graph(param(g, 0));
    case GraphKind::K66MinusMatching: return k66_minus_matching();
    case GraphKind::Hypercube: return hypercube(param(g, 0));
    case GraphKind::Chair: return chair();
    case GraphKind::Kite: return kite();
    case GraphKind::PGraph: return p_graph();
    case GraphKind::PComplement: return p_complement();
  }
  throw std::invalid_argument("unknown graph kind");
}

}  // namespace switchlab
