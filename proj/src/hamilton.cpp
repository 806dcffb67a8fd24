#include "switchlab/hamilton.hpp"

#include <algorithm>

namespace switchlab {

namespace {

enum class SearchOutcome { Found, Exhausted, Budget };

struct HamiltonSearch {
  const LabeledGraph& g;
  int n;
  long long budget;
  long long expansions = 0;
  std::vector<int> path;
  std::vector<char> visited;
  std::vector<int> scratch;

  explicit HamiltonSearch(const LabeledGraph& graph, long long b)
      : g(graph), n(graph.vertex_count()), budget(b), visited(n, 0) {}

  // Every unvisited vertex still needs two cycle neighbors drawn from the
  // unvisited region plus the path ends; the unvisited region must also stay
  // reachable from the current end.
  bool viable(int cur) {
    for (int v = 0; v < n; ++v) {
      if (visited[v]) continue;
      int avail = 0;
      for (int w : g.neighbors(v))
        if (!visited[w] || w == cur || w == 0) ++avail;
      if (avail < 2) return false;
    }
    scratch.assign(n, 0);
    scratch[cur] = 1;
    std::vector<int> stack{cur};
    int reached = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (scratch[w] || (visited[w] && w != cur)) continue;
        scratch[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    int unvisited = n - static_cast<int>(path.size());
    return reached >= unvisited;
  }

  SearchOutcome extend(int cur) {
    if (++expansions > budget) return SearchOutcome::Budget;
    if (static_cast<int>(path.size()) == n)
      return g.has_edge(cur, 0) ? SearchOutcome::Found
                                : SearchOutcome::Exhausted;
    if (!viable(cur)) return SearchOutcome::Exhausted;
    for (int v : g.neighbors(cur)) {
      if (visited[v]) continue;
      visited[v] = 1;
      path.push_back(v);
      SearchOutcome r = extend(v);
      if (r != SearchOutcome::Exhausted) return r;
      path.pop_back();
      visited[v] = 0;
    }
    return SearchOutcome::Exhausted;
  }
};

}  // namespace

HamiltonResult hamiltonian_cycle(const LabeledGraph& g, long long budget) {
  const int n = g.vertex_count();
  using V = HamiltonResult::Verdict;
  if (n == 1) return {V::K1, {}};
  if (n == 2) return {g.has_edge(0, 1) ? V::K2 : V::None, {}};
  if (!is_connected(g)) return {V::None, {}};
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return {V::None, {}};

  HamiltonSearch search(g, budget);
  search.visited[0] = 1;
  search.path.push_back(0);
  switch (search.extend(0)) {
    case SearchOutcome::Found: return {V::Found, search.path};
    case SearchOutcome::Budget: return {V::Budget, {}};
    case SearchOutcome::Exhausted: return {V::None, {}};
  }
  return {V::None, {}};
}

}  // namespace switchlab
