// Independent test-only oracles. Everything here is deliberately brute force
// and kept apart from the implementation paths it checks.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "switchlab/labeled_graph.hpp"

namespace oracles {

using switchlab::LabeledGraph;

// Havel-Hakimi reduction.
inline bool havel_hakimi(std::vector<int> d) {
  for (;;) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    if (d[0] == 0) return true;
    const int t = d[0];
    if (t > static_cast<int>(d.size()) - 1) return false;
    d.erase(d.begin());
    for (int i = 0; i < t; ++i)
      if (--d[i] < 0) return false;
  }
}

// All graphs on [n] whose degree vector is descending by label and equals
// the given terms, by scanning every edge subset. Usable for n <= 6.
inline std::vector<LabeledGraph> brute_force_realizations(
    const std::vector<int>& terms) {
  const int n = static_cast<int>(terms.size());
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<LabeledGraph> out;
  for (long long mask = 0; mask < (1LL << slots.size()); ++mask) {
    LabeledGraph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    if (g.degrees() == terms) out.push_back(std::move(g));
  }
  return out;
}

// Exhaustive permutation check, usable for n <= 8.
inline bool permutation_isomorphic(const LabeledGraph& g,
                                   const LabeledGraph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        ok = g.has_edge(u, v) == h.has_edge(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Split test straight from the definition: some vertex subset is a clique
// and its complement is independent. Usable for n <= 15 or so.
inline bool split_by_partition_search(const LabeledGraph& g) {
  const int n = g.vertex_count();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        const bool bu = mask >> u & 1, bv = mask >> v & 1;
        if (bu && bv) ok = g.has_edge(u, v);
        if (!bu && !bv) ok = !g.has_edge(u, v);
      }
    if (ok) return true;
  }
  return false;
}

// Pseudo-split test from the structural definition: independent set V1,
// clique V2, and an optional chordless-5-cycle part V3 with V2 complete and
// V1 anticomplete to it.
inline bool pseudo_split_structural(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (split_by_partition_search(g)) return true;  // V3 empty
  if (n < 5) return false;
  std::vector<int> pick(5);
  std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
    if (idx == 5) {
      LabeledGraph mid = induced_subgraph(g, pick);
      if (!(mid.edge_count() == 5 && permutation_isomorphic(
                                         mid, switchlab::LabeledGraph::from_edges(
                                                  5, {{0, 1}, {1, 2}, {2, 3},
                                                      {3, 4}, {4, 0}}))))
        return false;
      std::vector<char> in_mid(n, 0);
      for (int v : pick) in_mid[v] = 1;
      std::vector<int> v1, v2;
      for (int v = 0; v < n; ++v) {
        if (in_mid[v]) continue;
        int cnt = 0;
        for (int m : pick) cnt += g.has_edge(v, m);
        if (cnt == 5)
          v2.push_back(v);
        else if (cnt == 0)
          v1.push_back(v);
        else
          return false;
      }
      for (std::size_t i = 0; i < v2.size(); ++i)
        for (std::size_t j = i + 1; j < v2.size(); ++j)
          if (!g.has_edge(v2[i], v2[j])) return false;
      for (std::size_t i = 0; i < v1.size(); ++i)
        for (std::size_t j = i + 1; j < v1.size(); ++j)
          if (g.has_edge(v1[i], v1[j])) return false;
      for (int a : v1)
        for (int b : v2)
          (void)a, (void)b;  // V1-V2 edges are unconstrained
      return true;
    }
    for (int v = from; v < n; ++v) {
      pick[idx] = v;
      if (choose(idx + 1, v + 1)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

// P4-reducible from the definition: every vertex lies in at most one induced
// path on four vertices.
inline bool p4_reducible_definitional(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> count(n, 0);
  std::vector<int> vs(4);
  for (vs[0] = 0; vs[0] < n; ++vs[0])
    for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
      for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
        for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3]) {
          LabeledGraph sub = induced_subgraph(g, vs);
          // the path is the only 4-vertex graph with degrees (2,2,1,1)
          std::vector<int> deg = sub.degrees();
          std::sort(deg.begin(), deg.end(), std::greater<int>());
          if (deg != std::vector<int>{2, 2, 1, 1}) continue;
          for (int v : vs)
            if (++count[v] > 1) return false;
        }
  return true;
}

// Alternating 4-cycles: 4-sets {a,b,c,d} with ab, cd edges and ad, bc
// non-edges under some labeling.
inline std::set<std::vector<int>> alternating_four_cycle_sets(
    const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::set<std::vector<int>> out;
  auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (c == a || c == b || d == a || d == b) continue;
      const bool one = !g.has_edge(a, d) && !g.has_edge(b, c);
      const bool two = !g.has_edge(a, c) && !g.has_edge(b, d);
      if (one || two) {
        std::vector<int> s{a, b, c, d};
        std::sort(s.begin(), s.end());
        out.insert(std::move(s));
      }
    }
  return out;
}

// Matrogenic from the definition: the alternating-4-cycle vertex sets must
// satisfy the matroid circuit-exchange axiom (sizes are uniform, so the
// other circuit axioms hold for free).
inline bool matrogenic_by_matroid_axioms(const LabeledGraph& g) {
  const auto circuits = alternating_four_cycle_sets(g);
  std::vector<std::vector<int>> cs(circuits.begin(), circuits.end());
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::vector<int> common, uni;
      std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(),
                            cs[j].end(), std::back_inserter(common));
      std::set_union(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(),
                     std::back_inserter(uni));
      for (int e : common) {
        std::vector<int> rest;
        for (int v : uni)
          if (v != e) rest.push_back(v);
        bool found = false;
        // look for a circuit inside rest
        const int k = static_cast<int>(rest.size());
        for (int m = 0; m < (1 << k) && !found; ++m) {
          if (std::popcount(static_cast<unsigned>(m)) != 4) continue;
          std::vector<int> cand;
          for (int t = 0; t < k; ++t)
            if (m >> t & 1) cand.push_back(rest[t]);
          found = circuits.count(cand) > 0;
        }
        if (!found) return false;
      }
    }
  return true;
}

// Deterministic random graph corpus.
inline std::vector<LabeledGraph> random_graphs(int count, int max_n,
                                               unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<LabeledGraph> out;
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> nd(1, max_n);
    const int n = nd(rng);
    LabeledGraph g(n);
    std::uniform_int_distribution<int> pd(0, 99);
    const int p = pd(rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < p) g.add_edge(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

inline LabeledGraph random_relabel(const LabeledGraph& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace oracles
