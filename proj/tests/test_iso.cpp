#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "switchlab/isomorphism.hpp"
#include "switchlab/named_graphs.hpp"

using namespace switchlab;

TEST_CASE("isomorphism basics") {
  // two labelings of the same path
  const auto p1 = LabeledGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto p2 = LabeledGraph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(is_isomorphic(p1, p2));

  const auto prism = cartesian_product(complete_graph(2), complete_graph(3));
  CHECK_FALSE(is_isomorphic(complete_bipartite(3, 3), prism));

  CHECK_FALSE(is_isomorphic(complete_graph(3), path_graph(3)));
  CHECK(is_isomorphic(complete_graph(1), complete_graph(1)));
}

TEST_CASE("isomorphism under random relabeling") {
  const auto k66 = k66_minus_matching();
  for (unsigned seed = 1; seed <= 5; ++seed)
    CHECK(is_isomorphic(k66, oracles::random_relabel(k66, seed)));
  const auto t4 = transposition_graph(4);
  CHECK(is_isomorphic(t4, oracles::random_relabel(t4, 99)));
}

TEST_CASE("isomorphism agrees with the permutation oracle on small graphs") {
  const auto corpus = oracles::random_graphs(60, 6, 777);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < std::min(corpus.size(), i + 6); ++j) {
      const auto& g = corpus[i];
      const auto& h = corpus[j];
      if (g.vertex_count() != h.vertex_count()) continue;
      CHECK(is_isomorphic(g, h) == oracles::permutation_isomorphic(g, h));
    }
  }
  // a handful of 7-vertex pairs, including near-misses with equal degrees
  std::mt19937 rng(31415);
  std::uniform_int_distribution<int> pd(0, 99);
  for (int round = 0; round < 12; ++round) {
    LabeledGraph g(7);
    const int p = 20 + 5 * round;
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (pd(rng) < p) g.add_edge(u, v);
    const auto shuffled = oracles::random_relabel(g, 1000 + round);
    CHECK(is_isomorphic(g, shuffled));
    // perturb one switch-like rewiring; degrees stay, structure may not
    auto h = shuffled;
    const auto es = h.edges();
    bool changed = false;
    for (std::size_t i = 0; i < es.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < es.size() && !changed; ++j) {
        auto [a, b] = es[i];
        auto [c, d] = es[j];
        if (c == a || c == b || d == a || d == b) continue;
        if (!h.has_edge(a, d) && !h.has_edge(b, c)) {
          h.remove_edge(a, b);
          h.remove_edge(c, d);
          h.add_edge(a, d);
          h.add_edge(b, c);
          changed = true;
        }
      }
    if (changed)
      CHECK(is_isomorphic(g, h) == oracles::permutation_isomorphic(g, h));
  }
}

TEST_CASE("isomorphism is an equivalence relation on a random corpus") {
  const auto corpus = oracles::random_graphs(30, 10, 4242);
  for (const auto& g : corpus) CHECK(is_isomorphic(g, g));

  // symmetry and transitivity via consistent class ids
  std::vector<int> cls(corpus.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (cls[i] != -1) continue;
    cls[i] = next++;
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      if (cls[j] != -1) continue;
      if (is_isomorphic(corpus[i], corpus[j])) cls[j] = cls[i];
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const bool same = is_isomorphic(corpus[i], corpus[j]);
      CHECK(same == is_isomorphic(corpus[j], corpus[i]));
      CHECK(same == (cls[i] == cls[j]));
    }
}

TEST_CASE("contains_induced") {
  CHECK(contains_induced(cycle_graph(5), path_graph(4)));
  const auto two_k2 = LabeledGraph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(contains_induced(complete_graph(5), two_k2));
  CHECK(contains_induced(k_net(3), path_graph(4)));
  CHECK_FALSE(contains_induced(path_graph(3), path_graph(4)));

  // witnesses really induce the pattern
  auto w = find_induced(k_net(3), path_graph(4));
  REQUIRE(w.has_value());
  CHECK(is_isomorphic(induced_subgraph(k_net(3), *w), path_graph(4)));

  // the 4-cycle contains no induced path on 4 vertices
  CHECK_FALSE(contains_induced(cycle_graph(4), path_graph(4)));
}

TEST_CASE("contains_induced agrees with subset enumeration") {
  const auto patterns = {path_graph(4), cycle_graph(4),
                         LabeledGraph::from_edges(4, {{0, 1}, {2, 3}})};
  for (const auto& g : oracles::random_graphs(25, 7, 1313)) {
    for (const auto& h : patterns) {
      if (h.vertex_count() > g.vertex_count()) continue;
      // oracle: scan all vertex subsets of the right size
      bool expect = false;
      const int n = g.vertex_count();
      for (unsigned mask = 0; mask < (1u << n) && !expect; ++mask) {
        if (std::popcount(mask) != h.vertex_count()) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) vs.push_back(v);
        expect = oracles::permutation_isomorphic(induced_subgraph(g, vs), h);
      }
      CHECK(contains_induced(g, h) == expect);
    }
  }
}
