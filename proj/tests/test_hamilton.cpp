#include "doctest.h"
#include "switchlab/hamilton.hpp"
#include "switchlab/named_graphs.hpp"

using namespace switchlab;

namespace {

void check_valid_cycle(const LabeledGraph& g, const std::vector<int>& cycle) {
  REQUIRE(static_cast<int>(cycle.size()) == g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : cycle) {
    REQUIRE(!seen[v]);
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
    CHECK(g.has_edge(cycle[i], cycle[i + 1]));
  CHECK(g.has_edge(cycle.back(), cycle.front()));
}

LabeledGraph petersen() {
  return LabeledGraph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace

TEST_CASE("hamiltonian cycle on cycles and bipartite graphs") {
  const auto c5 = cycle_graph(5);
  auto res = hamiltonian_cycle(c5);
  REQUIRE(res.found());
  check_valid_cycle(c5, res.cycle);

  const auto k66 = k66_minus_matching();
  res = hamiltonian_cycle(k66);
  REQUIRE(res.found());
  check_valid_cycle(k66, res.cycle);
}

TEST_CASE("hamiltonian cycle fails on stars and trees") {
  CHECK(hamiltonian_cycle(complete_bipartite(1, 3)).verdict ==
        HamiltonResult::Verdict::None);
  CHECK(hamiltonian_cycle(path_graph(4)).verdict ==
        HamiltonResult::Verdict::None);
  // unbalanced complete bipartite graphs have no Hamiltonian cycle
  CHECK(hamiltonian_cycle(complete_bipartite(2, 3)).verdict ==
        HamiltonResult::Verdict::None);
}

TEST_CASE("petersen graph is not hamiltonian") {
  CHECK(hamiltonian_cycle(petersen()).verdict == HamiltonResult::Verdict::None);
}

TEST_CASE("small-order conventions") {
  CHECK(hamiltonian_cycle(complete_graph(1)).verdict ==
        HamiltonResult::Verdict::K1);
  CHECK(hamiltonian_cycle(complete_graph(2)).verdict ==
        HamiltonResult::Verdict::K2);
  CHECK(hamiltonian_cycle(LabeledGraph(2)).verdict ==
        HamiltonResult::Verdict::None);
}

TEST_CASE("transposition graphs are hamiltonian up to k=4") {
  for (int k = 3; k <= 4; ++k) {
    const auto t = transposition_graph(k);
    auto res = hamiltonian_cycle(t);
    REQUIRE(res.found());
    check_valid_cycle(t, res.cycle);
  }
}

TEST_CASE("budget exhaustion is a distinct verdict") {
  CHECK(hamiltonian_cycle(transposition_graph(4), 3).verdict ==
        HamiltonResult::Verdict::Budget);
  // enough budget flips it back to a definite answer
  CHECK(hamiltonian_cycle(transposition_graph(4)).found());
  // exhaustion never converts a "no" into "budget" when the search finishes
  CHECK(hamiltonian_cycle(petersen(), 5000000).verdict ==
        HamiltonResult::Verdict::None);
}

TEST_CASE("deterministic output") {
  const auto g = k66_minus_matching();
  const auto a = hamiltonian_cycle(g);
  const auto b = hamiltonian_cycle(g);
  CHECK(a.cycle == b.cycle);
}
