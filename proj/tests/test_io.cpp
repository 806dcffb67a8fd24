#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "switchlab/io.hpp"
#include "switchlab/limits.hpp"
#include "switchlab/named_graphs.hpp"
#include "switchlab/tyshkevich.hpp"

using namespace switchlab;

TEST_CASE("graph text round trip") {
  const auto g = k_net(3);
  std::stringstream buf;
  write_graph_text(buf, g);
  const auto back = read_graph_text(buf);
  CHECK(back == g);
}

TEST_CASE("graph text errors") {
  std::stringstream empty("");
  CHECK_THROWS_AS(read_graph_text(empty), ParseError);
  std::stringstream self_loop("3\n1 1\n");
  CHECK_THROWS_AS(read_graph_text(self_loop), ParseError);
  std::stringstream out_of_range("3\n1 4\n");
  CHECK_THROWS_AS(read_graph_text(out_of_range), ParseError);
}

TEST_CASE("dot output") {
  const auto g = path_graph(3);
  CHECK(to_dot(g) ==
        "graph {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n");
  CHECK(to_dot(g, true) ==
        "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
}

TEST_CASE("realization graph json is frozen") {
  const auto rg = realization_graph(parse_sequence("1,1,1,1"));
  CHECK(realization_graph_json(rg).dump() ==
        R"({"sequence":[1,1,1,1],"count":3,"edges":[[0,1],[0,2],[1,2]],)"
        R"("realizations":[[[1,2],[3,4]],[[1,3],[2,4]],[[1,4],[2,3]]]})");
}

TEST_CASE("decomposition json") {
  const auto dec = canonical_decomposition_seq(parse_sequence("6,6,3,3,3,3,1,1"));
  CHECK(decomposition_json(dec).dump() ==
        R"({"components":[{"clique":[2,2],"indep":[1,1]}],"tail":[1,1,1,1]})");
  CHECK(format_decomposition(dec) == "(2,2;1,1) o (1,1,1,1)");

  const auto flat = canonical_decomposition_seq(parse_sequence("2,2,2,2,2"));
  CHECK(format_decomposition(flat) == "(2,2,2,2,2)");

  const auto k3 = canonical_decomposition_seq(parse_sequence("2,2,2"));
  CHECK(format_decomposition(k3) == "(0;) o (0;) o (0)");
}

TEST_CASE("graph decomposition json carries vertex memberships") {
  const auto p = LabeledGraph::from_edges(4, {{0, 2}, {0, 1}, {1, 3}});
  const auto q = LabeledGraph::from_edges(4, {{0, 1}, {2, 3}});
  const auto g = compose_graphs(p, {2, 3}, {0, 1}, q);
  const auto j = graph_decomposition_json(canonical_decomposition_graph(g));
  CHECK(j["components"][0]["clique_vertices"] == ordered_json({1, 2}));
  CHECK(j["components"][0]["indep_vertices"] == ordered_json({7, 8}));
  CHECK(j["tail_vertices"] == ordered_json({3, 4, 5, 6}));
}

TEST_CASE("config file and env override") {
  const std::string path = "/tmp/switchlab_test_config.txt";
  {
    std::ofstream out(path);
    out << "# caps\nmax_n = 8\nmax_realizations=123\nhamilton_budget=77\n";
  }
  const auto lim = load_config_file(path);
  CHECK(lim.max_n == 8);
  CHECK(lim.max_realizations == 123);
  CHECK(lim.hamilton_budget == 77);

  {
    std::ofstream out(path);
    out << "mystery=1\n";
  }
  CHECK_THROWS_AS(load_config_file(path), ParseError);

  setenv("SWITCHLAB_MAX_N", "6", 1);
  Limits env_lim;
  apply_env_overrides(env_lim);
  CHECK(env_lim.max_n == 6);
  unsetenv("SWITCHLAB_MAX_N");
}
