#include <functional>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "switchlab/degree_sequence.hpp"
#include "switchlab/isomorphism.hpp"
#include "switchlab/named_graphs.hpp"
#include "switchlab/realization.hpp"
#include "switchlab/sweep.hpp"

using namespace switchlab;

namespace {

// every descending sequence of length n with terms <= max_term
void for_each_descending(int n, int max_term,
                         const std::function<void(std::vector<int>&)>& fn) {
  std::vector<int> cur(n);
  std::function<void(int, int)> rec = [&](int pos, int hi) {
    if (pos == n) {
      fn(cur);
      return;
    }
    for (int t = hi; t >= 0; --t) {
      cur[pos] = t;
      rec(pos + 1, t);
    }
  };
  rec(0, max_term);
}

}  // namespace

TEST_CASE("parse_sequence sorts and validates") {
  CHECK(parse_sequence("1,1,1,1").terms() == std::vector<int>{1, 1, 1, 1});
  CHECK(parse_sequence("1,3,1,2,1").terms() == std::vector<int>{3, 2, 1, 1, 1});
  CHECK(parse_sequence("3 2 1").terms() == std::vector<int>{3, 2, 1});
  CHECK(parse_sequence(" 2, 2 ,2 ").terms() == std::vector<int>{2, 2, 2});

  CHECK_THROWS_AS(parse_sequence("2,-1"), ParseError);
  try {
    parse_sequence("2,-1");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::NegativeDegree);
  }
  try {
    parse_sequence("2,x");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::NonIntegerToken);
  }
  try {
    parse_sequence("  ");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::EmptyInput);
  }
}

TEST_CASE("parse_splitted") {
  const auto p = parse_splitted("2,2;1,1");
  CHECK(p.clique_terms() == std::vector<int>{2, 2});
  CHECK(p.indep_terms() == std::vector<int>{1, 1});
  CHECK(p.str() == "2,2;1,1");
  CHECK(parse_splitted("0;").indep_terms().empty());
  CHECK(parse_splitted(";0").clique_terms().empty());
  CHECK(parse_splitted("1,3;2").clique_terms() == std::vector<int>{3, 1});
  CHECK_THROWS_AS(parse_splitted("1,1"), ParseError);
  CHECK_THROWS_AS(parse_splitted("1;1;1"), ParseError);
  CHECK_THROWS_AS(parse_splitted(";"), ParseError);
}

TEST_CASE("is_graphical basics") {
  CHECK(is_graphical(parse_sequence("2,2,2")));
  CHECK_FALSE(is_graphical(parse_sequence("1,1,1")));
  CHECK_FALSE(is_graphical(parse_sequence("3,3,1,1")));
  CHECK(is_graphical(parse_sequence("0")));
  CHECK_FALSE(is_graphical(DegreeSequence({6, 6, 6})));  // terms exceed n-1
}

TEST_CASE("is_graphical agrees with Havel-Hakimi on n <= 7, terms <= 6") {
  for (int n = 1; n <= 7; ++n) {
    long long disagreements = 0;
    for_each_descending(n, 6, [&](std::vector<int>& terms) {
      const bool eg = is_graphical(DegreeSequence(terms));
      if (eg != oracles::havel_hakimi(terms)) ++disagreements;
    });
    CHECK(disagreements == 0);
  }
}

TEST_CASE("complement_sequence") {
  CHECK(complement_sequence(parse_sequence("1,1,1,1")).terms() ==
        std::vector<int>{2, 2, 2, 2});
  CHECK(complement_sequence(parse_sequence("3,3,3,1,1,1")).terms() ==
        std::vector<int>{4, 4, 4, 2, 2, 2});
  CHECK(complement_sequence(parse_sequence("0")).terms() == std::vector<int>{0});
}

TEST_CASE("complement_sequence is an involution on graphical sequences") {
  for (const auto& d : graphical_sequences_up_to(7))
    CHECK(complement_sequence(complement_sequence(d)) == d);
}

TEST_CASE("compose_sequences") {
  CHECK(compose_sequences(parse_splitted("2,2;1,1"), parse_sequence("1,1,1,1"))
            .str() == "6,6,3,3,3,3,1,1");
  CHECK(compose_sequences(parse_splitted(";0"), parse_sequence("1,1")).str() ==
        "1,1,0");
  const auto triangle_seq =
      compose_sequences(parse_splitted("0;"), parse_sequence("1,1"));
  CHECK(triangle_seq.str() == "2,2,2");
  // a dominating vertex over an edge realizes as a triangle
  const auto rs = enumerate_realizations(triangle_seq);
  REQUIRE(rs.size() == 1);
  CHECK(is_isomorphic(rs[0], complete_graph(3)));

  CHECK_THROWS_AS(
      compose_sequences(parse_splitted("2,2;1,1"), parse_sequence("1,1,1")),
      NotGraphicalError);
  CHECK_THROWS_AS(compose_sequences(parse_splitted("3;"), parse_sequence("0")),
                  NotSplitError);
  // independent-side degree larger than the clique side can provide
  CHECK_THROWS_AS(compose_sequences(parse_splitted("1,1;2"), parse_sequence("0")),
                  NotSplitError);
}

TEST_CASE("compose_sequences length and sum rules") {
  // small splitted sequences that actually realize, composed with small tails
  std::vector<SplittedSequence> ps;
  for (int bc = 0; bc <= 3; ++bc) {
    for (int ic = 0; ic <= 3 - bc; ++ic) {
      if (bc + ic == 0) continue;
      std::vector<int> beta(bc), gamma(ic);
      std::function<void(int)> fill_gamma = [&](int i) {
        if (i == ic) {
          SplittedSequence p(beta, gamma);
          if (is_splitted_realizable(p)) ps.push_back(p);
          return;
        }
        for (int t = 0; t <= bc; ++t) {
          gamma[i] = t;
          fill_gamma(i + 1);
        }
      };
      std::function<void(int)> fill_beta = [&](int i) {
        if (i == bc) {
          fill_gamma(0);
          return;
        }
        for (int t = 0; t <= bc + ic - 1; ++t) {
          beta[i] = t;
          fill_beta(i + 1);
        }
      };
      fill_beta(0);
    }
  }
  REQUIRE(ps.size() > 4);

  int cases = 0;
  for (const auto& p : ps) {
    for (const auto& q : graphical_sequences_up_to(4)) {
      const auto composed = compose_sequences(p, q);
      CHECK(composed.size() == p.size() + q.size());
      CHECK(is_graphical(composed));
      long long sum_p = 0;
      for (int t : p.clique_terms()) sum_p += t;
      for (int t : p.indep_terms()) sum_p += t;
      CHECK(composed.sum() ==
            sum_p + q.sum() + 2LL * p.clique_size() * q.size());
      ++cases;
    }
  }
  CHECK(cases > 50);
}

TEST_CASE("split_partition_index") {
  CHECK(split_partition_index(parse_sequence("3,3,3,1,1,1")) == 3);
  CHECK(split_partition_index(parse_sequence("0")) == 1);
  CHECK(split_partition_index(parse_sequence("2,2,1,1")) == 2);
  CHECK(split_partition_index(parse_sequence("1,1")) == 2);
}

TEST_CASE("strip_trailing_zeros") {
  CHECK(strip_trailing_zeros(parse_sequence("1,1,0")).str() == "1,1");
  CHECK(strip_trailing_zeros(parse_sequence("1,1,1,1")).str() == "1,1,1,1");
  CHECK(strip_trailing_zeros(parse_sequence("0,0,0")).str() == "0");
}
