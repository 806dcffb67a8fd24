#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "switchlab/errors.hpp"
#include "switchlab/limits.hpp"

namespace switchlab {

// Degree sequence of a simple graph. Terms are stored in descending order;
// the sequence is never empty and terms are never negative.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> terms);

  int size() const { return static_cast<int>(terms_.size()); }
  int term(int i) const { return terms_[i]; }  // 0-based position
  const std::vector<int>& terms() const { return terms_; }
  long long sum() const;

  bool operator==(const DegreeSequence&) const = default;
  bool operator<(const DegreeSequence& o) const { return terms_ < o.terms_; }

  std::string str() const;  // "3,2,1,1,1"

 private:
  std::vector<int> terms_;
};

// Degree sequence of a split graph with the clique-side and independent-side
// degree lists kept separately, each descending. Either side may be empty,
// but not both.
class SplittedSequence {
 public:
  SplittedSequence(std::vector<int> clique_terms, std::vector<int> indep_terms);

  const std::vector<int>& clique_terms() const { return clique_; }
  const std::vector<int>& indep_terms() const { return indep_; }
  int clique_size() const { return static_cast<int>(clique_.size()); }
  int indep_size() const { return static_cast<int>(indep_.size()); }
  int size() const { return clique_size() + indep_size(); }

  DegreeSequence unsplitted() const;

  bool operator==(const SplittedSequence&) const = default;
  bool operator<(const SplittedSequence& o) const {
    return std::tie(clique_, indep_) < std::tie(o.clique_, o.indep_);
  }

  std::string str() const;  // "2,2;1,1"

 private:
  std::vector<int> clique_, indep_;
};

// Comma- or space-separated integers, any order.
DegreeSequence parse_sequence(std::string_view text);

// "2,2;1,1" with a mandatory semicolon; either side may be empty.
SplittedSequence parse_splitted(std::string_view text);

// Erdos-Gallai test. The test suite keeps an independent Havel-Hakimi oracle.
bool is_graphical(const DegreeSequence& d);

// Term i of the result is n-1-d_{n+1-i}; an involution on well-formed input.
DegreeSequence complement_sequence(const DegreeSequence& d);

// q = max{ i : d_i >= i-1 }, 1-based.
int split_partition_index(const DegreeSequence& d);

// Drops trailing zeros, keeping at least one term.
DegreeSequence strip_trailing_zeros(const DegreeSequence& d);

// (p2;p1) o q: terms of p2 gain |q|, terms of q gain |p2|, terms of p1 close
// the sequence; the concatenation is already descending. Throws NotSplitError
// if p has no split-graph realization, NotGraphicalError if q is not
// graphical.
DegreeSequence compose_sequences(const SplittedSequence& p,
                                 const DegreeSequence& q,
                                 const Limits& lim = Limits{});

}  // namespace switchlab
