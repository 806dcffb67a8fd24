#include "switchlab/degree_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "switchlab/realization.hpp"

namespace switchlab {

namespace {

void require_nonempty(const std::vector<int>& terms) {
  if (terms.empty())
    throw ParseError(ParseError::Kind::EmptyInput, "empty degree sequence");
}

void require_nonnegative(const std::vector<int>& terms) {
  for (int t : terms)
    if (t < 0)
      throw ParseError(ParseError::Kind::NegativeDegree,
                       "negative degree " + std::to_string(t));
}

std::vector<int> sorted_descending(std::vector<int> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<int>());
  return terms;
}

std::string join_terms(const std::vector<int>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms[i]);
  }
  return out;
}

std::vector<int> parse_terms(std::string_view text) {
  std::vector<int> terms;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw ParseError(ParseError::Kind::NonIntegerToken,
                       "not an integer: '" + token + "'");
    }
    if (pos != token.size())
      throw ParseError(ParseError::Kind::NonIntegerToken,
                       "not an integer: '" + token + "'");
    terms.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token += c;
  }
  flush();
  return terms;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms)
    : terms_(sorted_descending(std::move(terms))) {
  require_nonempty(terms_);
  require_nonnegative(terms_);
}

long long DegreeSequence::sum() const {
  return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

std::string DegreeSequence::str() const { return join_terms(terms_); }

SplittedSequence::SplittedSequence(std::vector<int> clique_terms,
                                   std::vector<int> indep_terms)
    : clique_(sorted_descending(std::move(clique_terms))),
      indep_(sorted_descending(std::move(indep_terms))) {
  if (clique_.empty() && indep_.empty())
    throw ParseError(ParseError::Kind::EmptyInput, "empty splitted sequence");
  require_nonnegative(clique_);
  require_nonnegative(indep_);
}

DegreeSequence SplittedSequence::unsplitted() const {
  std::vector<int> all = clique_;
  all.insert(all.end(), indep_.begin(), indep_.end());
  return DegreeSequence(std::move(all));
}

std::string SplittedSequence::str() const {
  return join_terms(clique_) + ";" + join_terms(indep_);
}

DegreeSequence parse_sequence(std::string_view text) {
  return DegreeSequence(parse_terms(text));
}

SplittedSequence parse_splitted(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError(ParseError::Kind::BadFormat,
                     "splitted sequence needs a ';' separator");
  if (text.find(';', semi + 1) != std::string_view::npos)
    throw ParseError(ParseError::Kind::BadFormat,
                     "splitted sequence has more than one ';'");
  return SplittedSequence(parse_terms(text.substr(0, semi)),
                          parse_terms(text.substr(semi + 1)));
}

bool is_graphical(const DegreeSequence& d) {
  const auto& t = d.terms();
  const int n = d.size();
  if (d.sum() % 2 != 0) return false;
  long long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += t[k - 1];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(t[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

DegreeSequence complement_sequence(const DegreeSequence& d) {
  const int n = d.size();
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = n - 1 - d.term(n - 1 - i);
  return DegreeSequence(std::move(out));
}

int split_partition_index(const DegreeSequence& d) {
  int q = 0;
  for (int i = 1; i <= d.size(); ++i)
    if (d.term(i - 1) >= i - 1) q = i;
  return q;
}

DegreeSequence strip_trailing_zeros(const DegreeSequence& d) {
  std::vector<int> t = d.terms();
  while (t.size() > 1 && t.back() == 0) t.pop_back();
  return DegreeSequence(std::move(t));
}

DegreeSequence compose_sequences(const SplittedSequence& p,
                                 const DegreeSequence& q, const Limits& lim) {
  if (!is_graphical(q))
    throw NotGraphicalError("composition tail " + q.str() + " is not graphical");
  if (!is_splitted_realizable(p, lim))
    throw NotSplitError("no split graph realizes (" + p.str() + ")");

  std::vector<int> out;
  out.reserve(p.size() + q.size());
  for (int b : p.clique_terms()) out.push_back(b + q.size());
  for (int x : q.terms()) out.push_back(x + p.clique_size());
  for (int g : p.indep_terms()) out.push_back(g);
  // valid inputs always concatenate in descending order
  if (!std::is_sorted(out.begin(), out.end(), std::greater<int>()))
    throw std::logic_error("composition is not descending");
  return DegreeSequence(std::move(out));
}

}  // namespace switchlab
