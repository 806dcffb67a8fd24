#include "switchlab/tyshkevich.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace switchlab {

std::optional<std::pair<int, int>> find_split_off(const DegreeSequence& d,
                                                  const Limits& lim) {
  if (!is_graphical(d))
    throw NotGraphicalError(d.str() + " is not graphical");
  const int n = d.size();
  const auto& t = d.terms();
  std::vector<long long> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + t[i];

  for (int s = 1; s < n; ++s) {
    for (int q = 0; q <= s; ++q) {
      const int p = s - q;
      // clique side must reach the whole middle plus its own block
      if (p > 0 && t[p - 1] < n - q - 1) continue;
      // independent side sees only its own clique
      if (q > 0 && t[n - q] > p) continue;
      // degree-sum equality; forces the split structure in every realization
      const long long lhs = prefix[p];
      const long long rhs = static_cast<long long>(p) * (n - q - 1) +
                            (prefix[n] - prefix[n - q]);
      if (lhs != rhs) continue;

      const int m = n - s;
      std::vector<int> beta(t.begin(), t.begin() + p);
      for (int& x : beta) x -= m;
      std::vector<int> gamma(t.begin() + (n - q), t.end());
      std::vector<int> mid(t.begin() + p, t.begin() + (n - q));
      for (int& x : mid) x -= p;
      if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; }))
        continue;
      if (std::any_of(mid.begin(), mid.end(), [](int x) { return x < 0; }))
        continue;
      if (!is_graphical(DegreeSequence(mid))) continue;
      if (!is_splitted_realizable(SplittedSequence(beta, gamma), lim)) continue;
      return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

CanonicalDecomposition canonical_decomposition_seq(const DegreeSequence& d,
                                                   const Limits& lim) {
  std::vector<SplittedSequence> components;
  DegreeSequence cur = d;
  for (;;) {
    auto split = find_split_off(cur, lim);
    if (!split) break;
    const auto [p, q] = *split;
    const int n = cur.size();
    const int m = n - p - q;
    const auto& t = cur.terms();
    std::vector<int> beta(t.begin(), t.begin() + p);
    for (int& x : beta) x -= m;
    std::vector<int> gamma(t.begin() + (n - q), t.end());
    std::vector<int> mid(t.begin() + p, t.begin() + (n - q));
    for (int& x : mid) x -= p;
    components.emplace_back(std::move(beta), std::move(gamma));
    cur = DegreeSequence(std::move(mid));
  }
  return CanonicalDecomposition{std::move(components), std::move(cur)};
}

bool is_indecomposable_seq(const DegreeSequence& d, const Limits& lim) {
  return !find_split_off(d, lim).has_value();
}

DegreeSequence recompose(const CanonicalDecomposition& dec, const Limits& lim) {
  DegreeSequence cur = dec.tail;
  for (auto it = dec.split_components.rbegin();
       it != dec.split_components.rend(); ++it)
    cur = compose_sequences(*it, cur, lim);
  return cur;
}

namespace {

bool clique_in(const LabeledGraph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

bool independent_in(const LabeledGraph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

std::vector<int> degree_sorted_vertices(const LabeledGraph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
    return g.degree(u) > g.degree(v);
  });
  return order;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> unique_split_partition(
    const LabeledGraph& s) {
  const int n = s.vertex_count();
  const DegreeSequence d = degree_sequence_of(s);
  const int q = split_partition_index(d);
  const auto order = degree_sorted_vertices(s);

  auto attempt = [&](const std::vector<int>& clique)
      -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
    std::vector<char> in_clique(n, 0);
    for (int v : clique) in_clique[v] = 1;
    std::vector<int> indep;
    for (int v = 0; v < n; ++v)
      if (!in_clique[v]) indep.push_back(v);
    if (!clique_in(s, clique) || !independent_in(s, indep)) return std::nullopt;
    std::vector<int> b = clique;
    std::sort(b.begin(), b.end());
    return std::make_pair(std::move(indep), std::move(b));
  };

  std::vector<int> base(order.begin(), order.begin() + q);
  if (auto r = attempt(base)) return *r;

  // equal degrees across the boundary: the q-th slot may be filled by any
  // vertex of the tied degree class
  if (q > 0 && q < n && s.degree(order[q - 1]) == s.degree(order[q])) {
    const int tied = s.degree(order[q - 1]);
    int lo = q - 1, hi = q;
    while (lo > 0 && s.degree(order[lo - 1]) == tied) --lo;
    while (hi < n && s.degree(order[hi]) == tied) ++hi;
    const int need = q - lo;
    const int block = hi - lo;
    for (unsigned mask = 0; mask < (1u << block); ++mask) {
      if (std::popcount(mask) != need) continue;
      std::vector<int> clique(order.begin(), order.begin() + lo);
      for (int i = 0; i < block; ++i)
        if (mask >> i & 1) clique.push_back(order[lo + i]);
      if (auto r = attempt(clique)) return *r;
    }
  }
  throw NotSplitError("graph admits no clique/independent-set partition");
}

GraphDecomposition canonical_decomposition_graph(const LabeledGraph& g,
                                                 const Limits& lim) {
  const int n = g.vertex_count();
  GraphDecomposition dec{{}, LabeledGraph(0), {}, degree_sorted_vertices(g)};
  const LabeledGraph h = relabel(g, dec.sorted_to_orig);

  auto orig_labels = [&](int from, int to) {
    std::vector<int> out(dec.sorted_to_orig.begin() + from,
                         dec.sorted_to_orig.begin() + to);
    std::sort(out.begin(), out.end());
    return out;
  };

  int lo = 0, hi = n;
  for (;;) {
    std::vector<int> mid_terms;
    mid_terms.reserve(hi - lo);
    for (int i = lo; i < hi; ++i) mid_terms.push_back(h.degree(i) - lo);
    const DegreeSequence mid(mid_terms);
    auto split = find_split_off(mid, lim);
    if (!split) break;
    const auto [p, q] = *split;

    std::vector<int> b_pos, a_pos, m_pos;
    for (int i = lo; i < lo + p; ++i) b_pos.push_back(i);
    for (int i = hi - q; i < hi; ++i) a_pos.push_back(i);
    for (int i = lo + p; i < hi - q; ++i) m_pos.push_back(i);

    if (!clique_in(h, b_pos) || !independent_in(h, a_pos))
      throw std::logic_error("decomposition: component structure violated");
    for (int b : b_pos)
      for (int m : m_pos)
        if (!h.has_edge(b, m))
          throw std::logic_error("decomposition: clique not complete to middle");
    for (int a : a_pos)
      for (int m : m_pos)
        if (h.has_edge(a, m))
          throw std::logic_error(
              "decomposition: independent side touches middle");

    std::vector<int> comp_vertices = b_pos;
    comp_vertices.insert(comp_vertices.end(), a_pos.begin(), a_pos.end());
    GraphComponent comp{induced_subgraph(h, comp_vertices), {}, {},
                        orig_labels(hi - q, hi), orig_labels(lo, lo + p)};
    for (int i = 0; i < p; ++i) comp.clique.push_back(i);
    for (int i = 0; i < q; ++i) comp.indep.push_back(p + i);
    dec.split_components.push_back(std::move(comp));
    lo += p;
    hi -= q;
  }

  std::vector<int> tail_pos;
  for (int i = lo; i < hi; ++i) tail_pos.push_back(i);
  dec.tail = induced_subgraph(h, tail_pos);
  dec.orig_tail = orig_labels(lo, hi);
  return dec;
}

LabeledGraph recompose_graph(const GraphDecomposition& dec) {
  LabeledGraph cur = dec.tail;
  for (auto it = dec.split_components.rbegin();
       it != dec.split_components.rend(); ++it)
    cur = compose_graphs(it->graph, it->indep, it->clique, cur);
  const int n = cur.vertex_count();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[dec.sorted_to_orig[i]] = i;
  return relabel(cur, inv);
}

std::vector<std::vector<int>> component_vertex_sets(
    const GraphDecomposition& dec) {
  std::vector<std::vector<int>> out;
  for (const auto& comp : dec.split_components) {
    std::vector<int> vs = comp.orig_clique;
    vs.insert(vs.end(), comp.orig_indep.begin(), comp.orig_indep.end());
    std::sort(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  out.push_back(dec.orig_tail);
  return out;
}

}  // namespace switchlab
