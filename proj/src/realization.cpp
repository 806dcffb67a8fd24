#include "switchlab/realization.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace switchlab {

TwoSwitch TwoSwitch::normalized() const {
  std::array<TwoSwitch, 4> forms{{{a, b, c, d}, {b, a, d, c}, {c, d, a, b}, {d, c, b, a}}};
  return *std::min_element(forms.begin(), forms.end());
}

bool TwoSwitch::operator<(const TwoSwitch& o) const {
  return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
}

namespace {

bool descending_graphical(std::vector<int> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<int>());
  long long sum = 0;
  for (int t : terms) sum += t;
  if (sum % 2 != 0) return false;
  const int n = static_cast<int>(terms.size());
  long long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += terms[k - 1];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(terms[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

// Backtracking edge assignment: vertex u picks its neighbors among higher
// indices in ascending order, which yields realizations in lexicographic
// edge-set order. A branch survives only if the residual degrees on the
// untouched suffix are still graphical.
struct Enumerator {
  const Limits& lim;
  int n;
  std::vector<int> residual;
  LabeledGraph cur;
  std::vector<LabeledGraph> out;

  Enumerator(const DegreeSequence& d, const Limits& limits)
      : lim(limits), n(d.size()), residual(d.terms()), cur(d.size()) {}

  bool suffix_ok(int from) const {
    if (from >= n) return true;
    return descending_graphical(
        std::vector<int>(residual.begin() + from, residual.end()));
  }

  void emit() {
    if (static_cast<long long>(out.size()) >= lim.max_realizations)
      throw BoundExceededError(
          "more than " + std::to_string(lim.max_realizations) +
              " realizations",
          static_cast<long long>(out.size()));
    out.push_back(cur);
  }

  void assign(int u) {
    if (u == n) {
      emit();
      return;
    }
    pick(u, u + 1, residual[u]);
  }

  void pick(int u, int from, int need) {
    if (need == 0) {
      if (suffix_ok(u + 1)) assign(u + 1);
      return;
    }
    for (int v = from; v + need <= n; ++v) {
      if (residual[v] == 0) continue;
      cur.add_edge(u, v);
      --residual[u];
      --residual[v];
      pick(u, v + 1, need - 1);
      cur.remove_edge(u, v);
      ++residual[u];
      ++residual[v];
    }
  }
};

}  // namespace

std::vector<LabeledGraph> enumerate_realizations(const DegreeSequence& d,
                                                 const Limits& lim) {
  if (d.size() > lim.max_n)
    throw BoundExceededError("sequence length " + std::to_string(d.size()) +
                             " exceeds max_n=" + std::to_string(lim.max_n));
  if (!is_graphical(d))
    throw NotGraphicalError(d.str() + " is not graphical");
  Enumerator e(d, lim);
  e.assign(0);
  return std::move(e.out);
}

std::vector<TwoSwitch> two_switches(const LabeledGraph& g) {
  const auto es = g.edges();
  std::vector<TwoSwitch> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto [a, b] = es[i];
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [c, d] = es[j];
      if (c == a || c == b || d == a || d == b) continue;
      if (!g.has_edge(a, d) && !g.has_edge(b, c))
        out.push_back(TwoSwitch{a, b, c, d}.normalized());
      if (!g.has_edge(a, c) && !g.has_edge(b, d))
        out.push_back(TwoSwitch{a, b, d, c}.normalized());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph apply_two_switch(const LabeledGraph& g, const TwoSwitch& s) {
  const int n = g.vertex_count();
  const std::array<int, 4> vs{s.a, s.b, s.c, s.d};
  for (int v : vs)
    if (v < 0 || v >= n) throw InvalidSwitchError("switch vertex out of range");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) throw InvalidSwitchError("switch vertices not distinct");
  if (!g.has_edge(s.a, s.b) || !g.has_edge(s.c, s.d))
    throw InvalidSwitchError("switch requires edges ab and cd");
  if (g.has_edge(s.a, s.d) || g.has_edge(s.b, s.c))
    throw InvalidSwitchError("switch requires non-edges ad and bc");

  LabeledGraph out = g;
  out.remove_edge(s.a, s.b);
  out.remove_edge(s.c, s.d);
  out.add_edge(s.a, s.d);
  out.add_edge(s.b, s.c);
  return out;
}

RealizationGraph realization_graph(const DegreeSequence& d, const Limits& lim) {
  auto realizations = enumerate_realizations(d, lim);
  std::unordered_map<LabeledGraph, int, GraphHash> index;
  index.reserve(realizations.size() * 2);
  for (std::size_t i = 0; i < realizations.size(); ++i)
    index.emplace(realizations[i], static_cast<int>(i));

  LabeledGraph meta(static_cast<int>(realizations.size()));
  for (std::size_t i = 0; i < realizations.size(); ++i) {
    for (const TwoSwitch& s : two_switches(realizations[i])) {
      auto it = index.find(apply_two_switch(realizations[i], s));
      if (it == index.end())
        throw std::logic_error("2-switch left the realization set");
      meta.add_edge(static_cast<int>(i), it->second);
    }
  }
  return RealizationGraph{d, std::move(realizations), std::move(meta)};
}

LabeledGraph compose_graphs(const LabeledGraph& p,
                            const std::vector<int>& indep_a,
                            const std::vector<int>& clique_b,
                            const LabeledGraph& q) {
  const int np = p.vertex_count();
  const int nq = q.vertex_count();
  std::vector<int> a = indep_a, b = clique_b;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  std::vector<char> seen(np, 0);
  for (int v : a) {
    if (v < 0 || v >= np || seen[v])
      throw InvalidPartitionError("bad independent-side vertex set");
    seen[v] = 1;
  }
  for (int v : b) {
    if (v < 0 || v >= np || seen[v])
      throw InvalidPartitionError("bad clique-side vertex set");
    seen[v] = 1;
  }
  if (static_cast<int>(a.size() + b.size()) != np)
    throw InvalidPartitionError("vertex sets do not partition the split graph");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (p.has_edge(a[i], a[j]))
        throw InvalidPartitionError("independent side contains an edge");
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!p.has_edge(b[i], b[j]))
        throw InvalidPartitionError("clique side misses an edge");

  const int nb = static_cast<int>(b.size());
  std::vector<int> to_new(np, -1);
  for (int i = 0; i < nb; ++i) to_new[b[i]] = i;
  for (std::size_t i = 0; i < a.size(); ++i)
    to_new[a[i]] = nb + nq + static_cast<int>(i);

  LabeledGraph out(np + nq);
  for (auto [u, v] : p.edges()) out.add_edge(to_new[u], to_new[v]);
  for (auto [u, v] : q.edges()) out.add_edge(nb + u, nb + v);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nq; ++j) out.add_edge(i, nb + j);
  return out;
}

bool is_splitted_realizable(const SplittedSequence& p, const Limits& lim) {
  thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, bool>
      memo;
  const auto key = std::make_pair(p.clique_terms(), p.indep_terms());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  bool ok = false;
  const DegreeSequence u = p.unsplitted();
  if (is_graphical(u)) {
    const int n = u.size();
    const int nb = p.clique_size();
    for (const LabeledGraph& r : enumerate_realizations(u, lim)) {
      for (unsigned mask = 0; mask < (1u << n) && !ok; ++mask) {
        if (std::popcount(mask) != nb) continue;
        std::vector<int> clique, indep, cd, id;
        for (int v = 0; v < n; ++v)
          (mask >> v & 1 ? clique : indep).push_back(v);
        for (int v : clique) cd.push_back(r.degree(v));
        for (int v : indep) id.push_back(r.degree(v));
        std::sort(cd.begin(), cd.end(), std::greater<int>());
        std::sort(id.begin(), id.end(), std::greater<int>());
        if (cd != p.clique_terms() || id != p.indep_terms()) continue;
        bool fits = true;
        for (std::size_t i = 0; i < clique.size() && fits; ++i)
          for (std::size_t j = i + 1; j < clique.size() && fits; ++j)
            fits = r.has_edge(clique[i], clique[j]);
        for (std::size_t i = 0; i < indep.size() && fits; ++i)
          for (std::size_t j = i + 1; j < indep.size() && fits; ++j)
            fits = !r.has_edge(indep[i], indep[j]);
        ok = fits;
      }
      if (ok) break;
    }
  }
  memo.emplace(key, ok);
  return ok;
}

}  // namespace switchlab
