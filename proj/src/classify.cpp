#include "switchlab/classify.hpp"

#include <algorithm>

#include "switchlab/isomorphism.hpp"
#include "switchlab/named_graphs.hpp"

namespace switchlab {

namespace {

struct Forbidden {
  std::string name;
  LabeledGraph graph;
};

LabeledGraph two_k2() {
  return LabeledGraph::from_edges(4, {{0, 1}, {2, 3}});
}

const std::vector<Forbidden>& split_forbidden() {
  static const std::vector<Forbidden> fs{
      {"2K2", two_k2()}, {"C4", cycle_graph(4)}, {"C5", cycle_graph(5)}};
  return fs;
}

const std::vector<Forbidden>& pseudo_split_forbidden() {
  static const std::vector<Forbidden> fs{{"2K2", two_k2()},
                                         {"C4", cycle_graph(4)}};
  return fs;
}

const std::vector<Forbidden>& psm_forbidden() {
  static const std::vector<Forbidden> fs{{"2K2", two_k2()},
                                         {"C4", cycle_graph(4)},
                                         {"chair", chair()},
                                         {"kite", kite()}};
  return fs;
}

const std::vector<Forbidden>& p4_reducible_forbidden() {
  static const std::vector<Forbidden> fs{{"C5", cycle_graph(5)},
                                         {"P5", path_graph(5)},
                                         {"P5-complement", complement(path_graph(5))},
                                         {"P", p_graph()},
                                         {"P-complement", p_complement()},
                                         {"chair", chair()},
                                         {"kite", kite()},
                                         {"3-net", k_net(3)},
                                         {"3-net-complement", net_complement(3)}};
  return fs;
}

bool free_of(const LabeledGraph& g, const std::vector<Forbidden>& fs) {
  for (const auto& f : fs)
    if (contains_induced(g, f.graph)) return false;
  return true;
}

std::optional<ClassReport::Witness> first_witness(
    const LabeledGraph& g, const std::vector<Forbidden>& fs) {
  for (const auto& f : fs)
    if (auto vs = find_induced(g, f.graph))
      return ClassReport::Witness{f.name, *vs};
  return std::nullopt;
}

}  // namespace

bool is_split_graph(const LabeledGraph& g) {
  return free_of(g, split_forbidden());
}

bool is_pseudo_split(const LabeledGraph& g) {
  return free_of(g, pseudo_split_forbidden());
}

bool is_pseudo_split_matrogenic(const LabeledGraph& g) {
  return free_of(g, psm_forbidden());
}

bool is_p4_reducible(const LabeledGraph& g) {
  return free_of(g, p4_reducible_forbidden());
}

ClassReport classify_graph(const LabeledGraph& g) {
  ClassReport rep;
  auto flag = [&](const char* name, const std::vector<Forbidden>& fs) {
    auto w = first_witness(g, fs);
    if (w) rep.witnesses.emplace(name, *w);
    return !w.has_value();
  };
  rep.split = flag("split", split_forbidden());
  rep.pseudo_split = flag("pseudo_split", pseudo_split_forbidden());
  rep.pseudo_split_matrogenic = flag("pseudo_split_matrogenic", psm_forbidden());
  rep.p4_reducible = flag("p4_reducible", p4_reducible_forbidden());
  rep.split_p4_reducible = rep.split && rep.p4_reducible;
  if (!rep.split_p4_reducible) {
    auto w = rep.witnesses.find(rep.split ? "p4_reducible" : "split");
    if (w != rep.witnesses.end())
      rep.witnesses.emplace("split_p4_reducible", w->second);
  }
  return rep;
}

namespace {

// k-net sequences look like (k,...,k,1,...,1) with k copies of each.
std::optional<int> net_shape(const DegreeSequence& u) {
  const int n = u.size();
  if (n % 2 != 0) return std::nullopt;
  const int k = n / 2;
  for (int i = 0; i < k; ++i)
    if (u.term(i) != k) return std::nullopt;
  for (int i = k; i < n; ++i)
    if (u.term(i) != 1) return std::nullopt;
  return k;
}

ProductPrediction::Factor classify_component(const DegreeSequence& u,
                                             bool is_tail) {
  using Factor = ProductPrediction::Factor;
  if (u.size() == 1) return Factor{Factor::Kind::K1, 0, u, is_tail};
  if (auto k = net_shape(u))
    return Factor{Factor::Kind::Transposition, *k, u, is_tail};
  if (auto k = net_shape(complement_sequence(u)))
    return Factor{Factor::Kind::Transposition, *k, u, is_tail};
  if (u == DegreeSequence({2, 2, 2, 2, 2}))
    return Factor{Factor::Kind::K66, 0, u, is_tail};
  return Factor{Factor::Kind::Unknown, 0, u, is_tail};
}

bool regular_of_degree(const LabeledGraph& g, int r) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != r) return false;
  return true;
}

// Is this meta-graph one of the allowed bipartite building blocks? Returns
// 'T' (transposition graph), 'K' (the 12-vertex 5-regular bipartite graph),
// or 0.
char resolve_block(const LabeledGraph& meta) {
  const int n = meta.vertex_count();
  if (n == 1) return 'T';  // trivial transposition graph
  if (n == 12 && regular_of_degree(meta, 5) && is_bipartite(meta) &&
      is_connected(meta) && is_isomorphic(meta, k66_minus_matching()))
    return 'K';
  long long fact = 1;
  for (int k = 2; k <= 8; ++k) {
    fact *= k;
    if (fact > n) break;
    if (fact != n) continue;
    const int deg = k * (k - 1) / 2;
    if (regular_of_degree(meta, deg) && is_bipartite(meta) &&
        is_connected(meta) && is_isomorphic(meta, transposition_graph(k)))
      return 'T';
    break;
  }
  return 0;
}

}  // namespace

ProductPrediction predict_realization_graph(const DegreeSequence& d,
                                            const Limits& lim) {
  if (!is_graphical(d))
    throw NotGraphicalError(d.str() + " is not graphical");
  const auto dec = canonical_decomposition_seq(d, lim);
  ProductPrediction out;
  for (const auto& alpha : dec.split_components)
    out.factors.push_back(classify_component(alpha.unsplitted(), false));
  out.factors.push_back(classify_component(dec.tail, true));
  return out;
}

bool verify_product_theorem(const DegreeSequence& d, const Limits& lim) {
  const auto dec = canonical_decomposition_seq(d, lim);
  const auto direct = realization_graph(d, lim);

  std::vector<DegreeSequence> parts;
  for (const auto& alpha : dec.split_components)
    parts.push_back(alpha.unsplitted());
  parts.push_back(dec.tail);

  LabeledGraph product = realization_graph(parts[0], lim).meta;
  for (std::size_t i = 1; i < parts.size(); ++i)
    product = cartesian_product(product, realization_graph(parts[i], lim).meta);
  return is_isomorphic(direct.meta, product);
}

namespace {

// Condition (c): all factors are transposition graphs plus at most one copy
// of the 12-vertex block, and their product is the realization graph.
bool product_form_check(const DegreeSequence& d, const LabeledGraph& meta,
                        const Limits& lim) {
  const auto prediction = predict_realization_graph(d, lim);
  std::vector<LabeledGraph> blocks;
  int k66_count = 0;
  for (const auto& factor : prediction.factors) {
    using Kind = ProductPrediction::Factor::Kind;
    switch (factor.kind) {
      case Kind::K1:
        blocks.push_back(complete_graph(1));
        break;
      case Kind::Transposition:
        blocks.push_back(transposition_graph(factor.k));
        break;
      case Kind::K66:
        ++k66_count;
        blocks.push_back(k66_minus_matching());
        break;
      case Kind::Unknown: {
        const LabeledGraph factor_meta =
            realization_graph(factor.component, lim).meta;
        const char kind = resolve_block(factor_meta);
        if (kind == 0) return false;
        if (kind == 'K') ++k66_count;
        blocks.push_back(factor_meta);
        break;
      }
    }
  }
  if (k66_count > 1) return false;
  LabeledGraph product = blocks[0];
  for (std::size_t i = 1; i < blocks.size(); ++i)
    product = cartesian_product(product, blocks[i]);
  return is_isomorphic(product, meta);
}

}  // namespace

TriangleFreeReport verify_triangle_free_theorem(const DegreeSequence& d,
                                                const Limits& lim) {
  const auto rg = realization_graph(d, lim);
  TriangleFreeReport rep;
  rep.bipartite = is_bipartite(rg.meta);
  rep.triangle_free = is_triangle_free(rg.meta);
  rep.product_form = product_form_check(d, rg.meta, lim);
  rep.psm_realization =
      std::any_of(rg.realizations.begin(), rg.realizations.end(),
                  [](const LabeledGraph& r) {
                    return is_pseudo_split_matrogenic(r);
                  });
  return rep;
}

HypercubeReport verify_hypercube_theorem(const DegreeSequence& d,
                                         const Limits& lim) {
  const auto rg = realization_graph(d, lim);
  HypercubeReport rep;
  rep.hypercube = is_hypercube(rg.meta);
  rep.split_p4_realization =
      std::any_of(rg.realizations.begin(), rg.realizations.end(),
                  [](const LabeledGraph& r) {
                    return is_split_graph(r) && is_p4_reducible(r);
                  });
  if (rep.hypercube) {
    const auto dec = canonical_decomposition_seq(d, lim);
    const DegreeSequence k1({0}), p4({2, 2, 1, 1});
    rep.components_ok = dec.tail == k1 || dec.tail == p4;
    for (const auto& alpha : dec.split_components) {
      const DegreeSequence u = alpha.unsplitted();
      if (u != k1 && u != p4) rep.components_ok = false;
    }
  }
  return rep;
}

HamiltonicityReport verify_hamiltonicity_corollary(const DegreeSequence& d,
                                                   const Limits& lim) {
  const auto rg = realization_graph(d, lim);
  if (!is_triangle_free(rg.meta))
    return {HamiltonicityVerdict::NotTriangleFree, {}};
  if (rg.count() == 1) return {HamiltonicityVerdict::ExemptK1, {}};
  if (rg.count() == 2) return {HamiltonicityVerdict::ExemptK2, {}};

  const auto result = hamiltonian_cycle(rg.meta, lim.hamilton_budget);
  switch (result.verdict) {
    case HamiltonResult::Verdict::Found:
      return {HamiltonicityVerdict::Hamiltonian, result.cycle};
    case HamiltonResult::Verdict::Budget:
      return {HamiltonicityVerdict::UnknownBudget, {}};
    default:
      return {HamiltonicityVerdict::NotHamiltonian, {}};
  }
}

}  // namespace switchlab
