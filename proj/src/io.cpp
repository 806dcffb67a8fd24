#include "switchlab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace switchlab {

LabeledGraph read_graph_text(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1)
    throw ParseError(ParseError::Kind::BadFormat,
                     "graph file must start with a positive vertex count");
  LabeledGraph g(n);
  std::vector<int> ends;
  int x;
  while (in >> x) ends.push_back(x);
  if (!in.eof())
    throw ParseError(ParseError::Kind::BadFormat, "bad token in graph file");
  if (ends.size() % 2 != 0)
    throw ParseError(ParseError::Kind::BadFormat,
                     "graph file has a dangling edge endpoint");
  for (std::size_t i = 0; i < ends.size(); i += 2) {
    const int u = ends[i], v = ends[i + 1];
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      throw ParseError(ParseError::Kind::BadFormat,
                       "bad edge " + std::to_string(u) + " " +
                           std::to_string(v));
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const LabeledGraph& g) {
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
}

std::string to_dot(const LabeledGraph& g, bool zero_based) {
  const int off = zero_based ? 0 : 1;
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  " << v + off << ";\n";
  for (auto [u, v] : g.edges())
    out << "  " << u + off << " -- " << v + off << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

ordered_json edge_list_json(const LabeledGraph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return edges;
}

}  // namespace

ordered_json realization_graph_json(const RealizationGraph& rg) {
  ordered_json out;
  out["sequence"] = rg.sequence.terms();
  out["count"] = rg.count();
  ordered_json meta_edges = ordered_json::array();
  for (auto [i, j] : rg.meta.edges()) meta_edges.push_back({i, j});
  out["edges"] = std::move(meta_edges);
  ordered_json rs = ordered_json::array();
  for (const auto& r : rg.realizations) rs.push_back(edge_list_json(r));
  out["realizations"] = std::move(rs);
  return out;
}

ordered_json decomposition_json(const CanonicalDecomposition& dec) {
  ordered_json out;
  ordered_json comps = ordered_json::array();
  for (const auto& alpha : dec.split_components) {
    ordered_json c;
    c["clique"] = alpha.clique_terms();
    c["indep"] = alpha.indep_terms();
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);
  out["tail"] = dec.tail.terms();
  return out;
}

namespace {

ordered_json one_based(const std::vector<int>& vs) {
  ordered_json out = ordered_json::array();
  for (int v : vs) out.push_back(v + 1);
  return out;
}

}  // namespace

ordered_json graph_decomposition_json(const GraphDecomposition& dec) {
  ordered_json out;
  ordered_json comps = ordered_json::array();
  for (const auto& comp : dec.split_components) {
    ordered_json c;
    std::vector<int> cd, id;
    for (int v : comp.clique) cd.push_back(comp.graph.degree(v));
    for (int v : comp.indep) id.push_back(comp.graph.degree(v));
    c["clique"] = cd;
    c["indep"] = id;
    c["clique_vertices"] = one_based(comp.orig_clique);
    c["indep_vertices"] = one_based(comp.orig_indep);
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);
  out["tail"] = degree_sequence_of(dec.tail).terms();
  out["tail_vertices"] = one_based(dec.orig_tail);
  return out;
}

ordered_json class_report_json(const ClassReport& rep) {
  ordered_json out;
  ordered_json flags;
  flags["split"] = rep.split;
  flags["pseudo_split"] = rep.pseudo_split;
  flags["pseudo_split_matrogenic"] = rep.pseudo_split_matrogenic;
  flags["p4_reducible"] = rep.p4_reducible;
  flags["split_p4_reducible"] = rep.split_p4_reducible;
  out["flags"] = std::move(flags);
  ordered_json witnesses;
  for (const auto& [flag, w] : rep.witnesses) {
    ordered_json entry;
    entry["forbidden"] = w.forbidden;
    entry["vertices"] = one_based(w.vertices);
    witnesses[flag] = std::move(entry);
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

std::string format_splitted(const SplittedSequence& s) {
  return "(" + s.str() + ")";
}

std::string format_decomposition(const CanonicalDecomposition& dec) {
  std::string out;
  for (const auto& alpha : dec.split_components) {
    out += format_splitted(alpha);
    out += " o ";
  }
  out += "(" + dec.tail.str() + ")";
  return out;
}

}  // namespace switchlab
