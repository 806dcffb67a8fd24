#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "switchlab/classify.hpp"
#include "switchlab/labeled_graph.hpp"
#include "switchlab/realization.hpp"
#include "switchlab/tyshkevich.hpp"

namespace switchlab {

using ordered_json = nlohmann::ordered_json;

// Graph text format: first line n, then one "u v" pair per line, 1-indexed.
LabeledGraph read_graph_text(std::istream& in);
LabeledGraph read_graph_file(const std::string& path);
void write_graph_text(std::ostream& out, const LabeledGraph& g);

// Undirected DOT; vertices numbered from 1 (or from 0 for meta-graphs, whose
// labels are realization indices).
std::string to_dot(const LabeledGraph& g, bool zero_based = false);

// {"sequence": [...], "count": N, "edges": [[i,j],...],
//  "realizations": [[[u,v],...],...]}
// with 0-based realization indices and 1-based vertex pairs.
ordered_json realization_graph_json(const RealizationGraph& rg);

// {"components": [{"clique": [...], "indep": [...]}, ...], "tail": [...]}
ordered_json decomposition_json(const CanonicalDecomposition& dec);

// As above plus vertex membership lists (1-based, input labels).
ordered_json graph_decomposition_json(const GraphDecomposition& dec);

ordered_json class_report_json(const ClassReport& report);

std::string format_splitted(const SplittedSequence& s);       // "(2,2;1,1)"
std::string format_decomposition(const CanonicalDecomposition& dec);

}  // namespace switchlab
