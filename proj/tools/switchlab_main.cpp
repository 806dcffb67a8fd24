// switchlab: degree sequences, 2-switches, and realization graphs from the
// command line. Exit codes: 0 success / property verified, 1 property
// violation, 2 usage or input error, 3 resource bound exceeded.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "switchlab/classify.hpp"
#include "switchlab/io.hpp"
#include "switchlab/isomorphism.hpp"
#include "switchlab/sweep.hpp"

namespace sl = switchlab;

namespace {

struct Options {
  std::string sequence;
  std::string graph_file;
  std::string theorem;
  bool json = false;
  bool dot = false;
  bool stats = false;
  int sweep_n = 7;
  long long sweep_max_realizations = 5000;
  int jobs = 0;
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join_ints(const std::vector<int>& vs, int offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i] + offset);
  }
  return out;
}

void print_json(const sl::ordered_json& j) { std::cout << j.dump() << "\n"; }

int run_check(const Options& opt) {
  const auto d = sl::parse_sequence(opt.sequence);
  if (sl::is_graphical(d)) {
    std::cout << "graphical\n";
    return 0;
  }
  std::cout << "not graphical\n";
  return 2;
}

int run_enumerate(const Options& opt, const sl::Limits& lim) {
  const auto d = sl::parse_sequence(opt.sequence);
  const auto rs = sl::enumerate_realizations(d, lim);
  if (opt.json) {
    sl::ordered_json out;
    out["sequence"] = d.terms();
    out["count"] = rs.size();
    sl::ordered_json arr = sl::ordered_json::array();
    for (const auto& r : rs) {
      sl::ordered_json edges = sl::ordered_json::array();
      for (auto [u, v] : r.edges()) edges.push_back({u + 1, v + 1});
      arr.push_back(std::move(edges));
    }
    out["realizations"] = std::move(arr);
    print_json(out);
    return 0;
  }
  for (const auto& r : rs) {
    const auto edges = r.edges();
    if (edges.empty()) {
      std::cout << "-\n";
      continue;
    }
    std::string line;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) line += ' ';
      line += std::to_string(edges[i].first + 1) + "-" +
              std::to_string(edges[i].second + 1);
    }
    std::cout << line << "\n";
  }
  return 0;
}

int run_rgraph(const Options& opt, const sl::Limits& lim) {
  const auto d = sl::parse_sequence(opt.sequence);
  const auto rg = sl::realization_graph(d, lim);
  if (opt.stats) {
    const auto& degs = rg.meta.degrees();
    bool regular = !degs.empty();
    for (int x : degs) regular = regular && x == degs[0];
    std::cout << "vertices=" << rg.count() << " regular="
              << (regular ? std::to_string(degs[0]) : std::string("no"))
              << " bipartite=" << bool_str(sl::is_bipartite(rg.meta)) << "\n";
    return 0;
  }
  if (opt.json) {
    print_json(sl::realization_graph_json(rg));
    return 0;
  }
  if (opt.dot) {
    std::cout << sl::to_dot(rg.meta, /*zero_based=*/true);
    return 0;
  }
  std::cout << "vertices=" << rg.count() << " edges=" << rg.meta.edge_count()
            << "\n";
  for (auto [i, j] : rg.meta.edges()) std::cout << i << " " << j << "\n";
  return 0;
}

int run_decompose(const Options& opt, const sl::Limits& lim) {
  if (!opt.graph_file.empty()) {
    const auto g = sl::read_graph_file(opt.graph_file);
    const auto dec = sl::canonical_decomposition_graph(g, lim);
    if (opt.json) {
      print_json(sl::graph_decomposition_json(dec));
    } else {
      for (std::size_t i = 0; i < dec.split_components.size(); ++i) {
        const auto& comp = dec.split_components[i];
        std::cout << "component " << i + 1 << ": clique ["
                  << join_ints(comp.orig_clique, 1) << "] indep ["
                  << join_ints(comp.orig_indep, 1) << "]\n";
      }
      std::cout << "tail: [" << join_ints(dec.orig_tail, 1) << "]\n";
    }
    return 0;
  }
  const auto d = sl::parse_sequence(opt.sequence);
  if (!sl::is_graphical(d)) {
    std::cerr << "not graphical: " << d.str() << "\n";
    return 2;
  }
  const auto dec = sl::canonical_decomposition_seq(d, lim);
  if (opt.json)
    print_json(sl::decomposition_json(dec));
  else
    std::cout << sl::format_decomposition(dec) << "\n";
  return 0;
}

int run_classify(const Options& opt, const sl::Limits& lim) {
  if (!opt.graph_file.empty()) {
    const auto g = sl::read_graph_file(opt.graph_file);
    const auto rep = sl::classify_graph(g);
    if (opt.json) {
      print_json(sl::class_report_json(rep));
    } else {
      std::cout << "split=" << bool_str(rep.split)
                << " pseudo_split=" << bool_str(rep.pseudo_split)
                << " pseudo_split_matrogenic="
                << bool_str(rep.pseudo_split_matrogenic)
                << " p4_reducible=" << bool_str(rep.p4_reducible)
                << " split_p4_reducible=" << bool_str(rep.split_p4_reducible)
                << "\n";
    }
    return 0;
  }
  const auto d = sl::parse_sequence(opt.sequence);
  const auto rs = sl::enumerate_realizations(d, lim);
  bool split = false, pseudo = false, psm = false, p4 = false, split_p4 = false;
  for (const auto& r : rs) {
    const bool s = sl::is_split_graph(r);
    const bool p = sl::is_p4_reducible(r);
    split = split || s;
    pseudo = pseudo || sl::is_pseudo_split(r);
    psm = psm || sl::is_pseudo_split_matrogenic(r);
    p4 = p4 || p;
    split_p4 = split_p4 || (s && p);
  }
  if (opt.json) {
    sl::ordered_json out;
    out["sequence"] = d.terms();
    out["realizations"] = rs.size();
    sl::ordered_json flags;
    flags["split"] = split;
    flags["pseudo_split"] = pseudo;
    flags["pseudo_split_matrogenic"] = psm;
    flags["p4_reducible"] = p4;
    flags["split_p4_reducible"] = split_p4;
    out["some_realization"] = std::move(flags);
    print_json(out);
  } else {
    std::cout << "realizations=" << rs.size() << " split=" << bool_str(split)
              << " pseudo_split=" << bool_str(pseudo)
              << " pseudo_split_matrogenic=" << bool_str(psm)
              << " p4_reducible=" << bool_str(p4)
              << " split_p4_reducible=" << bool_str(split_p4) << "\n";
  }
  return 0;
}

int run_predict(const Options& opt, const sl::Limits& lim) {
  const auto d = sl::parse_sequence(opt.sequence);
  const auto prediction = sl::predict_realization_graph(d, lim);
  using Kind = sl::ProductPrediction::Factor::Kind;
  auto name = [](const sl::ProductPrediction::Factor& f) -> std::string {
    switch (f.kind) {
      case Kind::K1: return "K1";
      case Kind::Transposition: return "T_" + std::to_string(f.k);
      case Kind::K66: return "K66-6K2";
      case Kind::Unknown: return "unknown(" + f.component.str() + ")";
    }
    return "?";
  };
  if (opt.json) {
    sl::ordered_json out;
    out["sequence"] = d.terms();
    sl::ordered_json arr = sl::ordered_json::array();
    for (const auto& f : prediction.factors) {
      sl::ordered_json entry;
      entry["factor"] = name(f);
      entry["component"] = f.component.terms();
      entry["tail"] = f.is_tail;
      arr.push_back(std::move(entry));
    }
    out["factors"] = std::move(arr);
    print_json(out);
    return 0;
  }
  std::string line = "factors:";
  for (const auto& f : prediction.factors) line += " " + name(f);
  std::cout << line << "\n";
  return 0;
}

int run_verify(const Options& opt, const sl::Limits& lim) {
  const auto d = sl::parse_sequence(opt.sequence);
  if (opt.theorem == "3.4") {
    if (sl::is_indecomposable_seq(d, lim)) {
      std::cout << "indecomposable: product form is the single factor\n";
      return 0;
    }
    const bool ok = sl::verify_product_theorem(d, lim);
    std::cout << "product-decomposition: " << (ok ? "verified" : "VIOLATED")
              << "\n";
    return ok ? 0 : 1;
  }
  if (opt.theorem == "4.1") {
    const auto rep = sl::verify_triangle_free_theorem(d, lim);
    std::cout << "bipartite=" << bool_str(rep.bipartite)
              << " triangle_free=" << bool_str(rep.triangle_free)
              << " product_form=" << bool_str(rep.product_form)
              << " psm_realization=" << bool_str(rep.psm_realization)
              << " consistent=" << bool_str(rep.consistent()) << "\n";
    return rep.consistent() ? 0 : 1;
  }
  if (opt.theorem == "4.2") {
    const auto rep = sl::verify_hypercube_theorem(d, lim);
    std::cout << "hypercube=" << bool_str(rep.hypercube)
              << " split_p4_reducible=" << bool_str(rep.split_p4_realization)
              << " components_ok=" << bool_str(rep.components_ok)
              << " consistent=" << bool_str(rep.consistent()) << "\n";
    return rep.consistent() ? 0 : 1;
  }
  // hamilton
  const auto rep = sl::verify_hamiltonicity_corollary(d, lim);
  switch (rep.verdict) {
    case sl::HamiltonicityVerdict::Hamiltonian:
      std::cout << "hamiltonian: " << join_ints(rep.cycle) << "\n";
      return 0;
    case sl::HamiltonicityVerdict::ExemptK1:
      std::cout << "exempt (K1)\n";
      return 0;
    case sl::HamiltonicityVerdict::ExemptK2:
      std::cout << "exempt (K2)\n";
      return 0;
    case sl::HamiltonicityVerdict::UnknownBudget:
      std::cout << "unknown (budget)\n";
      return 3;
    case sl::HamiltonicityVerdict::NotHamiltonian:
      std::cout << "VIOLATED: no Hamiltonian cycle\n";
      return 1;
    case sl::HamiltonicityVerdict::NotTriangleFree:
      std::cout << "not triangle-free: corollary does not apply\n";
      return 0;
  }
  return 2;
}

int run_hamilton(const Options& opt, const sl::Limits& lim) {
  if (!opt.graph_file.empty()) {
    const auto g = sl::read_graph_file(opt.graph_file);
    const auto res = sl::hamiltonian_cycle(g, lim.hamilton_budget);
    switch (res.verdict) {
      case sl::HamiltonResult::Verdict::Found:
        std::cout << "cycle: " << join_ints(res.cycle, 1) << "\n";
        return 0;
      case sl::HamiltonResult::Verdict::K1:
        std::cout << "exempt (K1)\n";
        return 0;
      case sl::HamiltonResult::Verdict::K2:
        std::cout << "exempt (K2)\n";
        return 0;
      case sl::HamiltonResult::Verdict::Budget:
        std::cout << "unknown (budget)\n";
        return 3;
      case sl::HamiltonResult::Verdict::None:
        std::cout << "none\n";
        return 1;
    }
    return 2;
  }
  const auto d = sl::parse_sequence(opt.sequence);
  const auto rg = sl::realization_graph(d, lim);
  const auto res = sl::hamiltonian_cycle(rg.meta, lim.hamilton_budget);
  switch (res.verdict) {
    case sl::HamiltonResult::Verdict::Found:
      std::cout << "cycle: " << join_ints(res.cycle) << "\n";
      return 0;
    case sl::HamiltonResult::Verdict::K1:
      std::cout << "exempt (K1)\n";
      return 0;
    case sl::HamiltonResult::Verdict::K2:
      std::cout << "exempt (K2)\n";
      return 0;
    case sl::HamiltonResult::Verdict::Budget:
      std::cout << "unknown (budget)\n";
      return 3;
    case sl::HamiltonResult::Verdict::None:
      std::cout << "none\n";
      return 1;
  }
  return 2;
}

int run_sweep_cmd(const Options& opt, const sl::Limits& lim) {
  sl::SweepTheorem theorem;
  if (opt.theorem == "3.4") theorem = sl::SweepTheorem::Product;
  else if (opt.theorem == "4.1") theorem = sl::SweepTheorem::TriangleFree;
  else if (opt.theorem == "4.2") theorem = sl::SweepTheorem::Hypercube;
  else if (opt.theorem == "hamilton") theorem = sl::SweepTheorem::Hamilton;
  else if (opt.theorem == "connectivity") theorem = sl::SweepTheorem::Connectivity;
  else theorem = sl::SweepTheorem::ComplementZero;  // "4.4"

  sl::SweepOptions sweep_opts;
  sweep_opts.max_n = opt.sweep_n;
  sweep_opts.max_realizations = opt.sweep_max_realizations;
  sweep_opts.jobs = opt.jobs;
  const auto result = sl::run_sweep(theorem, sweep_opts, lim);

  for (const auto& item : result.items) {
    if (item.status == sl::SweepResult::Status::Violation)
      std::cout << "violation: " << item.sequence.str() << " (" << item.detail
                << ")\n";
    else if (item.status == sl::SweepResult::Status::Budget)
      std::cout << "budget: " << item.sequence.str() << "\n";
    else if (item.status == sl::SweepResult::Status::Skipped)
      std::cout << "skipped: " << item.sequence.str() << " (" << item.detail
                << ")\n";
  }
  std::cout << "theorem=" << sl::sweep_theorem_name(theorem)
            << " n<=" << opt.sweep_n << " sequences=" << result.total
            << " checked=" << result.checked
            << " violations=" << result.violations
            << " skipped=" << result.skipped
            << " not_applicable=" << result.not_applicable
            << " budget=" << result.budget_exhausted << "\n";
  return (result.violations == 0 && result.budget_exhausted == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree sequences, 2-switches, and realization graphs"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");

  Options opt;
  auto add_seq = [&](CLI::App* cmd) {
    cmd->add_option("sequence", opt.sequence, "degree sequence, e.g. 3,2,1,1,1")
        ->required();
  };
  auto add_seq_or_graph = [&](CLI::App* cmd) {
    cmd->add_option("sequence", opt.sequence, "degree sequence");
    cmd->add_option("--graph", opt.graph_file, "graph file (n, then edges)");
  };

  auto* check = app.add_subcommand("check", "test graphicality");
  add_seq(check);

  auto* enumerate = app.add_subcommand("enumerate", "list all realizations");
  add_seq(enumerate);
  enumerate->add_flag("--json", opt.json);

  auto* rgraph = app.add_subcommand("rgraph", "build the realization graph");
  add_seq(rgraph);
  rgraph->add_flag("--json", opt.json);
  rgraph->add_flag("--dot", opt.dot);
  rgraph->add_flag("--stats", opt.stats);

  auto* decompose =
      app.add_subcommand("decompose", "canonical decomposition");
  add_seq_or_graph(decompose);
  decompose->add_flag("--json", opt.json);

  auto* classify = app.add_subcommand("classify", "graph-class recognizers");
  add_seq_or_graph(classify);
  classify->add_flag("--json", opt.json);

  auto* predict =
      app.add_subcommand("predict", "predict realization-graph factors");
  add_seq(predict);
  predict->add_flag("--json", opt.json);

  auto* verify = app.add_subcommand("verify", "verify one structure theorem");
  add_seq(verify);
  verify->add_option("--theorem", opt.theorem, "3.4, 4.1, 4.2 or hamilton")
      ->required()
      ->check(CLI::IsMember({"3.4", "4.1", "4.2", "hamilton"}));

  auto* hamilton = app.add_subcommand("hamilton", "Hamiltonian cycle search");
  add_seq_or_graph(hamilton);

  auto* sweep = app.add_subcommand("sweep", "verify a theorem over all small sequences");
  sweep->add_option("--n", opt.sweep_n, "max sequence length")->default_val(7);
  sweep->add_option("--theorem", opt.theorem,
                    "3.4, 4.1, 4.2, hamilton, connectivity or 4.4")
      ->required()
      ->check(CLI::IsMember(
          {"3.4", "4.1", "4.2", "hamilton", "connectivity", "4.4"}));
  sweep->add_option("--max-realizations", opt.sweep_max_realizations,
                    "per-sequence realization cap")
      ->default_val(5000);
  sweep->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");

  for (auto* sub : {check, enumerate, rgraph, decompose, classify, predict,
                    verify, hamilton, sweep})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    sl::Limits lim;
    if (!config_path.empty()) lim = sl::load_config_file(config_path);
    sl::apply_env_overrides(lim);

    if (app.got_subcommand(check)) return run_check(opt);
    if (app.got_subcommand(enumerate)) return run_enumerate(opt, lim);
    if (app.got_subcommand(rgraph)) return run_rgraph(opt, lim);
    if (app.got_subcommand(decompose)) return run_decompose(opt, lim);
    if (app.got_subcommand(classify)) return run_classify(opt, lim);
    if (app.got_subcommand(predict)) return run_predict(opt, lim);
    if (app.got_subcommand(verify)) return run_verify(opt, lim);
    if (app.got_subcommand(hamilton)) return run_hamilton(opt, lim);
    if (app.got_subcommand(sweep)) return run_sweep_cmd(opt, lim);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const sl::BoundExceededError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const sl::NotGraphicalError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const sl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
