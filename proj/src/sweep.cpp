#include "switchlab/sweep.hpp"

#include <atomic>
#include <optional>
#include <thread>

#include "switchlab/classify.hpp"
#include "switchlab/isomorphism.hpp"

namespace switchlab {

namespace {

void descend(std::vector<int>& cur, int pos, int n, int max_term,
             std::vector<DegreeSequence>& out, bool graphical_only) {
  if (pos == n) {
    DegreeSequence d(cur);
    if (!graphical_only || is_graphical(d)) out.push_back(std::move(d));
    return;
  }
  const int hi = pos == 0 ? max_term : cur[pos - 1];
  for (int t = hi; t >= 0; --t) {
    cur[pos] = t;
    descend(cur, pos + 1, n, max_term, out, graphical_only);
  }
}

}  // namespace

std::vector<DegreeSequence> graphical_sequences(int n) {
  std::vector<DegreeSequence> out;
  std::vector<int> cur(n);
  descend(cur, 0, n, n - 1, out, true);
  return out;
}

std::vector<DegreeSequence> graphical_sequences_up_to(int max_n) {
  std::vector<DegreeSequence> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = graphical_sequences(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string sweep_theorem_name(SweepTheorem t) {
  switch (t) {
    case SweepTheorem::Product: return "product-decomposition";
    case SweepTheorem::TriangleFree: return "triangle-free-equivalence";
    case SweepTheorem::Hypercube: return "hypercube-characterization";
    case SweepTheorem::Hamilton: return "hamiltonicity";
    case SweepTheorem::Connectivity: return "connectivity";
    case SweepTheorem::ComplementZero: return "complement-and-zero";
  }
  return "?";
}

namespace {

using Status = SweepResult::Status;

SweepResult::Item evaluate(SweepTheorem theorem, const DegreeSequence& d,
                           const SweepOptions& opts, const Limits& lim) {
  try {
    switch (theorem) {
      case SweepTheorem::Product: {
        if (is_indecomposable_seq(d, lim))
          return {d, Status::NotApplicable, "indecomposable"};
        return verify_product_theorem(d, lim)
                   ? SweepResult::Item{d, Status::Ok, ""}
                   : SweepResult::Item{d, Status::Violation,
                                       "product differs from direct build"};
      }
      case SweepTheorem::TriangleFree: {
        const auto rep = verify_triangle_free_theorem(d, lim);
        if (rep.consistent()) return {d, Status::Ok, ""};
        std::string detail =
            "a=" + std::to_string(rep.bipartite) +
            " b=" + std::to_string(rep.triangle_free) +
            " c=" + std::to_string(rep.product_form) +
            " d=" + std::to_string(rep.psm_realization);
        return {d, Status::Violation, detail};
      }
      case SweepTheorem::Hypercube: {
        const auto rep = verify_hypercube_theorem(d, lim);
        if (rep.consistent()) return {d, Status::Ok, ""};
        std::string detail =
            "hypercube=" + std::to_string(rep.hypercube) +
            " split_p4=" + std::to_string(rep.split_p4_realization) +
            " components_ok=" + std::to_string(rep.components_ok);
        return {d, Status::Violation, detail};
      }
      case SweepTheorem::Hamilton: {
        const auto rg = realization_graph(d, lim);
        if (!is_triangle_free(rg.meta))
          return {d, Status::NotApplicable, "not triangle-free"};
        if (rg.count() > opts.hamilton_max_vertices)
          return {d, Status::NotApplicable, "above vertex limit"};
        const auto rep = verify_hamiltonicity_corollary(d, lim);
        if (rep.ok()) return {d, Status::Ok, ""};
        if (rep.verdict == HamiltonicityVerdict::UnknownBudget)
          return {d, Status::Budget, "search budget exhausted"};
        return {d, Status::Violation, "no Hamiltonian cycle"};
      }
      case SweepTheorem::Connectivity: {
        const auto rg = realization_graph(d, lim);
        return is_connected(rg.meta)
                   ? SweepResult::Item{d, Status::Ok, ""}
                   : SweepResult::Item{d, Status::Violation,
                                       "realization graph disconnected"};
      }
      case SweepTheorem::ComplementZero: {
        const auto rg = realization_graph(d, lim);
        const auto rg_comp = realization_graph(complement_sequence(d), lim);
        if (!is_isomorphic(rg.meta, rg_comp.meta))
          return {d, Status::Violation, "complement changes the meta-graph"};
        std::vector<int> with_zero = d.terms();
        with_zero.push_back(0);
        const auto rg_zero =
            realization_graph(DegreeSequence(with_zero), lim);
        if (!is_isomorphic(rg.meta, rg_zero.meta))
          return {d, Status::Violation, "appended zero changes the meta-graph"};
        return {d, Status::Ok, ""};
      }
    }
  } catch (const BoundExceededError& e) {
    return {d, Status::Skipped, e.what()};
  }
  return {d, Status::Violation, "unhandled theorem"};
}

}  // namespace

SweepResult run_sweep(SweepTheorem theorem, const SweepOptions& opts,
                      const Limits& base) {
  Limits lim = base;
  lim.max_realizations = opts.max_realizations;

  const auto sequences = graphical_sequences_up_to(opts.max_n);
  std::vector<std::optional<SweepResult::Item>> slots(sequences.size());

  int jobs = opts.jobs > 0
                 ? opts.jobs
                 : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= sequences.size()) return;
      slots[i] = evaluate(theorem, sequences[i], opts, lim);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepResult result;
  result.total = static_cast<int>(sequences.size());
  for (auto& slot : slots) {
    SweepResult::Item item = std::move(*slot);
    switch (item.status) {
      case Status::Ok: ++result.checked; break;
      case Status::Violation:
        ++result.checked;
        ++result.violations;
        break;
      case Status::Skipped: ++result.skipped; break;
      case Status::NotApplicable: ++result.not_applicable; break;
      case Status::Budget:
        ++result.checked;
        ++result.budget_exhausted;
        break;
    }
    result.items.push_back(std::move(item));
  }
  return result;
}

}  // namespace switchlab
