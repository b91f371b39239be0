#include "bicrit/pareto.hpp"

#include <algorithm>

#include "bicrit/errors.hpp"
#include "bicrit/sweep.hpp"

namespace bicrit {

namespace {

void sort_by_f1(std::vector<SolutionRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.image.f1 != b.image.f1) return a.image.f1 < b.image.f1;
    return a.image.f2 < b.image.f2;
  });
}

}  // namespace

IndexRange pareto_index_range(const Epsilon& eps, const Bounds& bounds) {
  bounds.check();
  return bracket(eps, eps.value() * bounds.lb1 / bounds.ub2, eps.value() * bounds.ub1 / bounds.lb2);
}

std::vector<SolutionRecord> filter_dominated(std::span<const SolutionRecord> records) {
  std::vector<SolutionRecord> kept;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CostPair& img = records[i].image;
    bool drop = false;
    for (std::size_t j = 0; j < records.size() && !drop; ++j) {
      if (j == i) continue;
      const CostPair& other = records[j].image;
      drop = dominates(other, img) || (j < i && other == img);
    }
    if (!drop) kept.push_back(records[i]);
  }
  return kept;
}

ParetoSet approximate_pareto(const Problem& problem, const Epsilon& eps, bool parallel) {
  const Rational alpha = problem.alpha();
  const IndexRange range = pareto_index_range(eps, problem.bounds());
  const auto answers = evaluate_grid(problem, eps, range, parallel);

  ParetoSet out;
  out.records = filter_dominated(answers);
  sort_by_f1(out.records);
  out.factor1 = alpha * (eps.value() * 2 + 1);
  out.factor2 = alpha * (Rational{2} / eps.value() + 1);
  out.oracle_calls = answers.size();
  return out;
}

ParetoSet pareto_from_parametric(const Problem& problem, const Epsilon& eps) {
  const auto* parametric = dynamic_cast<const ParametricProblem*>(&problem);
  if (parametric == nullptr) {
    throw NotParametricCapable(problem.kind() + ": no parametric weighted-sum algorithm");
  }
  const auto pieces = parametric->parametric_all();
  std::vector<SolutionRecord> answers;
  answers.reserve(pieces.size());
  for (const auto& p : pieces) answers.push_back(p.record);

  const Rational alpha = problem.alpha();
  ParetoSet out;
  out.records = filter_dominated(answers);
  sort_by_f1(out.records);
  out.factor1 = alpha * (eps.value() + 1);
  out.factor2 = alpha * (Rational{1} / eps.value() + 1);
  out.oracle_calls = pieces.size();
  return out;
}

BoundarySolutions boundary_solutions(const Problem& problem, const Bounds& bounds) {
  bounds.check();
  const Rational alpha = problem.alpha();
  BoundarySolutions out{std::nullopt, std::nullopt, alpha * 2 * bounds.ub1 / bounds.lb2,
                        bounds.lb1 / (alpha * 2 * bounds.ub2)};

  SolutionRecord high = problem.solve_weighted_sum(Weight(out.gamma_high));
  if (high.image.f2.is_zero()) out.zero_f2 = std::move(high);
  SolutionRecord low = problem.solve_weighted_sum(Weight(out.gamma_low));
  if (low.image.f1.is_zero()) out.zero_f1 = std::move(low);
  return out;
}

ParetoSet extended_pareto(const Problem& problem, const Epsilon& eps, bool parallel) {
  ParetoSet out = approximate_pareto(problem, eps, parallel);
  if (!problem.relaxed()) return out;

  BoundarySolutions ends = boundary_solutions(problem, problem.bounds());
  out.oracle_calls += 2;
  std::vector<SolutionRecord> all;
  if (ends.zero_f1) all.push_back(std::move(*ends.zero_f1));
  all.insert(all.end(), out.records.begin(), out.records.end());
  if (ends.zero_f2) all.push_back(std::move(*ends.zero_f2));
  out.records = filter_dominated(all);
  sort_by_f1(out.records);
  return out;
}

}  // namespace bicrit
