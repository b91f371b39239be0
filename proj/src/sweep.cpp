#include "bicrit/sweep.hpp"

#include <future>

#include "bicrit/errors.hpp"

namespace bicrit {

BudgetQuery::BudgetQuery(Rational budget_, Epsilon eps_)
    : budget(std::move(budget_)), eps(std::move(eps_)) {
  if (!budget.is_positive()) throw InvalidArgument("budget must be positive");
}

GammaInterval::GammaInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!lo.is_positive() || lo > hi) throw InvalidArgument("gamma interval needs 0 < lo <= hi");
}

IndexRange index_range(const Epsilon& eps, const Rational& budget, const Bounds& bounds) {
  bounds.check();
  if (!budget.is_positive()) throw InvalidArgument("budget must be positive");
  const Rational scaled = eps.value() * budget;
  return bracket(eps, scaled / bounds.ub2, scaled / bounds.lb2);
}

std::vector<SolutionRecord> evaluate_grid(const Problem& problem, const Epsilon& eps,
                                          const IndexRange& range, bool parallel) {
  std::vector<SolutionRecord> records;
  records.reserve(static_cast<std::size_t>(range.size()));
  if (!parallel) {
    for (std::int64_t i = range.i_min; i <= range.i_max; ++i) {
      records.push_back(problem.solve_weighted_sum(Weight(pow_one_plus_eps(eps, i))));
    }
    return records;
  }
  std::vector<std::future<SolutionRecord>> pending;
  for (std::int64_t i = range.i_min; i <= range.i_max; ++i) {
    pending.push_back(std::async(std::launch::async, [&problem, &eps, i] {
      return problem.solve_weighted_sum(Weight(pow_one_plus_eps(eps, i)));
    }));
  }
  for (auto& f : pending) records.push_back(f.get());
  return records;
}

BudgetResult solve_budget_sweep(const Problem& problem, const BudgetQuery& query, bool parallel) {
  const Rational alpha = problem.alpha();
  const Rational& eps = query.eps.value();

  BudgetResult result;
  result.grid = index_range(query.eps, query.budget, problem.bounds());
  result.transcript = evaluate_grid(problem, query.eps, result.grid, parallel);
  result.certificate = GuaranteeCertificate{
      alpha, alpha * (eps * 2 + 1), alpha * (Rational{2} / eps + 1), query.budget,
      result.transcript.size()};

  const Rational f1_limit = result.certificate.budget_factor * query.budget;
  const SolutionRecord* best = nullptr;
  for (const auto& rec : result.transcript) {
    if (rec.image.f1 > f1_limit) continue;
    if (best == nullptr || rec.image.f2 < best->image.f2 ||
        (rec.image.f2 == best->image.f2 && rec.image.f1 < best->image.f1)) {
      best = &rec;
    }
  }
  if (best != nullptr) result.solution = *best;
  return result;
}

BudgetResult solve_budget_fixed(const Problem& problem, const Rational& budget, bool parallel) {
  return solve_budget_sweep(problem, BudgetQuery(budget, Epsilon(Rational{1})), parallel);
}

}  // namespace bicrit
