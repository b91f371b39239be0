#include "bicrit/exact_search.hpp"

#include "bicrit/errors.hpp"

namespace bicrit {

namespace {

void require_exact(const Problem& problem) {
  if (!problem.exact()) {
    throw ExactOracleRequired(problem.kind() + ": alpha = " + problem.alpha().to_string() +
                              " but an exact weighted-sum oracle is required");
  }
}

std::weak_ordering sign_at(const LinearValue& p, const LinearValue& q, const Rational& gamma) {
  const auto c = p.at(gamma) <=> q.at(gamma);
  if (c < 0) return std::weak_ordering::less;
  if (c > 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace

BudgetResult solve_budget_binary(const Problem& problem, const BudgetQuery& query) {
  require_exact(problem);
  const Rational& eps = query.eps.value();

  BudgetResult result;
  result.grid = index_range(query.eps, query.budget, problem.bounds());
  result.certificate =
      GuaranteeCertificate{Rational{1}, eps * 2 + 1, Rational{2} / eps + 1, query.budget, 0};
  const Rational f1_limit = result.certificate.budget_factor * query.budget;

  std::int64_t lo = result.grid.i_min;
  std::int64_t hi = result.grid.i_max;
  while (lo <= hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    SolutionRecord rec = problem.solve_weighted_sum(Weight(pow_one_plus_eps(query.eps, mid)));
    result.transcript.push_back(rec);
    if (rec.image.f1 > f1_limit) {
      hi = mid - 1;
    } else {
      // accepted indices form a prefix of the grid; keep the largest
      result.solution = std::move(rec);
      lo = mid + 1;
    }
  }
  result.certificate.oracle_calls = result.transcript.size();
  return result;
}

std::optional<Rational> critical_gamma(const LinearValue& p, const LinearValue& q) {
  const Rational slope_gap = p.slope - q.slope;
  if (slope_gap.is_zero()) return std::nullopt;
  return (q.constant - p.constant) / slope_gap;
}

Resolution resolve_comparison(const ParametricProblem& problem, const GammaInterval& interval,
                              const Rational& gamma_crit, const Rational& budget,
                              const Epsilon& eps) {
  require_exact(problem);
  if (gamma_crit >= interval.hi) return Resolution{Side::left, interval, std::nullopt};
  if (gamma_crit <= interval.lo) return Resolution{Side::right, interval, std::nullopt};

  // The answer optimal just right of gamma_crit is the one every weight in
  // (gamma_crit, hi] would return, which keeps the final interval's
  // interior solution consistent with this decision under ties.
  SolutionRecord probe = problem.solve_right_of(gamma_crit);
  if (probe.image.f1 > (eps.value() + 1) * budget) {
    return Resolution{Side::left, GammaInterval(interval.lo, gamma_crit), std::move(probe)};
  }
  return Resolution{Side::right, GammaInterval(gamma_crit, interval.hi), std::move(probe)};
}

BudgetResult solve_budget_parametric(const Problem& problem, const BudgetQuery& query) {
  require_exact(problem);
  const auto* parametric = dynamic_cast<const ParametricProblem*>(&problem);
  if (parametric == nullptr) {
    throw NotParametricCapable(problem.kind() + ": no parametric weighted-sum algorithm");
  }
  const Rational& eps = query.eps.value();
  const Bounds bounds = problem.bounds();
  bounds.check();

  BudgetResult result;
  result.grid = index_range(query.eps, query.budget, bounds);
  result.certificate =
      GuaranteeCertificate{Rational{1}, eps + 1, Rational{1} / eps + 1, query.budget, 0};

  const Rational scaled = eps * query.budget;
  GammaInterval interval(scaled / bounds.ub2, scaled / bounds.lb2);

  const LinearComparator master = [&](const LinearValue& p, const LinearValue& q) {
    ++result.comparisons;
    if (const auto crit = critical_gamma(p, q)) {
      Resolution r = resolve_comparison(*parametric, interval, *crit, query.budget, query.eps);
      if (r.probe) result.transcript.push_back(std::move(*r.probe));
      interval = r.interval;
    }
    const Rational at = interval.lo < interval.hi ? interval.midpoint() : interval.lo;
    return sign_at(p, q, at);
  };
  const Token master_token = parametric->parametric_run(master);

  const Rational at = interval.lo < interval.hi ? interval.midpoint() : interval.lo;
  SolutionRecord final_record = problem.solve_weighted_sum(Weight(at));
  if (final_record.token != master_token) {
    throw std::logic_error(problem.kind() +
                           ": parametric run disagrees with the concrete oracle at the final "
                           "interval midpoint");
  }
  result.transcript.push_back(final_record);
  result.certificate.oracle_calls = result.transcript.size();
  result.final_interval = interval;
  if (final_record.image.f1 <= result.certificate.budget_factor * query.budget) {
    result.solution = std::move(final_record);
  }
  return result;
}

}  // namespace bicrit
