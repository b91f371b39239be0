#include "bicrit/problem.hpp"

#include "bicrit/errors.hpp"

namespace bicrit {

namespace {

std::weak_ordering to_weak(std::strong_ordering o) {
  if (o < 0) return std::weak_ordering::less;
  if (o > 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace

LinearComparator compare_at(Rational gamma) {
  return [gamma = std::move(gamma)](const LinearValue& p, const LinearValue& q) {
    return to_weak(p.at(gamma) <=> q.at(gamma));
  };
}

LinearComparator compare_right_of(Rational gamma) {
  return [gamma = std::move(gamma)](const LinearValue& p, const LinearValue& q) {
    const auto by_value = p.at(gamma) <=> q.at(gamma);
    if (by_value != 0) return to_weak(by_value);
    return to_weak(p.slope <=> q.slope);
  };
}

SolutionRecord Problem::solve_weighted_sum(const Weight& gamma) const {
  Token token = solve_scaled(Rational{1}, gamma.gamma());
  CostPair image = evaluate(token);
  return SolutionRecord{std::move(token), std::move(image), gamma};
}

std::vector<ParametricPiece> ParametricProblem::parametric_all() const {
  throw NotParametricCapable(kind() + ": no all-gamma parametric algorithm");
}

SolutionRecord ParametricProblem::solve_right_of(const Rational& gamma) const {
  Token token = parametric_run(compare_right_of(gamma));
  CostPair image = evaluate(token);
  return SolutionRecord{std::move(token), std::move(image), Weight(gamma)};
}

}  // namespace bicrit
