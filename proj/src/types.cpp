#include "bicrit/types.hpp"

#include "bicrit/errors.hpp"

namespace bicrit {

bool dominates(const CostPair& a, const CostPair& b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2 && a != b;
}

void Bounds::check() const {
  if (!lb1.is_positive() || !lb2.is_positive() || lb1 > ub1 || lb2 > ub2) {
    throw InvalidArgument("bounds must satisfy 0 < lb <= ub in each dimension");
  }
}

bool Bounds::contains(const CostPair& image, bool positive_only) const {
  auto in = [positive_only](const Rational& v, const Rational& lb, const Rational& ub) {
    if (positive_only && v.is_zero()) return true;
    return lb <= v && v <= ub;
  };
  return in(image.f1, lb1, ub1) && in(image.f2, lb2, ub2);
}

Epsilon::Epsilon(Rational value) : value_(std::move(value)) {
  if (!value_.is_positive() || value_ > 1) {
    throw InvalidArgument("epsilon must satisfy 0 < eps <= 1, got " + value_.to_string());
  }
}

Weight::Weight(Rational gamma) : gamma_(std::move(gamma)) {
  if (!gamma_.is_positive()) {
    throw InvalidArgument("weight must be positive, got " + gamma_.to_string());
  }
}

Rational pow_one_plus_eps(const Epsilon& eps, std::int64_t i) {
  return eps.base().pow(i);
}

std::int64_t floor_log(const Rational& base, const Rational& x) {
  if (base <= 1 || !x.is_positive()) throw InvalidArgument("floor_log: need base > 1, x > 0");
  std::int64_t i = 0;
  Rational p{1};
  if (p <= x) {
    for (Rational next = p * base; next <= x; next *= base) {
      p = next;
      ++i;
    }
  } else {
    while (p > x) {
      p /= base;
      --i;
    }
  }
  return i;
}

std::int64_t ceil_log(const Rational& base, const Rational& x) {
  if (base <= 1 || !x.is_positive()) throw InvalidArgument("ceil_log: need base > 1, x > 0");
  std::int64_t i = 0;
  Rational p{1};
  if (p >= x) {
    for (Rational next = p / base; next >= x; next /= base) {
      p = next;
      --i;
    }
  } else {
    while (p < x) {
      p *= base;
      ++i;
    }
  }
  return i;
}

IndexRange bracket(const Epsilon& eps, const Rational& lo, const Rational& hi) {
  const Rational b = eps.base();
  return IndexRange{floor_log(b, lo), ceil_log(b, hi)};
}

}  // namespace bicrit
