#include "bicrit/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bicrit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Rational r;
  r.v_.get_num().set_str(std::string(num), 10);
  r.v_.get_den().set_str(std::string(den), 10);
  if (r.v_.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Rational r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  // coprime bases stay coprime under powers, so no canonicalize needed
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  Rational r;
  r.v_ = 1 / v_;
  r.v_.canonicalize();
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

std::int64_t Rational::floor_to_int64() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("Rational: floor out of range");
  return q.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace bicrit
