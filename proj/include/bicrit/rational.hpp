#ifndef BICRIT_RATIONAL_HPP
#define BICRIT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bicrit {

/// Arbitrary-precision fraction kept in canonical form (positive
/// denominator, numerator and denominator coprime). Thin value wrapper
/// around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);

  /// Parses "p/q" or "p" (optional leading '-' on p). The result is reduced.
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  std::string to_string() const { return v_.get_str(); }
  std::string numerator_string() const { return v_.get_num().get_str(); }
  std::string denominator_string() const { return v_.get_den().get_str(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }

  /// Exact integer power; negative exponents give the reciprocal power.
  /// Throws std::domain_error for 0 raised to a negative power.
  Rational pow(std::int64_t exponent) const;

  Rational reciprocal() const;
  Rational abs() const;

  /// floor(value), throwing std::overflow_error if it does not fit.
  std::int64_t floor_to_int64() const;
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace bicrit

#endif  // BICRIT_RATIONAL_HPP
