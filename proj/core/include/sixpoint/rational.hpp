#ifndef SIXPOINT_RATIONAL_HPP
#define SIXPOINT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sixpoint {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error(invalid_ratio) when den is zero.
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws Error(invalid_ratio) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A signed ratio p/q stored as a point (p : q) of the projective line.
///
/// (0 : 1) is zero, (1 : 0) is the single unsigned infinity, and (-1 : 1) is
/// the ratio a section point takes when it sits at infinity on its line.
/// Canonical form: gcd(|p|, |q|) = 1 and q > 0, or (p, q) = (1, 0).
class ProjRatio {
 public:
  /// Zero.
  ProjRatio() : p_(0), q_(1) {}
  ProjRatio(const Rational& value)  // NOLINT(google-explicit-constructor)
      : p_(value.num()), q_(value.den()) {}
  ProjRatio(long value) : p_(value), q_(1) {}  // NOLINT(google-explicit-constructor)

  /// Throws Error(invalid_ratio) when both components are zero.
  static ProjRatio from_fraction(const Integer& p, const Integer& q);
  static ProjRatio infinity() { return from_fraction(1, 0); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinite() const { return sgn(q_) == 0; }

  /// "inf", "n" or "n/d"; always accepted back by parse_ratio.
  std::string to_string() const;

  friend bool operator==(const ProjRatio& lhs, const ProjRatio& rhs) {
    return lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_;
  }

 private:
  ProjRatio(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

std::ostream& operator<<(std::ostream& os, const ProjRatio& r);

ProjRatio projratio_from_fraction(const Integer& p, const Integer& q);

/// The finite value p/q, or nullopt for infinity.
std::optional<Rational> classify(const ProjRatio& r);

/// Grammar: `-?digits`, `-?digits/digits` (positive denominator), `inf`, `-inf`.
/// Throws Error(parse) on malformed text and Error(invalid_ratio) on "0/0".
ProjRatio parse_ratio(std::string_view text);

/// Same grammar minus the infinities.
Rational parse_rational(std::string_view text);

}  // namespace sixpoint

#endif  // SIXPOINT_RATIONAL_HPP
