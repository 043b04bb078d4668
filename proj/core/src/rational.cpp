#include "sixpoint/rational.hpp"

#include <algorithm>
#include <cctype>

#include "sixpoint/error.hpp"

namespace sixpoint {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw Error(Errc::invalid_ratio, "rational with zero denominator");
  }
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(Errc::invalid_ratio, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.value_ = -out.value_;
  return out;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

ProjRatio ProjRatio::from_fraction(const Integer& p, const Integer& q) {
  if (sgn(p) == 0 && sgn(q) == 0) {
    throw Error(Errc::invalid_ratio, "ratio 0/0 is undefined");
  }
  if (sgn(q) == 0) {
    return ProjRatio(Integer(1), Integer(0));
  }
  Integer g = gcd(p, q);
  Integer pp = p / g;
  Integer qq = q / g;
  if (sgn(qq) < 0) {
    pp = -pp;
    qq = -qq;
  }
  return ProjRatio(std::move(pp), std::move(qq));
}

std::string ProjRatio::to_string() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return p_.get_str();
  return p_.get_str() + "/" + q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const ProjRatio& r) {
  return os << r.to_string();
}

ProjRatio projratio_from_fraction(const Integer& p, const Integer& q) {
  return ProjRatio::from_fraction(p, q);
}

std::optional<Rational> classify(const ProjRatio& r) {
  if (r.is_infinite()) return std::nullopt;
  return Rational(r.p(), r.q());
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(Errc::parse, "malformed ratio '" + std::string(text) + "'");
}

// Splits "-?digits(/digits)?" into numerator and denominator.
std::pair<Integer, Integer> parse_fraction(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!all_digits(num_text) || !all_digits(den_text)) malformed(text);

  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (negative) num = -num;
  if (sgn(den) == 0) {
    if (sgn(num) == 0) throw Error(Errc::invalid_ratio, "ratio 0/0 is undefined");
    malformed(text);
  }
  return {num, den};
}

}  // namespace

ProjRatio parse_ratio(std::string_view text) {
  if (text == "inf" || text == "-inf") return ProjRatio::infinity();
  auto [num, den] = parse_fraction(text);
  return ProjRatio::from_fraction(num, den);
}

Rational parse_rational(std::string_view text) {
  auto [num, den] = parse_fraction(text);
  return Rational(num, den);
}

}  // namespace sixpoint
