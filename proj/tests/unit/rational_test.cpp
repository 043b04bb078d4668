#include <gtest/gtest.h>

#include "sixpoint/error.hpp"
#include "sixpoint/harness/sampler.hpp"
#include "sixpoint/rational.hpp"
#include "test_support.hpp"

namespace sixpoint {
namespace {

using testing::Q;
using testing::R;

Errc error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected sixpoint::Error";
  return Errc::usage;
}

TEST(Rational, CanonicalForm) {
  Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).den(), 1);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(5).to_string(), "5");
}

TEST(Rational, ZeroDenominatorAndDivisionByZero) {
  EXPECT_EQ(error_code([] { Rational(Integer(1), Integer(0)); }), Errc::invalid_ratio);
  EXPECT_EQ(error_code([] { return Rational(1) / Rational(0); }), Errc::invalid_ratio);
}

TEST(Rational, FieldAxiomsOnRandomInstances) {
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    harness::Sampler s(11, trial);
    Rational a = s.rational(50), b = s.rational(50), c = s.rational(50);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Rational(0));
    EXPECT_EQ(a + (-a), Rational(0));
    if (!a.is_zero()) EXPECT_EQ(a * (Rational(1) / a), Rational(1));
    // canonical representation
    EXPECT_GT(sgn(a.den()), 0);
    EXPECT_EQ(gcd(a.num(), a.den()), 1);
  }
}

TEST(ProjRatio, FromFractionExamples) {
  ProjRatio half = ProjRatio::from_fraction(3, 6);
  EXPECT_EQ(half.p(), 1);
  EXPECT_EQ(half.q(), 2);

  ProjRatio inf = ProjRatio::from_fraction(5, 0);
  EXPECT_EQ(inf.p(), 1);
  EXPECT_EQ(inf.q(), 0);
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_EQ(ProjRatio::from_fraction(-5, 0), inf);

  EXPECT_EQ(ProjRatio::from_fraction(-2, -4), half);
  EXPECT_EQ(ProjRatio::from_fraction(0, -9), ProjRatio(0));
  EXPECT_EQ(error_code([] { ProjRatio::from_fraction(0, 0); }), Errc::invalid_ratio);
}

TEST(ProjRatio, Classify) {
  EXPECT_EQ(classify(ProjRatio::from_fraction(1, 2)), Q("1/2"));
  EXPECT_EQ(classify(ProjRatio::infinity()), std::nullopt);
  EXPECT_EQ(classify(ProjRatio(-1)), Rational(-1));
}

TEST(ProjRatio, ScalingInvariance) {
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    harness::Sampler s(12, trial);
    long p = s.between(-40, 40), q = s.between(-40, 40), k = s.between(-30, 30);
    if ((p == 0 && q == 0) || k == 0) continue;
    ProjRatio base = ProjRatio::from_fraction(p, q);
    EXPECT_EQ(ProjRatio::from_fraction(Integer(k) * p, Integer(k) * q), base);
    // classify is total and exact
    auto value = classify(base);
    if (q == 0) {
      EXPECT_FALSE(value);
    } else {
      EXPECT_EQ(value, Rational(Integer(p), Integer(q)));
    }
  }
}

TEST(ParseRatio, Examples) {
  EXPECT_EQ(parse_ratio("-1/4"), ProjRatio::from_fraction(-1, 4));
  EXPECT_EQ(parse_ratio("inf"), ProjRatio::infinity());
  EXPECT_EQ(parse_ratio("-inf"), ProjRatio::infinity());
  EXPECT_EQ(parse_ratio("2"), ProjRatio(2));
  EXPECT_EQ(parse_ratio("6/4"), ProjRatio::from_fraction(3, 2));
  EXPECT_EQ(parse_ratio("-0"), ProjRatio(0));
  EXPECT_EQ(parse_ratio("123456789012345678901234567890/3").p(),
            Integer("41152263004115226300411522630"));
}

TEST(ParseRatio, Errors) {
  for (const char* bad : {"", "-", "1/", "/2", "1.5", " 1", "1 ", "1 /2", "+1", "--1", "1/-2",
                          "inf/2", "Inf", "1e3", "3/0", "0x10"}) {
    EXPECT_EQ(error_code([&] { parse_ratio(bad); }), Errc::parse) << '"' << bad << '"';
  }
  EXPECT_EQ(error_code([] { parse_ratio("0/0"); }), Errc::invalid_ratio);
}

TEST(ParseRatio, TextRoundTrip) {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    harness::Sampler s(13, trial);
    ProjRatio r = s.ratio(1000);
    EXPECT_EQ(parse_ratio(r.to_string()), r) << r;
  }
}

}  // namespace
}  // namespace sixpoint
