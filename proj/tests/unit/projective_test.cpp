#include <gtest/gtest.h>

#include "sixpoint/error.hpp"
#include "sixpoint/harness/sampler.hpp"
#include "sixpoint/projective.hpp"
#include "test_support.hpp"

namespace sixpoint {
namespace {

using testing::P;
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

const ProjPoint kOrigin(0, 0, 1);
const ProjPoint kX1(1, 0, 1);
const ProjPoint kY1(0, 1, 1);

TEST(ProjPoint, CanonicalForm) {
  ProjPoint p(-2, 4, -2);
  EXPECT_EQ(p, ProjPoint(1, -2, 1));
  EXPECT_EQ(ProjPoint(-3, 6, 0), ProjPoint(1, -2, 0));
  EXPECT_EQ(ProjPoint(0, -5, 0), ProjPoint(0, 1, 0));
  EXPECT_EQ(P("1/2", "-2/3"), ProjPoint(3, -4, 6));
  EXPECT_EQ(P("1/2", "-2/3").to_string(), "(1/2, -2/3)");
  EXPECT_EQ(ProjPoint(1, -1, 0).to_string(), "(1 : -1 : 0)");
  EXPECT_EQ(error_code([] { ProjPoint(0, 0, 0); }), Errc::undefined_point);
  EXPECT_EQ(error_code([] { ProjPoint(1, 1, 0).affine_x(); }), Errc::not_affine);
}

TEST(Join, Examples) {
  EXPECT_EQ(join(kOrigin, kX1), Line(0, 1, 0));
  EXPECT_EQ(join(kX1, ProjPoint(1, 1, 0)), Line(1, -1, -1));
  EXPECT_EQ(error_code([] { join(kX1, ProjPoint(2, 0, 2)); }), Errc::undefined_line);
}

TEST(Meet, Examples) {
  Line x_axis(0, 1, 0), y_axis(1, 0, 0);
  EXPECT_EQ(meet(x_axis, y_axis), kOrigin);
  // y = x - 1 and y = x + 1
  EXPECT_EQ(meet(Line(1, -1, -1), Line(1, -1, 1)), ProjPoint(1, 1, 0));
  EXPECT_EQ(error_code([&] { meet(x_axis, Line(0, 5, 0)); }), Errc::undefined_point);
}

TEST(Collinear, Examples) {
  EXPECT_TRUE(collinear(kOrigin, ProjPoint(1, 1, 1), ProjPoint(2, 2, 1)));
  EXPECT_FALSE(collinear(kOrigin, kX1, kY1));
  EXPECT_TRUE(collinear(kX1, kX1, kY1));
}

TEST(Concurrent, Examples) {
  // medians of the unit right triangle
  Line ma = join(kOrigin, P("1/2", "1/2"));
  Line mb = join(kX1, P("0", "1/2"));
  Line mc = join(kY1, P("1/2", "0"));
  EXPECT_TRUE(concurrent(ma, mb, mc));
  EXPECT_FALSE(concurrent(Line(0, 1, 0), Line(1, 0, 0), Line(1, 1, -1)));
  EXPECT_TRUE(concurrent(Line(0, 1, 0), Line(0, 1, -1), Line(0, 1, -2)));
}

TEST(SignedArea, Examples) {
  EXPECT_EQ(signed_area(kOrigin, kX1, kY1), Q("1/2"));
  EXPECT_EQ(signed_area(kOrigin, kY1, kX1), Q("-1/2"));
  EXPECT_EQ(signed_area(kOrigin, ProjPoint(1, 1, 1), ProjPoint(2, 2, 1)), Rational(0));
  // non-unit homogeneous weights
  EXPECT_EQ(signed_area(ProjPoint(0, 0, 3), ProjPoint(2, 0, 2), ProjPoint(0, 5, 5)), Q("1/2"));
  EXPECT_EQ(error_code([] { signed_area(kOrigin, kX1, ProjPoint(1, 0, 0)); }), Errc::not_affine);
}

TEST(SectionPoint, Examples) {
  EXPECT_EQ(section_point(kX1, kY1, R("1")), P("1/2", "1/2"));
  EXPECT_EQ(section_point(kX1, kY1, R("-1")), ProjPoint(1, -1, 0));

  // r = 1/2: check |BD| / |DC| by coordinate subtraction.
  ProjPoint d = section_point(kX1, kY1, R("1/2"));
  EXPECT_EQ(d, P("2/3", "1/3"));
  Rational bd = d.affine_x() - kX1.affine_x();
  Rational dc = kY1.affine_x() - d.affine_x();
  EXPECT_EQ(bd / dc, Q("1/2"));
  EXPECT_EQ((d.affine_y() - kX1.affine_y()) / (kY1.affine_y() - d.affine_y()), Q("1/2"));

  EXPECT_EQ(section_point(kX1, kY1, R("0")), kX1);
  EXPECT_EQ(section_point(kX1, kY1, R("inf")), kY1);
}

TEST(SectionPoint, MatchesAffineCombination) {
  // |BD| / |DC| = r forces D = (B + r C) / (1 + r).
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    harness::Sampler s(21, trial);
    Triangle t = s.triangle(9);
    Rational r = s.rational(9);
    if (r == Rational(-1)) continue;
    const ProjPoint &b = t.b(), &c = t.c();
    Rational x = (b.affine_x() + r * c.affine_x()) / (Rational(1) + r);
    Rational y = (b.affine_y() + r * c.affine_y()) / (Rational(1) + r);
    EXPECT_EQ(section_point(b, c, r), ProjPoint::affine(x, y));
  }
}

TEST(SectionPoint, Errors) {
  EXPECT_EQ(error_code([] { section_point(kX1, ProjPoint(2, 0, 2), R("1")); }),
            Errc::invalid_segment);
  EXPECT_EQ(error_code([] { section_point(kX1, ProjPoint(1, 1, 0), R("1")); }),
            Errc::invalid_segment);
}

TEST(RatioOfSection, FootnoteConventions) {
  EXPECT_EQ(ratio_of_section(kX1, kY1, kX1), ProjRatio(0));
  EXPECT_EQ(ratio_of_section(kX1, kY1, kY1), ProjRatio::infinity());
  EXPECT_EQ(ratio_of_section(kX1, kY1, ProjPoint(-1, 1, 0)), ProjRatio(-1));
  // vertical segment: the ratio must be read off the y coordinate
  EXPECT_EQ(ratio_of_section(kOrigin, kY1, P("0", "1/4")), R("1/3"));
}

TEST(RatioOfSection, Errors) {
  EXPECT_EQ(error_code([] { ratio_of_section(kX1, kY1, kOrigin); }), Errc::off_line);
  EXPECT_EQ(error_code([] { ratio_of_section(kX1, kY1, ProjPoint(1, 1, 0)); }), Errc::off_line);
  EXPECT_EQ(error_code([] { ratio_of_section(kX1, kX1, kX1); }), Errc::invalid_segment);
}

TEST(RatioOfSection, RoundTripAndIncidence) {
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    harness::Sampler s(22, trial);
    Triangle t = s.triangle(12);
    ProjRatio r = s.ratio(30);
    ProjPoint d = section_point(t.b(), t.c(), r);
    EXPECT_TRUE(incident(d, join(t.b(), t.c())));
    EXPECT_EQ(ratio_of_section(t.b(), t.c(), d), r) << r;
  }
}

TEST(JoinMeet, Duality) {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    harness::Sampler s(23, trial);
    Triangle t = s.triangle(10);
    ProjPoint p = section_point(t.a(), t.b(), s.ratio(10));
    ProjPoint q = section_point(t.b(), t.c(), s.ratio(10));
    if (p == q) continue;
    Line l = join(p, q);
    EXPECT_TRUE(incident(p, l));
    EXPECT_TRUE(incident(q, l));

    Line m = join(t.c(), t.a());
    if (l == m) continue;
    ProjPoint x = meet(l, m);
    EXPECT_TRUE(incident(x, l));
    EXPECT_TRUE(incident(x, m));

    // concurrence is collinearity of the coefficient rows
    Line k = join(t.a(), q);
    auto as_point = [](const Line& line) { return ProjPoint(line.l(), line.m(), line.n()); };
    EXPECT_EQ(concurrent(l, m, k), collinear(as_point(l), as_point(m), as_point(k)));
  }
}

TEST(SignedArea, AlternatingAndAffineScaling) {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    harness::Sampler s(24, trial);
    ProjPoint p = ProjPoint::affine(s.rational(9), s.rational(9));
    ProjPoint q = ProjPoint::affine(s.rational(9), s.rational(9));
    ProjPoint r = ProjPoint::affine(s.rational(9), s.rational(9));
    Rational area = signed_area(p, q, r);
    EXPECT_EQ(signed_area(q, p, r), -area);
    EXPECT_EQ(signed_area(p, r, q), -area);
    EXPECT_EQ(signed_area(r, q, p), -area);
    EXPECT_EQ(signed_area(q, r, p), area);

    AffineMap map = s.affine_map(7);
    EXPECT_EQ(signed_area(map(p), map(q), map(r)), map.determinant() * area);
  }
}

TEST(AffineMap, PreservesSectionRatios) {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    harness::Sampler s(25, trial);
    Triangle t = s.triangle(10);
    ProjRatio r = s.ratio(10);
    AffineMap map = s.affine_map(8);
    ProjPoint d = section_point(t.b(), t.c(), r);
    EXPECT_EQ(map(d), section_point(map(t.b()), map(t.c()), r));
    EXPECT_EQ(ratio_of_section(map(t.b()), map(t.c()), map(d)), r);
  }
}

TEST(AffineMap, SingularIsRejected) {
  EXPECT_EQ(error_code([] {
              AffineMap({Rational(1), Rational(2), Rational(2), Rational(4)}, {Rational(0), Rational(0)});
            }),
            Errc::degenerate_configuration);
}

TEST(Triangle, Validation) {
  EXPECT_EQ(error_code([] { Triangle(kOrigin, kX1, ProjPoint(2, 0, 1)); }),
            Errc::degenerate_configuration);
  EXPECT_EQ(error_code([] { Triangle(kOrigin, kX1, ProjPoint(0, 1, 0)); }), Errc::not_affine);
  EXPECT_EQ(Triangle::canonical().c(), kY1);
}

}  // namespace
}  // namespace sixpoint
