#ifndef SIXPOINT_TESTS_TEST_SUPPORT_HPP
#define SIXPOINT_TESTS_TEST_SUPPORT_HPP

#include <string_view>

#include "sixpoint/rational.hpp"
#include "sixpoint/theorems.hpp"

namespace sixpoint::testing {

inline ProjRatio R(std::string_view text) { return parse_ratio(text); }
inline Rational Q(std::string_view text) { return parse_rational(text); }

inline CevianRatios cevian(std::string_view d, std::string_view e, std::string_view f) {
  return {R(d), R(e), R(f)};
}

/// Arguments in field order a+, a-, b+, b-, c+, c-.
inline SixRatios six(std::string_view ap, std::string_view am, std::string_view bp,
                     std::string_view bm, std::string_view cp, std::string_view cm) {
  return {R(ap), R(am), R(bp), R(bm), R(cp), R(cm)};
}

inline SixRatios six_all(std::string_view v) { return six(v, v, v, v, v, v); }

inline ProjPoint P(std::string_view x, std::string_view y) { return ProjPoint::affine(Q(x), Q(y)); }

}  // namespace sixpoint::testing

#endif  // SIXPOINT_TESTS_TEST_SUPPORT_HPP
