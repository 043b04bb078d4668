#ifndef SIXPOINT_ROUTH_HPP
#define SIXPOINT_ROUTH_HPP

#include <array>
#include <optional>
#include <string>

#include "sixpoint/projective.hpp"
#include "sixpoint/theorems.hpp"

namespace sixpoint {

enum class AreaClass { finite, unbounded, indeterminate };

const char* to_string(AreaClass kind) noexcept;

/// Signed area of a derived triangle over that of the reference triangle.
class AreaRatio {
 public:
  /// num / den as a projective value; 0 / 0 is indeterminate.
  static AreaRatio from_cleared(const Integer& num, const Integer& den);
  static AreaRatio finite(const Rational& value) { return AreaRatio(ProjRatio(value)); }
  static AreaRatio unbounded() { return AreaRatio(ProjRatio::infinity()); }
  static AreaRatio indeterminate() { return AreaRatio(std::nullopt); }

  AreaClass kind() const;
  /// Empty iff indeterminate.
  const std::optional<ProjRatio>& value() const { return value_; }
  std::optional<Rational> finite_value() const;

  /// "1/7", "unbounded" or "indeterminate".
  std::string to_string() const;

  friend bool operator==(const AreaRatio&, const AreaRatio&) = default;

 private:
  explicit AreaRatio(std::optional<ProjRatio> value) : value_(std::move(value)) {}

  std::optional<ProjRatio> value_;
};

std::ostream& operator<<(std::ostream& os, const AreaRatio& r);

/// An area formula with its numerator and denominator factors kept apart.
/// denominator_factors[i] vanishes exactly when vertex i of the matching
/// construction below goes to infinity.
struct ClearedRatio {
  Integer numerator;
  std::array<Integer, 3> denominator_factors;

  Integer denominator() const;
  AreaRatio ratio() const { return AreaRatio::from_cleared(numerator, denominator()); }
};

/// (def - 1)^2 / ((1 + d + de)(1 + e + ef)(1 + f + fd)); factors ordered
/// (1 + f + fd), (1 + d + de), (1 + e + ef).
ClearedRatio cevian_triangle_terms(const CevianRatios& r);
/// (def + 1) / ((1 + d)(1 + e)(1 + f))
ClearedRatio menelaus_triangle_terms(const CevianRatios& r);
/// (a+b+c+ + a-b-c- + a+a- + b+b- + c+c- - 1)^2 over
///   (1 - a+a- + b-(1 + a-) + c+(1 + a+))
///   (1 - b+b- + c-(1 + b-) + a+(1 + b+))
///   (1 - c+c- + a-(1 + c-) + b+(1 + c+))
ClearedRatio sixpoint_edge_triangle_terms(const SixRatios& r);
/// (a+b+c+ + a-b-c- - a+a- - b+b- - c+c- + 1) over
///   (1 + b- + c+)(1 + c- + a+)(1 + a- + b+)
ClearedRatio sixpoint_vertex_triangle_terms(const SixRatios& r);

/// Triangle bounded by lines AD, BE, CF.
AreaRatio routh_cevian_triangle_ratio(const CevianRatios& r);
/// Triangle with vertices D, E, F.
AreaRatio routh_menelaus_triangle_ratio(const CevianRatios& r);
/// Triangle bounded by lines B+C-, C+A-, A+B-.
AreaRatio sixpoint_edge_triangle_ratio(const SixRatios& r);
/// Triangle with vertices meet(BB-, CC+), meet(CC-, AA+), meet(AA-, BB+).
AreaRatio sixpoint_vertex_triangle_ratio(const SixRatios& r);

struct CevianPoints {
  ProjPoint d;
  ProjPoint e;
  ProjPoint f;
};

struct SixPoints {
  ProjPoint a_plus;
  ProjPoint a_minus;
  ProjPoint b_plus;
  ProjPoint b_minus;
  ProjPoint c_plus;
  ProjPoint c_minus;
};

using TriangleVertices = std::array<ProjPoint, 3>;
using TriangleLines = std::array<Line, 3>;

/// D on BC, E on CA, F on AB.
CevianPoints construct_cevian_points(const Triangle& t, const CevianRatios& r);

/// A+ = section(B, C, a+), A- = section(C, B, a-), B+ = section(C, A, b+),
/// B- = section(A, C, b-), C+ = section(A, B, c+), C- = section(B, A, c-).
SixPoints construct_six_points(const Triangle& t, const SixRatios& r);

// The constructions below throw Error(degenerate_configuration) when a line
// is undefined or two lines they intersect coincide.

/// AD, BE, CF
TriangleLines cevian_lines(const Triangle& t, const CevianRatios& r);
/// B+C-, C+A-, A+B-
TriangleLines sixpoint_edge_lines(const Triangle& t, const SixRatios& r);

/// meet(CF, AD), meet(AD, BE), meet(BE, CF)
TriangleVertices cevian_triangle_vertices(const Triangle& t, const CevianRatios& r);
/// D, E, F
TriangleVertices menelaus_triangle_vertices(const Triangle& t, const CevianRatios& r);

/// V_A = meet(C+A-, A+B-), V_B = meet(A+B-, B+C-), V_C = meet(B+C-, C+A-).
///
/// Also evaluates the barycentric closed form
///   V_A = [A (1 - a-a+) + B (c+ + a-b-) + C (b- + a+c+)] / (sum of weights)
/// and its cyclic images, and throws std::logic_error if the two disagree.
TriangleVertices edge_triangle_vertices(const Triangle& t, const SixRatios& r);
TriangleVertices edge_triangle_vertices_closed_form(const Triangle& t, const SixRatios& r);

/// W_A = meet(BB-, CC+), W_B = meet(CC-, AA+), W_C = meet(AA-, BB+), checked
/// against W_A = (A + c+ B + b- C) / (1 + c+ + b-) and cyclic images.
TriangleVertices vertex_triangle_vertices(const Triangle& t, const SixRatios& r);
TriangleVertices vertex_triangle_vertices_closed_form(const Triangle& t, const SixRatios& r);

/// signed_area(V1, V2, V3) / signed_area(A, B, C), or unbounded when any
/// vertex is at infinity.
AreaRatio oracle_area_ratio(const Triangle& t, const TriangleVertices& vertices);

}  // namespace sixpoint

#endif  // SIXPOINT_ROUTH_HPP
