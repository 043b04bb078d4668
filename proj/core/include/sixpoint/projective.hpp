#ifndef SIXPOINT_PROJECTIVE_HPP
#define SIXPOINT_PROJECTIVE_HPP

#include <array>
#include <ostream>
#include <string>

#include "sixpoint/rational.hpp"

namespace sixpoint {

/// Point of the real projective plane in homogeneous integer coordinates.
///
/// Canonical form: gcd(x, y, w) = 1 and the first nonzero entry of
/// (w, x, y) is positive. w == 0 marks a point at infinity, i.e. a direction.
class ProjPoint {
 public:
  /// Throws Error(undefined_point) for (0, 0, 0).
  ProjPoint(Integer x, Integer y, Integer w);

  static ProjPoint affine(const Rational& x, const Rational& y);
  static ProjPoint direction(Integer dx, Integer dy) { return {std::move(dx), std::move(dy), 0}; }

  const Integer& x() const { return coords_[0]; }
  const Integer& y() const { return coords_[1]; }
  const Integer& w() const { return coords_[2]; }
  const std::array<Integer, 3>& coords() const { return coords_; }

  bool is_affine() const { return sgn(coords_[2]) != 0; }
  bool at_infinity() const { return !is_affine(); }

  /// Throw Error(not_affine) for points at infinity.
  Rational affine_x() const;
  Rational affine_y() const;

  /// "(x, y)" for affine points, "(x : y : 0)" for directions.
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::array<Integer, 3> coords_;
};

/// Line l*x + m*y + n*w = 0. Canonical form: gcd 1 and the first nonzero of
/// (l, m, n) positive.
class Line {
 public:
  /// Throws Error(undefined_line) for (0, 0, 0).
  Line(Integer l, Integer m, Integer n);

  const Integer& l() const { return coeffs_[0]; }
  const Integer& m() const { return coeffs_[1]; }
  const Integer& n() const { return coeffs_[2]; }
  const std::array<Integer, 3>& coeffs() const { return coeffs_; }

  /// True for the line at infinity (0 : 0 : 1).
  bool at_infinity() const { return sgn(coeffs_[0]) == 0 && sgn(coeffs_[1]) == 0; }

  std::string to_string() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  std::array<Integer, 3> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const Line& l);

/// Non-degenerate triangle with affine vertices.
class Triangle {
 public:
  /// Throws Error(not_affine) or Error(degenerate_configuration).
  Triangle(ProjPoint a, ProjPoint b, ProjPoint c);

  /// A = (0, 0), B = (1, 0), C = (0, 1).
  static Triangle canonical();

  const ProjPoint& a() const { return a_; }
  const ProjPoint& b() const { return b_; }
  const ProjPoint& c() const { return c_; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  ProjPoint a_;
  ProjPoint b_;
  ProjPoint c_;
};

bool incident(const ProjPoint& p, const Line& l);

/// Throws Error(undefined_line) when p == q.
Line join(const ProjPoint& p, const ProjPoint& q);

/// Parallel lines meet at infinity. Throws Error(undefined_point) when
/// l1 == l2.
ProjPoint meet(const Line& l1, const Line& l2);

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Three parallel lines count as concurrent.
bool concurrent(const Line& l1, const Line& l2, const Line& l3);

/// Half the orientation determinant. Throws Error(not_affine).
Rational signed_area(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// The point D on line BC with |BD| / |DC| = r, i.e. D = q*B + p*C for
/// r = (p : q) with B and C normalized to w = 1.
///
/// r = 0 gives B, r = inf gives C, r = -1 gives the point at infinity of BC.
/// Throws Error(invalid_segment) when B == C or either is not affine.
ProjPoint section_point(const ProjPoint& b, const ProjPoint& c, const ProjRatio& r);

/// Inverse of section_point. Throws Error(invalid_segment) as above and
/// Error(off_line) when D is not on BC.
ProjRatio ratio_of_section(const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);

/// Invertible affine map x' = M x + t with rational entries.
class AffineMap {
 public:
  /// Throws Error(degenerate_configuration) for a singular linear part.
  AffineMap(std::array<Rational, 4> linear, std::array<Rational, 2> translation);

  static AffineMap identity();

  /// Directions are mapped by the linear part only.
  ProjPoint operator()(const ProjPoint& p) const;
  Triangle operator()(const Triangle& t) const;

  Rational determinant() const;
  const std::array<Rational, 4>& linear() const { return linear_; }
  const std::array<Rational, 2>& translation() const { return translation_; }

  std::string to_string() const;

 private:
  std::array<Rational, 4> linear_;  // row major
  std::array<Rational, 2> translation_;
};

}  // namespace sixpoint

#endif  // SIXPOINT_PROJECTIVE_HPP
