#include "sixpoint/projective.hpp"

#include <sstream>
#include <utility>

#include "sixpoint/error.hpp"

namespace sixpoint {

namespace {

using Triple = std::array<Integer, 3>;

// Divides out the content and makes the first nonzero entry, visited in
// `order`, positive. Returns false for the zero triple.
bool canonicalize(Triple& t, const std::array<int, 3>& order) {
  Integer g = gcd(gcd(t[0], t[1]), t[2]);
  if (sgn(g) == 0) return false;
  for (auto& v : t) v /= g;
  for (int i : order) {
    if (sgn(t[i]) != 0) {
      if (sgn(t[i]) < 0) {
        for (auto& v : t) v = -v;
      }
      break;
    }
  }
  return true;
}

Triple cross(const Triple& u, const Triple& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Integer det3(const Triple& r0, const Triple& r1, const Triple& r2) {
  Triple c = cross(r1, r2);
  return r0[0] * c[0] + r0[1] * c[1] + r0[2] * c[2];
}

bool is_zero(const Triple& t) { return sgn(t[0]) == 0 && sgn(t[1]) == 0 && sgn(t[2]) == 0; }

// Homogeneous point from three rational coordinates.
ProjPoint from_rationals(const Rational& x, const Rational& y, const Rational& w) {
  Integer dx = x.den(), dy = y.den(), dw = w.den();
  return ProjPoint(x.num() * dy * dw, y.num() * dx * dw, w.num() * dx * dy);
}

void require_segment(const ProjPoint& b, const ProjPoint& c) {
  if (!b.is_affine() || !c.is_affine()) {
    throw Error(Errc::invalid_segment, "segment endpoints must be affine");
  }
  if (b == c) {
    throw Error(Errc::invalid_segment, "segment endpoints coincide");
  }
}

}  // namespace

ProjPoint::ProjPoint(Integer x, Integer y, Integer w)
    : coords_{std::move(x), std::move(y), std::move(w)} {
  if (!canonicalize(coords_, {2, 0, 1})) {
    throw Error(Errc::undefined_point, "homogeneous point (0 : 0 : 0)");
  }
}

ProjPoint ProjPoint::affine(const Rational& x, const Rational& y) {
  return from_rationals(x, y, Rational(1));
}

Rational ProjPoint::affine_x() const {
  if (!is_affine()) throw Error(Errc::not_affine, "point at infinity " + to_string());
  return Rational(x(), w());
}

Rational ProjPoint::affine_y() const {
  if (!is_affine()) throw Error(Errc::not_affine, "point at infinity " + to_string());
  return Rational(y(), w());
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  if (is_affine()) {
    os << '(' << affine_x() << ", " << affine_y() << ')';
  } else {
    os << '(' << x().get_str() << " : " << y().get_str() << " : 0)";
  }
  return os.str();
}

Line::Line(Integer l, Integer m, Integer n)
    : coeffs_{std::move(l), std::move(m), std::move(n)} {
  if (!canonicalize(coeffs_, {0, 1, 2})) {
    throw Error(Errc::undefined_line, "line (0 : 0 : 0)");
  }
}

std::string Line::to_string() const {
  return "[" + l().get_str() + " : " + m().get_str() + " : " + n().get_str() + "]";
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Line& l) { return os << l.to_string(); }

Triangle::Triangle(ProjPoint a, ProjPoint b, ProjPoint c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (!a_.is_affine() || !b_.is_affine() || !c_.is_affine()) {
    throw Error(Errc::not_affine, "triangle vertices must be affine");
  }
  if (signed_area(a_, b_, c_).is_zero()) {
    throw Error(Errc::degenerate_configuration, "triangle has zero area");
  }
}

Triangle Triangle::canonical() {
  return Triangle(ProjPoint(0, 0, 1), ProjPoint(1, 0, 1), ProjPoint(0, 1, 1));
}

bool incident(const ProjPoint& p, const Line& l) {
  return sgn(p.x() * l.l() + p.y() * l.m() + p.w() * l.n()) == 0;
}

Line join(const ProjPoint& p, const ProjPoint& q) {
  Triple c = cross(p.coords(), q.coords());
  if (is_zero(c)) {
    throw Error(Errc::undefined_line, "join of coincident points " + p.to_string());
  }
  return Line(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

ProjPoint meet(const Line& l1, const Line& l2) {
  Triple c = cross(l1.coeffs(), l2.coeffs());
  if (is_zero(c)) {
    throw Error(Errc::undefined_point, "meet of identical lines " + l1.to_string());
  }
  return ProjPoint(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return sgn(det3(p.coords(), q.coords(), r.coords())) == 0;
}

bool concurrent(const Line& l1, const Line& l2, const Line& l3) {
  return sgn(det3(l1.coeffs(), l2.coeffs(), l3.coeffs())) == 0;
}

Rational signed_area(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (!p.is_affine() || !q.is_affine() || !r.is_affine()) {
    throw Error(Errc::not_affine, "signed area needs affine vertices");
  }
  // det of the homogeneous rows equals w_p w_q w_r times the affine determinant.
  Integer d = det3(p.coords(), q.coords(), r.coords());
  return Rational(d, 2 * p.w() * q.w() * r.w());
}

ProjPoint section_point(const ProjPoint& b, const ProjPoint& c, const ProjRatio& r) {
  require_segment(b, c);
  const Integer& p = r.p();
  const Integer& q = r.q();
  return ProjPoint(q * b.x() * c.w() + p * c.x() * b.w(),
                   q * b.y() * c.w() + p * c.y() * b.w(),
                   (q + p) * b.w() * c.w());
}

ProjRatio ratio_of_section(const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  require_segment(b, c);
  if (!incident(d, join(b, c))) {
    throw Error(Errc::off_line, d.to_string() + " is not on line " + b.to_string() + c.to_string());
  }
  if (d.at_infinity()) return ProjRatio(-1);

  // D - B = t (C - B) and C - D = (1 - t)(C - B); read both along a
  // coordinate where C - B does not vanish.
  bool use_x = b.affine_x() != c.affine_x();
  Rational bk = use_x ? b.affine_x() : b.affine_y();
  Rational ck = use_x ? c.affine_x() : c.affine_y();
  Rational dk = use_x ? d.affine_x() : d.affine_y();
  Rational before = dk - bk;
  Rational after = ck - dk;
  return ProjRatio::from_fraction(before.num() * after.den(), after.num() * before.den());
}

AffineMap::AffineMap(std::array<Rational, 4> linear, std::array<Rational, 2> translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (determinant().is_zero()) {
    throw Error(Errc::degenerate_configuration, "affine map is singular");
  }
}

AffineMap AffineMap::identity() {
  return AffineMap({Rational(1), Rational(0), Rational(0), Rational(1)}, {Rational(0), Rational(0)});
}

Rational AffineMap::determinant() const {
  return linear_[0] * linear_[3] - linear_[1] * linear_[2];
}

ProjPoint AffineMap::operator()(const ProjPoint& p) const {
  Rational x(p.x()), y(p.y()), w(p.w());
  Rational nx = linear_[0] * x + linear_[1] * y + translation_[0] * w;
  Rational ny = linear_[2] * x + linear_[3] * y + translation_[1] * w;
  return from_rationals(nx, ny, w);
}

Triangle AffineMap::operator()(const Triangle& t) const {
  return Triangle((*this)(t.a()), (*this)(t.b()), (*this)(t.c()));
}

std::string AffineMap::to_string() const {
  std::ostringstream os;
  os << "[[" << linear_[0] << ", " << linear_[1] << "], [" << linear_[2] << ", " << linear_[3]
     << "]] + (" << translation_[0] << ", " << translation_[1] << ')';
  return os.str();
}

}  // namespace sixpoint
