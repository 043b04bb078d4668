#include "sixpoint/routh.hpp"

#include <stdexcept>

#include "sixpoint/detail/cleared.hpp"
#include "sixpoint/error.hpp"

namespace sixpoint {

using detail::evaluate_cleared;

const char* to_string(AreaClass kind) noexcept {
  switch (kind) {
    case AreaClass::finite: return "finite";
    case AreaClass::unbounded: return "unbounded";
    case AreaClass::indeterminate: return "indeterminate";
  }
  return "unknown";
}

AreaRatio AreaRatio::from_cleared(const Integer& num, const Integer& den) {
  if (sgn(num) == 0 && sgn(den) == 0) return indeterminate();
  return AreaRatio(ProjRatio::from_fraction(num, den));
}

AreaClass AreaRatio::kind() const {
  if (!value_) return AreaClass::indeterminate;
  return value_->is_infinite() ? AreaClass::unbounded : AreaClass::finite;
}

std::optional<Rational> AreaRatio::finite_value() const {
  if (!value_) return std::nullopt;
  return classify(*value_);
}

std::string AreaRatio::to_string() const {
  switch (kind()) {
    case AreaClass::finite: return value_->to_string();
    case AreaClass::unbounded: return "unbounded";
    case AreaClass::indeterminate: return "indeterminate";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const AreaRatio& r) { return os << r.to_string(); }

Integer ClearedRatio::denominator() const {
  return denominator_factors[0] * denominator_factors[1] * denominator_factors[2];
}

ClearedRatio cevian_triangle_terms(const CevianRatios& r) {
  const ProjRatio* def[] = {&r.d, &r.e, &r.f};
  Integer inner = evaluate_cleared(def, {{1, 0b111}, {-1, 0}});

  // 1 + x + xy over the pair (x, y)
  auto factor = [](const ProjRatio& x, const ProjRatio& y) {
    const ProjRatio* xy[] = {&x, &y};
    return evaluate_cleared(xy, {{1, 0}, {1, 0b01}, {1, 0b11}});
  };
  return ClearedRatio{inner * inner, {factor(r.f, r.d), factor(r.d, r.e), factor(r.e, r.f)}};
}

ClearedRatio menelaus_triangle_terms(const CevianRatios& r) {
  const ProjRatio* def[] = {&r.d, &r.e, &r.f};
  auto one_plus = [](const ProjRatio& x) { return x.q() + x.p(); };
  return ClearedRatio{evaluate_cleared(def, {{1, 0b111}, {1, 0}}),
                      {one_plus(r.d), one_plus(r.e), one_plus(r.f)}};
}

namespace {

// Bit positions follow SixRatios field order.
constexpr std::uint32_t kAp = 1U << 0, kAm = 1U << 1, kBp = 1U << 2;
constexpr std::uint32_t kBm = 1U << 3, kCp = 1U << 4, kCm = 1U << 5;

}  // namespace

ClearedRatio sixpoint_edge_triangle_terms(const SixRatios& r) {
  const ProjRatio* six[] = {&r.a_plus, &r.a_minus, &r.b_plus, &r.b_minus, &r.c_plus, &r.c_minus};
  Integer inner = evaluate_cleared(six, {{1, kAp | kBp | kCp},
                                         {1, kAm | kBm | kCm},
                                         {1, kAp | kAm},
                                         {1, kBp | kBm},
                                         {1, kCp | kCm},
                                         {-1, 0}});

  // 1 - x+x- + y(1 + x-) + z(1 + x+) over (x+, x-, y, z)
  auto factor = [](const ProjRatio& xp, const ProjRatio& xm, const ProjRatio& y,
                   const ProjRatio& z) {
    const ProjRatio* v[] = {&xp, &xm, &y, &z};
    return evaluate_cleared(
        v, {{1, 0}, {-1, 0b0011}, {1, 0b0100}, {1, 0b0110}, {1, 0b1000}, {1, 0b1001}});
  };
  return ClearedRatio{inner * inner,
                      {factor(r.a_plus, r.a_minus, r.b_minus, r.c_plus),
                       factor(r.b_plus, r.b_minus, r.c_minus, r.a_plus),
                       factor(r.c_plus, r.c_minus, r.a_minus, r.b_plus)}};
}

ClearedRatio sixpoint_vertex_triangle_terms(const SixRatios& r) {
  const ProjRatio* six[] = {&r.a_plus, &r.a_minus, &r.b_plus, &r.b_minus, &r.c_plus, &r.c_minus};
  Integer numerator = evaluate_cleared(six, {{1, kAp | kBp | kCp},
                                             {1, kAm | kBm | kCm},
                                             {-1, kAp | kAm},
                                             {-1, kBp | kBm},
                                             {-1, kCp | kCm},
                                             {1, 0}});
  // 1 + x + y
  auto factor = [](const ProjRatio& x, const ProjRatio& y) {
    const ProjRatio* v[] = {&x, &y};
    return evaluate_cleared(v, {{1, 0}, {1, 0b01}, {1, 0b10}});
  };
  return ClearedRatio{numerator,
                      {factor(r.b_minus, r.c_plus), factor(r.c_minus, r.a_plus),
                       factor(r.a_minus, r.b_plus)}};
}

AreaRatio routh_cevian_triangle_ratio(const CevianRatios& r) {
  return cevian_triangle_terms(r).ratio();
}

AreaRatio routh_menelaus_triangle_ratio(const CevianRatios& r) {
  return menelaus_triangle_terms(r).ratio();
}

AreaRatio sixpoint_edge_triangle_ratio(const SixRatios& r) {
  return sixpoint_edge_triangle_terms(r).ratio();
}

AreaRatio sixpoint_vertex_triangle_ratio(const SixRatios& r) {
  return sixpoint_vertex_triangle_terms(r).ratio();
}

CevianPoints construct_cevian_points(const Triangle& t, const CevianRatios& r) {
  return CevianPoints{section_point(t.b(), t.c(), r.d), section_point(t.c(), t.a(), r.e),
                      section_point(t.a(), t.b(), r.f)};
}

SixPoints construct_six_points(const Triangle& t, const SixRatios& r) {
  const ProjPoint &a = t.a(), &b = t.b(), &c = t.c();
  return SixPoints{section_point(b, c, r.a_plus),  section_point(c, b, r.a_minus),
                   section_point(c, a, r.b_plus),  section_point(a, c, r.b_minus),
                   section_point(a, b, r.c_plus),  section_point(b, a, r.c_minus)};
}

namespace {

Line checked_join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) {
    throw Error(Errc::degenerate_configuration, "line through coincident points " + p.to_string());
  }
  return join(p, q);
}

ProjPoint checked_meet(const Line& l1, const Line& l2) {
  if (l1 == l2) {
    throw Error(Errc::degenerate_configuration, "intersection of identical lines " + l1.to_string());
  }
  return meet(l1, l2);
}

// w0 A + w1 B + w2 C with A, B, C normalized to w = 1; a zero weight sum
// gives a point at infinity.
ProjPoint barycentric(const Triangle& t, const Integer& w0, const Integer& w1, const Integer& w2) {
  if (sgn(w0) == 0 && sgn(w1) == 0 && sgn(w2) == 0) {
    throw Error(Errc::degenerate_configuration, "barycentric weights all vanish");
  }
  const ProjPoint &a = t.a(), &b = t.b(), &c = t.c();
  Integer sa = w0 * b.w() * c.w();
  Integer sb = w1 * a.w() * c.w();
  Integer sc = w2 * a.w() * b.w();
  return ProjPoint(sa * a.x() + sb * b.x() + sc * c.x(), sa * a.y() + sb * b.y() + sc * c.y(),
                   (w0 + w1 + w2) * a.w() * b.w() * c.w());
}

// Rotates (A, B, C) -> (B, C, A).
Triangle rotated(const Triangle& t) { return Triangle(t.b(), t.c(), t.a()); }

// a -> b -> c -> a on the ratio labels.
SixRatios rotated(const SixRatios& r) {
  return SixRatios{r.b_plus, r.b_minus, r.c_plus, r.c_minus, r.a_plus, r.a_minus};
}

ProjPoint edge_vertex_closed_form(const Triangle& t, const SixRatios& r) {
  const ProjRatio* v[] = {&r.a_plus, &r.a_minus, &r.b_minus, &r.c_plus};
  Integer wa = evaluate_cleared(v, {{1, 0}, {-1, 0b0011}});
  Integer wb = evaluate_cleared(v, {{1, 0b1000}, {1, 0b0110}});
  Integer wc = evaluate_cleared(v, {{1, 0b0100}, {1, 0b1001}});
  return barycentric(t, wa, wb, wc);
}

ProjPoint hat_point_closed_form(const Triangle& t, const SixRatios& r) {
  const ProjRatio* v[] = {&r.c_plus, &r.b_minus};
  return barycentric(t, evaluate_cleared(v, {{1, 0}}), evaluate_cleared(v, {{1, 0b01}}),
                     evaluate_cleared(v, {{1, 0b10}}));
}

template <typename ClosedForm>
void require_agreement(const TriangleVertices& by_meets, ClosedForm closed_form, const char* what) {
  bool agree = false;
  try {
    agree = by_meets == closed_form();
  } catch (const Error&) {
    // closed form undefined while every intersection exists
  }
  if (!agree) {
    throw std::logic_error(std::string(what) + ": intersection and closed-form vertices differ");
  }
}

}  // namespace

TriangleLines cevian_lines(const Triangle& t, const CevianRatios& r) {
  CevianPoints p = construct_cevian_points(t, r);
  return {checked_join(t.a(), p.d), checked_join(t.b(), p.e), checked_join(t.c(), p.f)};
}

TriangleLines sixpoint_edge_lines(const Triangle& t, const SixRatios& r) {
  SixPoints p = construct_six_points(t, r);
  return {checked_join(p.b_plus, p.c_minus), checked_join(p.c_plus, p.a_minus),
          checked_join(p.a_plus, p.b_minus)};
}

TriangleVertices cevian_triangle_vertices(const Triangle& t, const CevianRatios& r) {
  auto [ad, be, cf] = cevian_lines(t, r);
  return {checked_meet(cf, ad), checked_meet(ad, be), checked_meet(be, cf)};
}

TriangleVertices menelaus_triangle_vertices(const Triangle& t, const CevianRatios& r) {
  CevianPoints p = construct_cevian_points(t, r);
  return {p.d, p.e, p.f};
}

TriangleVertices edge_triangle_vertices_closed_form(const Triangle& t, const SixRatios& r) {
  Triangle t1 = rotated(t), t2 = rotated(t1);
  SixRatios r1 = rotated(r), r2 = rotated(r1);
  return {edge_vertex_closed_form(t, r), edge_vertex_closed_form(t1, r1),
          edge_vertex_closed_form(t2, r2)};
}

TriangleVertices edge_triangle_vertices(const Triangle& t, const SixRatios& r) {
  auto [l1, l2, l3] = sixpoint_edge_lines(t, r);
  TriangleVertices by_meets = {checked_meet(l2, l3), checked_meet(l3, l1), checked_meet(l1, l2)};
  require_agreement(by_meets, [&] { return edge_triangle_vertices_closed_form(t, r); },
                    "edge triangle");
  return by_meets;
}

TriangleVertices vertex_triangle_vertices_closed_form(const Triangle& t, const SixRatios& r) {
  Triangle t1 = rotated(t), t2 = rotated(t1);
  SixRatios r1 = rotated(r), r2 = rotated(r1);
  return {hat_point_closed_form(t, r), hat_point_closed_form(t1, r1),
          hat_point_closed_form(t2, r2)};
}

TriangleVertices vertex_triangle_vertices(const Triangle& t, const SixRatios& r) {
  SixPoints p = construct_six_points(t, r);
  const ProjPoint &a = t.a(), &b = t.b(), &c = t.c();
  TriangleVertices by_meets = {
      checked_meet(checked_join(b, p.b_minus), checked_join(c, p.c_plus)),
      checked_meet(checked_join(c, p.c_minus), checked_join(a, p.a_plus)),
      checked_meet(checked_join(a, p.a_minus), checked_join(b, p.b_plus))};
  require_agreement(by_meets, [&] { return vertex_triangle_vertices_closed_form(t, r); },
                    "vertex triangle");
  return by_meets;
}

AreaRatio oracle_area_ratio(const Triangle& t, const TriangleVertices& v) {
  for (const ProjPoint& p : v) {
    if (p.at_infinity()) return AreaRatio::unbounded();
  }
  return AreaRatio::finite(signed_area(v[0], v[1], v[2]) / signed_area(t.a(), t.b(), t.c()));
}

}  // namespace sixpoint
