#include "sixpoint/harness/oracle.hpp"

#include "sixpoint/error.hpp"

namespace sixpoint::harness {

namespace {

template <typename T>
bool any_pair_equal(const T& x, const T& y, const T& z) {
  return x == y || y == z || z == x;
}

// Runs a construction, mapping degenerate-geometry errors to nullopt.
template <typename F>
auto guarded(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::undefined_line:
      case Errc::undefined_point:
      case Errc::degenerate_configuration:
        return std::nullopt;
      default:
        throw;
    }
  }
}

}  // namespace

std::optional<bool> oracle_ceva(const Triangle& t, const CevianRatios& r) {
  auto lines = guarded([&] { return cevian_lines(t, r); });
  if (!lines) return std::nullopt;
  const auto& [ad, be, cf] = *lines;
  if (any_pair_equal(ad, be, cf)) return std::nullopt;
  return concurrent(ad, be, cf);
}

std::optional<bool> oracle_menelaus(const Triangle& t, const CevianRatios& r) {
  CevianPoints p = construct_cevian_points(t, r);
  if (any_pair_equal(p.d, p.e, p.f)) return std::nullopt;
  return collinear(p.d, p.e, p.f);
}

std::optional<bool> oracle_sixpoint_concurrence(const Triangle& t, const SixRatios& r) {
  auto lines = guarded([&] { return sixpoint_edge_lines(t, r); });
  if (!lines) return std::nullopt;
  const auto& [l1, l2, l3] = *lines;
  if (any_pair_equal(l1, l2, l3)) return std::nullopt;
  return concurrent(l1, l2, l3);
}

std::optional<TriangleVertices> hat_points_by_meets(const Triangle& t, const SixRatios& r) {
  return guarded([&] {
    SixPoints p = construct_six_points(t, r);
    const ProjPoint &a = t.a(), &b = t.b(), &c = t.c();
    return TriangleVertices{meet(join(b, p.b_minus), join(c, p.c_plus)),
                            meet(join(c, p.c_minus), join(a, p.a_plus)),
                            meet(join(a, p.a_minus), join(b, p.b_plus))};
  });
}

std::optional<bool> oracle_sixpoint_collinearity(const Triangle& t, const SixRatios& r) {
  auto hats = hat_points_by_meets(t, r);
  if (!hats) return std::nullopt;
  const auto& [wa, wb, wc] = *hats;
  if (any_pair_equal(wa, wb, wc)) return std::nullopt;
  return collinear(wa, wb, wc);
}

std::optional<TriangleVertices> edge_vertices_by_meets(const Triangle& t, const SixRatios& r) {
  return guarded([&] {
    auto [l1, l2, l3] = sixpoint_edge_lines(t, r);
    return TriangleVertices{meet(l2, l3), meet(l3, l1), meet(l1, l2)};
  });
}

std::optional<AreaRatio> oracle_cevian_area(const Triangle& t, const CevianRatios& r) {
  auto v = guarded([&] { return cevian_triangle_vertices(t, r); });
  if (!v) return std::nullopt;
  return oracle_area_ratio(t, *v);
}

std::optional<AreaRatio> oracle_menelaus_area(const Triangle& t, const CevianRatios& r) {
  return oracle_area_ratio(t, menelaus_triangle_vertices(t, r));
}

std::optional<AreaRatio> oracle_edge_area(const Triangle& t, const SixRatios& r) {
  auto v = edge_vertices_by_meets(t, r);
  if (!v) return std::nullopt;
  return oracle_area_ratio(t, *v);
}

std::optional<AreaRatio> oracle_vertex_area(const Triangle& t, const SixRatios& r) {
  auto v = hat_points_by_meets(t, r);
  if (!v) return std::nullopt;
  return oracle_area_ratio(t, *v);
}

Agreement compare(bool predicate, const std::optional<bool>& oracle) {
  if (!oracle) return Agreement::degenerate;
  return predicate == *oracle ? Agreement::agree : Agreement::disagree;
}

Agreement compare(const AreaRatio& formula, const std::optional<AreaRatio>& oracle) {
  bool formula_degenerate = formula.kind() == AreaClass::indeterminate;
  if (formula_degenerate && !oracle) return Agreement::agree;
  if (formula_degenerate || !oracle) return Agreement::degenerate;
  return formula == *oracle ? Agreement::agree : Agreement::disagree;
}

}  // namespace sixpoint::harness
