#ifndef SIXPOINT_HARNESS_ORACLE_HPP
#define SIXPOINT_HARNESS_ORACLE_HPP

#include <optional>

#include "sixpoint/harness/report.hpp"
#include "sixpoint/routh.hpp"

namespace sixpoint::harness {

// Construction-side answers to the theorem predicates and area formulas.
// Every function returns nullopt when the configuration is degenerate: a
// line through coincident points, an intersection of identical lines, or
// (for the incidence tests) two of the three tested elements coinciding,
// which makes the determinant vanish regardless of the ratios.

std::optional<bool> oracle_ceva(const Triangle& t, const CevianRatios& r);
std::optional<bool> oracle_menelaus(const Triangle& t, const CevianRatios& r);
std::optional<bool> oracle_sixpoint_concurrence(const Triangle& t, const SixRatios& r);
std::optional<bool> oracle_sixpoint_collinearity(const Triangle& t, const SixRatios& r);

/// Intersections only; unlike edge_triangle_vertices there is no closed-form
/// cross-check.
std::optional<TriangleVertices> edge_vertices_by_meets(const Triangle& t, const SixRatios& r);
std::optional<TriangleVertices> hat_points_by_meets(const Triangle& t, const SixRatios& r);

std::optional<AreaRatio> oracle_cevian_area(const Triangle& t, const CevianRatios& r);
std::optional<AreaRatio> oracle_menelaus_area(const Triangle& t, const CevianRatios& r);
std::optional<AreaRatio> oracle_edge_area(const Triangle& t, const SixRatios& r);
std::optional<AreaRatio> oracle_vertex_area(const Triangle& t, const SixRatios& r);

/// A degenerate oracle yields Agreement::degenerate.
Agreement compare(bool predicate, const std::optional<bool>& oracle);

/// Agrees when the values are equal or when the formula is indeterminate and
/// the oracle degenerate; exactly one of the two being degenerate yields
/// Agreement::degenerate.
Agreement compare(const AreaRatio& formula, const std::optional<AreaRatio>& oracle);

}  // namespace sixpoint::harness

#endif  // SIXPOINT_HARNESS_ORACLE_HPP
