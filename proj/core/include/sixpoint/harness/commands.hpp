#ifndef SIXPOINT_HARNESS_COMMANDS_HPP
#define SIXPOINT_HARNESS_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "sixpoint/harness/config.hpp"
#include "sixpoint/harness/report.hpp"

namespace sixpoint::harness {

// Each command throws Error(usage) for configs it cannot run, with the
// offending field named in the message. A report whose has_disagreement()
// is set means a formula and its construction oracle differ on a
// non-degenerate configuration.

/// Predicates for the configured family; mode is ceva, menelaus,
/// concurrence, collinearity or all (the default). With a triangle, each
/// predicate is compared against the incidence oracle.
Report run_check(const ConfigDoc& config);

/// Area formulas; mode is cevian, menelaus-triangle, sixpoint-edges,
/// sixpoint-vertices or all. With a triangle, each formula is compared
/// against the signed area of the constructed triangle.
Report run_area(const ConfigDoc& config);

/// Exact coordinates of every constructed point, line and derived vertex.
/// Uses A = (0, 0), B = (1, 0), C = (0, 1) when no triangle is configured.
Report run_construct(const ConfigDoc& config);

/// Classical embedding of d, e, f and the reduction identities on it.
Report run_embed(const ConfigDoc& config);

struct FuzzOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  long max_magnitude = 10;
  /// all, classical, sixpoint, solve, areas, reduction or affine.
  std::string scope = "all";
  /// Trials run for indices [first_trial, first_trial + trials).
  std::uint64_t first_trial = 0;
  /// Worker threads; the report does not depend on it.
  unsigned jobs = 1;
};

/// Differential run of every formula against its construction oracle plus
/// the reduction and affine-invariance properties.
Report run_fuzz(const FuzzOptions& options);

}  // namespace sixpoint::harness

#endif  // SIXPOINT_HARNESS_COMMANDS_HPP
