#ifndef SIXPOINT_THEOREMS_HPP
#define SIXPOINT_THEOREMS_HPP

#include <array>
#include <optional>
#include <string_view>

#include "sixpoint/rational.hpp"

namespace sixpoint {

/// d = |BD|/|DC|, e = |CE|/|EA|, f = |AF|/|FB| for D, E, F on the edge-lines
/// opposite A, B, C.
struct CevianRatios {
  ProjRatio d;
  ProjRatio e;
  ProjRatio f;

  friend bool operator==(const CevianRatios&, const CevianRatios&) = default;
};

/// Two points per edge-line, with opposite orientations:
///   a+ = |BA+|/|A+C|   b+ = |CB+|/|B+A|   c+ = |AC+|/|C+B|
///   a- = |CA-|/|A-B|   b- = |AB-|/|B-C|   c- = |BC-|/|C-A|
struct SixRatios {
  ProjRatio a_plus;
  ProjRatio a_minus;
  ProjRatio b_plus;
  ProjRatio b_minus;
  ProjRatio c_plus;
  ProjRatio c_minus;

  friend bool operator==(const SixRatios&, const SixRatios&) = default;
};

/// Field order of SixRatios; also the order used by the text formats.
enum class SixRatioId { a_plus, a_minus, b_plus, b_minus, c_plus, c_minus };

inline constexpr std::array<SixRatioId, 6> kSixRatioIds = {
    SixRatioId::a_plus, SixRatioId::a_minus, SixRatioId::b_plus,
    SixRatioId::b_minus, SixRatioId::c_plus, SixRatioId::c_minus};

/// "a+", "a-", ...
std::string_view key(SixRatioId id);
/// Throws Error(usage) for unknown keys.
SixRatioId six_ratio_id(std::string_view key);

const ProjRatio& get(const SixRatios& r, SixRatioId id);
ProjRatio& get(SixRatios& r, SixRatioId id);

/// Number of infinite components.
int infinite_count(const CevianRatios& r);
int infinite_count(const SixRatios& r);

// Denominator-cleared forms. Each is multi-affine and homogeneous of degree
// one in every (p : q) pair, so its sign is well defined up to the positive
// canonical q's and its vanishing is projectively meaningful.

/// p_d p_e p_f - q_d q_e q_f
Integer ceva_form(const CevianRatios& r);
/// p_d p_e p_f + q_d q_e q_f
Integer menelaus_form(const CevianRatios& r);
/// a+b+c+ + a-b-c- + a+a- + b+b- + c+c- - 1, cleared.
Integer concurrence_form(const SixRatios& r);
/// a+b+c+ + a-b-c- - a+a- - b+b- - c+c- + 1, cleared.
Integer collinearity_form(const SixRatios& r);

/// d e f = 1
bool ceva_holds(const CevianRatios& r);
/// d e f = -1
bool menelaus_holds(const CevianRatios& r);
/// Lines B+C-, C+A-, A+B- concur:
/// a+b+c+ + a-b-c- = 1 - a+a- - b+b- - c+c-
bool sixpoint_concurrence_holds(const SixRatios& r);
/// Points meet(BB-, CC+), meet(CC-, AA+), meet(AA-, BB+) are collinear:
/// a+b+c+ + a-b-c- = -1 + a+a- + b+b- + c+c-
bool sixpoint_collinearity_holds(const SixRatios& r);

/// a+ = d, b+ = e, c+ = f and every minus ratio zero, which places A-, B-,
/// C- at C, A, B respectively.
SixRatios classical_embedding(const CevianRatios& r);

enum class SolveMode { concurrence, collinearity };

struct SolveResult {
  enum class Kind { unique, any, none };
  Kind kind;
  /// Set only for Kind::unique.
  std::optional<ProjRatio> value;
};

using PartialSixRatios = std::array<std::optional<ProjRatio>, 6>;

/// Solves the selected equation for the single missing component. The
/// equation is linear in that component: alpha * x + beta = 0.
///
/// Throws Error(usage) unless exactly one component is missing and the
/// other five are finite.
SolveResult solve_sixth_ratio(const PartialSixRatios& five, SolveMode mode);

}  // namespace sixpoint

#endif  // SIXPOINT_THEOREMS_HPP
