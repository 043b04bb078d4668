#ifndef SIXPOINT_HARNESS_CONFIG_HPP
#define SIXPOINT_HARNESS_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "sixpoint/projective.hpp"
#include "sixpoint/theorems.hpp"

namespace sixpoint::harness {

using RatioFamily = std::variant<CevianRatios, SixRatios>;

/// Input of the check, area, construct and embed commands.
///
/// The file form is one `key = value` per line, `#` starts a comment:
///
///     mode = concurrence
///     triangle = 0,0; 1,0; 0,1
///     a+ = 1/2
///     a- = 1/2
///     ...
///
/// Ratio keys are d, e, f or a+, a-, b+, b-, c+, c-; values use the ratio
/// grammar ("3", "-1/4", "inf").
struct ConfigDoc {
  std::optional<Triangle> triangle;
  std::optional<RatioFamily> ratios;
  std::string mode;
};

/// Throws Error(usage) or Error(parse) with a message naming the field.
ConfigDoc parse_config(std::string_view text);

/// "d=1,e=2,f=1/3", "1,2,1/3" (d, e, f) or "a+=1/2,a-=1,...".
RatioFamily parse_ratio_list(std::string_view text);

/// "x,y; x,y; x,y" with exact fraction coordinates.
Triangle parse_triangle(std::string_view text);

/// Inverse of parse_triangle for affine vertices.
std::string format_triangle(const Triangle& t);

}  // namespace sixpoint::harness

#endif  // SIXPOINT_HARNESS_CONFIG_HPP
