#ifndef SIXPOINT_DETAIL_CLEARED_HPP
#define SIXPOINT_DETAIL_CLEARED_HPP

#include <cstdint>
#include <initializer_list>
#include <span>

#include "sixpoint/rational.hpp"

namespace sixpoint::detail {

/// coefficient * product of the variables whose bit is set in `mask`.
struct Monomial {
  int coefficient;
  std::uint32_t mask;
};

/// Evaluates a multi-affine polynomial in projective ratios by clearing
/// denominators: each variable contributes p when present in a monomial and
/// q otherwise.
inline Integer evaluate_cleared(std::span<const ProjRatio* const> vars,
                                std::initializer_list<Monomial> terms) {
  Integer total = 0;
  for (const Monomial& term : terms) {
    Integer product = term.coefficient;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      product *= (term.mask >> i) & 1U ? vars[i]->p() : vars[i]->q();
    }
    total += product;
  }
  return total;
}

}  // namespace sixpoint::detail

#endif  // SIXPOINT_DETAIL_CLEARED_HPP
