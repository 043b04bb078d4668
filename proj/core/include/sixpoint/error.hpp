#ifndef SIXPOINT_ERROR_HPP
#define SIXPOINT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sixpoint {

enum class Errc {
  invalid_ratio,
  parse,
  undefined_line,
  undefined_point,
  not_affine,
  invalid_segment,
  off_line,
  degenerate_configuration,
  usage,
};

const char* to_string(Errc code) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// code() tells callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sixpoint

#endif  // SIXPOINT_ERROR_HPP
