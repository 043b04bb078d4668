#include "sixpoint/error.hpp"

namespace sixpoint {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_ratio: return "invalid-ratio";
    case Errc::parse: return "parse";
    case Errc::undefined_line: return "undefined-line";
    case Errc::undefined_point: return "undefined-point";
    case Errc::not_affine: return "not-affine";
    case Errc::invalid_segment: return "invalid-segment";
    case Errc::off_line: return "off-line";
    case Errc::degenerate_configuration: return "degenerate-configuration";
    case Errc::usage: return "usage";
  }
  return "unknown";
}

}  // namespace sixpoint
