// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/error.hpp"

namespace semigreen {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::mixed_semifields:
        return "MixedSemifields";
      case ErrorKind::not_invertible:
        return "NotInvertible";
      case ErrorKind::dimension_mismatch:
        return "DimensionMismatch";
      case ErrorKind::index_out_of_range:
        return "IndexOutOfRange";
      case ErrorKind::zero_coefficient:
        return "ZeroCoefficient";
      case ErrorKind::not_monomial:
        return "NotMonomial";
      case ErrorKind::undecidable_over_semifield:
        return "UndecidableOverSemifield";
      case ErrorKind::rank_undetermined:
        return "RankUndetermined";
      case ErrorKind::not_bijective:
        return "NotBijective";
      case ErrorKind::unsupported_mode:
        return "UnsupportedMode";
      case ErrorKind::unknown_suite:
        return "UnknownSuite";
      case ErrorKind::unsupported_params:
        return "UnsupportedParams";
      case ErrorKind::parse_error:
        return "ParseError";
    }
    return "Unknown";
  }

}  // namespace semigreen
