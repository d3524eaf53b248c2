// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#ifndef SEMIGREEN_ERROR_HPP_
#define SEMIGREEN_ERROR_HPP_

#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view

namespace semigreen {

  //! The failure categories reported by the library.
  enum class ErrorKind {
    mixed_semifields,
    not_invertible,
    dimension_mismatch,
    index_out_of_range,
    zero_coefficient,
    not_monomial,
    undecidable_over_semifield,
    rank_undetermined,
    not_bijective,
    unsupported_mode,
    unknown_suite,
    unsupported_params,
    parse_error
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  //! The single exception type thrown by semigreen; inspect kind() to
  //! distinguish failures.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace semigreen

#endif  // SEMIGREEN_ERROR_HPP_
