// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Named verification suites over the classification results, and the egg-box
// decomposition of M_n(B).

#ifndef SEMIGREEN_VERIFY_HPP_
#define SEMIGREEN_VERIFY_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "linear_map.hpp"
#include "matrix.hpp"

namespace semigreen {

  enum class Mode { exhaustive, randomized };

  //! "exhaustive" or "randomized".
  std::string_view to_string(Mode m) noexcept;

  //! Inverse of to_string(Mode); throws Error(parse_error).
  Mode mode_from_string(std::string_view name);

  struct SuiteParams {
    Semifield               semifield = Semifield::boolean;
    size_t                  n         = 2;
    Mode                    mode      = Mode::exhaustive;
    std::optional<uint64_t> seed;
    //! Pairs per (map, relation) check, or candidates for the sticky search.
    size_t trials = 1000;
    //! Sampled maps; the suite default when unset.
    std::optional<size_t> maps;
    //! Strength of the corollaries checks.
    Strength strength = Strength::strong;
    //! 0 means std::thread::hardware_concurrency().
    size_t workers = 0;
  };

  struct ReportWitness {
    std::string                                 label;
    std::vector<std::pair<std::string, Matrix>> matrices;
  };

  struct SuiteReport {
    std::string             suite;
    std::string             semifield;
    size_t                  n;
    Mode                    mode;
    std::optional<uint64_t> seed;
    bool                    pass = true;
    size_t                  maps_enumerated = 0;
    size_t                  preservers_found = 0;
    size_t                  pairs_checked = 0;
    //! Suite-specific counts, in a fixed order.
    std::vector<std::pair<std::string, uint64_t>> counts;
    //! Named assertions, in the order they were made.
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<ReportWitness>                witnesses;

    //! Records a check; a failed check fails the report.
    void check(std::string name, bool ok);

    //! The value of a suite-specific count; throws Error(index_out_of_range).
    uint64_t count(std::string_view name) const;

    //! Whether the named check passed; throws Error(index_out_of_range).
    bool passed(std::string_view name) const;
  };

  //! The suite names, in a fixed order.
  std::vector<std::string> const& suite_names();

  //! Runs a suite.  Throws Error(unknown_suite), and
  //! Error(unsupported_params) when the suite cannot run with \p params
  //! (including randomized runs without a seed).
  SuiteReport run_suite(std::string_view name, SuiteParams const& params);

  ////////////////////////////////////////////////////////////////////////
  // Egg-box
  ////////////////////////////////////////////////////////////////////////

  struct DClass {
    //! Factor rank shared by every member.
    size_t rank;
    //! cells[r][l] is the H-class in the r-th R-class and l-th L-class, as
    //! sorted matrix codes; R- and L-classes are ordered by least code.
    std::vector<std::vector<std::vector<uint64_t>>> cells;

    size_t size() const noexcept;
  };

  struct EggBox {
    size_t n;
    //! Ordered by least code.
    std::vector<DClass> classes;
  };

  //! The L-, R-, H- and D-classes of M_n(B), D as the join of L and R.
  //! Throws Error(unsupported_params) unless 1 <= n <= 3.
  EggBox eggbox(size_t n);

}  // namespace semigreen

#endif  // SEMIGREEN_VERIFY_HPP_
