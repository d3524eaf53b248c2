// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// The command-line surface:
//
//   relate   --rel <L|R|H|D|J|leqL|leqR|leqJ> [--witness] a.json b.json
//   rank     a.json
//   classify map.json
//   verify   --suite <name> [--semifield s] [--n k] [--mode m] [--seed S]
//            [--trials T] [--maps M] [--strength weak|strong] [--workers W]
//            [--format json|text]
//   eggbox   --n <k> [--format dot|json]
//
// Exit status is 0 on success, 1 when a suite fails, and 2 on any parse or
// validation error, with a diagnostic on the error stream.

#ifndef SEMIGREEN_CLI_HPP_
#define SEMIGREEN_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace semigreen {

  //! Runs one command; \p args excludes the program name.
  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err);

}  // namespace semigreen

#endif  // SEMIGREEN_CLI_HPP_
