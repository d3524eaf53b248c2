// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Seeded sampling of semifield values, matrices and related pairs.
//
// Every random choice in the library flows from an explicit 64-bit master
// seed.  Work item i (a trial, a sampled map) draws from its own
// std::mt19937_64 seeded with derive_seed(master, i), so verdicts do not
// depend on how items are partitioned across workers.

#ifndef SEMIGREEN_RANDOM_HPP_
#define SEMIGREEN_RANDOM_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64
#include <utility>  // for pair
#include <vector>   // for vector

#include "green.hpp"
#include "matrix.hpp"

namespace semigreen {

  //! Name recorded in reports for the generator used by Sampler.
  inline constexpr char const* generator_name = "mt19937_64+splitmix64";

  //! splitmix64 mix of (master, index).
  uint64_t derive_seed(uint64_t master, uint64_t index) noexcept;

  //! Finite tropical payloads are p / q with p uniform in
  //! [-numerator_bound, numerator_bound] and q uniform in
  //! [1, denominator_bound].
  inline constexpr long numerator_bound   = 1'000'000;
  inline constexpr long denominator_bound = 1'000;

  class Sampler {
   public:
    Sampler(Semifield s, uint64_t seed) : _semifield(s), _rng(seed) {}

    Semifield semifield() const noexcept {
      return _semifield;
    }

    std::mt19937_64& engine() noexcept {
      return _rng;
    }

    //! Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

    //! True with probability num / den.
    bool chance(long num, long den);

    //! A non-zero value.
    Value nonzero();

    //! Zero with probability 1/4, otherwise nonzero().
    Value value();

    //! Entries drawn by value().
    Matrix matrix(size_t n);

    //! Entries drawn by nonzero().
    Matrix full_matrix(size_t rows, size_t cols);

    //! A matrix in which each entry is zero with probability 3/4.
    Matrix sparse_matrix(size_t n);

    std::vector<size_t> permutation(size_t n);

    MonomialMatrix monomial(size_t n);

    //! A pair (a, b) with a \p rel b, built constructively:
    //!
    //! * leqL: a = s b;  leqR: a = b t;  leqJ: a = s b t;
    //! * L: a = p b for monomial p, or a = s b with s a sparse perturbation
    //!   of a monomial, kept only if b <=_L a;  R dually;
    //! * H: a = c b for a scalar c; or b invariant under a row and a column
    //!   permutation (b = p b q) and a = c p b; or the pair
    //!   (k E_lp + E_lq + E_mp + k E_mq, E_lp + k E_lq + k E_mp + E_mq);
    //! * D, J: a R c L b with c and a drawn as above.
    std::pair<Matrix, Matrix> related_pair(size_t n, Relation rel);

   private:
    Matrix                    l_partner(Matrix const& b);
    std::pair<Matrix, Matrix> h_pair(size_t n);

    Semifield       _semifield;
    std::mt19937_64 _rng;
  };

}  // namespace semigreen

#endif  // SEMIGREEN_RANDOM_HPP_
