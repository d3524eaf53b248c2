// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Whole-monoid relation tables for M_n(B), n <= 3, indexed by matrix code
// (bit i * n + j of the code is entry (i, j), see BMat::from_code).
//
// The tables are built from the <=_L table alone: <=_R by transposing codes,
// <=_J as the union over t of the <=_L down-sets of b t, and D as the union of
// the R-classes met by the L-class of b.  Exhaustive searches never call the
// bounded deciders pair by pair.

#ifndef SEMIGREEN_TABLE_HPP_
#define SEMIGREEN_TABLE_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t, uint64_t
#include <utility>  // for pair
#include <vector>   // for vector

#include "green.hpp"

namespace semigreen {

  class RelationTable {
   public:
    RelationTable(size_t n, Relation rel, std::vector<uint64_t> down);

    size_t n() const noexcept {
      return _n;
    }

    Relation relation() const noexcept {
      return _rel;
    }

    //! Number of matrices, 2^(n^2).
    uint64_t size() const noexcept {
      return uint64_t(1) << (_n * _n);
    }

    //! Whether code \p a is related to code \p b.
    bool operator()(uint64_t a, uint64_t b) const noexcept {
      return (_down[b * _words + a / 64] >> (a % 64)) & 1;
    }

    //! All related (a, b) with a != b, in lexicographic order.
    std::vector<std::pair<uint32_t, uint32_t>> const& pairs() const noexcept {
      return _pairs;
    }

   private:
    size_t                                     _n;
    Relation                                   _rel;
    size_t                                     _words;
    std::vector<uint64_t>                      _down;
    std::vector<std::pair<uint32_t, uint32_t>> _pairs;
  };

  //! The table of \p rel on M_n(B); built once per (n, rel) and cached.
  //! Thread safe.  Throws Error(unsupported_params) unless
  //! 1 <= n <= max_search_dim.
  RelationTable const& relation_table(size_t n, Relation rel);

  //! Code of the transpose of the matrix with code \p code.
  uint64_t transpose_code(size_t n, uint64_t code) noexcept;

}  // namespace semigreen

#endif  // SEMIGREEN_TABLE_HPP_
