// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Packed boolean matrices of dimension at most 8 x 8, used by every
// exhaustive search over M_n(B).  Row i occupies bits [8i, 8i + 8) of a
// 64-bit word and column j of that row is bit j, so products and row-space
// tests are a handful of word operations.

#ifndef SEMIGREEN_BMAT_HPP_
#define SEMIGREEN_BMAT_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t, uint8_t

#include "matrix.hpp"

namespace semigreen {

  class BMat {
   public:
    static constexpr size_t max_dim = 8;

    //! The rows x cols zero matrix; throws Error(dimension_mismatch) unless
    //! 1 <= rows, cols <= 8.
    BMat(size_t rows, size_t cols);

    //! The n x n matrix whose entry (i, j) is bit i * n + j of \p code.  The
    //! codes 0, ..., 2^(n^2) - 1 enumerate M_n(B) exactly once each.
    static BMat from_code(size_t n, uint64_t code);

    static BMat identity(size_t n);

    //! Throws Error(mixed_semifields) unless \p a is boolean, and
    //! Error(dimension_mismatch) if it is larger than 8 x 8.
    static BMat from_matrix(Matrix const& a);

    Matrix to_matrix() const;

    //! Inverse of from_code (square matrices only).
    uint64_t code() const noexcept;

    size_t rows() const noexcept {
      return _rows;
    }

    size_t cols() const noexcept {
      return _cols;
    }

    bool get(size_t i, size_t j) const noexcept {
      return (_bits >> (8 * i + j)) & 1;
    }

    void set(size_t i, size_t j, bool v) noexcept {
      uint64_t mask = uint64_t(1) << (8 * i + j);
      _bits         = v ? (_bits | mask) : (_bits & ~mask);
    }

    uint8_t row(size_t i) const noexcept {
      return static_cast<uint8_t>(_bits >> (8 * i));
    }

    void set_row(size_t i, uint8_t r) noexcept {
      _bits = (_bits & ~(uint64_t(0xFF) << (8 * i)))
              | (uint64_t(r) << (8 * i));
    }

    uint64_t bits() const noexcept {
      return _bits;
    }

    bool is_zero() const noexcept {
      return _bits == 0;
    }

    size_t count() const noexcept;

    friend bool operator==(BMat const& a, BMat const& b) noexcept {
      return a._rows == b._rows && a._cols == b._cols && a._bits == b._bits;
    }

    friend bool operator!=(BMat const& a, BMat const& b) noexcept {
      return !(a == b);
    }

   private:
    size_t   _rows;
    size_t   _cols;
    uint64_t _bits = 0;
  };

  //! Boolean product; throws Error(dimension_mismatch).
  BMat operator*(BMat const& a, BMat const& b);

  BMat transpose(BMat const& a);

  //! Number of matrices in M_n(B), that is 2^(n^2); n must be at most 4.
  uint64_t boolean_monoid_size(size_t n);

}  // namespace semigreen

#endif  // SEMIGREEN_BMAT_HPP_
