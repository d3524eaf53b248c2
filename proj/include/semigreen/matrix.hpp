// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Dense matrices over a fixed semifield, and monomial matrices (exactly one
// non-zero entry in each row and column), which over an anti-negative
// semifield are precisely the units of M_n(S).
//
// All indices are 0-based.

#ifndef SEMIGREEN_MATRIX_HPP_
#define SEMIGREEN_MATRIX_HPP_

#include <cstddef>           // for size_t
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <vector>            // for vector

#include "semifield.hpp"

namespace semigreen {

  //! A dense rows x cols matrix whose entries all belong to one semifield.
  class Matrix {
   public:
    //! The rows x cols zero matrix.  Throws Error(dimension_mismatch) if
    //! either dimension is 0.
    Matrix(Semifield s, size_t rows, size_t cols);

    //! Builds a matrix from rows of values; every value must belong to
    //! \p s and every row must have the same positive length.
    static Matrix from_rows(Semifield                             s,
                            std::vector<std::vector<Value>> const& rows);

    //! Convenience for tests and small literals: each entry is parsed with
    //! Value::parse.
    static Matrix
    parse(Semifield                                                   s,
          std::initializer_list<std::initializer_list<char const*>> rows);

    static Matrix identity(Semifield s, size_t n);

    Semifield semifield() const noexcept {
      return _semifield;
    }

    size_t rows() const noexcept {
      return _rows;
    }

    size_t cols() const noexcept {
      return _cols;
    }

    bool is_square() const noexcept {
      return _rows == _cols;
    }

    Value const& operator()(size_t i, size_t j) const {
      return _entries[i * _cols + j];
    }

    //! Bounds-checked access; throws Error(index_out_of_range).
    Value const& at(size_t i, size_t j) const;

    //! Throws Error(index_out_of_range) or Error(mixed_semifields).
    void set(size_t i, size_t j, Value v);

    bool is_zero() const noexcept;

    std::vector<Value> const& entries() const noexcept {
      return _entries;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) noexcept;

    friend bool operator!=(Matrix const& a, Matrix const& b) noexcept {
      return !(a == b);
    }

   private:
    Semifield          _semifield;
    size_t             _rows;
    size_t             _cols;
    std::vector<Value> _entries;
  };

  //! (ab)_{ik} = sum_j a_{ij} b_{jk}.  Throws Error(dimension_mismatch) or
  //! Error(mixed_semifields).
  Matrix mat_mul(Matrix const& a, Matrix const& b);

  //! Entrywise sum.
  Matrix mat_add(Matrix const& a, Matrix const& b);

  //! c * a, entrywise.
  Matrix scale(Value const& c, Matrix const& a);

  Matrix transpose(Matrix const& a);

  //! Entrywise natural order: a_{ij} <= b_{ij} for all i, j.
  bool entrywise_leq(Matrix const& a, Matrix const& b);

  //! The n x n matrix with \p c at (i, j) and zero elsewhere.  Throws
  //! Error(index_out_of_range) or Error(zero_coefficient).
  Matrix unit_matrix(size_t n, size_t i, size_t j, Value const& c);

  inline Matrix operator*(Matrix const& a, Matrix const& b) {
    return mat_mul(a, b);
  }

  inline Matrix operator+(Matrix const& a, Matrix const& b) {
    return mat_add(a, b);
  }

  //! An invertible n x n matrix stored as a permutation and a vector of
  //! non-zero scalars; the non-zero entry of column i sits in row perm[i] and
  //! equals scale[i].
  class MonomialMatrix {
   public:
    //! Throws Error(not_monomial) if \p perm is not a permutation of
    //! {0, ..., n - 1}, or if some scale is zero, or the sizes differ.
    MonomialMatrix(std::vector<size_t> perm, std::vector<Value> scale);

    static MonomialMatrix identity(Semifield s, size_t n);

    //! The permutation matrix with a 1 at (perm[i], i).
    static MonomialMatrix permutation(Semifield s, std::vector<size_t> perm);

    size_t size() const noexcept {
      return _perm.size();
    }

    Semifield semifield() const noexcept {
      return _scale.front().semifield();
    }

    std::vector<size_t> const& perm() const noexcept {
      return _perm;
    }

    std::vector<Value> const& scale() const noexcept {
      return _scale;
    }

    friend bool operator==(MonomialMatrix const& a,
                           MonomialMatrix const& b) noexcept {
      return a._perm == b._perm && a._scale == b._scale;
    }

   private:
    std::vector<size_t> _perm;
    std::vector<Value>  _scale;
  };

  //! The dense matrix represented by \p m.
  Matrix monomial_expand(MonomialMatrix const& m);

  //! Recognises a monomial matrix; nullopt exactly when some row or column
  //! does not have exactly one non-zero entry (equivalently, when \p a is not
  //! invertible in M_n(S)).
  std::optional<MonomialMatrix> try_monomial(Matrix const& a);

  //! Like try_monomial, but throws Error(not_monomial).
  MonomialMatrix to_monomial(Matrix const& a);

  MonomialMatrix monomial_inverse(MonomialMatrix const& m);

  //! The product of two monomial matrices, without expanding them.
  MonomialMatrix monomial_mul(MonomialMatrix const& a, MonomialMatrix const& b);

}  // namespace semigreen

#endif  // SEMIGREEN_MATRIX_HPP_
