// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/bmat.hpp"

#include <bit>     // for popcount
#include <string>  // for to_string

#include "semigreen/error.hpp"

namespace semigreen {

  BMat::BMat(size_t rows, size_t cols) : _rows(rows), _cols(cols) {
    if (rows == 0 || cols == 0 || rows > max_dim || cols > max_dim) {
      throw Error(ErrorKind::dimension_mismatch,
                  "packed boolean matrices must be between 1x1 and 8x8, not "
                      + std::to_string(rows) + "x" + std::to_string(cols));
    }
  }

  BMat BMat::from_code(size_t n, uint64_t code) {
    BMat result(n, n);
    for (size_t i = 0; i < n; ++i) {
      result.set_row(i, static_cast<uint8_t>((code >> (i * n)) & ((1u << n) - 1)));
    }
    return result;
  }

  BMat BMat::identity(size_t n) {
    BMat result(n, n);
    for (size_t i = 0; i < n; ++i) {
      result.set(i, i, true);
    }
    return result;
  }

  BMat BMat::from_matrix(Matrix const& a) {
    if (a.semifield() != Semifield::boolean) {
      throw Error(ErrorKind::mixed_semifields,
                  "packed matrices are boolean only");
    }
    BMat result(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) {
        result.set(i, j, !a(i, j).is_zero());
      }
    }
    return result;
  }

  Matrix BMat::to_matrix() const {
    Matrix result(Semifield::boolean, _rows, _cols);
    for (size_t i = 0; i < _rows; ++i) {
      for (size_t j = 0; j < _cols; ++j) {
        if (get(i, j)) {
          result.set(i, j, Value::boolean(true));
        }
      }
    }
    return result;
  }

  uint64_t BMat::code() const noexcept {
    uint64_t code = 0;
    for (size_t i = 0; i < _rows; ++i) {
      code |= uint64_t(row(i)) << (i * _cols);
    }
    return code;
  }

  size_t BMat::count() const noexcept {
    return std::popcount(_bits);
  }

  BMat operator*(BMat const& a, BMat const& b) {
    if (a.cols() != b.rows()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "cannot multiply packed boolean matrices");
    }
    BMat result(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
      uint8_t r   = a.row(i);
      uint8_t acc = 0;
      while (r != 0) {
        size_t j = std::countr_zero(r);
        acc |= b.row(j);
        r &= r - 1;
      }
      result.set_row(i, acc);
    }
    return result;
  }

  BMat transpose(BMat const& a) {
    BMat result(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) {
        if (a.get(i, j)) {
          result.set(j, i, true);
        }
      }
    }
    return result;
  }

  uint64_t boolean_monoid_size(size_t n) {
    if (n == 0 || n > 4) {
      throw Error(ErrorKind::unsupported_params,
                  "M_n(B) is only enumerated for 1 <= n <= 4");
    }
    return uint64_t(1) << (n * n);
  }

}  // namespace semigreen
