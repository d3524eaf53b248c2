// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/matrix.hpp"

#include <string>   // for to_string
#include <utility>  // for move

#include "semigreen/error.hpp"

namespace semigreen {

  namespace {
    void check_same(Matrix const& a, Matrix const& b) {
      if (a.semifield() != b.semifield()) {
        throw Error(ErrorKind::mixed_semifields,
                    "matrices over different semifields");
      }
    }

    std::string dims(Matrix const& a) {
      return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Matrix
  ////////////////////////////////////////////////////////////////////////

  Matrix::Matrix(Semifield s, size_t rows, size_t cols)
      : _semifield(s),
        _rows(rows),
        _cols(cols),
        _entries(rows * cols, Value::zero(s)) {
    if (rows == 0 || cols == 0) {
      throw Error(ErrorKind::dimension_mismatch,
                  "matrix dimensions must be positive");
    }
  }

  Matrix Matrix::from_rows(Semifield                              s,
                           std::vector<std::vector<Value>> const& rows) {
    if (rows.empty() || rows.front().empty()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "matrix dimensions must be positive");
    }
    Matrix result(s, rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != result._cols) {
        throw Error(ErrorKind::dimension_mismatch,
                    "row " + std::to_string(i) + " has length "
                        + std::to_string(rows[i].size()) + ", expected "
                        + std::to_string(result._cols));
      }
      for (size_t j = 0; j < rows[i].size(); ++j) {
        result.set(i, j, rows[i][j]);
      }
    }
    return result;
  }

  Matrix Matrix::parse(
      Semifield                                                   s,
      std::initializer_list<std::initializer_list<char const*>> rows) {
    std::vector<std::vector<Value>> values;
    for (auto const& row : rows) {
      auto& out = values.emplace_back();
      for (char const* text : row) {
        out.push_back(Value::parse(s, text));
      }
    }
    return from_rows(s, values);
  }

  Matrix Matrix::identity(Semifield s, size_t n) {
    Matrix result(s, n, n);
    for (size_t i = 0; i < n; ++i) {
      result._entries[i * n + i] = Value::one(s);
    }
    return result;
  }

  Value const& Matrix::at(size_t i, size_t j) const {
    if (i >= _rows || j >= _cols) {
      throw Error(ErrorKind::index_out_of_range,
                  "(" + std::to_string(i) + ", " + std::to_string(j)
                      + ") outside a " + dims(*this) + " matrix");
    }
    return (*this)(i, j);
  }

  void Matrix::set(size_t i, size_t j, Value v) {
    if (i >= _rows || j >= _cols) {
      throw Error(ErrorKind::index_out_of_range,
                  "(" + std::to_string(i) + ", " + std::to_string(j)
                      + ") outside a " + dims(*this) + " matrix");
    }
    if (v.semifield() != _semifield) {
      throw Error(ErrorKind::mixed_semifields,
                  "entry does not belong to the matrix's semifield");
    }
    _entries[i * _cols + j] = std::move(v);
  }

  bool Matrix::is_zero() const noexcept {
    for (auto const& v : _entries) {
      if (!v.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool operator==(Matrix const& a, Matrix const& b) noexcept {
    return a._semifield == b._semifield && a._rows == b._rows
           && a._cols == b._cols && a._entries == b._entries;
  }

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic
  ////////////////////////////////////////////////////////////////////////

  Matrix mat_mul(Matrix const& a, Matrix const& b) {
    check_same(a, b);
    if (a.cols() != b.rows()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "cannot multiply " + dims(a) + " by " + dims(b));
    }
    Matrix result(a.semifield(), a.rows(), b.cols());
    // Running maximum in reusable rationals; one Value per entry.
    thread_local mpq_class best, cand;
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t k = 0; k < b.cols(); ++k) {
        bool found = false;
        for (size_t j = 0; j < a.cols(); ++j) {
          Value const& x = a(i, j);
          Value const& y = b(j, k);
          if (x.is_zero() || y.is_zero()) {
            continue;
          }
          mpq_add(cand.get_mpq_t(), x.payload().get_mpq_t(), y.payload().get_mpq_t());
          if (!found || cmp(cand, best) > 0) {
            mpq_swap(best.get_mpq_t(), cand.get_mpq_t());
            found = true;
          }
        }
        if (found) {
          result.set(i, k, detail::ValueAccess::finite_reduced(a.semifield(), best));
        }
      }
    }
    return result;
  }

  Matrix mat_add(Matrix const& a, Matrix const& b) {
    check_same(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "cannot add " + dims(a) + " and " + dims(b));
    }
    Matrix result(a.semifield(), a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) {
        result.set(i, j, add(a(i, j), b(i, j)));
      }
    }
    return result;
  }

  Matrix scale(Value const& c, Matrix const& a) {
    if (c.semifield() != a.semifield()) {
      throw Error(ErrorKind::mixed_semifields,
                  "scalar and matrix over different semifields");
    }
    Matrix result(a.semifield(), a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) {
        result.set(i, j, mul(c, a(i, j)));
      }
    }
    return result;
  }

  Matrix transpose(Matrix const& a) {
    Matrix result(a.semifield(), a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) {
        result.set(j, i, a(i, j));
      }
    }
    return result;
  }

  bool entrywise_leq(Matrix const& a, Matrix const& b) {
    check_same(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "cannot compare " + dims(a) + " and " + dims(b));
    }
    for (size_t i = 0; i < a.entries().size(); ++i) {
      if (b.entries()[i] < a.entries()[i]) {
        return false;
      }
    }
    return true;
  }

  Matrix unit_matrix(size_t n, size_t i, size_t j, Value const& c) {
    if (i >= n || j >= n) {
      throw Error(ErrorKind::index_out_of_range,
                  "unit (" + std::to_string(i) + ", " + std::to_string(j)
                      + ") outside M_" + std::to_string(n));
    }
    if (c.is_zero()) {
      throw Error(ErrorKind::zero_coefficient,
                  "matrix unit coefficient must be non-zero");
    }
    Matrix result(c.semifield(), n, n);
    result.set(i, j, c);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // MonomialMatrix
  ////////////////////////////////////////////////////////////////////////

  MonomialMatrix::MonomialMatrix(std::vector<size_t> perm,
                                 std::vector<Value>  scale)
      : _perm(std::move(perm)), _scale(std::move(scale)) {
    if (_perm.empty() || _perm.size() != _scale.size()) {
      throw Error(ErrorKind::not_monomial,
                  "permutation and scale must be non-empty and equal length");
    }
    std::vector<bool> seen(_perm.size(), false);
    for (size_t p : _perm) {
      if (p >= _perm.size() || seen[p]) {
        throw Error(ErrorKind::not_monomial, "perm is not a permutation");
      }
      seen[p] = true;
    }
    for (auto const& v : _scale) {
      if (v.is_zero()) {
        throw Error(ErrorKind::not_monomial, "scale entries must be non-zero");
      }
      if (v.semifield() != _scale.front().semifield()) {
        throw Error(ErrorKind::mixed_semifields,
                    "scale entries over different semifields");
      }
    }
  }

  MonomialMatrix MonomialMatrix::identity(Semifield s, size_t n) {
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) {
      perm[i] = i;
    }
    return MonomialMatrix(std::move(perm),
                          std::vector<Value>(n, Value::one(s)));
  }

  MonomialMatrix MonomialMatrix::permutation(Semifield           s,
                                             std::vector<size_t> perm) {
    size_t n = perm.size();
    return MonomialMatrix(std::move(perm),
                          std::vector<Value>(n, Value::one(s)));
  }

  Matrix monomial_expand(MonomialMatrix const& m) {
    Matrix result(m.semifield(), m.size(), m.size());
    for (size_t i = 0; i < m.size(); ++i) {
      result.set(m.perm()[i], i, m.scale()[i]);
    }
    return result;
  }

  std::optional<MonomialMatrix> try_monomial(Matrix const& a) {
    if (!a.is_square()) {
      return std::nullopt;
    }
    size_t              n = a.rows();
    std::vector<size_t> perm(n);
    std::vector<Value>  scale;
    std::vector<size_t> row_count(n, 0);
    for (size_t j = 0; j < n; ++j) {
      size_t count = 0;
      for (size_t i = 0; i < n; ++i) {
        if (!a(i, j).is_zero()) {
          ++count;
          ++row_count[i];
          perm[j] = i;
        }
      }
      if (count != 1) {
        return std::nullopt;
      }
      scale.push_back(a(perm[j], j));
    }
    for (size_t c : row_count) {
      if (c != 1) {
        return std::nullopt;
      }
    }
    return MonomialMatrix(std::move(perm), std::move(scale));
  }

  MonomialMatrix to_monomial(Matrix const& a) {
    auto m = try_monomial(a);
    if (!m) {
      throw Error(ErrorKind::not_monomial,
                  "matrix does not have exactly one non-zero entry in each "
                  "row and column, so it is not invertible");
    }
    return *m;
  }

  MonomialMatrix monomial_inverse(MonomialMatrix const& m) {
    size_t              n = m.size();
    std::vector<size_t> perm(n);
    std::vector<Value>  scale(n);
    for (size_t i = 0; i < n; ++i) {
      perm[m.perm()[i]]  = i;
      scale[m.perm()[i]] = inv(m.scale()[i]);
    }
    return MonomialMatrix(std::move(perm), std::move(scale));
  }

  MonomialMatrix monomial_mul(MonomialMatrix const& a,
                              MonomialMatrix const& b) {
    if (a.size() != b.size()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "monomial matrices of different sizes");
    }
    size_t              n = a.size();
    std::vector<size_t> perm(n);
    std::vector<Value>  scale;
    scale.reserve(n);
    for (size_t k = 0; k < n; ++k) {
      size_t mid = b.perm()[k];
      perm[k]    = a.perm()[mid];
      scale.push_back(mul(a.scale()[mid], b.scale()[k]));
    }
    return MonomialMatrix(std::move(perm), std::move(scale));
  }

}  // namespace semigreen
