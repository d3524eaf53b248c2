// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/random.hpp"

#include <algorithm>  // for shuffle
#include <numeric>    // for iota, lcm
#include <utility>    // for swap

namespace semigreen {

  namespace {
    size_t order(std::vector<size_t> const& perm) {
      size_t              result = 1;
      std::vector<bool>   seen(perm.size(), false);
      for (size_t i = 0; i < perm.size(); ++i) {
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
          seen[j] = true;
          ++len;
        }
        if (len > 0) {
          result = std::lcm(result, len);
        }
      }
      return result;
    }
  }  // namespace

  uint64_t derive_seed(uint64_t master, uint64_t index) noexcept {
    uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z          = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z          = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  long Sampler::uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(_rng);
  }

  bool Sampler::chance(long num, long den) {
    return uniform(0, den - 1) < num;
  }

  Value Sampler::nonzero() {
    switch (_semifield) {
      case Semifield::boolean:
        return Value::one(_semifield);
      case Semifield::tropical_int:
        return Value::finite(_semifield,
                             mpq_class(uniform(-numerator_bound, numerator_bound)));
      case Semifield::tropical:
        break;
    }
    long p = uniform(-numerator_bound, numerator_bound);
    long q = uniform(1, denominator_bound);
    return Value::finite(_semifield, mpq_class(p, q));
  }

  Value Sampler::value() {
    if (chance(1, 4)) {
      return Value::zero(_semifield);
    }
    return nonzero();
  }

  Matrix Sampler::matrix(size_t n) {
    Matrix result(_semifield, n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        result.set(i, j, value());
      }
    }
    return result;
  }

  Matrix Sampler::full_matrix(size_t rows, size_t cols) {
    Matrix result(_semifield, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        result.set(i, j, nonzero());
      }
    }
    return result;
  }

  Matrix Sampler::sparse_matrix(size_t n) {
    Matrix result(_semifield, n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (chance(1, 4)) {
          result.set(i, j, nonzero());
        }
      }
    }
    return result;
  }

  std::vector<size_t> Sampler::permutation(size_t n) {
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Fisher-Yates with our own uniform() so the draw is stable across
    // standard library implementations of std::shuffle.
    for (size_t i = n; i > 1; --i) {
      size_t j = static_cast<size_t>(uniform(0, static_cast<long>(i) - 1));
      std::swap(perm[i - 1], perm[j]);
    }
    return perm;
  }

  MonomialMatrix Sampler::monomial(size_t n) {
    std::vector<Value> scale;
    for (size_t i = 0; i < n; ++i) {
      scale.push_back(nonzero());
    }
    return MonomialMatrix(permutation(n), std::move(scale));
  }

  Matrix Sampler::l_partner(Matrix const& b) {
    size_t n = b.rows();
    Matrix p = monomial_expand(monomial(n));
    if (chance(1, 2)) {
      // a = s b always gives a <=_L b; keep it when b <=_L a as well.
      Matrix a = mat_mul(mat_add(p, sparse_matrix(n)), b);
      if (relate(b, a, Relation::leq_l)) {
        return a;
      }
    }
    return mat_mul(p, b);
  }

  std::pair<Matrix, Matrix> Sampler::h_pair(size_t n) {
    long variant = n == 1 ? 0 : uniform(0, 2);
    if (variant == 0) {
      Matrix b = matrix(n);
      return {scale(nonzero(), b), b};
    } else if (variant == 1) {
      auto   row_perm = permutation(n);
      auto   col_perm = permutation(n);
      Matrix p = monomial_expand(MonomialMatrix::permutation(_semifield, row_perm));
      Matrix q = monomial_expand(MonomialMatrix::permutation(_semifield, col_perm));
      Matrix c = sparse_matrix(n);
      Matrix b(_semifield, n, n);
      Matrix pk = Matrix::identity(_semifield, n);
      Matrix qk = Matrix::identity(_semifield, n);
      for (size_t k = 0, len = std::lcm(order(row_perm), order(col_perm));
           k < len;
           ++k) {
        b  = mat_add(b, mat_mul(mat_mul(pk, c), qk));
        pk = mat_mul(p, pk);
        qk = mat_mul(qk, q);
      }
      // b = p b q, so p b = b q^-1 has both the rows and the columns of b.
      return {scale(nonzero(), mat_mul(p, b)), b};
    }
    auto   rows = permutation(n);
    auto   cols = permutation(n);
    Value  k    = nonzero();
    Value  one  = Value::one(_semifield);
    Matrix u(_semifield, n, n), v(_semifield, n, n);
    u.set(rows[0], cols[0], k);
    u.set(rows[0], cols[1], one);
    u.set(rows[1], cols[0], one);
    u.set(rows[1], cols[1], k);
    v.set(rows[0], cols[0], one);
    v.set(rows[0], cols[1], k);
    v.set(rows[1], cols[0], k);
    v.set(rows[1], cols[1], one);
    Matrix a = scale(nonzero(), u);
    if (chance(1, 2)) {
      return {v, a};
    }
    return {a, v};
  }

  std::pair<Matrix, Matrix> Sampler::related_pair(size_t n, Relation rel) {
    switch (rel) {
      case Relation::leq_l: {
        Matrix b = matrix(n);
        return {mat_mul(matrix(n), b), b};
      }
      case Relation::leq_r: {
        Matrix b = matrix(n);
        return {mat_mul(b, matrix(n)), b};
      }
      case Relation::leq_j: {
        Matrix b = matrix(n);
        return {mat_mul(mat_mul(matrix(n), b), matrix(n)), b};
      }
      case Relation::l: {
        Matrix b = matrix(n);
        return {l_partner(b), b};
      }
      case Relation::r: {
        Matrix b = matrix(n);
        return {transpose(l_partner(transpose(b))), b};
      }
      case Relation::h:
        return h_pair(n);
      case Relation::d:
      case Relation::j: {
        Matrix b = matrix(n);
        Matrix c = l_partner(b);
        return {transpose(l_partner(transpose(c))), b};
      }
    }
    return {matrix(n), matrix(n)};
  }

}  // namespace semigreen
