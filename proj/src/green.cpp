// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/green.hpp"

#include <algorithm>  // for min
#include <bit>        // for countr_zero, popcount
#include <set>        // for set
#include <string>     // for string, to_string
#include <utility>    // for move, pair

#include "semigreen/error.hpp"

namespace semigreen {

  namespace {

    void check_relate_args(Matrix const& a, Matrix const& b) {
      if (a.semifield() != b.semifield()) {
        throw Error(ErrorKind::mixed_semifields,
                    "cannot relate matrices over different semifields");
      }
      if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw Error(ErrorKind::dimension_mismatch,
                    "Green's relations compare square matrices of equal size");
      }
    }

    void check_search_dim(size_t n, Relation rel) {
      if (n > max_search_dim) {
        throw Error(ErrorKind::unsupported_params,
                    std::string(to_string(rel))
                        + " is decided by bounded search, which is limited to "
                          "n <= "
                        + std::to_string(max_search_dim));
      }
    }

    // x / y in the completed semifield, for y != 0.
    Value divide(Value const& x, Value const& y) {
      if (x.is_zero()) {
        return x;
      }
      return Value::finite(x.semifield(), x.payload() - y.payload());
    }

    Matrix project_top(Matrix const&                            a,
                       Matrix const&                            b,
                       std::vector<std::optional<Value>> const& completed) {
      Matrix result(a.semifield(), a.rows(), b.rows());
      for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < b.rows(); ++j) {
          auto const& v = completed[i * b.rows() + j];
          result.set(i, j, v ? *v : Value::one(a.semifield()));
        }
      }
      return result;
    }

    // a <=_L b (a <=_R b when Tr) without building the residual: s b <= a
    // always holds for the residual s, so s b = a iff each non-zero a_ik is
    // attained, i.e. k minimises a_ik' / b_jk' over k' for some row j of b
    // with b_jk != 0 and finite residual s_ij.
    template <bool Tr>
    bool one_sided(Matrix const& a, Matrix const& b) {
      size_t n = a.rows();
      if (n > 64) {
        return Tr ? mat_mul(b, right_residual(a, b)) == a
                  : mat_mul(left_residual(a, b), b) == a;
      }
      auto at = [n](Matrix const& m, size_t i, size_t k) -> Value const& {
        return Tr ? m.entries()[k * n + i] : m.entries()[i * n + k];
      };
      thread_local mpq_class best, cand;
      for (size_t i = 0; i < n; ++i) {
        uint64_t attained = 0;
        for (size_t j = 0; j < n; ++j) {
          bool     seen   = false;
          bool     dead   = false;
          uint64_t argmin = 0;
          for (size_t k = 0; k < n; ++k) {
            Value const& bjk = at(b, j, k);
            if (bjk.is_zero()) {
              continue;
            }
            Value const& aik = at(a, i, k);
            if (aik.is_zero()) {
              dead = true;
              break;
            }
            mpq_sub(cand.get_mpq_t(),
                    aik.payload().get_mpq_t(),
                    bjk.payload().get_mpq_t());
            int c = seen ? cmp(cand, best) : -1;
            if (c < 0) {
              mpq_swap(best.get_mpq_t(), cand.get_mpq_t());
              argmin = uint64_t(1) << k;
              seen   = true;
            } else if (c == 0) {
              argmin |= uint64_t(1) << k;
            }
          }
          if (seen && !dead) {
            attained |= argmin;
          }
        }
        for (size_t k = 0; k < n; ++k) {
          if (!at(a, i, k).is_zero() && !((attained >> k) & 1)) {
            return false;
          }
        }
      }
      return true;
    }

    bool generic_leq_l(Matrix const& a, Matrix const& b) {
      return one_sided<false>(a, b);
    }

    bool generic_leq_r(Matrix const& a, Matrix const& b) {
      return one_sided<true>(a, b);
    }

    BMat right_residual(BMat const& a, BMat const& b) {
      return transpose(left_residual(transpose(a), transpose(b)));
    }

    Witness bwitness(std::vector<std::pair<std::string, BMat>> const& named) {
      Witness w;
      for (auto const& [name, m] : named) {
        w.factors.emplace_back(name, m.to_matrix());
      }
      return w;
    }

    std::optional<BMat> find_d_middle(BMat const& a, BMat const& b) {
      size_t   n     = a.rows();
      uint64_t total = boolean_monoid_size(n);
      for (uint64_t code = 0; code < total; ++code) {
        BMat c = BMat::from_code(n, code);
        if (leq_r(a, c) && leq_r(c, a) && leq_l(c, b) && leq_l(b, c)) {
          return c;
        }
      }
      return std::nullopt;
    }

    // a = s b t, found by searching t and solving for s by residuation.
    std::optional<std::pair<BMat, BMat>> find_leq_j(BMat const& a,
                                                    BMat const& b) {
      size_t   n     = a.rows();
      uint64_t total = boolean_monoid_size(n);
      for (uint64_t code = 0; code < total; ++code) {
        BMat t  = BMat::from_code(n, code);
        BMat bt = b * t;
        if (leq_l(a, bt)) {
          return std::make_pair(left_residual(a, bt), t);
        }
      }
      return std::nullopt;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(Relation rel) noexcept {
    switch (rel) {
      case Relation::leq_l:
        return "leqL";
      case Relation::leq_r:
        return "leqR";
      case Relation::leq_j:
        return "leqJ";
      case Relation::l:
        return "L";
      case Relation::r:
        return "R";
      case Relation::h:
        return "H";
      case Relation::d:
        return "D";
      case Relation::j:
        return "J";
    }
    return "?";
  }

  Relation relation_from_string(std::string_view name) {
    for (Relation rel : all_relations()) {
      if (to_string(rel) == name) {
        return rel;
      }
    }
    throw Error(ErrorKind::parse_error,
                "unknown relation \"" + std::string(name) + "\"");
  }

  std::vector<Relation> const& all_relations() {
    static std::vector<Relation> const rels = {Relation::leq_l,
                                               Relation::leq_r,
                                               Relation::leq_j,
                                               Relation::l,
                                               Relation::r,
                                               Relation::h,
                                               Relation::d,
                                               Relation::j};
    return rels;
  }

  bool decidable_over(Relation rel, Semifield s) noexcept {
    switch (rel) {
      case Relation::d:
      case Relation::j:
      case Relation::leq_j:
        return s == Semifield::boolean;
      default:
        return true;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Residuation
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    std::vector<std::optional<Value>> left_residual_completed(Matrix const& a,
                                                              Matrix const& b) {
      if (a.semifield() != b.semifield()) {
        throw Error(ErrorKind::mixed_semifields,
                    "cannot residuate across semifields");
      }
      if (a.cols() != b.cols()) {
        throw Error(ErrorKind::dimension_mismatch,
                    "left residual needs a.cols() == b.cols()");
      }
      std::vector<std::optional<Value>> result(a.rows() * b.rows());
      for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < b.rows(); ++j) {
          std::optional<Value> best;
          for (size_t k = 0; k < a.cols(); ++k) {
            if (b(j, k).is_zero()) {
              continue;
            }
            Value cand = divide(a(i, k), b(j, k));
            if (!best || cand < *best) {
              best = std::move(cand);
            }
          }
          result[i * b.rows() + j] = std::move(best);
        }
      }
      return result;
    }
  }  // namespace detail

  Matrix left_residual(Matrix const& a, Matrix const& b) {
    return project_top(a, b, detail::left_residual_completed(a, b));
  }

  Matrix right_residual(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "right residual needs a.rows() == b.rows()");
    }
    return transpose(left_residual(transpose(a), transpose(b)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Deciders over Matrix
  ////////////////////////////////////////////////////////////////////////

  Matrix const& Witness::operator[](std::string_view name) const {
    for (auto const& [key, m] : factors) {
      if (key == name) {
        return m;
      }
    }
    throw Error(ErrorKind::index_out_of_range,
                "no witness factor named " + std::string(name));
  }

  bool relate(Matrix const& a, Matrix const& b, Relation rel) {
    check_relate_args(a, b);
    switch (rel) {
      case Relation::leq_l:
        return generic_leq_l(a, b);
      case Relation::leq_r:
        return generic_leq_r(a, b);
      case Relation::l:
        return generic_leq_l(a, b) && generic_leq_l(b, a);
      case Relation::r:
        return generic_leq_r(a, b) && generic_leq_r(b, a);
      case Relation::h:
        return generic_leq_l(a, b) && generic_leq_l(b, a)
               && generic_leq_r(a, b) && generic_leq_r(b, a);
      default:
        break;
    }
    if (a.semifield() != Semifield::boolean) {
      throw Error(ErrorKind::undecidable_over_semifield,
                  std::string(to_string(rel)) + " is only decided over the "
                      "boolean semifield");
    }
    check_search_dim(a.rows(), rel);
    return relate(BMat::from_matrix(a), BMat::from_matrix(b), rel);
  }

  RelateResult relate_with_witness(Matrix const& a,
                                   Matrix const& b,
                                   Relation      rel) {
    check_relate_args(a, b);
    auto left = [](Matrix const& x, Matrix const& y) -> std::optional<Matrix> {
      Matrix s = left_residual(x, y);
      if (mat_mul(s, y) == x) {
        return s;
      }
      return std::nullopt;
    };
    auto right = [](Matrix const& x,
                    Matrix const& y) -> std::optional<Matrix> {
      Matrix t = right_residual(x, y);
      if (mat_mul(y, t) == x) {
        return t;
      }
      return std::nullopt;
    };
    Witness w;
    switch (rel) {
      case Relation::leq_l: {
        auto s = left(a, b);
        if (!s) {
          return {false, std::nullopt};
        }
        w.factors.emplace_back("s", *s);
        return {true, w};
      }
      case Relation::leq_r: {
        auto t = right(a, b);
        if (!t) {
          return {false, std::nullopt};
        }
        w.factors.emplace_back("t", *t);
        return {true, w};
      }
      case Relation::l:
      case Relation::h: {
        auto s  = left(a, b);
        auto s2 = s ? left(b, a) : std::nullopt;
        if (!s2) {
          return {false, std::nullopt};
        }
        w.factors.emplace_back("s", *s);
        w.factors.emplace_back("s_prime", *s2);
        if (rel == Relation::l) {
          return {true, w};
        }
        [[fallthrough]];
      }
      case Relation::r: {
        auto t  = right(a, b);
        auto t2 = t ? right(b, a) : std::nullopt;
        if (!t2) {
          return {false, std::nullopt};
        }
        w.factors.emplace_back("t", *t);
        w.factors.emplace_back("t_prime", *t2);
        return {true, w};
      }
      default:
        break;
    }
    if (a.semifield() != Semifield::boolean) {
      throw Error(ErrorKind::undecidable_over_semifield,
                  std::string(to_string(rel)) + " is only decided over the "
                      "boolean semifield");
    }
    check_search_dim(a.rows(), rel);
    return relate_with_witness(BMat::from_matrix(a), BMat::from_matrix(b), rel);
  }

  ////////////////////////////////////////////////////////////////////////
  // Packed boolean deciders
  ////////////////////////////////////////////////////////////////////////

  bool leq_l(BMat const& a, BMat const& b) noexcept {
    for (size_t i = 0; i < a.rows(); ++i) {
      uint8_t target = a.row(i);
      uint8_t acc    = 0;
      for (size_t j = 0; j < b.rows(); ++j) {
        uint8_t r = b.row(j);
        if ((r & ~target) == 0) {
          acc |= r;
        }
      }
      if (acc != target) {
        return false;
      }
    }
    return true;
  }

  bool leq_r(BMat const& a, BMat const& b) {
    return leq_l(transpose(a), transpose(b));
  }

  BMat left_residual(BMat const& a, BMat const& b) {
    BMat s(a.rows(), b.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < b.rows(); ++j) {
        s.set(i, j, (b.row(j) & ~a.row(i)) == 0);
      }
    }
    return s;
  }

  bool relate(BMat const& a, BMat const& b, Relation rel) {
    switch (rel) {
      case Relation::leq_l:
        return leq_l(a, b);
      case Relation::leq_r:
        return leq_r(a, b);
      case Relation::l:
        return leq_l(a, b) && leq_l(b, a);
      case Relation::r:
        return leq_r(a, b) && leq_r(b, a);
      case Relation::h:
        return leq_l(a, b) && leq_l(b, a) && leq_r(a, b) && leq_r(b, a);
      case Relation::d:
        check_search_dim(a.rows(), rel);
        return find_d_middle(a, b).has_value();
      case Relation::leq_j:
        check_search_dim(a.rows(), rel);
        return find_leq_j(a, b).has_value();
      case Relation::j:
        check_search_dim(a.rows(), rel);
        return find_leq_j(a, b).has_value() && find_leq_j(b, a).has_value();
    }
    return false;
  }

  RelateResult relate_with_witness(BMat const& a, BMat const& b, Relation rel) {
    switch (rel) {
      case Relation::leq_l:
      case Relation::leq_r:
      case Relation::l:
      case Relation::r:
      case Relation::h: {
        if (!relate(a, b, rel)) {
          return {false, std::nullopt};
        }
        std::vector<std::pair<std::string, BMat>> named;
        if (rel == Relation::leq_l || rel == Relation::l || rel == Relation::h) {
          named.emplace_back("s", left_residual(a, b));
        }
        if (rel == Relation::l || rel == Relation::h) {
          named.emplace_back("s_prime", left_residual(b, a));
        }
        if (rel == Relation::leq_r || rel == Relation::r || rel == Relation::h) {
          named.emplace_back("t", right_residual(a, b));
        }
        if (rel == Relation::r || rel == Relation::h) {
          named.emplace_back("t_prime", right_residual(b, a));
        }
        return {true, bwitness(named)};
      }
      case Relation::d: {
        check_search_dim(a.rows(), rel);
        auto c = find_d_middle(a, b);
        if (!c) {
          return {false, std::nullopt};
        }
        return {true,
                bwitness({{"c", *c},
                          {"t", right_residual(a, *c)},
                          {"t_prime", right_residual(*c, a)},
                          {"s", left_residual(*c, b)},
                          {"s_prime", left_residual(b, *c)}})};
      }
      case Relation::leq_j: {
        check_search_dim(a.rows(), rel);
        auto st = find_leq_j(a, b);
        if (!st) {
          return {false, std::nullopt};
        }
        return {true, bwitness({{"s", st->first}, {"t", st->second}})};
      }
      case Relation::j: {
        check_search_dim(a.rows(), rel);
        auto st = find_leq_j(a, b);
        if (!st) {
          return {false, std::nullopt};
        }
        auto st2 = find_leq_j(b, a);
        if (!st2) {
          return {false, std::nullopt};
        }
        return {true,
                bwitness({{"s", st->first},
                          {"t", st->second},
                          {"s_prime", st2->first},
                          {"t_prime", st2->second}})};
      }
    }
    return {false, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Factor rank
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(RankMethod method) noexcept {
    switch (method) {
      case RankMethod::zero_matrix:
        return "ZeroMatrix";
      case RankMethod::rank_one_witness:
        return "RankOneWitness";
      case RankMethod::two_by_two_criterion:
        return "TwoByTwoCriterion";
      case RankMethod::exhaustive_boolean:
        return "ExhaustiveBoolean";
    }
    return "?";
  }

  bool rank_at_most_one(Matrix const& a) {
    std::vector<size_t> rows, cols;
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) {
        if (!a(i, j).is_zero()) {
          rows.push_back(i);
          break;
        }
      }
    }
    for (size_t j = 0; j < a.cols(); ++j) {
      for (size_t i = 0; i < a.rows(); ++i) {
        if (!a(i, j).is_zero()) {
          cols.push_back(j);
          break;
        }
      }
    }
    if (rows.empty()) {
      return true;
    }
    size_t r0 = rows.front(), c0 = cols.front();
    for (size_t i : rows) {
      for (size_t j : cols) {
        if (a(i, j).is_zero()) {
          return false;
        }
        if (mul(a(i, j), a(r0, c0)) != mul(a(i, c0), a(r0, j))) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<RankResult> try_factor_rank(Matrix const& a) {
    if (a.is_zero()) {
      return RankResult{0, RankMethod::zero_matrix};
    }
    if (rank_at_most_one(a)) {
      return RankResult{1, RankMethod::rank_one_witness};
    }
    if (a.semifield() == Semifield::boolean && a.rows() <= BMat::max_dim
        && a.cols() <= BMat::max_dim) {
      return RankResult{boolean_rank(BMat::from_matrix(a)),
                        RankMethod::exhaustive_boolean};
    }
    size_t nz_rows = 0, nz_cols = 0;
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) {
        if (!a(i, j).is_zero()) {
          ++nz_rows;
          break;
        }
      }
    }
    for (size_t j = 0; j < a.cols(); ++j) {
      for (size_t i = 0; i < a.rows(); ++i) {
        if (!a(i, j).is_zero()) {
          ++nz_cols;
          break;
        }
      }
    }
    // Rank is at least 2 here and at most the number of non-zero rows or
    // columns.
    if (std::min(nz_rows, nz_cols) == 2) {
      return RankResult{2, RankMethod::two_by_two_criterion};
    }
    return std::nullopt;
  }

  RankResult factor_rank(Matrix const& a) {
    auto result = try_factor_rank(a);
    if (!result) {
      throw Error(ErrorKind::rank_undetermined,
                  "factor rank of this matrix is at least 2 and cannot be "
                  "decided exactly over "
                      + std::string(to_string(a.semifield())));
    }
    return *result;
  }

  namespace {
    struct Cover {
      std::vector<uint64_t> rects;

      bool search(uint64_t uncovered, size_t depth) const {
        if (uncovered == 0) {
          return true;
        }
        if (depth == 0) {
          return false;
        }
        uint64_t cell = uncovered & (~uncovered + 1);
        for (uint64_t r : rects) {
          if ((r & cell) != 0 && search(uncovered & ~r, depth - 1)) {
            return true;
          }
        }
        return false;
      }
    };
  }  // namespace

  size_t boolean_rank(BMat const& a) {
    if (a.is_zero()) {
      return 0;
    }
    // Any cover by all-ones rectangles extends to a cover by maximal ones, so
    // the search only needs the maximal rectangles.
    uint8_t nz_rows = 0;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (a.row(i) != 0) {
        nz_rows |= uint8_t(1) << i;
      }
    }
    std::set<uint64_t> rects;
    for (unsigned sub = nz_rows; sub != 0; sub = (sub - 1) & nz_rows) {
      uint8_t cols = 0xFF;
      for (unsigned s = sub; s != 0; s &= s - 1) {
        cols &= a.row(std::countr_zero(s));
      }
      if (cols == 0) {
        continue;
      }
      uint64_t rect = 0;
      for (size_t i = 0; i < a.rows(); ++i) {
        if ((a.row(i) & cols) == cols) {
          rect |= uint64_t(cols) << (8 * i);
        }
      }
      rects.insert(rect);
    }
    Cover  cover{std::vector<uint64_t>(rects.begin(), rects.end())};
    BMat   at      = transpose(a);
    size_t nz_cols = 0;
    for (size_t j = 0; j < at.rows(); ++j) {
      nz_cols += at.row(j) != 0;
    }
    // A = A I = I A bounds the rank by the non-zero rows and columns.
    size_t upper = std::min<size_t>(std::popcount(nz_rows), nz_cols);
    for (size_t k = 1; k < upper; ++k) {
      if (cover.search(a.bits(), k)) {
        return k;
      }
    }
    return upper;
  }

}  // namespace semigreen
