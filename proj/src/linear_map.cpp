// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/linear_map.hpp"

#include <bit>     // for countr_zero
#include <string>  // for string, to_string

#include "semigreen/error.hpp"
#include "semigreen/random.hpp"
#include "semigreen/table.hpp"

namespace semigreen {

  ////////////////////////////////////////////////////////////////////////
  // LinearMap
  ////////////////////////////////////////////////////////////////////////

  LinearMap::LinearMap(Semifield s, size_t n, std::vector<Matrix> images)
      : _semifield(s), _n(n), _images(std::move(images)) {
    if (n == 0 || _images.size() != n * n) {
      throw Error(ErrorKind::dimension_mismatch,
                  "a linear map on M_" + std::to_string(n) + " needs "
                      + std::to_string(n * n) + " images, got "
                      + std::to_string(_images.size()));
    }
    for (auto const& m : _images) {
      if (m.rows() != n || m.cols() != n) {
        throw Error(ErrorKind::dimension_mismatch,
                    "every image must be " + std::to_string(n) + "x"
                        + std::to_string(n));
      }
      if (m.semifield() != s) {
        throw Error(ErrorKind::mixed_semifields,
                    "image over " + std::string(to_string(m.semifield()))
                        + " in a map over " + std::string(to_string(s)));
      }
    }
  }

  Matrix apply(LinearMap const& t, Matrix const& x) {
    size_t n = t.n();
    if (x.rows() != n || x.cols() != n) {
      throw Error(ErrorKind::dimension_mismatch,
                  "map on M_" + std::to_string(n) + " applied to a "
                      + std::to_string(x.rows()) + "x"
                      + std::to_string(x.cols()) + " matrix");
    }
    if (x.semifield() != t.semifield()) {
      throw Error(ErrorKind::mixed_semifields,
                  "matrix and map over different semifields");
    }
    Matrix result(t.semifield(), n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (!x(i, j).is_zero()) {
          result = mat_add(result, scale(x(i, j), t.image(i, j)));
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // UnitPermutationMap
  ////////////////////////////////////////////////////////////////////////

  UnitPermutationMap::UnitPermutationMap(Semifield           s,
                                         size_t              n,
                                         std::vector<size_t> sigma,
                                         std::vector<Value>  alpha)
      : _semifield(s), _n(n), _sigma(std::move(sigma)), _alpha(std::move(alpha)) {
    size_t cells = n * n;
    if (n == 0 || _sigma.size() != cells || _alpha.size() != cells) {
      throw Error(ErrorKind::dimension_mismatch,
                  "sigma and alpha must have n^2 = " + std::to_string(cells)
                      + " entries");
    }
    std::vector<bool> hit(cells, false);
    for (size_t c : _sigma) {
      if (c >= cells || hit[c]) {
        throw Error(ErrorKind::not_bijective,
                    "sigma is not a permutation of the cells");
      }
      hit[c] = true;
    }
    for (auto const& a : _alpha) {
      if (a.semifield() != s) {
        throw Error(ErrorKind::mixed_semifields,
                    "coefficient over the wrong semifield");
      }
      if (a.is_zero()) {
        throw Error(ErrorKind::zero_coefficient, "alpha must be non-zero");
      }
    }
  }

  UnitPermutationMap UnitPermutationMap::boolean(size_t              n,
                                                 std::vector<size_t> sigma) {
    return UnitPermutationMap(
        Semifield::boolean,
        n,
        std::move(sigma),
        std::vector<Value>(n * n, Value::one(Semifield::boolean)));
  }

  UnitPermutationMap UnitPermutationMap::identity(Semifield s, size_t n) {
    std::vector<size_t> sigma(n * n);
    for (size_t c = 0; c < n * n; ++c) {
      sigma[c] = c;
    }
    return UnitPermutationMap(
        s, n, std::move(sigma), std::vector<Value>(n * n, Value::one(s)));
  }

  UnitPermutationMap UnitPermutationMap::transposition(Semifield s, size_t n) {
    std::vector<size_t> sigma(n * n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        sigma[i * n + j] = j * n + i;
      }
    }
    return UnitPermutationMap(
        s, n, std::move(sigma), std::vector<Value>(n * n, Value::one(s)));
  }

  Matrix apply(UnitPermutationMap const& u, Matrix const& x) {
    size_t n = u.n();
    if (x.rows() != n || x.cols() != n) {
      throw Error(ErrorKind::dimension_mismatch,
                  "map on M_" + std::to_string(n) + " applied to a "
                      + std::to_string(x.rows()) + "x"
                      + std::to_string(x.cols()) + " matrix");
    }
    if (x.semifield() != u.semifield()) {
      throw Error(ErrorKind::mixed_semifields,
                  "matrix and map over different semifields");
    }
    Matrix result(u.semifield(), n, n);
    for (size_t c = 0; c < n * n; ++c) {
      Value const& v = x.entries()[c];
      if (!v.is_zero()) {
        size_t t = u.sigma()[c];
        result.set(t / n, t % n, mul(u.alpha()[c], v));
      }
    }
    return result;
  }

  BMat apply(UnitPermutationMap const& u, BMat const& x) {
    if (u.semifield() != Semifield::boolean) {
      throw Error(ErrorKind::mixed_semifields,
                  "packed matrices need a boolean map");
    }
    size_t n = u.n();
    if (x.rows() != n || x.cols() != n) {
      throw Error(ErrorKind::dimension_mismatch, "wrong matrix size for map");
    }
    BMat result(n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (x.get(i, j)) {
          size_t t = u.sigma()[i * n + j];
          result.set(t / n, t % n, true);
        }
      }
    }
    return result;
  }

  std::vector<uint32_t> image_table(UnitPermutationMap const& u) {
    if (u.semifield() != Semifield::boolean) {
      throw Error(ErrorKind::mixed_semifields,
                  "image tables need a boolean map");
    }
    uint64_t              N = boolean_monoid_size(u.n());
    std::vector<uint32_t> result(N, 0);
    // The image of a code is the OR of the images of its bits.
    for (uint64_t code = 1; code < N; ++code) {
      size_t low   = std::countr_zero(code);
      result[code] = result[code & (code - 1)] | (uint32_t(1) << u.sigma()[low]);
    }
    return result;
  }

  UnitPermutationMap inverse(UnitPermutationMap const& u) {
    size_t              cells = u.n() * u.n();
    std::vector<size_t> sigma(cells);
    std::vector<Value>  alpha(cells);
    for (size_t c = 0; c < cells; ++c) {
      sigma[u.sigma()[c]] = c;
      alpha[u.sigma()[c]] = inv(u.alpha()[c]);
    }
    return UnitPermutationMap(
        u.semifield(), u.n(), std::move(sigma), std::move(alpha));
  }

  LinearMap to_linear_map(UnitPermutationMap const& u) {
    size_t              n = u.n();
    std::vector<Matrix> images;
    for (size_t c = 0; c < n * n; ++c) {
      size_t t = u.sigma()[c];
      images.push_back(unit_matrix(n, t / n, t % n, u.alpha()[c]));
    }
    return LinearMap(u.semifield(), n, std::move(images));
  }

  std::optional<UnitPermutationMap> try_extract_unit_form(LinearMap const& t) {
    size_t              n     = t.n();
    size_t              cells = n * n;
    std::vector<size_t> sigma(cells);
    std::vector<Value>  alpha(cells);
    std::vector<bool>   hit(cells, false);
    for (size_t c = 0; c < cells; ++c) {
      auto const& entries = t.images()[c].entries();
      size_t      found   = cells;
      for (size_t k = 0; k < cells; ++k) {
        if (!entries[k].is_zero()) {
          if (found != cells) {
            return std::nullopt;
          }
          found = k;
        }
      }
      if (found == cells || hit[found]) {
        return std::nullopt;
      }
      hit[found] = true;
      sigma[c]   = found;
      alpha[c]   = entries[found];
    }
    return UnitPermutationMap(t.semifield(), n, std::move(sigma), std::move(alpha));
  }

  UnitPermutationMap extract_unit_form(LinearMap const& t) {
    auto u = try_extract_unit_form(t);
    if (!u) {
      throw Error(ErrorKind::not_bijective,
                  "some image is not a non-zero multiple of a matrix unit, "
                  "or two units share a target cell");
    }
    return *std::move(u);
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(NonCanonicalReason reason) noexcept {
    switch (reason) {
      case NonCanonicalReason::not_unit_permutation:
        return "NotUnitPermutation";
      case NonCanonicalReason::row_column_structure_violated:
        return "RowColumnStructureViolated";
      case NonCanonicalReason::coefficients_not_rank_one:
        return "CoefficientsNotRankOne";
    }
    return "";
  }

  namespace {
    struct Split {
      bool                transposed;
      // standard:   (i, j) -> (rows[i], cols[j])
      // transposed: (i, j) -> (cols[j], rows[i])
      std::vector<size_t> rows;
      std::vector<size_t> cols;
    };

    std::optional<Split> split_cells(UnitPermutationMap const& u) {
      size_t n  = u.n();
      auto   at = [&](size_t i, size_t j) { return u.sigma()[i * n + j]; };
      Split  s{false, std::vector<size_t>(n), std::vector<size_t>(n)};
      bool   ok = true;
      for (size_t i = 0; i < n; ++i) {
        s.rows[i] = at(i, 0) / n;
      }
      for (size_t j = 0; j < n; ++j) {
        s.cols[j] = at(0, j) % n;
      }
      for (size_t i = 0; i < n && ok; ++i) {
        for (size_t j = 0; j < n && ok; ++j) {
          ok = at(i, j) == s.rows[i] * n + s.cols[j];
        }
      }
      if (ok) {
        return s;
      }
      s.transposed = true;
      ok           = true;
      for (size_t i = 0; i < n; ++i) {
        s.rows[i] = at(i, 0) % n;
      }
      for (size_t j = 0; j < n; ++j) {
        s.cols[j] = at(0, j) / n;
      }
      for (size_t i = 0; i < n && ok; ++i) {
        for (size_t j = 0; j < n && ok; ++j) {
          ok = at(i, j) == s.cols[j] * n + s.rows[i];
        }
      }
      if (ok) {
        return s;
      }
      return std::nullopt;
    }

    bool coefficients_rank_one(UnitPermutationMap const& u) {
      bool all_one = true;
      for (auto const& a : u.alpha()) {
        all_one = all_one && a.is_one();
      }
      if (all_one) {
        return true;
      }
      Matrix r(u.semifield(), u.n(), u.n());
      for (size_t c = 0; c < u.n() * u.n(); ++c) {
        r.set(c / u.n(), c % u.n(), u.alpha()[c]);
      }
      return rank_at_most_one(r);
    }

    std::vector<size_t> invert(std::vector<size_t> const& perm) {
      std::vector<size_t> result(perm.size());
      for (size_t i = 0; i < perm.size(); ++i) {
        result[perm[i]] = i;
      }
      return result;
    }
  }  // namespace

  std::optional<bool> canonical_shape(UnitPermutationMap const& u) {
    auto s = split_cells(u);
    if (!s || !coefficients_rank_one(u)) {
      return std::nullopt;
    }
    return s->transposed;
  }

  ClassifyOutcome classify(UnitPermutationMap const& u) {
    auto s = split_cells(u);
    if (!s) {
      return NonCanonicalReason::row_column_structure_violated;
    }
    if (!coefficients_rank_one(u)) {
      return NonCanonicalReason::coefficients_not_rank_one;
    }
    size_t n     = u.n();
    auto   alpha = [&](size_t i, size_t j) -> Value const& {
      return u.alpha()[i * n + j];
    };
    std::vector<Value> x(n), y(n);
    Value              a00_inv = inv(alpha(0, 0));
    for (size_t j = 0; j < n; ++j) {
      y[j] = alpha(0, j);
    }
    x[0] = Value::one(u.semifield());
    for (size_t i = 1; i < n; ++i) {
      x[i] = mul(alpha(i, 0), a00_inv);
    }
    // P has x_i (or y_j) in column i (j); Q has the other factor in row j (i),
    // so Q's column c holds the factor indexed by the preimage of c.
    std::vector<size_t> const& p_perm = s->transposed ? s->cols : s->rows;
    std::vector<Value> const&  p_scl  = s->transposed ? y : x;
    std::vector<size_t> const& q_from = s->transposed ? s->rows : s->cols;
    std::vector<Value> const&  q_src  = s->transposed ? x : y;
    std::vector<size_t>        q_perm = invert(q_from);
    std::vector<Value>         q_scl(n);
    for (size_t c = 0; c < n; ++c) {
      q_scl[c] = q_src[q_perm[c]];
    }
    return CanonicalForm{MonomialMatrix(p_perm, p_scl),
                         MonomialMatrix(std::move(q_perm), std::move(q_scl)),
                         s->transposed};
  }

  ClassifyOutcome classify(LinearMap const& t) {
    auto u = try_extract_unit_form(t);
    if (!u) {
      return NonCanonicalReason::not_unit_permutation;
    }
    return classify(*u);
  }

  UnitPermutationMap synthesize(CanonicalForm const& c, size_t n, Semifield s) {
    if (c.p.size() != n || c.q.size() != n) {
      throw Error(ErrorKind::dimension_mismatch,
                  "canonical form does not act on M_" + std::to_string(n));
    }
    if (c.p.semifield() != s || c.q.semifield() != s) {
      throw Error(ErrorKind::mixed_semifields,
                  "canonical form over the wrong semifield");
    }
    // Row j of Q has its entry in column q_col[j].
    std::vector<size_t> q_col = invert(c.q.perm());
    std::vector<size_t> sigma(n * n);
    std::vector<Value>  alpha(n * n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        // P E_{a,b} Q = p_a q_{col(b)} E_{perm(a), col(b)}
        size_t a          = c.transposed ? j : i;
        size_t b          = c.transposed ? i : j;
        size_t col        = q_col[b];
        sigma[i * n + j]  = c.p.perm()[a] * n + col;
        alpha[i * n + j]  = mul(c.p.scale()[a], c.q.scale()[col]);
      }
    }
    return UnitPermutationMap(s, n, std::move(sigma), std::move(alpha));
  }

  Matrix apply(CanonicalForm const& c, Matrix const& x) {
    Matrix const& y = c.transposed ? transpose(x) : x;
    return mat_mul(mat_mul(monomial_expand(c.p), y), monomial_expand(c.q));
  }

  ////////////////////////////////////////////////////////////////////////
  // Preservation
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Verdict const& v) {
    switch (v.kind) {
      case Verdict::Kind::holds:
        return v.from == v.to ? "Preserved" : "Exchanges";
      case Verdict::Kind::no_counterexample_found:
        return "NoCounterexampleFound";
      case Verdict::Kind::counterexample:
        return "Counterexample";
    }
    return "";
  }

  namespace {
    bool needs_search(Relation rel) {
      return rel == Relation::d || rel == Relation::j || rel == Relation::leq_j;
    }

    std::string forward_detail(Relation from, Relation to) {
      return "A " + std::string(to_string(from)) + " B but not T(A) "
             + std::string(to_string(to)) + " T(B)";
    }

    std::string backward_detail(Relation from, Relation to) {
      return "T(A) " + std::string(to_string(to)) + " T(B) but not A "
             + std::string(to_string(from)) + " B";
    }

    Verdict counterexample(Relation           from,
                           Relation           to,
                           size_t             checked,
                           Matrix             a,
                           Matrix             b,
                           std::string        detail) {
      return Verdict{Verdict::Kind::counterexample,
                     from,
                     to,
                     checked,
                     std::make_pair(std::move(a), std::move(b)),
                     std::move(detail)};
    }

    Verdict exhaustive(UnitPermutationMap const& u,
                       Relation                  from,
                       Relation                  to,
                       Strength                  strength) {
      size_t n = u.n();
      if (u.semifield() != Semifield::boolean || n > max_search_dim
          || (n > 2 && (needs_search(from) || needs_search(to)))) {
        throw Error(ErrorKind::unsupported_mode,
                    "exhaustive checks need a boolean map with n <= 3 "
                    "(n <= 2 for D, J and leqJ)");
      }
      RelationTable const& tf     = relation_table(n, from);
      RelationTable const& tt     = relation_table(n, to);
      auto                 img    = image_table(u);
      bool                 strong = strength == Strength::strong;
      size_t               count  = 0;
      uint64_t             N      = tf.size();
      for (uint64_t a = 0; a < N; ++a) {
        for (uint64_t b = 0; b < N; ++b) {
          bool f = tf(a, b);
          if (!f && !strong) {
            continue;
          }
          ++count;
          bool g = tt(img[a], img[b]);
          if (f != g && (f || strong)) {
            return counterexample(
                from,
                to,
                count,
                BMat::from_code(n, a).to_matrix(),
                BMat::from_code(n, b).to_matrix(),
                f ? forward_detail(from, to) : backward_detail(from, to));
          }
        }
      }
      return Verdict{Verdict::Kind::holds, from, to, count, std::nullopt, ""};
    }

    // Pairs drawn uniformly from the off-diagonal related pairs of a table.
    Verdict randomized_table(UnitPermutationMap const& u,
                             Relation                  from,
                             Relation                  to,
                             Randomized const&         r,
                             Strength                  strength) {
      size_t               n     = u.n();
      RelationTable const& tf    = relation_table(n, from);
      RelationTable const& tt    = relation_table(n, to);
      auto                 img   = image_table(u);
      auto                 pre   = image_table(inverse(u));
      size_t               count = 0;
      for (size_t t = 0; t < r.trials; ++t) {
        std::mt19937_64 rng(derive_seed(r.seed, t));
        if (!tf.pairs().empty()) {
          auto [a, b] = tf.pairs()[std::uniform_int_distribution<size_t>(
              0, tf.pairs().size() - 1)(rng)];
          ++count;
          if (!tt(img[a], img[b])) {
            return counterexample(from,
                                  to,
                                  count,
                                  BMat::from_code(n, a).to_matrix(),
                                  BMat::from_code(n, b).to_matrix(),
                                  forward_detail(from, to));
          }
        }
        if (strength == Strength::strong && !tt.pairs().empty()) {
          auto [ia, ib] = tt.pairs()[std::uniform_int_distribution<size_t>(
              0, tt.pairs().size() - 1)(rng)];
          ++count;
          if (!tf(pre[ia], pre[ib])) {
            return counterexample(from,
                                  to,
                                  count,
                                  BMat::from_code(n, pre[ia]).to_matrix(),
                                  BMat::from_code(n, pre[ib]).to_matrix(),
                                  backward_detail(from, to));
          }
        }
      }
      return Verdict{
          Verdict::Kind::no_counterexample_found, from, to, count, std::nullopt, ""};
    }

    // Pairs built by Sampler::related_pair.
    Verdict randomized_sampled(UnitPermutationMap const& u,
                               Relation                  from,
                               Relation                  to,
                               Randomized const&         r,
                               Strength                  strength) {
      size_t                            n = u.n();
      std::optional<UnitPermutationMap> back;
      if (strength == Strength::strong) {
        back = inverse(u);
      }
      size_t count = 0;
      for (size_t t = 0; t < r.trials; ++t) {
        Sampler sampler(u.semifield(), derive_seed(r.seed, t));
        {
          auto [a, b] = sampler.related_pair(n, from);
          ++count;
          if (!relate(apply(u, a), apply(u, b), to)) {
            return counterexample(
                from, to, count, std::move(a), std::move(b), forward_detail(from, to));
          }
        }
        if (back) {
          auto [ia, ib] = sampler.related_pair(n, to);
          Matrix a      = apply(*back, ia);
          Matrix b      = apply(*back, ib);
          ++count;
          if (!relate(a, b, from)) {
            return counterexample(
                from, to, count, std::move(a), std::move(b), backward_detail(from, to));
          }
        }
      }
      return Verdict{
          Verdict::Kind::no_counterexample_found, from, to, count, std::nullopt, ""};
    }
  }  // namespace

  Verdict check_transfer(UnitPermutationMap const& u,
                         Relation                  from,
                         Relation                  to,
                         CheckMode const&          mode,
                         Strength                  strength) {
    if (std::holds_alternative<Exhaustive>(mode)) {
      return exhaustive(u, from, to, strength);
    }
    auto const& r = std::get<Randomized>(mode);
    if (!decidable_over(from, u.semifield()) || !decidable_over(to, u.semifield())) {
      throw Error(ErrorKind::unsupported_mode,
                  std::string(to_string(from)) + " / "
                      + std::string(to_string(to))
                      + " cannot be checked over "
                      + std::string(to_string(u.semifield())));
    }
    if (u.semifield() == Semifield::boolean && u.n() <= max_search_dim) {
      return randomized_table(u, from, to, r, strength);
    }
    if (needs_search(from) || needs_search(to)) {
      throw Error(ErrorKind::unsupported_mode,
                  "D, J and leqJ are only checked for n <= "
                      + std::to_string(max_search_dim));
    }
    return randomized_sampled(u, from, to, r, strength);
  }

  Verdict check_preservation(UnitPermutationMap const& u,
                             Relation                  rel,
                             CheckMode const&          mode,
                             Strength                  strength) {
    return check_transfer(u, rel, rel, mode, strength);
  }

  Verdict check_exchange(UnitPermutationMap const& u,
                         CheckMode const&          mode,
                         Strength                  strength) {
    Verdict v = check_transfer(u, Relation::l, Relation::r, mode, strength);
    if (!v.ok()) {
      return v;
    }
    Verdict w = check_transfer(u, Relation::r, Relation::l, mode, strength);
    w.pairs_checked += v.pairs_checked;
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sticky matrices
  ////////////////////////////////////////////////////////////////////////

  std::pair<Matrix, Matrix> sticky_pair(Matrix const& m, Value const& k) {
    if (m.rows() != 2 || m.cols() != 2) {
      throw Error(ErrorKind::dimension_mismatch, "sticky candidates are 2x2");
    }
    Matrix a = m, b = m;
    a.set(0, 0, mul(m(0, 0), k));
    a.set(1, 1, mul(m(1, 1), k));
    b.set(0, 1, mul(m(0, 1), k));
    b.set(1, 0, mul(m(1, 0), k));
    return {a, b};
  }

  size_t StickyReport::refuted_at_sqrt_witness() const noexcept {
    size_t result = 0;
    for (auto const& v : violations) {
      result += v.at_sqrt_witness;
    }
    return result;
  }

  namespace {
    constexpr size_t sampled_k = 8;

    // Tests S3 on the rank-2 full-support m at each k in order.
    void test_candidate(StickyReport&             report,
                        Matrix const&             m,
                        std::vector<Value> const& ks,
                        bool                      first_is_sqrt) {
      ++report.candidates;
      bool refuted = false;
      for (size_t i = 0; i < ks.size(); ++i) {
        auto [a, b] = sticky_pair(m, ks[i]);
        bool   h    = relate(a, b, Relation::h);
        size_t ra   = factor_rank(a).value;
        size_t rb   = factor_rank(b).value;
        if (h && (ra < 2 || rb < 2)) {
          ++report.rank_lemma_violations;
        }
        if (!h && !refuted) {
          refuted = true;
          report.violations.push_back(
              StickyViolation{m, ks[i], first_is_sqrt && i == 0, ra, rb});
        }
      }
      if (!refuted) {
        report.unrefuted.push_back(m);
      }
    }
  }  // namespace

  StickyReport find_sticky(Semifield s, StickyMode const& mode) {
    StickyReport report{s, 0, 0, {}, 0, {}};
    if (s == Semifield::boolean) {
      Value one = Value::one(s);
      for (uint64_t code = 0; code < boolean_monoid_size(2); ++code) {
        BMat bm = BMat::from_code(2, code);
        if (bm.count() != 4) {
          continue;
        }
        Matrix m = bm.to_matrix();
        ++report.full_support;
        if (factor_rank(m).value == 2) {
          // 1 is the only invertible element and its own square root.
          test_candidate(report, m, {one}, true);
        }
      }
      return report;
    }
    if (!std::holds_alternative<RandomizedTropical>(mode)) {
      throw Error(ErrorKind::unsupported_mode,
                  "exhaustive sticky search only runs over the boolean "
                  "semifield");
    }
    auto const& r = std::get<RandomizedTropical>(mode);
    for (size_t t = 0; t < r.trials; ++t) {
      Sampler sampler(s, derive_seed(r.seed, t));
      Matrix  m = sampler.full_matrix(2, 2);
      ++report.full_support;
      while (mul(m(0, 0), m(1, 1)) == mul(m(0, 1), m(1, 0))) {
        m = sampler.full_matrix(2, 2);
        ++report.full_support;
      }
      std::vector<Value> ks;
      auto root = try_sqrt(mul(mul(m(0, 1), m(1, 0)),
                               inv(mul(m(0, 0), m(1, 1)))));
      if (root) {
        ks.push_back(*root);
      }
      for (size_t i = 0; i < sampled_k; ++i) {
        ks.push_back(sampler.nonzero());
      }
      test_candidate(report, m, ks, root.has_value());
    }
    return report;
  }

}  // namespace semigreen
