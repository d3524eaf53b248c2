// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Linear maps on M_n(S): the dense form (the images of the matrix units),
// the unit-permutation form every bijective map has, classification into
// the canonical shapes X -> P X Q and X -> P X^T Q, and preservation checks.
//
// Cells (i, j) of an n x n matrix are numbered i * n + j throughout, and all
// indices are 0-based.

#ifndef SEMIGREEN_LINEAR_MAP_HPP_
#define SEMIGREEN_LINEAR_MAP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <variant>      // for variant
#include <vector>       // for vector

#include "bmat.hpp"
#include "green.hpp"
#include "matrix.hpp"

namespace semigreen {

  //! A linear map given by the images of the matrix units E_{i,j}.
  class LinearMap {
   public:
    //! \p images holds T(E_{i,j}) at index i * n + j.  Throws
    //! Error(dimension_mismatch) unless there are n^2 square images of size
    //! n, and Error(mixed_semifields).
    LinearMap(Semifield s, size_t n, std::vector<Matrix> images);

    Semifield semifield() const noexcept {
      return _semifield;
    }

    size_t n() const noexcept {
      return _n;
    }

    Matrix const& image(size_t i, size_t j) const {
      return _images.at(i * _n + j);
    }

    std::vector<Matrix> const& images() const noexcept {
      return _images;
    }

   private:
    Semifield           _semifield;
    size_t              _n;
    std::vector<Matrix> _images;
  };

  //! sum_{i,j} x_{ij} T(E_{i,j}).  Throws Error(dimension_mismatch).
  Matrix apply(LinearMap const& t, Matrix const& x);

  //! X -> sum alpha_c x_c E_{sigma(c)}, with sigma a permutation of the n^2
  //! cells and every alpha_c non-zero.
  class UnitPermutationMap {
   public:
    //! Throws Error(not_bijective) unless \p sigma is a permutation of
    //! [0, n^2), Error(zero_coefficient) if some alpha is zero, and
    //! Error(dimension_mismatch) on wrong lengths.
    UnitPermutationMap(Semifield           s,
                       size_t              n,
                       std::vector<size_t> sigma,
                       std::vector<Value>  alpha);

    //! Boolean map with every coefficient 1.
    static UnitPermutationMap boolean(size_t n, std::vector<size_t> sigma);

    static UnitPermutationMap identity(Semifield s, size_t n);

    //! X -> X^T.
    static UnitPermutationMap transposition(Semifield s, size_t n);

    Semifield semifield() const noexcept {
      return _semifield;
    }

    size_t n() const noexcept {
      return _n;
    }

    std::vector<size_t> const& sigma() const noexcept {
      return _sigma;
    }

    std::vector<Value> const& alpha() const noexcept {
      return _alpha;
    }

    //! The cell E_{i,j} is sent to, as (row, col).
    std::pair<size_t, size_t> target(size_t i, size_t j) const {
      size_t c = _sigma.at(i * _n + j);
      return {c / _n, c % _n};
    }

    friend bool operator==(UnitPermutationMap const&,
                           UnitPermutationMap const&) = default;

   private:
    Semifield           _semifield;
    size_t              _n;
    std::vector<size_t> _sigma;
    std::vector<Value>  _alpha;
  };

  Matrix apply(UnitPermutationMap const& u, Matrix const& x);

  //! Boolean only: the image of a packed matrix.
  BMat apply(UnitPermutationMap const& u, BMat const& x);

  //! Image of every matrix code of M_n(B); boolean maps with n <= 4.
  std::vector<uint32_t> image_table(UnitPermutationMap const& u);

  UnitPermutationMap inverse(UnitPermutationMap const& u);

  LinearMap to_linear_map(UnitPermutationMap const& u);

  //! The unit-permutation form of \p t, if every image is a non-zero
  //! multiple of a single matrix unit and distinct units go to distinct
  //! cells; nullopt otherwise.
  std::optional<UnitPermutationMap> try_extract_unit_form(LinearMap const& t);

  //! As try_extract_unit_form; throws Error(not_bijective) instead.
  UnitPermutationMap extract_unit_form(LinearMap const& t);

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  //! X -> P X Q, or X -> P X^T Q when transposed.
  struct CanonicalForm {
    MonomialMatrix p;
    MonomialMatrix q;
    bool           transposed;

    friend bool operator==(CanonicalForm const&, CanonicalForm const&)
        = default;
  };

  enum class NonCanonicalReason {
    not_unit_permutation,
    row_column_structure_violated,
    coefficients_not_rank_one
  };

  //! "NotUnitPermutation", "RowColumnStructureViolated" or
  //! "CoefficientsNotRankOne".
  std::string_view to_string(NonCanonicalReason reason) noexcept;

  using ClassifyOutcome = std::variant<CanonicalForm, NonCanonicalReason>;

  //! Splits sigma as (i, j) -> (r(i), c(j)), or failing that as
  //! (i, j) -> (c(j), r(i)); then splits alpha_{ij} = x_i y_j with x_0 = 1,
  //! y_j = alpha_{0j}, x_i = alpha_{i0} / alpha_{00}.  The standard split is
  //! preferred when both apply (n = 1).
  ClassifyOutcome classify(UnitPermutationMap const& u);

  //! NotUnitPermutation when extract_unit_form fails.
  ClassifyOutcome classify(LinearMap const& t);

  //! Whether classify(u) would be a CanonicalForm, and if so whether it is
  //! transposed, without building the monomial matrices.
  std::optional<bool> canonical_shape(UnitPermutationMap const& u);

  //! The unit-permutation form of \p c on M_n(s): E_{i,j} goes to
  //! P E_{i,j} Q, or to P E_{j,i} Q when transposed.  Throws
  //! Error(dimension_mismatch) or Error(mixed_semifields) when P, Q do not
  //! fit (n, s).
  UnitPermutationMap synthesize(CanonicalForm const& c, size_t n, Semifield s);

  Matrix apply(CanonicalForm const& c, Matrix const& x);

  ////////////////////////////////////////////////////////////////////////
  // Preservation
  ////////////////////////////////////////////////////////////////////////

  //! Every ordered pair of M_n(B).
  struct Exhaustive {};

  //! \p trials seeded pairs drawn to satisfy the hypothesis.
  struct Randomized {
    uint64_t seed;
    size_t   trials;
  };

  using CheckMode = std::variant<Exhaustive, Randomized>;

  //! Strong checks also require the converse: T(A) to T(B) implies A from B.
  enum class Strength { weak, strong };

  struct Verdict {
    enum class Kind { holds, no_counterexample_found, counterexample };

    Kind     kind;
    Relation from;
    Relation to;
    size_t   pairs_checked;
    //! The offending (A, B) when kind == counterexample.
    std::optional<std::pair<Matrix, Matrix>> witness;
    //! e.g. "A L B but not T(A) L T(B)".
    std::string detail;

    bool ok() const noexcept {
      return kind != Kind::counterexample;
    }
  };

  //! "Preserved" (or "Exchanges" when from != to), "NoCounterexampleFound"
  //! or "Counterexample".
  std::string to_string(Verdict const& v);

  //! Checks A from B => T(A) to T(B) for the pairs fixed by \p mode; with
  //! Strength::strong also T(A) to T(B) => A from B.
  //!
  //! Exhaustive mode needs a boolean map with n <= 3, or n <= 2 when either
  //! relation is D, J or leqJ; randomized mode needs both relations to be
  //! decidable over the semifield.  Throws Error(unsupported_mode)
  //! otherwise.  Exhaustive counterexamples are the least pair in the
  //! lexicographic order on matrix codes.
  Verdict check_transfer(UnitPermutationMap const& u,
                         Relation                  from,
                         Relation                  to,
                         CheckMode const&          mode,
                         Strength                  strength = Strength::weak);

  //! check_transfer(u, rel, rel, ...).
  Verdict check_preservation(UnitPermutationMap const& u,
                             Relation                  rel,
                             CheckMode const&          mode,
                             Strength strength = Strength::weak);

  //! L to R, then R to L; the first failing verdict, or the second one.
  Verdict check_exchange(UnitPermutationMap const& u,
                         CheckMode const&          mode,
                         Strength                  strength = Strength::weak);

  ////////////////////////////////////////////////////////////////////////
  // Sticky matrices
  ////////////////////////////////////////////////////////////////////////

  //! The matrices [[a k, b], [c, d k]] and [[a, b k], [c k, d]].
  std::pair<Matrix, Matrix> sticky_pair(Matrix const& m, Value const& k);

  struct ExhaustiveBoolean {};

  struct RandomizedTropical {
    uint64_t seed;
    size_t   trials;
  };

  using StickyMode = std::variant<ExhaustiveBoolean, RandomizedTropical>;

  //! One candidate M with invertible entries and factor rank 2, and the
  //! first k found with A_k, B_k not H-related.
  struct StickyViolation {
    Matrix m;
    Value  k;
    //! k is the square root of b c / (a d).
    bool   at_sqrt_witness;
    size_t rank_a;
    size_t rank_b;
  };

  struct StickyReport {
    Semifield semifield;
    //! Full-support matrices examined (S1).
    size_t full_support;
    //! Those among them with factor rank 2 (S1 and S2).
    size_t candidates;
    //! Candidates with no violating k among those tried.
    std::vector<Matrix> unrefuted;
    //! Candidates where A_k, B_k of factor rank 1 were H-related.
    size_t              rank_lemma_violations;
    std::vector<StickyViolation> violations;

    bool no_candidate_found() const noexcept {
      return unrefuted.empty();
    }

    size_t refuted_at_sqrt_witness() const noexcept;
  };

  //! Searches M_2(s) for a matrix satisfying S1 (invertible entries), S2
  //! (factor rank 2) and S3 (A_k H B_k for every invertible k).
  //!
  //! Over the boolean semifield all 16 matrices are enumerated whatever the
  //! mode.  Otherwise \p mode must be RandomizedTropical: \p trials rank-2
  //! full-support matrices are drawn, and each is tested at the square root
  //! of b c / (a d) when it exists and at 8 sampled k.  Throws
  //! Error(unsupported_mode) for ExhaustiveBoolean outside the boolean
  //! semifield.
  StickyReport find_sticky(Semifield s, StickyMode const& mode);

}  // namespace semigreen

#endif  // SEMIGREEN_LINEAR_MAP_HPP_
