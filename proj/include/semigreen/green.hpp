// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Deciders for Green's pre-orders and equivalences on M_n(S), and factor
// rank.
//
// The one-sided relations are decided through row and column spaces without
// ever materialising them: A <=_L B iff Row(A) is contained in Row(B) iff the
// equation S B = A is solvable, and in an idempotent semifield that equation
// is solvable iff its greatest subsolution (the left residual of A by B)
// attains equality.  D, J and <=_J are decided only over the boolean
// semifield, by bounded search over M_n(B) for n <= 3.

#ifndef SEMIGREEN_GREEN_HPP_
#define SEMIGREEN_GREEN_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "bmat.hpp"
#include "matrix.hpp"

namespace semigreen {

  //! Green's pre-orders and equivalences.
  enum class Relation { leq_l, leq_r, leq_j, l, r, h, d, j };

  //! "leqL", "leqR", "leqJ", "L", "R", "H", "D" or "J".
  std::string_view to_string(Relation rel) noexcept;

  //! Inverse of to_string(Relation); throws Error(parse_error).
  Relation relation_from_string(std::string_view name);

  //! All eight relations, in declaration order.
  std::vector<Relation> const& all_relations();

  //! D, J and <=_J are only decidable over the boolean semifield.
  bool decidable_over(Relation rel, Semifield s) noexcept;

  //! Largest n for which the bounded D / J / <=_J searches run.
  constexpr size_t max_search_dim = 3;

  //! The greatest S (entrywise, in the natural order) with S b <= a.
  //!
  //! The residual is computed in the semifield completed by a top element;
  //! a top entry only ever multiplies a zero row of \p b, so it is replaced
  //! by 1 in the returned matrix.  Throws Error(dimension_mismatch) unless
  //! a.cols() == b.cols(), and Error(mixed_semifields).
  Matrix left_residual(Matrix const& a, Matrix const& b);

  //! The greatest T with b T <= a; dual to left_residual.
  Matrix right_residual(Matrix const& a, Matrix const& b);

  namespace detail {
    //! The left residual before projection: nullopt marks a top entry.
    std::vector<std::optional<Value>> left_residual_completed(Matrix const& a,
                                                              Matrix const& b);
  }  // namespace detail

  //! Multiplier matrices realising a relation, by name.
  //!
  //!   leqL  a = s b                    leqR  a = b t
  //!   L     a = s b,  b = s_prime a    R     a = b t,  b = a t_prime
  //!   H     the L and R witnesses      leqJ  a = s b t
  //!   J     a = s b t,  b = s_prime a t_prime
  //!   D     c with a R c (t, t_prime) and c L b (s, s_prime)
  struct Witness {
    std::vector<std::pair<std::string, Matrix>> factors;

    Matrix const& operator[](std::string_view name) const;
  };

  struct RelateResult {
    bool                   related;
    std::optional<Witness> witness;
  };

  //! Decides a \p rel b for square matrices of equal size over the same
  //! semifield.
  //!
  //! Throws Error(dimension_mismatch), Error(mixed_semifields),
  //! Error(undecidable_over_semifield) for D / J / leqJ outside the boolean
  //! semifield, and Error(unsupported_params) for those relations when
  //! n > max_search_dim.
  bool relate(Matrix const& a, Matrix const& b, Relation rel);

  //! As relate, and also returns the multipliers when related.
  RelateResult relate_with_witness(Matrix const& a,
                                   Matrix const& b,
                                   Relation      rel);

  // Packed boolean deciders, used by every exhaustive search.

  //! Row(a) is contained in Row(b): each row of a is the union of the rows
  //! of b it contains.
  bool leq_l(BMat const& a, BMat const& b) noexcept;
  bool leq_r(BMat const& a, BMat const& b);

  //! The greatest s with s b <= a; s b = a iff a <=_L b.
  BMat left_residual(BMat const& a, BMat const& b);

  //! Decides any relation; D / J / leqJ require n <= max_search_dim.
  bool relate(BMat const& a, BMat const& b, Relation rel);

  RelateResult relate_with_witness(BMat const& a, BMat const& b, Relation rel);

  ////////////////////////////////////////////////////////////////////////
  // Factor rank
  ////////////////////////////////////////////////////////////////////////

  enum class RankMethod {
    zero_matrix,
    rank_one_witness,
    two_by_two_criterion,
    exhaustive_boolean
  };

  //! "ZeroMatrix", "RankOneWitness", "TwoByTwoCriterion" or
  //! "ExhaustiveBoolean".
  std::string_view to_string(RankMethod method) noexcept;

  struct RankResult {
    size_t     value;
    RankMethod method;

    friend bool operator==(RankResult const&, RankResult const&) = default;
  };

  //! True iff \p a has factor rank at most 1: its support is a combinatorial
  //! rectangle R x C and a_{ij} a_{kl} = a_{il} a_{kj} on that rectangle.
  bool rank_at_most_one(Matrix const& a);

  //! Factor rank when it can be decided exactly:
  //!
  //! * 0 for the zero matrix;
  //! * 1 when rank_at_most_one holds;
  //! * any boolean matrix up to 8 x 8, by exhaustive search for a minimum
  //!   cover of the support by all-ones rectangles;
  //! * 2 for any other matrix whose non-zero part has at most two rows or at
  //!   most two columns (this contains the 2 x 2 cross-ratio criterion
  //!   ad != bc);
  //!
  //! and nullopt otherwise.
  std::optional<RankResult> try_factor_rank(Matrix const& a);

  //! As try_factor_rank; throws Error(rank_undetermined) instead of nullopt.
  RankResult factor_rank(Matrix const& a);

  //! Exact boolean (Schein) rank of a packed matrix.
  size_t boolean_rank(BMat const& a);

}  // namespace semigreen

#endif  // SEMIGREEN_GREEN_HPP_
