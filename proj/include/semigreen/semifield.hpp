// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Exact arithmetic for the three supported anti-negative semifields:
//
//   * boolean        {0, 1} with 1 + 1 = 1;
//   * tropical       Q u {-inf}, addition is max, multiplication is +;
//   * tropical_int   Z u {-inf}, the same operations restricted to Z.
//
// All three are idempotent, and hence totally ordered by the natural order
// x <= y iff x + y = y.  A finite tropical value is stored as a reduced GMP
// rational; the boolean 1 is stored as the finite value with payload 0, so
// that the boolean semifield is literally the sub-semifield {-inf, 0} of the
// tropical one, but the semifield tag is kept and checked on every operation.

#ifndef SEMIGREEN_SEMIFIELD_HPP_
#define SEMIGREEN_SEMIFIELD_HPP_

#include <cstdint>      // for uint8_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view

#include <gmpxx.h>  // for mpq_class, mpz_class

namespace semigreen {

  //! Identifies one of the supported semifields.
  enum class Semifield : std::uint8_t { boolean, tropical, tropical_int };

  //! Returns "boolean", "tropical" or "tropical_int".
  std::string_view to_string(Semifield s) noexcept;

  //! Inverse of to_string(Semifield); throws Error(parse_error).
  Semifield semifield_from_string(std::string_view name);

  class Value;

  namespace detail {
    //! Builds values from payloads already known to be reduced and to lie
    //! in the carrier; used by the matrix kernels.
    struct ValueAccess {
      static Value finite_reduced(Semifield s, mpq_class const& q);
    };
  }  // namespace detail

  //! An element of one of the supported semifields.
  //!
  //! Values are immutable once constructed.  The zero element (boolean 0,
  //! tropical -inf) is a distinguished state, never a sentinel number.
  class Value {
   public:
    //! The boolean 0.
    Value() = default;

    static Value zero(Semifield s);
    static Value one(Semifield s);
    static Value boolean(bool b);

    //! A finite tropical value; throws Error(parse_error) if \p s is
    //! tropical_int and \p q is not an integer, or if \p s is boolean and
    //! \p q is not 0.
    static Value finite(Semifield s, mpq_class q);

    static Value tropical(mpq_class q) {
      return finite(Semifield::tropical, std::move(q));
    }

    static Value tropical(long num, long den = 1) {
      return finite(Semifield::tropical, mpq_class(num, den));
    }

    static Value tropical_int(long z) {
      return finite(Semifield::tropical_int, mpq_class(z));
    }

    //! Parses the canonical text form: "0"/"1" for boolean, "-inf", "p" or
    //! "p/q" (reduced, q > 1, no leading zeros, no "-0") for the tropical
    //! semifields.  Anything else throws Error(parse_error).
    static Value parse(Semifield s, std::string_view text);

    Semifield semifield() const noexcept {
      return _semifield;
    }

    bool is_zero() const noexcept {
      return !_finite;
    }

    bool is_one() const noexcept {
      return _finite && sgn(_payload) == 0;
    }

    //! The rational payload of a non-zero value (0 for the boolean 1).
    //! Throws Error(not_invertible) on the zero element.
    mpq_class const& payload() const;

    //! The canonical text form accepted by parse().
    std::string to_string() const;

    friend bool operator==(Value const& x, Value const& y) noexcept;

    friend bool operator!=(Value const& x, Value const& y) noexcept {
      return !(x == y);
    }

    //! Strict natural order of the idempotent semifield (x < y iff
    //! x + y = y and x != y).  Throws Error(mixed_semifields).
    friend bool operator<(Value const& x, Value const& y);
    friend Value mul(Value const& x, Value const& y);
    friend Value inv(Value const& x);

    friend bool operator<=(Value const& x, Value const& y) {
      return !(y < x);
    }

   private:
    friend struct detail::ValueAccess;

    Value(Semifield s, bool finite, mpq_class q)
        : _semifield(s), _finite(finite), _payload(std::move(q)) {}

    Semifield _semifield = Semifield::boolean;
    bool      _finite    = false;
    mpq_class _payload;
  };

  //! Semifield addition (or / max).  Throws Error(mixed_semifields).
  Value add(Value const& x, Value const& y);

  //! Semifield multiplication (and / +).  Throws Error(mixed_semifields).
  Value mul(Value const& x, Value const& y);

  //! Multiplicative inverse.  Throws Error(not_invertible) on zero.
  Value inv(Value const& x);

  //! Returns s with s * s = x when such an s exists in the carrier.
  //! Throws Error(not_invertible) on zero.
  std::optional<Value> try_sqrt(Value const& x);

  //! An invertible k with k * k != 1, or nullopt for the boolean semifield,
  //! the only anti-negative semifield without one.
  std::optional<Value> non_unit_square(Semifield s);

  inline Value detail::ValueAccess::finite_reduced(Semifield        s,
                                                   mpq_class const& q) {
    return Value(s, true, q);
  }

  inline Value operator+(Value const& x, Value const& y) {
    return add(x, y);
  }

  inline Value operator*(Value const& x, Value const& y) {
    return mul(x, y);
  }

}  // namespace semigreen

#endif  // SEMIGREEN_SEMIFIELD_HPP_
