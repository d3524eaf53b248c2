// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/semifield.hpp"

#include <cctype>   // for isdigit
#include <utility>  // for move

#include "semigreen/error.hpp"

namespace semigreen {

  namespace {
    void check_same(Value const& x, Value const& y) {
      if (x.semifield() != y.semifield()) {
        throw Error(ErrorKind::mixed_semifields,
                    std::string("cannot combine ") + to_string(x.semifield()).data()
                        + " and " + to_string(y.semifield()).data() + " values");
      }
    }

    // A run of decimal digits with no superfluous leading zero.
    bool is_canonical_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return s.size() == 1 || s.front() != '0';
    }

    [[noreturn]] void bad_text(Semifield s, std::string_view text) {
      throw Error(ErrorKind::parse_error,
                  "\"" + std::string(text) + "\" is not a canonical "
                      + std::string(to_string(s)) + " value");
    }
  }  // namespace

  std::string_view to_string(Semifield s) noexcept {
    switch (s) {
      case Semifield::boolean:
        return "boolean";
      case Semifield::tropical:
        return "tropical";
      case Semifield::tropical_int:
        return "tropical_int";
    }
    return "unknown";
  }

  Semifield semifield_from_string(std::string_view name) {
    if (name == "boolean") {
      return Semifield::boolean;
    } else if (name == "tropical") {
      return Semifield::tropical;
    } else if (name == "tropical_int") {
      return Semifield::tropical_int;
    }
    throw Error(ErrorKind::parse_error,
                "unknown semifield \"" + std::string(name) + "\"");
  }

  Value Value::zero(Semifield s) {
    return Value(s, false, mpq_class(0));
  }

  Value Value::one(Semifield s) {
    return Value(s, true, mpq_class(0));
  }

  Value Value::boolean(bool b) {
    return Value(Semifield::boolean, b, mpq_class(0));
  }

  Value Value::finite(Semifield s, mpq_class q) {
    q.canonicalize();
    if (s == Semifield::boolean && sgn(q) != 0) {
      throw Error(ErrorKind::parse_error,
                  "the only non-zero boolean value is 1");
    }
    if (s == Semifield::tropical_int && q.get_den() != 1) {
      throw Error(ErrorKind::parse_error,
                  q.get_str() + " is not an integer");
    }
    return Value(s, true, std::move(q));
  }

  Value Value::parse(Semifield s, std::string_view text) {
    if (s == Semifield::boolean) {
      if (text == "0") {
        return boolean(false);
      } else if (text == "1") {
        return boolean(true);
      }
      bad_text(s, text);
    }
    if (text == "-inf") {
      return zero(s);
    }
    std::string_view rest = text;
    bool             neg  = false;
    if (!rest.empty() && rest.front() == '-') {
      neg  = true;
      rest = rest.substr(1);
    }
    auto             slash = rest.find('/');
    std::string_view num   = rest.substr(0, slash);
    if (!is_canonical_digits(num) || (neg && num == "0")) {
      bad_text(s, text);
    }
    mpz_class p(std::string(num), 10);
    if (neg) {
      p = -p;
    }
    if (slash == std::string_view::npos) {
      return Value(s, true, mpq_class(p));
    }
    if (s == Semifield::tropical_int) {
      bad_text(s, text);
    }
    std::string_view den = rest.substr(slash + 1);
    if (!is_canonical_digits(den)) {
      bad_text(s, text);
    }
    mpz_class q(std::string(den), 10);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (q <= 1 || g != 1) {
      bad_text(s, text);
    }
    return Value(s, true, mpq_class(p, q));
  }

  mpq_class const& Value::payload() const {
    if (!_finite) {
      throw Error(ErrorKind::not_invertible, "the zero element has no payload");
    }
    return _payload;
  }

  std::string Value::to_string() const {
    if (_semifield == Semifield::boolean) {
      return _finite ? "1" : "0";
    }
    if (!_finite) {
      return "-inf";
    }
    return _payload.get_str();
  }

  bool operator==(Value const& x, Value const& y) noexcept {
    if (x._semifield != y._semifield || x._finite != y._finite) {
      return false;
    }
    return !x._finite || x._payload == y._payload;
  }

  bool operator<(Value const& x, Value const& y) {
    check_same(x, y);
    if (!x._finite) {
      return y._finite;
    }
    return y._finite && x._payload < y._payload;
  }

  Value add(Value const& x, Value const& y) {
    check_same(x, y);
    if (x.is_zero()) {
      return y;
    } else if (y.is_zero()) {
      return x;
    }
    return x.payload() < y.payload() ? y : x;
  }

  Value mul(Value const& x, Value const& y) {
    check_same(x, y);
    if (x.is_zero()) {
      return x;
    } else if (y.is_zero()) {
      return y;
    }
    // Sums and negations of reduced fractions stay reduced.
    return Value(x.semifield(), true, x.payload() + y.payload());
  }

  Value inv(Value const& x) {
    if (x.is_zero()) {
      throw Error(ErrorKind::not_invertible, "zero has no inverse");
    }
    return Value(x.semifield(), true, -x.payload());
  }

  std::optional<Value> try_sqrt(Value const& x) {
    if (x.is_zero()) {
      throw Error(ErrorKind::not_invertible,
                  "square roots are only taken of invertible elements");
    }
    mpq_class half = x.payload() / 2;
    half.canonicalize();
    if (x.semifield() == Semifield::tropical_int && half.get_den() != 1) {
      return std::nullopt;
    }
    return Value::finite(x.semifield(), std::move(half));
  }

  std::optional<Value> non_unit_square(Semifield s) {
    if (s == Semifield::boolean) {
      return std::nullopt;
    }
    return Value::finite(s, mpq_class(1));
  }

}  // namespace semigreen
