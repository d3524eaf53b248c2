// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "catch2/catch_amalgamated.hpp"

#include "semigreen/error.hpp"
#include "semigreen/random.hpp"
#include "semigreen/semifield.hpp"

using namespace semigreen;

namespace {
  std::vector<Value> sample_values(Semifield s, uint64_t seed, size_t count) {
    Sampler            sampler(s, seed);
    std::vector<Value> out{Value::zero(s), Value::one(s)};
    while (out.size() < count) {
      out.push_back(sampler.value());
    }
    return out;
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::parse_error;
  }
}  // namespace

TEST_CASE("canonical text round-trips", "[semifield]") {
  for (auto text : {"-inf", "0", "7", "-3", "1/2", "-22/7", "1000000/999"}) {
    CHECK(Value::parse(Semifield::tropical, text).to_string() == text);
  }
  for (auto text : {"-inf", "0", "-5", "12"}) {
    CHECK(Value::parse(Semifield::tropical_int, text).to_string() == text);
  }
  CHECK(Value::parse(Semifield::boolean, "0").is_zero());
  CHECK(Value::parse(Semifield::boolean, "1").is_one());
  CHECK(Value::boolean(true).to_string() == "1");
}

TEST_CASE("non-canonical text is rejected", "[semifield]") {
  for (auto text :
       {"", "-0", "01", "2/4", "1/1", "1/-2", "+1", "1.5", "inf", " 1", "0/3"}) {
    INFO(text);
    CHECK(kind_of([&] { Value::parse(Semifield::tropical, text); })
          == ErrorKind::parse_error);
  }
  CHECK(kind_of([] { Value::parse(Semifield::tropical_int, "1/2"); })
        == ErrorKind::parse_error);
  CHECK(kind_of([] { Value::parse(Semifield::boolean, "2"); })
        == ErrorKind::parse_error);
  CHECK(kind_of([] { Value::parse(Semifield::boolean, "-inf"); })
        == ErrorKind::parse_error);
}

TEST_CASE("semifield names", "[semifield]") {
  for (auto s : {Semifield::boolean, Semifield::tropical, Semifield::tropical_int}) {
    CHECK(semifield_from_string(to_string(s)) == s);
  }
  CHECK(kind_of([] { semifield_from_string("reals"); }) == ErrorKind::parse_error);
}

TEST_CASE("tropical operations are max and plus", "[semifield]") {
  auto a = Value::tropical(1, 2);
  auto b = Value::tropical(-3);
  CHECK(a + b == a);
  CHECK(a * b == Value::tropical(-5, 2));
  CHECK(inv(a) == Value::tropical(-1, 2));
  CHECK(Value::zero(Semifield::tropical) + b == b);
  CHECK((Value::zero(Semifield::tropical) * a).is_zero());
  CHECK(b < a);
  CHECK(Value::zero(Semifield::tropical) < b);
}

TEST_CASE("boolean operations are or and and", "[semifield]") {
  auto zero = Value::boolean(false);
  auto one  = Value::boolean(true);
  CHECK(zero + one == one);
  CHECK(one + one == one);
  CHECK(zero * one == zero);
  CHECK(one * one == one);
  CHECK(zero < one);
  CHECK(inv(one) == one);
}

TEST_CASE("semifield axioms on sampled values", "[semifield]") {
  for (auto s : {Semifield::boolean, Semifield::tropical, Semifield::tropical_int}) {
    auto xs = sample_values(s, 11, 12);
    for (auto const& x : xs) {
      CHECK(x + x == x);
      CHECK(x + Value::zero(s) == x);
      CHECK(x * Value::one(s) == x);
      CHECK((x * Value::zero(s)).is_zero());
      if (!x.is_zero()) {
        CHECK(x * inv(x) == Value::one(s));
      }
      for (auto const& y : xs) {
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x <= y) == (x + y == y));
        // Anti-negativity.
        CHECK((x + y).is_zero() == (x.is_zero() && y.is_zero()));
        for (auto const& z : xs) {
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
      }
    }
  }
}

TEST_CASE("square roots and non-unit squares", "[semifield]") {
  CHECK(try_sqrt(Value::tropical(3)) == Value::tropical(3, 2));
  CHECK(try_sqrt(Value::tropical_int(4)) == Value::tropical_int(2));
  CHECK_FALSE(try_sqrt(Value::tropical_int(3)).has_value());
  CHECK(try_sqrt(Value::boolean(true)) == Value::boolean(true));
  CHECK_FALSE(non_unit_square(Semifield::boolean).has_value());
  for (auto s : {Semifield::tropical, Semifield::tropical_int}) {
    auto k = non_unit_square(s);
    REQUIRE(k.has_value());
    CHECK(*k * *k != Value::one(s));
  }
}

TEST_CASE("errors carry their kind", "[semifield]") {
  CHECK(kind_of([] { inv(Value::zero(Semifield::tropical)); })
        == ErrorKind::not_invertible);
  CHECK(kind_of([] { Value::zero(Semifield::tropical).payload(); })
        == ErrorKind::not_invertible);
  CHECK(kind_of([] { Value::tropical(1) + Value::tropical_int(1); })
        == ErrorKind::mixed_semifields);
  CHECK(kind_of([] { Value::tropical(1) * Value::boolean(true); })
        == ErrorKind::mixed_semifields);
  CHECK(kind_of([] { Value::finite(Semifield::tropical_int, mpq_class(1, 3)); })
        == ErrorKind::parse_error);
}

TEST_CASE("sampler is reproducible", "[semifield]") {
  CHECK(sample_values(Semifield::tropical, 5, 50)
        == sample_values(Semifield::tropical, 5, 50));
  CHECK(sample_values(Semifield::tropical, 5, 50)
        != sample_values(Semifield::tropical, 6, 50));
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}
