// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "catch2/catch_amalgamated.hpp"

#include "semigreen/bmat.hpp"
#include "semigreen/error.hpp"
#include "semigreen/random.hpp"

#include "oracle.hpp"

using namespace semigreen;

namespace {
  template <typename F>
  ErrorKind kind_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::parse_error;
  }
}  // namespace

TEST_CASE("tropical product", "[matrix]") {
  auto a = Matrix::parse(Semifield::tropical, {{"0", "-inf"}, {"1/2", "3"}});
  auto b = Matrix::parse(Semifield::tropical, {{"1", "2"}, {"-inf", "0"}});
  CHECK(a * b == Matrix::parse(Semifield::tropical, {{"1", "2"}, {"3/2", "3"}}));
  CHECK(a * Matrix::identity(Semifield::tropical, 2) == a);
  CHECK(Matrix::identity(Semifield::tropical, 2) * a == a);
}

TEST_CASE("product laws on sampled matrices", "[matrix]") {
  for (auto s : {Semifield::boolean, Semifield::tropical, Semifield::tropical_int}) {
    Sampler sampler(s, 3);
    for (int t = 0; t < 30; ++t) {
      auto a = sampler.matrix(3);
      auto b = sampler.matrix(3);
      auto c = sampler.matrix(3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(transpose(a * b) == transpose(b) * transpose(a));
      CHECK(entrywise_leq(a, a + b));
    }
  }
}

TEST_CASE("dimension and semifield checks", "[matrix]") {
  Matrix a(Semifield::tropical, 2, 3);
  Matrix b(Semifield::tropical, 2, 3);
  CHECK(kind_of([&] { a * b; }) == ErrorKind::dimension_mismatch);
  CHECK(kind_of([] { Matrix(Semifield::boolean, 0, 2); })
        == ErrorKind::dimension_mismatch);
  CHECK(kind_of([&] { a.set(0, 0, Value::boolean(true)); })
        == ErrorKind::mixed_semifields);
  CHECK(kind_of([&] { a.at(2, 0); }) == ErrorKind::index_out_of_range);
  CHECK(kind_of([] { unit_matrix(2, 0, 0, Value::zero(Semifield::tropical)); })
        == ErrorKind::zero_coefficient);
}

TEST_CASE("monomial matrices", "[matrix]") {
  auto p = MonomialMatrix({1, 2, 0},
                          {Value::tropical(1), Value::tropical(-2, 3),
                           Value::tropical(5)});
  auto dense = monomial_expand(p);
  CHECK(dense(1, 0) == Value::tropical(1));
  CHECK(dense(2, 1) == Value::tropical(-2, 3));
  CHECK(dense(0, 2) == Value::tropical(5));
  CHECK(to_monomial(dense) == p);
  CHECK(dense * monomial_expand(monomial_inverse(p))
        == Matrix::identity(Semifield::tropical, 3));

  Sampler sampler(Semifield::tropical, 9);
  for (int t = 0; t < 20; ++t) {
    auto q = sampler.monomial(3);
    auto r = sampler.monomial(3);
    CHECK(monomial_expand(monomial_mul(q, r))
          == monomial_expand(q) * monomial_expand(r));
  }

  CHECK_FALSE(try_monomial(Matrix::parse(Semifield::tropical,
                                         {{"0", "0"}, {"-inf", "0"}}))
                  .has_value());
  CHECK(kind_of([] { MonomialMatrix({0, 0}, {Value::tropical(0), Value::tropical(0)}); })
        == ErrorKind::not_monomial);
}

TEST_CASE("monomial recognition matches the invertibility oracle", "[matrix]") {
  for (size_t n : {1, 2, 3}) {
    for (auto const& a : oracle::monoid(n)) {
      CHECK(try_monomial(a).has_value() == oracle::invertible(a));
    }
  }
}

TEST_CASE("packed boolean matrices agree with dense ones", "[matrix]") {
  auto const& all = oracle::monoid(3);
  Sampler     sampler(Semifield::boolean, 4);
  for (int t = 0; t < 200; ++t) {
    auto const& a = all[sampler.uniform(0, 511)];
    auto const& b = all[sampler.uniform(0, 511)];
    auto        pa = BMat::from_matrix(a);
    auto        pb = BMat::from_matrix(b);
    CHECK(pa.code() == oracle::code(a));
    CHECK(BMat::from_code(3, pa.code()) == pa);
    CHECK((pa * pb).to_matrix() == a * b);
    CHECK(transpose(pa).to_matrix() == transpose(a));
  }
  CHECK(boolean_monoid_size(3) == 512);
}
