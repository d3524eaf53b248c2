// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "catch2/catch_amalgamated.hpp"

#include "semigreen/bmat.hpp"
#include "semigreen/error.hpp"
#include "semigreen/random.hpp"
#include "semigreen/table.hpp"

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

  bool has(Witness const& w, std::string const& name) {
    for (auto const& [key, m] : w.factors) {
      if (key == name) {
        return true;
      }
    }
    return false;
  }

  // The defining equations of each relation, applied to the multipliers.
  bool witness_valid(Matrix const& a, Matrix const& b, Relation rel, Witness const& w) {
    switch (rel) {
      case Relation::leq_l:
        return w["s"] * b == a;
      case Relation::leq_r:
        return b * w["t"] == a;
      case Relation::leq_j:
        return w["s"] * b * w["t"] == a;
      case Relation::l:
        return w["s"] * b == a && w["s_prime"] * a == b;
      case Relation::r:
        return b * w["t"] == a && a * w["t_prime"] == b;
      case Relation::h:
        return w["s"] * b == a && w["s_prime"] * a == b && b * w["t"] == a
               && a * w["t_prime"] == b;
      case Relation::j:
        return w["s"] * b * w["t"] == a && w["s_prime"] * a * w["t_prime"] == b;
      case Relation::d: {
        Matrix const& c = w["c"];
        return c * w["t"] == a && a * w["t_prime"] == c && w["s"] * b == c
               && w["s_prime"] * c == b;
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("deciders match multiplier search on all of M_2(B)", "[green]") {
  auto const& all = oracle::monoid(2);
  for (Relation rel : all_relations()) {
    auto const& expect = oracle::table(2, rel);
    size_t      discrepancies = 0;
    for (size_t x = 0; x < all.size(); ++x) {
      for (size_t y = 0; y < all.size(); ++y) {
        bool dense  = relate(all[x], all[y], rel);
        bool packed = relate(BMat::from_matrix(all[x]), BMat::from_matrix(all[y]), rel);
        if (dense != expect[x][y] || packed != expect[x][y]) {
          ++discrepancies;
        }
      }
    }
    INFO(to_string(rel));
    CHECK(discrepancies == 0);
  }
}

TEST_CASE("relation tables match multiplier search at n = 2", "[green]") {
  for (Relation rel : all_relations()) {
    auto const& table  = relation_table(2, rel);
    auto const& expect = oracle::table(2, rel);
    for (uint64_t x = 0; x < 16; ++x) {
      for (uint64_t y = 0; y < 16; ++y) {
        INFO(to_string(rel) << " " << x << " " << y);
        REQUIRE(table(x, y) == expect[x][y]);
      }
    }
  }
}

TEST_CASE("relation tables at n = 3 agree with relate", "[green]") {
  Sampler sampler(Semifield::boolean, 21);
  for (Relation rel : all_relations()) {
    auto const& table = relation_table(3, rel);
    for (int t = 0; t < 300; ++t) {
      uint64_t x = sampler.uniform(0, 511);
      uint64_t y = sampler.uniform(0, 511);
      if (t % 3 == 0 && !table.pairs().empty()) {
        auto p = table.pairs()[sampler.uniform(0, table.pairs().size() - 1)];
        x      = p.first;
        y      = p.second;
      }
      INFO(to_string(rel) << " " << x << " " << y);
      REQUIRE(table(x, y)
              == relate(oracle::bool_matrix(3, 3, x), oracle::bool_matrix(3, 3, y), rel));
    }
  }
  CHECK(transpose_code(2, 0b0010) == 0b0100);
  CHECK(kind_of([] { relation_table(4, Relation::l); })
        == ErrorKind::unsupported_params);
}

TEST_CASE("one-sided deciders match multiplier search at n = 3", "[green]") {
  Sampler     sampler(Semifield::boolean, 8);
  auto const& all = oracle::monoid(3);
  for (int t = 0; t < 150; ++t) {
    Matrix a = all[sampler.uniform(0, 511)];
    Matrix b = all[sampler.uniform(0, 511)];
    if (t % 2 == 0) {
      a = all[sampler.uniform(0, 511)] * b;
    }
    CHECK(relate(a, b, Relation::leq_l) == oracle::leq_l(a, b));
    CHECK(relate(a, b, Relation::leq_r) == oracle::leq_r(a, b));
  }
}

TEST_CASE("witnesses satisfy their equations", "[green]") {
  auto const& all = oracle::monoid(2);
  for (Relation rel : all_relations()) {
    for (auto const& a : all) {
      for (auto const& b : all) {
        auto r = relate_with_witness(a, b, rel);
        REQUIRE(r.related == relate(a, b, rel));
        REQUIRE(r.witness.has_value() == r.related);
        if (r.related) {
          INFO(to_string(rel));
          REQUIRE(witness_valid(a, b, rel, *r.witness));
        }
      }
    }
  }
  for (Semifield s : {Semifield::tropical, Semifield::tropical_int}) {
    Sampler sampler(s, 77);
    for (Relation rel : {Relation::leq_l, Relation::leq_r, Relation::l,
                         Relation::r, Relation::h}) {
      for (int t = 0; t < 40; ++t) {
        auto [a, b] = sampler.related_pair(3, rel);
        auto r      = relate_with_witness(a, b, rel);
        INFO(to_string(s) << " " << to_string(rel));
        REQUIRE(r.related);
        REQUIRE(witness_valid(a, b, rel, *r.witness));
        CHECK(has(*r.witness, rel == Relation::leq_r || rel == Relation::r ? "t" : "s"));
      }
    }
  }
}

TEST_CASE("tropical leqL matches bounded multiplier search", "[green]") {
  // b has entries in {-inf, 0, 1, 2}, and a is drawn the same way or as
  // s b with s in {-inf, -1, 0, 1}.  The greatest solution then has entries
  // in [-3, 3], so the bounded search is complete.
  Sampler sampler(Semifield::tropical_int, 5);
  auto    draw = [&](long lo, long hi) {
    Matrix m(Semifield::tropical_int, 2, 2);
    for (size_t i = 0; i < 2; ++i) {
      for (size_t j = 0; j < 2; ++j) {
        long v = sampler.uniform(lo - 1, hi);
        m.set(i, j, v < lo ? Value::zero(Semifield::tropical_int)
                           : Value::tropical_int(v));
      }
    }
    return m;
  };
  size_t related = 0;
  for (int t = 0; t < 300; ++t) {
    Matrix b      = draw(0, 2);
    Matrix a      = t % 2 ? draw(0, 2) : draw(-1, 1) * b;
    bool   expect = oracle::tropical_leq_l(a, b, -3, 3);
    related += expect;
    REQUIRE(relate(a, b, Relation::leq_l) == expect);
    REQUIRE(relate(transpose(a), transpose(b), Relation::leq_r) == expect);
  }
  CHECK(related > 100);
  CHECK(related < 300);
}

TEST_CASE("left residual is the greatest subsolution", "[green]") {
  for (Semifield s : {Semifield::tropical, Semifield::tropical_int, Semifield::boolean}) {
    Sampler sampler(s, 31);
    for (int t = 0; t < 100; ++t) {
      Matrix a   = sampler.matrix(3);
      Matrix b   = t % 2 ? sampler.matrix(3) : sampler.sparse_matrix(3);
      Matrix res = left_residual(a, b);
      REQUIRE(entrywise_leq(res * b, a));
      REQUIRE(relate(a, b, Relation::leq_l) == (res * b == a));
      for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
          bool row_zero = true;
          for (size_t k = 0; k < 3; ++k) {
            row_zero = row_zero && b(j, k).is_zero();
          }
          if (row_zero) {
            continue;
          }
          // Raising any entry over a non-zero row of b breaks S b <= a.
          Matrix up = res;
          if (s == Semifield::boolean) {
            if (!res(i, j).is_zero()) {
              continue;
            }
            up.set(i, j, Value::one(s));
          } else if (res(i, j).is_zero()) {
            up.set(i, j, Value::finite(s, -10 * numerator_bound));
          } else {
            up.set(i, j, res(i, j) * Value::finite(s, 1));
          }
          INFO(to_string(s) << " " << i << " " << j);
          REQUIRE_FALSE(entrywise_leq(up * b, a));
        }
      }
      Matrix rres = right_residual(a, b);
      REQUIRE(entrywise_leq(b * rres, a));
      REQUIRE(relate(a, b, Relation::leq_r) == (b * rres == a));
    }
  }
  Matrix a(Semifield::tropical, 2, 3);
  Matrix b(Semifield::tropical, 2, 2);
  CHECK(kind_of([&] { left_residual(a, b); }) == ErrorKind::dimension_mismatch);
}

TEST_CASE("boolean rank matches factorisation search", "[green]") {
  for (auto const& a : oracle::monoid(2)) {
    CHECK(boolean_rank(BMat::from_matrix(a)) == oracle::boolean_rank(a));
    CHECK(factor_rank(a).value == oracle::boolean_rank(a));
  }
  Sampler sampler(Semifield::boolean, 12);
  for (int t = 0; t < 60; ++t) {
    Matrix const& a = oracle::monoid(3)[sampler.uniform(0, 511)];
    CHECK(boolean_rank(BMat::from_matrix(a)) == oracle::boolean_rank(a));
  }
  // Rectangular shapes up to 2 x 4.
  for (auto const& a : oracle::all_bool(2, 4)) {
    CHECK(factor_rank(a).value == oracle::boolean_rank(a));
  }
}

TEST_CASE("tropical factor rank", "[green]") {
  auto r = factor_rank(Matrix::parse(Semifield::tropical, {{"0", "0"}, {"0", "1"}}));
  CHECK(r.value == 2);
  CHECK(r.method == RankMethod::two_by_two_criterion);

  r = factor_rank(Matrix::parse(Semifield::tropical, {{"0", "1"}, {"1/2", "3/2"}}));
  CHECK(r.value == 1);
  CHECK(r.method == RankMethod::rank_one_witness);

  r = factor_rank(Matrix(Semifield::tropical, 3, 3));
  CHECK(r.value == 0);
  CHECK(r.method == RankMethod::zero_matrix);

  // Outer products have rank 1; support must be a rectangle.
  Sampler sampler(Semifield::tropical, 2);
  for (int t = 0; t < 50; ++t) {
    Matrix u = sampler.full_matrix(3, 1);
    Matrix v = sampler.full_matrix(1, 4);
    CHECK(rank_at_most_one(u * v));
  }
  CHECK_FALSE(rank_at_most_one(
      Matrix::parse(Semifield::tropical, {{"0", "-inf"}, {"-inf", "0"}})));

  auto generic = Matrix::parse(Semifield::tropical,
                               {{"0", "0", "0"}, {"0", "1", "2"}, {"0", "2", "5"}});
  CHECK_FALSE(try_factor_rank(generic).has_value());
  CHECK(kind_of([&] { factor_rank(generic); }) == ErrorKind::rank_undetermined);
}

TEST_CASE("D, J and leqJ are boolean only", "[green]") {
  auto a = Matrix::identity(Semifield::tropical, 2);
  for (Relation rel : {Relation::d, Relation::j, Relation::leq_j}) {
    CHECK_FALSE(decidable_over(rel, Semifield::tropical));
    CHECK(kind_of([&] { relate(a, a, rel); }) == ErrorKind::undecidable_over_semifield);
  }
  auto big = Matrix::identity(Semifield::boolean, 4);
  CHECK(kind_of([&] { relate(big, big, Relation::d); }) == ErrorKind::unsupported_params);
  CHECK(relate(big, big, Relation::h));
  CHECK(kind_of([&] { relate(a, Matrix::identity(Semifield::boolean, 2), Relation::l); })
        == ErrorKind::mixed_semifields);
  CHECK(kind_of([&] { relate(a, Matrix::identity(Semifield::tropical, 3), Relation::l); })
        == ErrorKind::dimension_mismatch);
}

TEST_CASE("relation names round-trip", "[green]") {
  for (Relation rel : all_relations()) {
    CHECK(relation_from_string(to_string(rel)) == rel);
  }
  CHECK(kind_of([] { relation_from_string("K"); }) == ErrorKind::parse_error);
}
