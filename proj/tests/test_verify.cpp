// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include <map>  // for map
#include <set>  // for set

#include "catch2/catch_amalgamated.hpp"

#include "semigreen/error.hpp"
#include "semigreen/io.hpp"
#include "semigreen/verify.hpp"

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

  SuiteParams boolean_params(size_t n) {
    SuiteParams p;
    p.n       = n;
    p.workers = 2;
    return p;
  }

  // The classes of an equivalence given as an oracle table.
  std::set<std::set<size_t>> classes(std::vector<std::vector<bool>> const& t) {
    std::set<std::set<size_t>> out;
    for (size_t x = 0; x < t.size(); ++x) {
      std::set<size_t> c;
      for (size_t y = 0; y < t.size(); ++y) {
        if (t[x][y]) {
          c.insert(y);
        }
      }
      out.insert(c);
    }
    return out;
  }
}  // namespace

TEST_CASE("one-sided preservers at n = 2", "[verify]") {
  auto r = run_suite("t1", boolean_params(2));
  CHECK(r.pass);
  CHECK(r.maps_enumerated == 24);
  CHECK(r.preservers_found == 4);
  CHECK(r.count("discrepancies") == 0);
  for (auto rel : {"L", "R", "leqL", "leqR"}) {
    CHECK(r.count(std::string("preservers_") + rel) == 4);
  }
  CHECK(r.passed("preserver sets coincide"));
}

TEST_CASE("two-sided preservers at n = 2", "[verify]") {
  auto t2 = run_suite("t2", boolean_params(2));
  CHECK(t2.pass);
  CHECK(t2.preservers_found == 8);
  for (auto rel : {"D", "J", "leqJ"}) {
    CHECK(t2.count(std::string("preservers_") + rel) == 8);
  }
  auto h = run_suite("h_theorem", boolean_params(2));
  CHECK(h.pass);
  CHECK(h.count("preservers_H") == 8);
  CHECK(h.count("preservers_D") == 8);
  CHECK(h.count("sticky_full_support") == 1);
  CHECK(h.count("sticky_candidates") == 0);
}

TEST_CASE("small suites at n = 1 and n = 2", "[verify]") {
  for (size_t n : {1, 2}) {
    for (auto const& name : suite_names()) {
      if (name == "remark_2_6_regression" && n == 1) {
        continue;
      }
      INFO(name << " n = " << n);
      auto r = run_suite(name, boolean_params(n));
      CHECK(r.pass);
      CHECK(r.mode == Mode::exhaustive);
      CHECK_FALSE(r.seed.has_value());
    }
  }
}

TEST_CASE("suite counts match brute-force oracles", "[verify]") {
  size_t invertible = 0;
  for (auto const& a : oracle::monoid(2)) {
    invertible += oracle::invertible(a);
  }
  auto inv = run_suite("invertibles", boolean_params(2));
  CHECK(inv.count("invertible") == invertible);
  CHECK(inv.count("monomial") == invertible);
  CHECK(invertible == 2);

  size_t leq_j = 0, violations = 0;
  auto const& t = oracle::table(2, Relation::leq_j);
  auto const& all = oracle::monoid(2);
  for (size_t x = 0; x < 16; ++x) {
    for (size_t y = 0; y < 16; ++y) {
      if (t[x][y]) {
        ++leq_j;
        violations += oracle::boolean_rank(all[x]) > oracle::boolean_rank(all[y]);
      }
    }
  }
  auto mono = run_suite("rank_j_monotone", boolean_params(2));
  CHECK(mono.count("leqJ_pairs") == leq_j);
  CHECK(mono.count("violations") == violations);
  CHECK(violations == 0);

  auto bg = run_suite("lemma_bg", boolean_params(2));
  CHECK(bg.maps_enumerated == 14641);
  CHECK(bg.count("bijective_maps") == 24);
  CHECK(bg.count("unit_permutation_maps") == 24);
}

TEST_CASE("regression witness over the natural numbers", "[verify]") {
  auto r = run_suite("remark_2_6_regression", boolean_params(2));
  CHECK(r.pass);
  CHECK(r.semifield == "natural_numbers");
  CHECK(r.checks.size() >= 3);
}

TEST_CASE("suite parameter validation", "[verify]") {
  CHECK(kind_of([] { run_suite("t9", SuiteParams{}); }) == ErrorKind::unknown_suite);
  SuiteParams p = boolean_params(3);
  CHECK(kind_of([&] { run_suite("t1", p); }) == ErrorKind::unsupported_params);
  p.mode = Mode::randomized;
  CHECK(kind_of([&] { run_suite("t1", p); }) == ErrorKind::unsupported_params);
  SuiteParams trop;
  trop.semifield = Semifield::tropical;
  CHECK(kind_of([&] { run_suite("h_theorem", trop); }) == ErrorKind::unsupported_params);
  CHECK(kind_of([&] { run_suite("corollaries", trop); }) == ErrorKind::unsupported_params);
  CHECK(kind_of([&] { run_suite("t1", trop); }) == ErrorKind::unsupported_params);
  CHECK(kind_of([] { mode_from_string("sometimes"); }) == ErrorKind::parse_error);
  try {
    run_suite("h_theorem", trop);
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("seed") != std::string::npos);
  }
}

TEST_CASE("randomized reports do not depend on the worker count", "[verify]") {
  SuiteParams p;
  p.semifield = Semifield::tropical;
  p.n         = 2;
  p.mode      = Mode::randomized;
  p.seed      = 5;
  p.trials    = 40;
  p.maps      = 6;
  p.workers   = 1;
  auto one    = to_json(run_suite("corollaries", p)).dump();
  p.workers   = 3;
  auto three  = to_json(run_suite("corollaries", p)).dump();
  CHECK(one == three);
  auto r = suite_report_from_json(json::parse(one));
  CHECK(r.pass);
  CHECK(r.seed == uint64_t(5));
  // Each monomial pair gives a standard and a transposed map.
  CHECK(r.maps_enumerated == 12);
  p.seed = 6;
  CHECK(to_json(run_suite("corollaries", p)).dump() != one);
}

TEST_CASE("tropical sticky search in the H suite", "[verify]") {
  SuiteParams p;
  p.semifield = Semifield::tropical;
  p.n         = 2;
  p.mode      = Mode::randomized;
  p.seed      = 42;
  p.trials    = 300;
  auto r      = run_suite("h_theorem", p);
  CHECK(r.pass);
  CHECK(r.count("sticky_candidates") == 300);
  CHECK(r.count("sticky_refuted_at_sqrt_witness") == 300);
  CHECK(r.passed("no sticky matrix found"));
}

TEST_CASE("egg-box classes match the oracle partitions", "[verify]") {
  auto e = eggbox(2);
  std::set<std::set<size_t>> d, l, r, h;
  size_t                     total = 0;
  for (auto const& dc : e.classes) {
    std::set<size_t> dset;
    std::map<size_t, std::set<size_t>> columns;
    for (size_t i = 0; i < dc.cells.size(); ++i) {
      std::set<size_t> row;
      for (size_t j = 0; j < dc.cells[i].size(); ++j) {
        std::set<size_t> cell(dc.cells[i][j].begin(), dc.cells[i][j].end());
        REQUIRE_FALSE(cell.empty());
        h.insert(cell);
        row.insert(cell.begin(), cell.end());
        columns[j].insert(cell.begin(), cell.end());
      }
      r.insert(row);
      dset.insert(row.begin(), row.end());
    }
    for (auto const& [j, col] : columns) {
      l.insert(col);
    }
    d.insert(dset);
    total += dc.size();
    CHECK(dc.size() == dset.size());
    for (size_t code : dset) {
      CHECK(oracle::boolean_rank(oracle::monoid(2)[code]) == dc.rank);
    }
  }
  CHECK(total == 16);
  CHECK(d == classes(oracle::table(2, Relation::d)));
  CHECK(l == classes(oracle::table(2, Relation::l)));
  CHECK(r == classes(oracle::table(2, Relation::r)));
  CHECK(h == classes(oracle::table(2, Relation::h)));
  // D = J in a finite monoid.
  CHECK(d == classes(oracle::table(2, Relation::j)));
}

TEST_CASE("egg-box at n = 3 is a partition consistent with D", "[verify]") {
  auto   e     = eggbox(3);
  size_t total = 0;
  for (auto const& dc : e.classes) {
    total += dc.size();
    // Every R-row meets every L-column.
    for (auto const& row : dc.cells) {
      REQUIRE(row.size() == dc.cells.front().size());
      for (auto const& cell : row) {
        REQUIRE_FALSE(cell.empty());
        CHECK(relate(BMat::from_code(3, cell.front()),
                     BMat::from_code(3, dc.cells.front().front().front()),
                     Relation::d));
      }
    }
  }
  CHECK(total == 512);
  CHECK(eggbox(1).classes.size() == 2);
  CHECK(kind_of([] { eggbox(4); }) == ErrorKind::unsupported_params);
}
