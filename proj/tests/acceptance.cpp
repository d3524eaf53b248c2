// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// Acceptance run: one PASS or FAIL line per criterion, exit status 1 if any
// criterion fails.  Brute-force oracles from oracle.hpp supply the expected
// preserver sets; their cost is excluded from the timed sections.

#include <chrono>    // for steady_clock
#include <cstdio>    // for printf
#include <iostream>  // for cout
#include <string>    // for string

#include "semigreen/linear_map.hpp"
#include "semigreen/verify.hpp"

#include "oracle.hpp"

using namespace semigreen;

namespace {
  using clock_type = std::chrono::steady_clock;

  double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
  }

  int failures = 0;

  void report(int number, std::string const& what, bool ok, double secs, double limit) {
    bool in_time = secs < limit;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n",
                ok && in_time ? "PASS" : "FAIL",
                number,
                what.c_str(),
                secs,
                limit);
    if (!in_time) {
      std::printf("  over the time limit\n");
    }
    failures += !(ok && in_time);
  }

  // Oracle preserver sets at n = 2 against classify, for each relation.
  bool oracle_agrees(std::vector<Relation> const& rels, bool standard_only, size_t expect) {
    size_t found = 0;
    for (auto const& u : oracle::all_boolean_maps(2)) {
      auto shape = canonical_shape(u);
      bool want  = shape && (!standard_only || !*shape);
      found += want;
      for (Relation rel : rels) {
        if (oracle::strongly_preserves(u, rel) != want) {
          std::printf("  oracle disagrees on %s\n", std::string(to_string(rel)).c_str());
          return false;
        }
      }
    }
    return found == expect;
  }

  SuiteParams boolean_exhaustive(size_t n) {
    SuiteParams p;
    p.n = n;
    return p;
  }

  SuiteParams randomized(Semifield s, size_t n, uint64_t seed) {
    SuiteParams p;
    p.semifield = s;
    p.n         = n;
    p.mode      = Mode::randomized;
    p.seed      = seed;
    return p;
  }

  void criterion_1() {
    auto start = clock_type::now();
    auto r     = run_suite("t1", boolean_exhaustive(2));
    auto secs  = seconds_since(start);
    bool ok    = r.pass && r.maps_enumerated == 24 && r.preservers_found == 4
              && r.count("discrepancies") == 0
              && oracle_agrees({Relation::l, Relation::r, Relation::leq_l, Relation::leq_r},
                               true,
                               4);
    report(1, "L, R, leqL, leqR preservers of M_2(B) = 4 standard canonical maps of 24", ok,
           secs, 5);
  }

  void criterion_2() {
    auto start = clock_type::now();
    auto t2    = run_suite("t2", boolean_exhaustive(2));
    auto h     = run_suite("h_theorem", boolean_exhaustive(2));
    auto secs  = seconds_since(start);
    bool ok    = t2.pass && h.pass && t2.preservers_found == 8
              && t2.count("preservers_D") == 8 && t2.count("preservers_J") == 8
              && t2.count("preservers_leqJ") == 8 && h.count("preservers_H") == 8
              && oracle_agrees({Relation::d, Relation::j, Relation::leq_j, Relation::h},
                               false,
                               8);
    report(2, "D, J, leqJ, H preservers of M_2(B) = 8 canonical maps", ok, secs, 30);
  }

  void criterion_3() {
    std::vector<Relation> rels = {Relation::leq_l, Relation::leq_r, Relation::l,
                                  Relation::r, Relation::h};
    for (Relation rel : rels) {
      oracle::table(2, rel);
    }
    auto const& all           = oracle::monoid(2);
    size_t      discrepancies = 0;
    auto        start         = clock_type::now();
    for (Relation rel : rels) {
      auto const& expect = oracle::table(2, rel);
      for (size_t x = 0; x < all.size(); ++x) {
        for (size_t y = 0; y < all.size(); ++y) {
          discrepancies += relate(all[x], all[y], rel) != expect[x][y];
        }
      }
    }
    auto secs = seconds_since(start);
    std::printf("  %zu discrepancies over 256 pairs x 5 relations\n", discrepancies);
    report(3, "residuation deciders = multiplier search on all 256 pairs of M_2(B)",
           discrepancies == 0, secs, 1);
  }

  void criterion_4() {
    auto start = clock_type::now();
    auto mono  = run_suite("rank_j_monotone", boolean_exhaustive(2));
    auto reg   = run_suite("remark_2_6_regression", boolean_exhaustive(2));
    auto secs  = seconds_since(start);
    bool ok    = mono.pass && mono.count("violations") == 0 && reg.pass;
    report(4, "A leqJ B implies rank A <= rank B on M_2(B), and the N regression", ok, secs,
           60);
  }

  void criterion_5() {
    auto start = clock_type::now();
    auto r     = run_suite("invertibles", boolean_exhaustive(2));
    auto secs  = seconds_since(start);
    bool ok    = r.pass && r.count("invertible") == 2 && r.count("monomial") == 2;
    report(5, "invertible = monomial = the 2 permutation matrices of M_2(B)", ok, secs, 60);
  }

  void criterion_6() {
    auto start = clock_type::now();
    auto b     = find_sticky(Semifield::boolean, ExhaustiveBoolean{});
    auto t     = find_sticky(Semifield::tropical, RandomizedTropical{42, 1000});
    auto secs  = seconds_since(start);
    bool b_ok  = b.full_support == 1 && b.candidates == 0 && b.no_candidate_found()
                && factor_rank(Matrix::parse(Semifield::boolean, {{"1", "1"}, {"1", "1"}}))
                           .value
                       == 1;
    bool t_ok = t.candidates >= 1000 && t.no_candidate_found()
                && t.refuted_at_sqrt_witness() == t.candidates;
    std::printf("  boolean: %zu full-support, %zu candidates; tropical: %zu candidates, "
                "%zu refuted at the square-root witness\n",
                b.full_support, b.candidates, t.candidates, t.refuted_at_sqrt_witness());
    report(6, "no sticky matrix (boolean exhaustive, tropical seed 42)", b_ok && t_ok, secs,
           10);
  }

  void criterion_7() {
    auto start = clock_type::now();
    bool ok    = true;
    for (size_t n : {2, 3}) {
      SuiteParams p = randomized(Semifield::tropical, n, 42);
      p.maps        = 100;
      p.trials      = 1000;
      p.strength    = Strength::weak;
      auto r        = run_suite("corollaries", p);
      std::printf("  n = %zu: %zu maps, %zu pairs, %s\n", n, r.maps_enumerated,
                  r.pairs_checked, r.pass ? "no failures" : "failures");
      for (auto const& [name, passed] : r.checks) {
        if (!passed) {
          std::printf("  failed: %s\n", name.c_str());
        }
      }
      ok = ok && r.pass && r.maps_enumerated == 200 && r.count("maps_failing") == 0;
    }
    auto secs = seconds_since(start);
    report(7, "tropical X -> PXQ preserves, X -> PX^TQ exchanges L with R (n = 2, 3)", ok,
           secs, 60);
  }

  void criterion_8() {
    auto start = clock_type::now();
    bool ok    = true;
    for (auto const* suite : {"t1", "h_theorem"}) {
      SuiteParams p = randomized(Semifield::boolean, 3, 42);
      p.maps        = 1000;
      p.trials      = 1000;
      auto r        = run_suite(suite, p);
      std::printf("  %s: %zu maps classified, %zu sampled, %zu discrepancies\n", suite,
                  r.maps_enumerated, size_t(r.count("maps_checked")),
                  size_t(r.count("discrepancies")));
      ok = ok && r.pass && r.maps_enumerated == 362880 && r.count("maps_checked") == 1000
           && r.count("discrepancies") == 0;
    }
    auto secs = seconds_since(start);
    report(8, "n = 3: classify all 362880 maps, sampled L, R, H verdicts agree", ok, secs,
           60);
  }
}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
