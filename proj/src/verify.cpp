// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/verify.hpp"

#include <algorithm>  // for next_permutation, sort, min
#include <atomic>     // for atomic
#include <exception>  // for exception_ptr
#include <map>        // for map
#include <mutex>      // for mutex, lock_guard
#include <numeric>    // for iota
#include <random>     // for mt19937_64
#include <thread>     // for thread

#include "semigreen/bmat.hpp"
#include "semigreen/error.hpp"
#include "semigreen/random.hpp"
#include "semigreen/table.hpp"

namespace semigreen {

  std::string_view to_string(Mode m) noexcept {
    return m == Mode::exhaustive ? "exhaustive" : "randomized";
  }

  Mode mode_from_string(std::string_view name) {
    if (name == "exhaustive") {
      return Mode::exhaustive;
    } else if (name == "randomized") {
      return Mode::randomized;
    }
    throw Error(ErrorKind::parse_error,
                "unknown mode \"" + std::string(name)
                    + "\" (expected exhaustive or randomized)");
  }

  void SuiteReport::check(std::string name, bool ok) {
    checks.emplace_back(std::move(name), ok);
    pass = pass && ok;
  }

  uint64_t SuiteReport::count(std::string_view name) const {
    for (auto const& [key, value] : counts) {
      if (key == name) {
        return value;
      }
    }
    throw Error(ErrorKind::index_out_of_range,
                "no count named " + std::string(name));
  }

  bool SuiteReport::passed(std::string_view name) const {
    for (auto const& [key, value] : checks) {
      if (key == name) {
        return value;
      }
    }
    throw Error(ErrorKind::index_out_of_range,
                "no check named " + std::string(name));
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = {"t1",
                                                   "t2",
                                                   "corollaries",
                                                   "h_theorem",
                                                   "lemma_bg",
                                                   "invertibles",
                                                   "rank_j_monotone",
                                                   "remark_2_6_regression"};
    return names;
  }

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Plumbing
    ////////////////////////////////////////////////////////////////////////

    [[noreturn]] void unsupported(std::string_view suite, std::string what) {
      throw Error(ErrorKind::unsupported_params,
                  std::string(suite) + ": " + std::move(what));
    }

    void require_boolean(std::string_view suite, SuiteParams const& p) {
      if (p.semifield != Semifield::boolean) {
        unsupported(suite, "only runs over the boolean semifield");
      }
    }

    void require_n(std::string_view suite, SuiteParams const& p, size_t max) {
      if (p.n == 0 || p.n > max) {
        unsupported(suite,
                    "n must be between 1 and " + std::to_string(max) + ", not "
                        + std::to_string(p.n));
      }
    }

    void require_exhaustive(std::string_view suite, SuiteParams const& p) {
      if (p.mode != Mode::exhaustive) {
        unsupported(suite, "only runs in exhaustive mode");
      }
    }

    uint64_t require_seed(std::string_view suite, SuiteParams const& p) {
      if (!p.seed) {
        unsupported(suite, "randomized runs need an explicit seed");
      }
      return *p.seed;
    }

    SuiteReport start(std::string_view suite, SuiteParams const& p) {
      SuiteReport r;
      r.suite     = std::string(suite);
      r.semifield = std::string(to_string(p.semifield));
      r.n         = p.n;
      r.mode      = p.mode;
      r.seed      = p.mode == Mode::randomized ? p.seed : std::nullopt;
      return r;
    }

    size_t worker_count(SuiteParams const& p) {
      if (p.workers != 0) {
        return p.workers;
      }
      return std::max<size_t>(1, std::thread::hardware_concurrency());
    }

    // f(i) for i in [0, count), results in index order whatever the
    // scheduling.
    template <typename T, typename F>
    std::vector<T> parallel_map(size_t count, size_t workers, F&& f) {
      std::vector<std::optional<T>> slots(count);
      std::atomic<size_t>           next{0};
      std::exception_ptr            error;
      std::mutex                    error_mtx;
      auto                          work = [&] {
        for (size_t i = next++; i < count; i = next++) {
          try {
            slots[i].emplace(f(i));
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mtx);
            if (!error) {
              error = std::current_exception();
            }
            next = count;
          }
        }
      };
      workers = std::min(workers, std::max<size_t>(count, 1));
      if (workers <= 1) {
        work();
      } else {
        std::vector<std::thread> threads;
        for (size_t w = 0; w < workers; ++w) {
          threads.emplace_back(work);
        }
        for (auto& t : threads) {
          t.join();
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
      std::vector<T> result;
      result.reserve(count);
      for (auto& s : slots) {
        result.push_back(std::move(*s));
      }
      return result;
    }

    std::string sigma_text(UnitPermutationMap const& u) {
      std::string s = "[";
      for (size_t c = 0; c < u.sigma().size(); ++c) {
        s += (c ? "," : "") + std::to_string(u.sigma()[c]);
      }
      return s + "]";
    }

    std::string shape_text(UnitPermutationMap const& u) {
      auto outcome = classify(u);
      if (auto const* c = std::get_if<CanonicalForm>(&outcome)) {
        return c->transposed ? "transposed canonical form"
                             : "standard canonical form";
      }
      return "non-canonical ("
             + std::string(to_string(std::get<NonCanonicalReason>(outcome)))
             + ")";
    }

    size_t factorial(size_t n) {
      size_t result = 1;
      for (size_t i = 2; i <= n; ++i) {
        result *= i;
      }
      return result;
    }

    std::vector<std::vector<size_t>> all_permutations(size_t n) {
      std::vector<size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::vector<size_t>> result;
      do {
        result.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return result;
    }

    void add_verdict_witness(SuiteReport&              r,
                             std::string               label,
                             UnitPermutationMap const& u,
                             Verdict const&            v) {
      ReportWitness w{std::move(label), {}};
      if (v.witness) {
        auto const& [a, b] = *v.witness;
        w.label += ": " + v.detail;
        w.matrices = {{"A", a}, {"B", b}, {"T(A)", apply(u, a)}, {"T(B)", apply(u, b)}};
      }
      r.witnesses.push_back(std::move(w));
    }

    ////////////////////////////////////////////////////////////////////////
    // t1, t2, h_theorem over the boolean semifield: preserver sets against
    // classify.
    ////////////////////////////////////////////////////////////////////////

    constexpr size_t default_sampled_maps = 1000;

    // The maps whose preservation is checked: all of them when there are
    // few enough, otherwise every canonical map (up to half the budget),
    // then canonical maps with two target cells swapped, then uniform
    // cell permutations.
    std::vector<std::vector<size_t>>
    boolean_map_sample(size_t                                  n,
                       std::vector<std::vector<size_t>> const& canonical,
                       size_t                                  budget,
                       uint64_t                                seed) {
      size_t cells = n * n;
      if (factorial(cells) <= budget) {
        return all_permutations(cells);
      }
      std::mt19937_64 rng(derive_seed(seed, ~uint64_t(0)));
      auto            pick = [&](size_t bound) {
        return std::uniform_int_distribution<size_t>(0, bound - 1)(rng);
      };
      std::vector<std::vector<size_t>> result = canonical;
      for (size_t i = result.size(); i > 1; --i) {
        std::swap(result[i - 1], result[pick(i)]);
      }
      result.resize(std::min(result.size(), budget / 2));
      size_t near = (budget - result.size()) / 2;
      for (size_t k = 0; k < near; ++k) {
        auto   sigma = canonical[pick(canonical.size())];
        size_t x     = pick(cells);
        size_t y     = (x + 1 + pick(cells - 1)) % cells;
        std::swap(sigma[x], sigma[y]);
        result.push_back(std::move(sigma));
      }
      while (result.size() < budget) {
        std::vector<size_t> sigma(cells);
        std::iota(sigma.begin(), sigma.end(), 0);
        for (size_t i = cells; i > 1; --i) {
          std::swap(sigma[i - 1], sigma[pick(i)]);
        }
        result.push_back(std::move(sigma));
      }
      return result;
    }

    struct MapResult {
      std::optional<bool>  shape;
      std::vector<Verdict> verdicts;
    };

    // Compares the preserver set of each relation in rels with the maps
    // classify marks canonical (standard only when standard_only).
    void preserver_agreement(SuiteReport&                 r,
                             SuiteParams const&           p,
                             std::vector<Relation> const& rels,
                             bool                         standard_only) {
      std::string_view suite = r.suite;
      require_boolean(suite, p);
      require_n(suite, p, max_search_dim);
      CheckMode mode = Exhaustive{};
      if (p.mode == Mode::exhaustive) {
        if (p.n > 2) {
          unsupported(suite,
                      "exhaustive runs are limited to n <= 2; use randomized "
                      "mode");
        }
      } else {
        mode = Randomized{require_seed(suite, p), p.trials};
      }
      size_t n     = p.n;
      size_t cells = n * n;

      // Classify every bijective map.
      std::vector<size_t> sigma(cells);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::vector<std::vector<size_t>> canonical;
      size_t                           standard = 0, transposed = 0, other = 0;
      bool                             round_trip = true;
      do {
        auto u     = UnitPermutationMap::boolean(n, sigma);
        auto shape = canonical_shape(u);
        if (!shape) {
          ++other;
          continue;
        }
        ++(*shape ? transposed : standard);
        canonical.push_back(sigma);
        auto c = std::get<CanonicalForm>(classify(u));
        round_trip = round_trip && synthesize(c, n, Semifield::boolean) == u;
      } while (std::next_permutation(sigma.begin(), sigma.end()));

      uint64_t seed   = p.seed.value_or(0);
      auto     sample = boolean_map_sample(
          n, canonical, p.maps.value_or(default_sampled_maps), seed);

      auto results = parallel_map<MapResult>(
          sample.size(), worker_count(p), [&](size_t i) {
            auto      u = UnitPermutationMap::boolean(n, sample[i]);
            MapResult m{canonical_shape(u), {}};
            for (size_t k = 0; k < rels.size(); ++k) {
              CheckMode mk = mode;
              if (auto* rz = std::get_if<Randomized>(&mk)) {
                rz->seed = derive_seed(derive_seed(seed, i), k);
              }
              m.verdicts.push_back(check_preservation(u, rels[k], mk));
            }
            return m;
          });

      size_t              discrepancies = 0;
      std::vector<size_t> preservers(rels.size(), 0);
      size_t              expected = 0;
      std::vector<bool>   agree(rels.size(), true);
      bool                coincide = true;
      for (size_t i = 0; i < results.size(); ++i) {
        auto const& m      = results[i];
        bool        expect = m.shape && (!standard_only || !*m.shape);
        expected += expect;
        for (size_t k = 0; k < rels.size(); ++k) {
          bool ok = m.verdicts[k].ok();
          preservers[k] += ok;
          r.pairs_checked += m.verdicts[k].pairs_checked;
          coincide = coincide && ok == m.verdicts[0].ok();
          if (ok != expect) {
            agree[k] = false;
            ++discrepancies;
            auto u = UnitPermutationMap::boolean(n, sample[i]);
            add_verdict_witness(r,
                                "map " + sigma_text(u) + " is a "
                                    + shape_text(u) + " but its "
                                    + std::string(to_string(rels[k]))
                                    + " verdict is "
                                    + to_string(m.verdicts[k]),
                                u,
                                m.verdicts[k]);
          }
        }
      }

      r.maps_enumerated  = standard + transposed + other;
      r.preservers_found = preservers[0];
      r.counts.emplace_back("maps_checked", sample.size());
      r.counts.emplace_back("standard_canonical", standard);
      r.counts.emplace_back("transposed_canonical", transposed);
      r.counts.emplace_back("non_canonical", other);
      for (size_t k = 0; k < rels.size(); ++k) {
        r.counts.emplace_back("preservers_" + std::string(to_string(rels[k])),
                              preservers[k]);
      }
      r.counts.emplace_back("discrepancies", discrepancies);

      size_t nf     = factorial(n);
      size_t expect = standard_only || n == 1 ? nf * nf : 2 * nf * nf;
      std::string target
          = standard_only ? "standard canonical forms" : "canonical forms";
      r.check("classify finds " + std::to_string(expect) + " " + target,
              (standard_only ? standard : standard + transposed) == expect);
      r.check("synthesize inverts classify", round_trip);
      r.check("preserver sets coincide", coincide);
      for (size_t k = 0; k < rels.size(); ++k) {
        r.check(std::string(to_string(rels[k])) + "-preservers = " + target,
                agree[k]);
      }
      if (sample.size() == r.maps_enumerated) {
        r.check("preserver count = " + std::to_string(expect),
                preservers[0] == expect && expected == expect);
      }
    }

    SuiteReport suite_t1(SuiteParams const& p) {
      SuiteReport r = start("t1", p);
      preserver_agreement(
          r,
          p,
          {Relation::l, Relation::r, Relation::leq_l, Relation::leq_r},
          true);
      return r;
    }

    SuiteReport suite_t2(SuiteParams const& p) {
      SuiteReport r = start("t2", p);
      preserver_agreement(
          r, p, {Relation::d, Relation::j, Relation::leq_j}, false);
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // h_theorem
    ////////////////////////////////////////////////////////////////////////

    void sticky_checks(SuiteReport& r, StickyReport const& s) {
      r.counts.emplace_back("sticky_full_support", s.full_support);
      r.counts.emplace_back("sticky_candidates", s.candidates);
      r.counts.emplace_back("sticky_refuted_at_sqrt_witness",
                            s.refuted_at_sqrt_witness());
      r.counts.emplace_back("sticky_rank_lemma_violations",
                            s.rank_lemma_violations);
      r.check("no sticky matrix found", s.no_candidate_found());
      r.check("H-related A_k, B_k never have factor rank 1",
              s.rank_lemma_violations == 0);
      for (auto const& m : s.unrefuted) {
        r.witnesses.push_back({"candidate satisfying S1-S3 on every k tried",
                               {{"M", m}}});
      }
    }

    SuiteReport suite_h_theorem(SuiteParams const& p) {
      SuiteReport r = start("h_theorem", p);
      if (p.semifield == Semifield::boolean) {
        preserver_agreement(r, p, {Relation::h, Relation::d}, false);
        sticky_checks(r, find_sticky(Semifield::boolean, ExhaustiveBoolean{}));
        return r;
      }
      if (p.mode != Mode::randomized) {
        unsupported("h_theorem",
                    "needs an explicit seed (randomized mode) over "
                        + std::string(to_string(p.semifield)));
      }
      uint64_t seed = require_seed("h_theorem", p);
      auto     s    = find_sticky(p.semifield, RandomizedTropical{seed, p.trials});
      sticky_checks(r, s);
      if (p.semifield == Semifield::tropical) {
        r.check("every candidate refuted at its square-root witness",
                s.refuted_at_sqrt_witness() == s.candidates);
      }
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // corollaries
    ////////////////////////////////////////////////////////////////////////

    struct Transfer {
      std::string label;
      Relation    from;
      Relation    to;
    };

    std::vector<Transfer> transfers(bool transposed, bool boolean) {
      std::vector<Transfer> result;
      auto keep = [&](Relation x) {
        return boolean || decidable_over(x, Semifield::tropical);
      };
      if (!transposed) {
        for (Relation x : all_relations()) {
          if (keep(x)) {
            result.push_back({"preserves " + std::string(to_string(x)), x, x});
          }
        }
        return result;
      }
      result.push_back({"exchanges L with R", Relation::l, Relation::r});
      result.push_back({"exchanges R with L", Relation::r, Relation::l});
      result.push_back(
          {"exchanges leqL with leqR", Relation::leq_l, Relation::leq_r});
      result.push_back(
          {"exchanges leqR with leqL", Relation::leq_r, Relation::leq_l});
      for (Relation x : {Relation::h, Relation::d, Relation::j, Relation::leq_j}) {
        if (keep(x)) {
          result.push_back({"preserves " + std::string(to_string(x)), x, x});
        }
      }
      return result;
    }

    SuiteReport suite_corollaries(SuiteParams const& p) {
      SuiteReport r = start("corollaries", p);
      bool        boolean = p.semifield == Semifield::boolean;
      CheckMode   mode    = Exhaustive{};
      uint64_t    seed    = 0;
      if (p.mode == Mode::randomized) {
        seed = require_seed("corollaries", p);
        mode = Randomized{seed, p.trials};
        require_n("corollaries", p, boolean ? max_search_dim : 8);
      } else {
        if (!boolean) {
          unsupported("corollaries",
                      "needs an explicit seed (randomized mode) over "
                          + std::string(to_string(p.semifield)));
        }
        require_n("corollaries", p, 2);
      }
      size_t n = p.n;

      std::vector<CanonicalForm> forms;
      if (boolean) {
        for (auto const& rows : all_permutations(n)) {
          for (auto const& cols : all_permutations(n)) {
            auto pm = MonomialMatrix::permutation(Semifield::boolean, rows);
            auto qm = MonomialMatrix::permutation(Semifield::boolean, cols);
            forms.push_back({pm, qm, false});
            if (n > 1) {
              forms.push_back({pm, qm, true});
            }
          }
        }
      } else {
        for (size_t m = 0; m < p.maps.value_or(100); ++m) {
          Sampler sampler(p.semifield, derive_seed(seed, m));
          auto    pm = sampler.monomial(n);
          auto    qm = sampler.monomial(n);
          forms.push_back({pm, qm, false});
          forms.push_back({pm, qm, true});
        }
      }

      auto results = parallel_map<std::vector<Verdict>>(
          forms.size(), worker_count(p), [&](size_t i) {
            auto u = synthesize(forms[i], n, p.semifield);
            std::vector<Verdict> out;
            auto                 ts = transfers(forms[i].transposed, boolean);
            for (size_t k = 0; k < ts.size(); ++k) {
              CheckMode mk = mode;
              if (auto* rz = std::get_if<Randomized>(&mk)) {
                rz->seed = derive_seed(derive_seed(seed, i), k);
              }
              out.push_back(
                  check_transfer(u, ts[k].from, ts[k].to, mk, p.strength));
            }
            return out;
          });

      std::string adverb = p.strength == Strength::strong ? "strongly " : "";
      std::map<std::string, bool> ok;
      std::vector<std::string>    order;
      for (bool tr : {false, true}) {
        for (auto const& t : transfers(tr, boolean)) {
          std::string name = std::string(tr ? "X -> P X^T Q " : "X -> P X Q ")
                             + adverb + t.label;
          if (!tr || n > 1) {
            order.push_back(name);
            ok[name] = true;
          }
        }
      }
      size_t good = 0;
      for (size_t i = 0; i < forms.size(); ++i) {
        auto ts  = transfers(forms[i].transposed, boolean);
        bool all = true;
        for (size_t k = 0; k < ts.size(); ++k) {
          Verdict const& v = results[i][k];
          r.pairs_checked += v.pairs_checked;
          if (v.ok()) {
            continue;
          }
          all = false;
          std::string name
              = std::string(forms[i].transposed ? "X -> P X^T Q " : "X -> P X Q ")
                + adverb + ts[k].label;
          ok[name] = false;
          auto u   = synthesize(forms[i], n, p.semifield);
          add_verdict_witness(r, name + " fails", u, v);
          r.witnesses.back().matrices.emplace_back("P", monomial_expand(forms[i].p));
          r.witnesses.back().matrices.emplace_back("Q", monomial_expand(forms[i].q));
        }
        good += all;
      }
      r.maps_enumerated  = forms.size();
      r.preservers_found = good;
      r.counts.emplace_back("maps_failing", forms.size() - good);
      for (auto const& name : order) {
        r.check(name, ok[name]);
      }
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // lemma_bg
    ////////////////////////////////////////////////////////////////////////

    SuiteReport suite_lemma_bg(SuiteParams const& p) {
      SuiteReport r = start("lemma_bg", p);
      require_boolean("lemma_bg", p);
      require_exhaustive("lemma_bg", p);
      require_n("lemma_bg", p, 2);
      size_t n     = p.n;
      size_t cells = n * n;
      // Candidate images: zero, the units, and the sums of two units.
      std::vector<uint32_t> options = {0};
      for (size_t x = 0; x < cells; ++x) {
        options.push_back(uint32_t(1) << x);
      }
      for (size_t x = 0; x < cells; ++x) {
        for (size_t y = x + 1; y < cells; ++y) {
          options.push_back((uint32_t(1) << x) | (uint32_t(1) << y));
        }
      }
      uint64_t N     = boolean_monoid_size(n);
      uint64_t total = 1;
      for (size_t c = 0; c < cells; ++c) {
        total *= options.size();
      }
      size_t unit_forms = 0, bijective = 0, mismatches = 0;
      std::vector<uint32_t> images(cells);
      std::vector<bool>     seen(N);
      for (uint64_t index = 0; index < total; ++index) {
        uint64_t rest = index;
        for (size_t c = 0; c < cells; ++c) {
          images[c] = options[rest % options.size()];
          rest /= options.size();
        }
        std::vector<Matrix> dense;
        for (size_t c = 0; c < cells; ++c) {
          dense.push_back(BMat::from_code(n, images[c]).to_matrix());
        }
        bool extracted = try_extract_unit_form(
                             LinearMap(Semifield::boolean, n, std::move(dense)))
                             .has_value();
        std::fill(seen.begin(), seen.end(), false);
        bool bij = true;
        for (uint64_t x = 0; x < N && bij; ++x) {
          uint32_t y = 0;
          for (size_t c = 0; c < cells; ++c) {
            if ((x >> c) & 1) {
              y |= images[c];
            }
          }
          bij     = !seen[y];
          seen[y] = true;
        }
        unit_forms += extracted;
        bijective += bij;
        if (extracted != bij) {
          ++mismatches;
          if (mismatches == 1) {
            ReportWitness w{"extract_unit_form and bijectivity disagree", {}};
            for (size_t c = 0; c < cells; ++c) {
              w.matrices.emplace_back(
                  "T(E_" + std::to_string(c / n) + std::to_string(c % n) + ")",
                  BMat::from_code(n, images[c]).to_matrix());
            }
            r.witnesses.push_back(std::move(w));
          }
        }
      }
      r.maps_enumerated = total;
      r.pairs_checked   = total * N;
      r.counts.emplace_back("unit_permutation_maps", unit_forms);
      r.counts.emplace_back("bijective_maps", bijective);
      r.counts.emplace_back("mismatches", mismatches);
      r.check("extract_unit_form succeeds iff the map is bijective",
              mismatches == 0);
      r.check("bijective maps = (n^2)! cell permutations",
              bijective == factorial(cells));
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // invertibles
    ////////////////////////////////////////////////////////////////////////

    SuiteReport suite_invertibles(SuiteParams const& p) {
      SuiteReport r = start("invertibles", p);
      require_boolean("invertibles", p);
      require_exhaustive("invertibles", p);
      require_n("invertibles", p, max_search_dim);
      size_t   n  = p.n;
      uint64_t N  = boolean_monoid_size(n);
      BMat     id = BMat::identity(n);
      size_t   invertible = 0, monomial = 0, mismatches = 0;
      for (uint64_t a = 0; a < N; ++a) {
        BMat am  = BMat::from_code(n, a);
        bool inv = false;
        for (uint64_t b = 0; b < N && !inv; ++b) {
          BMat bm = BMat::from_code(n, b);
          inv     = am * bm == id && bm * am == id;
          ++r.pairs_checked;
        }
        bool mono = try_monomial(am.to_matrix()).has_value();
        invertible += inv;
        monomial += mono;
        if (inv != mono) {
          ++mismatches;
          r.witnesses.push_back(
              {inv ? "invertible but not monomial" : "monomial but not invertible",
               {{"A", am.to_matrix()}}});
        }
      }
      r.maps_enumerated = 0;
      r.counts.emplace_back("matrices", N);
      r.counts.emplace_back("invertible", invertible);
      r.counts.emplace_back("monomial", monomial);
      r.check("invertible matrices = monomial matrices", mismatches == 0);
      r.check("invertible matrices = the n! permutation matrices",
              invertible == factorial(n));
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // rank_j_monotone
    ////////////////////////////////////////////////////////////////////////

    SuiteReport suite_rank_j_monotone(SuiteParams const& p) {
      SuiteReport r = start("rank_j_monotone", p);
      require_boolean("rank_j_monotone", p);
      require_exhaustive("rank_j_monotone", p);
      require_n("rank_j_monotone", p, max_search_dim);
      size_t              n = p.n;
      uint64_t            N = boolean_monoid_size(n);
      std::vector<size_t> rank(N);
      for (uint64_t a = 0; a < N; ++a) {
        rank[a] = boolean_rank(BMat::from_code(n, a));
      }
      RelationTable const& leq_j = relation_table(n, Relation::leq_j);
      size_t               violations = 0, related = 0;
      for (uint64_t a = 0; a < N; ++a) {
        for (uint64_t b = 0; b < N; ++b) {
          if (!leq_j(a, b)) {
            continue;
          }
          ++related;
          if (rank[a] > rank[b]) {
            if (violations++ == 0) {
              r.witnesses.push_back({"A leqJ B but f(A) > f(B)",
                                     {{"A", BMat::from_code(n, a).to_matrix()},
                                      {"B", BMat::from_code(n, b).to_matrix()}}});
            }
          }
        }
      }
      r.pairs_checked = N * N;
      r.counts.emplace_back("leqJ_pairs", related);
      r.counts.emplace_back("violations", violations);
      r.check("A leqJ B implies f(A) <= f(B)", violations == 0);
      for (Relation rel :
           {Relation::h, Relation::l, Relation::r, Relation::d, Relation::j}) {
        RelationTable const& t  = relation_table(n, rel);
        bool                 ok = true;
        for (auto const& [a, b] : t.pairs()) {
          if (rank[a] != rank[b]) {
            if (ok) {
              r.witnesses.push_back(
                  {"rank differs on a " + std::string(to_string(rel)) + "-class",
                   {{"A", BMat::from_code(n, a).to_matrix()},
                    {"B", BMat::from_code(n, b).to_matrix()}}});
            }
            ok = false;
          }
        }
        r.check("rank is constant on " + std::string(to_string(rel))
                    + "-classes",
                ok);
      }
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // remark_2_6_regression: A = 2 E_11, B = E_11 over the natural numbers
    ////////////////////////////////////////////////////////////////////////

    using NatMatrix = std::vector<long>;

    NatMatrix nat_mul(NatMatrix const& a, NatMatrix const& b, size_t n) {
      NatMatrix c(n * n, 0);
      for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
          for (size_t j = 0; j < n; ++j) {
            c[i * n + j] += a[i * n + k] * b[k * n + j];
          }
        }
      }
      return c;
    }

    Matrix as_report_matrix(NatMatrix const& a, size_t n) {
      // Reported entries are ordinary integers; they are carried in a
      // tropical_int matrix only so the report can print them.
      Matrix m(Semifield::tropical_int, n, n);
      for (size_t c = 0; c < n * n; ++c) {
        m.set(c / n, c % n, Value::tropical_int(a[c]));
      }
      return m;
    }

    SuiteReport suite_remark_regression(SuiteParams const& p) {
      SuiteReport r = start("remark_2_6_regression", p);
      r.semifield   = "natural_numbers";
      require_exhaustive("remark_2_6_regression", p);
      require_n("remark_2_6_regression", p, 3);
      size_t    n = p.n;
      NatMatrix a(n * n, 0), b(n * n, 0), s(n * n, 0);
      a[0] = 2;
      b[0] = 1;
      s[0] = 2;
      r.check("A = B S with S = 2 E_11, so A leqR B", nat_mul(b, s, n) == a);
      // Non-zero outer products have factor rank 1.
      auto outer = [n](long x) {
        NatMatrix col(n, 0), row(n, 0), m(n * n, 0);
        col[0] = x;
        row[0] = 1;
        for (size_t i = 0; i < n; ++i) {
          for (size_t j = 0; j < n; ++j) {
            m[i * n + j] = col[i] * row[j];
          }
        }
        return m;
      };
      r.check("f(A) = f(B) = 1", outer(2) == a && outer(1) == b);
      // Search every T with entries in 0..4 for B = A T.
      constexpr long top     = 4;
      size_t         cells   = n * n;
      uint64_t       total   = 1;
      for (size_t c = 0; c < cells; ++c) {
        total *= top + 1;
      }
      NatMatrix t(cells, 0);
      bool      found = false;
      for (uint64_t index = 0; index < total && !found; ++index) {
        uint64_t rest = index;
        for (size_t c = 0; c < cells; ++c) {
          t[c] = static_cast<long>(rest % (top + 1));
          rest /= top + 1;
        }
        found = nat_mul(a, t, n) == b;
      }
      r.pairs_checked = total;
      r.counts.emplace_back("candidate_multipliers", total);
      r.check("no T with entries in 0..4 has B = A T, so A and B are not "
              "R-related",
              !found);
      if (!r.pass) {
        r.witnesses.push_back({"regression matrices (ordinary integers)",
                               {{"A", as_report_matrix(a, n)},
                                {"B", as_report_matrix(b, n)}}});
      }
      return r;
    }

  }  // namespace

  SuiteReport run_suite(std::string_view name, SuiteParams const& params) {
    SuiteReport r;
    if (name == "t1") {
      r = suite_t1(params);
    } else if (name == "t2") {
      r = suite_t2(params);
    } else if (name == "corollaries") {
      r = suite_corollaries(params);
    } else if (name == "h_theorem") {
      r = suite_h_theorem(params);
    } else if (name == "lemma_bg") {
      r = suite_lemma_bg(params);
    } else if (name == "invertibles") {
      r = suite_invertibles(params);
    } else if (name == "rank_j_monotone") {
      r = suite_rank_j_monotone(params);
    } else if (name == "remark_2_6_regression") {
      r = suite_remark_regression(params);
    } else {
      throw Error(ErrorKind::unknown_suite,
                  "no suite named \"" + std::string(name) + "\"");
    }
    if (!r.pass && r.witnesses.empty()) {
      ReportWitness w{"failed checks:", {}};
      for (auto const& [check, ok] : r.checks) {
        if (!ok) {
          w.label += " " + check + ";";
        }
      }
      r.witnesses.push_back(std::move(w));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Egg-box
  ////////////////////////////////////////////////////////////////////////

  size_t DClass::size() const noexcept {
    size_t result = 0;
    for (auto const& row : cells) {
      for (auto const& cell : row) {
        result += cell.size();
      }
    }
    return result;
  }

  EggBox eggbox(size_t n) {
    if (n == 0 || n > max_search_dim) {
      throw Error(ErrorKind::unsupported_params,
                  "egg-boxes are computed for 1 <= n <= "
                      + std::to_string(max_search_dim));
    }
    uint64_t             N = boolean_monoid_size(n);
    RelationTable const& l = relation_table(n, Relation::l);
    RelationTable const& r = relation_table(n, Relation::r);
    // Each class is named by its least member.
    std::vector<uint64_t> lrep(N), rrep(N);
    for (uint64_t a = 0; a < N; ++a) {
      lrep[a] = a;
      rrep[a] = a;
      for (uint64_t b = 0; b < a; ++b) {
        if (l(a, b)) {
          lrep[a] = lrep[b];
          break;
        }
      }
      for (uint64_t b = 0; b < a; ++b) {
        if (r(a, b)) {
          rrep[a] = rrep[b];
          break;
        }
      }
    }
    // D is the join of L and R: union the L- and R-classes.
    std::vector<uint64_t> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](uint64_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    auto unite = [&](uint64_t x, uint64_t y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent[std::max(x, y)] = std::min(x, y);
      }
    };
    for (uint64_t a = 0; a < N; ++a) {
      unite(a, lrep[a]);
      unite(a, rrep[a]);
    }
    std::map<uint64_t, std::vector<uint64_t>> members;
    for (uint64_t a = 0; a < N; ++a) {
      members[find(a)].push_back(a);
    }
    EggBox result{n, {}};
    for (auto const& [rep, elts] : members) {
      std::map<uint64_t, size_t> rows, cols;
      for (uint64_t a : elts) {
        rows.emplace(rrep[a], 0);
        cols.emplace(lrep[a], 0);
      }
      size_t k = 0;
      for (auto& [key, index] : rows) {
        index = k++;
      }
      k = 0;
      for (auto& [key, index] : cols) {
        index = k++;
      }
      DClass d{boolean_rank(BMat::from_code(n, rep)),
               std::vector<std::vector<std::vector<uint64_t>>>(
                   rows.size(),
                   std::vector<std::vector<uint64_t>>(cols.size()))};
      for (uint64_t a : elts) {
        d.cells[rows[rrep[a]]][cols[lrep[a]]].push_back(a);
      }
      result.classes.push_back(std::move(d));
    }
    return result;
  }

}  // namespace semigreen
