// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/table.hpp"

#include <map>     // for map
#include <memory>  // for unique_ptr
#include <mutex>   // for recursive_mutex, lock_guard

#include "semigreen/bmat.hpp"
#include "semigreen/error.hpp"

namespace semigreen {

  namespace {
    size_t words_for(size_t n) {
      return ((uint64_t(1) << (n * n)) + 63) / 64;
    }

    bool test(std::vector<uint64_t> const& down,
              size_t                       words,
              uint64_t                     a,
              uint64_t                     b) {
      return (down[b * words + a / 64] >> (a % 64)) & 1;
    }

    void put(std::vector<uint64_t>& down,
             size_t                 words,
             uint64_t               a,
             uint64_t               b) {
      down[b * words + a / 64] |= uint64_t(1) << (a % 64);
    }

    void unite(std::vector<uint64_t>&       down,
               size_t                       words,
               uint64_t                     b,
               std::vector<uint64_t> const& other,
               uint64_t                     c) {
      for (size_t w = 0; w < words; ++w) {
        down[b * words + w] |= other[c * words + w];
      }
    }

    std::vector<uint64_t> build(size_t n, Relation rel) {
      uint64_t              N     = uint64_t(1) << (n * n);
      size_t                words = words_for(n);
      std::vector<uint64_t> down(N * words, 0);

      auto both = [&](Relation one_way) {
        RelationTable const& t = relation_table(n, one_way);
        for (uint64_t b = 0; b < N; ++b) {
          for (uint64_t a = 0; a < N; ++a) {
            if (t(a, b) && t(b, a)) {
              put(down, words, a, b);
            }
          }
        }
      };

      switch (rel) {
        case Relation::leq_l: {
          std::vector<BMat> mats;
          for (uint64_t c = 0; c < N; ++c) {
            mats.push_back(BMat::from_code(n, c));
          }
          for (uint64_t b = 0; b < N; ++b) {
            for (uint64_t a = 0; a < N; ++a) {
              if (leq_l(mats[a], mats[b])) {
                put(down, words, a, b);
              }
            }
          }
          break;
        }
        case Relation::leq_r: {
          RelationTable const& t = relation_table(n, Relation::leq_l);
          for (uint64_t b = 0; b < N; ++b) {
            for (uint64_t a = 0; a < N; ++a) {
              if (t(transpose_code(n, a), transpose_code(n, b))) {
                put(down, words, a, b);
              }
            }
          }
          break;
        }
        case Relation::l:
          both(Relation::leq_l);
          break;
        case Relation::r:
          both(Relation::leq_r);
          break;
        case Relation::j:
          both(Relation::leq_j);
          break;
        case Relation::h: {
          RelationTable const& l = relation_table(n, Relation::l);
          RelationTable const& r = relation_table(n, Relation::r);
          for (uint64_t b = 0; b < N; ++b) {
            for (uint64_t a = 0; a < N; ++a) {
              if (l(a, b) && r(a, b)) {
                put(down, words, a, b);
              }
            }
          }
          break;
        }
        case Relation::leq_j: {
          // a <=_J b iff a <=_L b t for some t.
          RelationTable const& t = relation_table(n, Relation::leq_l);
          std::vector<uint64_t> base(N * words, 0);
          for (uint64_t b = 0; b < N; ++b) {
            for (uint64_t a = 0; a < N; ++a) {
              if (t(a, b)) {
                put(base, words, a, b);
              }
            }
          }
          for (uint64_t b = 0; b < N; ++b) {
            BMat bm = BMat::from_code(n, b);
            for (uint64_t c = 0; c < N; ++c) {
              unite(down, words, b, base, (bm * BMat::from_code(n, c)).code());
            }
          }
          break;
        }
        case Relation::d: {
          // a D b iff a R c for some c in the L-class of b.
          RelationTable const&  l = relation_table(n, Relation::l);
          RelationTable const&  r = relation_table(n, Relation::r);
          std::vector<uint64_t> rset(N * words, 0);
          for (uint64_t c = 0; c < N; ++c) {
            for (uint64_t a = 0; a < N; ++a) {
              if (r(a, c)) {
                put(rset, words, a, c);
              }
            }
          }
          for (uint64_t b = 0; b < N; ++b) {
            for (uint64_t c = 0; c < N; ++c) {
              if (l(c, b)) {
                unite(down, words, b, rset, c);
              }
            }
          }
          break;
        }
      }
      return down;
    }
  }  // namespace

  uint64_t transpose_code(size_t n, uint64_t code) noexcept {
    uint64_t result = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if ((code >> (i * n + j)) & 1) {
          result |= uint64_t(1) << (j * n + i);
        }
      }
    }
    return result;
  }

  RelationTable::RelationTable(size_t n, Relation rel, std::vector<uint64_t> down)
      : _n(n), _rel(rel), _words(words_for(n)), _down(std::move(down)) {
    for (uint64_t a = 0; a < size(); ++a) {
      for (uint64_t b = 0; b < size(); ++b) {
        if (a != b && test(_down, _words, a, b)) {
          _pairs.emplace_back(a, b);
        }
      }
    }
  }

  RelationTable const& relation_table(size_t n, Relation rel) {
    if (n == 0 || n > max_search_dim) {
      throw Error(ErrorKind::unsupported_params,
                  "relation tables need 1 <= n <= "
                      + std::to_string(max_search_dim));
    }
    static std::recursive_mutex mtx;
    static std::map<std::pair<size_t, Relation>, std::unique_ptr<RelationTable>>
                                cache;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto                                  it = cache.find({n, rel});
    if (it == cache.end()) {
      auto table = std::make_unique<RelationTable>(n, rel, build(n, rel));
      it         = cache.emplace(std::make_pair(n, rel), std::move(table)).first;
    }
    return *it->second;
  }

}  // namespace semigreen
