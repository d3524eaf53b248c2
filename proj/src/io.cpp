// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/io.hpp"

#include <fstream>  // for ifstream
#include <set>      // for set
#include <sstream>  // for ostringstream

#include "semigreen/error.hpp"
#include "semigreen/random.hpp"

namespace semigreen {

  namespace {
    [[noreturn]] void bad(std::string const& what) {
      throw Error(ErrorKind::parse_error, what);
    }

    // Throws unless j is an object with exactly the given keys.
    void expect_keys(json const& j,
                     std::set<std::string> const& keys,
                     std::string const&           what) {
      if (!j.is_object()) {
        bad(what + " must be a JSON object");
      }
      for (auto const& [key, value] : j.items()) {
        if (!keys.count(key)) {
          bad(what + " has unexpected key \"" + key + "\"");
        }
      }
      for (auto const& key : keys) {
        if (!j.contains(key)) {
          bad(what + " is missing \"" + key + "\"");
        }
      }
    }

    size_t positive(json const& j, std::string const& what) {
      if (!j.is_number_unsigned() || j.get<uint64_t>() == 0) {
        bad(what + " must be a positive integer");
      }
      return j.get<size_t>();
    }

    std::string text(json const& j, std::string const& what) {
      if (!j.is_string()) {
        bad(what + " must be a string");
      }
      return j.get<std::string>();
    }

    std::string bool_rows(uint64_t code, size_t n) {
      std::string s;
      for (size_t i = 0; i < n; ++i) {
        if (i > 0) {
          s += '/';
        }
        for (size_t j = 0; j < n; ++j) {
          s += ((code >> (i * n + j)) & 1) ? '1' : '0';
        }
      }
      return s;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Matrices and maps
  ////////////////////////////////////////////////////////////////////////

  json to_json(Matrix const& m) {
    json entries = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (size_t j = 0; j < m.cols(); ++j) {
        row.push_back(m(i, j).to_string());
      }
      entries.push_back(std::move(row));
    }
    return json{{"semifield", to_string(m.semifield())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", std::move(entries)}};
  }

  Matrix matrix_from_json(json const& j) {
    expect_keys(j, {"semifield", "rows", "cols", "entries"}, "matrix");
    Semifield s    = semifield_from_string(text(j["semifield"], "semifield"));
    size_t    rows = positive(j["rows"], "rows");
    size_t    cols = positive(j["cols"], "cols");
    json const& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows) {
      bad("entries must be an array of " + std::to_string(rows) + " rows");
    }
    Matrix m(s, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
      if (!entries[i].is_array() || entries[i].size() != cols) {
        bad("row " + std::to_string(i) + " must have " + std::to_string(cols)
            + " entries");
      }
      for (size_t k = 0; k < cols; ++k) {
        m.set(i, k, Value::parse(s, text(entries[i][k], "an entry")));
      }
    }
    return m;
  }

  json to_json(MonomialMatrix const& m) {
    json scale = json::array();
    for (auto const& v : m.scale()) {
      scale.push_back(v.to_string());
    }
    return json{{"perm", m.perm()}, {"scale", std::move(scale)}};
  }

  MonomialMatrix monomial_from_json(json const& j, Semifield s) {
    expect_keys(j, {"perm", "scale"}, "monomial matrix");
    json const& perm  = j["perm"];
    json const& scale = j["scale"];
    if (!perm.is_array() || !scale.is_array() || perm.size() != scale.size()
        || perm.empty()) {
      bad("perm and scale must be non-empty arrays of equal length");
    }
    std::vector<size_t> p;
    std::vector<Value>  v;
    for (size_t i = 0; i < perm.size(); ++i) {
      if (!perm[i].is_number_unsigned()) {
        bad("perm entries must be non-negative integers");
      }
      p.push_back(perm[i].get<size_t>());
      v.push_back(Value::parse(s, text(scale[i], "a scale entry")));
    }
    try {
      return MonomialMatrix(std::move(p), std::move(v));
    } catch (Error const& e) {
      bad(std::string("invalid monomial matrix: ") + e.what());
    }
  }

  json to_json(CanonicalForm const& c) {
    return json{
        {"p", to_json(c.p)}, {"q", to_json(c.q)}, {"transposed", c.transposed}};
  }

  CanonicalForm canonical_form_from_json(json const& j, Semifield s) {
    expect_keys(j, {"p", "q", "transposed"}, "canonical form");
    if (!j["transposed"].is_boolean()) {
      bad("transposed must be a boolean");
    }
    return CanonicalForm{monomial_from_json(j["p"], s),
                         monomial_from_json(j["q"], s),
                         j["transposed"].get<bool>()};
  }

  json to_json(LinearMap const& t) {
    json images = json::array();
    for (auto const& m : t.images()) {
      images.push_back(to_json(m));
    }
    return json{{"n", t.n()},
                {"semifield", to_string(t.semifield())},
                {"images", std::move(images)}};
  }

  LinearMap linear_map_from_json(json const& j) {
    expect_keys(j, {"n", "semifield", "images"}, "linear map");
    size_t    n = positive(j["n"], "n");
    Semifield s = semifield_from_string(text(j["semifield"], "semifield"));
    json const& images = j["images"];
    if (!images.is_array() || images.size() != n * n) {
      bad("images must be an array of n^2 = " + std::to_string(n * n)
          + " matrices");
    }
    std::vector<Matrix> ms;
    for (auto const& m : images) {
      ms.push_back(matrix_from_json(m));
    }
    try {
      return LinearMap(s, n, std::move(ms));
    } catch (Error const& e) {
      bad(std::string("invalid linear map: ") + e.what());
    }
  }

  json to_json(ClassifyOutcome const& c) {
    if (auto const* f = std::get_if<CanonicalForm>(&c)) {
      return to_json(*f);
    }
    return json{{"non_canonical", to_string(std::get<NonCanonicalReason>(c))}};
  }

  json to_json(std::optional<RankResult> const& r) {
    if (!r) {
      return json{{"rank", "undetermined"}};
    }
    return json{{"rank", r->value}, {"method", to_string(r->method)}};
  }

  json to_json(RelateResult const& r) {
    json out{{"related", r.related}};
    if (r.witness) {
      json w = json::object();
      for (auto const& [name, m] : r.witness->factors) {
        w[name] = to_json(m);
      }
      out["witness"] = std::move(w);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  json to_json(SuiteReport const& r) {
    json counts{{"maps_enumerated", r.maps_enumerated},
                {"preservers_found", r.preservers_found},
                {"pairs_checked", r.pairs_checked}};
    for (auto const& [key, value] : r.counts) {
      counts[key] = value;
    }
    json checks = json::array();
    for (auto const& [name, ok] : r.checks) {
      checks.push_back(json{{"name", name}, {"pass", ok}});
    }
    json witnesses = json::array();
    for (auto const& w : r.witnesses) {
      json ms = json::object();
      for (auto const& [name, m] : w.matrices) {
        ms[name] = to_json(m);
      }
      witnesses.push_back(json{{"label", w.label}, {"matrices", std::move(ms)}});
    }
    json out{{"suite", r.suite},
             {"semifield", r.semifield},
             {"n", r.n},
             {"mode", to_string(r.mode)}};
    out["seed"]      = r.seed ? json(*r.seed) : json(nullptr);
    out["generator"] = r.seed ? json(generator_name) : json(nullptr);
    out["pass"]      = r.pass;
    out["counts"]    = std::move(counts);
    out["checks"]    = std::move(checks);
    out["witnesses"] = std::move(witnesses);
    return out;
  }

  SuiteReport suite_report_from_json(json const& j) {
    expect_keys(j,
                {"suite",
                 "semifield",
                 "n",
                 "mode",
                 "seed",
                 "generator",
                 "pass",
                 "counts",
                 "checks",
                 "witnesses"},
                "suite report");
    SuiteReport r;
    r.suite     = text(j["suite"], "suite");
    r.semifield = text(j["semifield"], "semifield");
    r.n         = positive(j["n"], "n");
    r.mode      = mode_from_string(text(j["mode"], "mode"));
    if (j["seed"].is_number_unsigned()) {
      r.seed = j["seed"].get<uint64_t>();
    } else if (!j["seed"].is_null()) {
      bad("seed must be a non-negative integer or null");
    }
    if (!j["pass"].is_boolean() || !j["counts"].is_object()
        || !j["checks"].is_array() || !j["witnesses"].is_array()) {
      bad("malformed suite report");
    }
    r.pass = j["pass"].get<bool>();
    for (auto const& [key, value] : j["counts"].items()) {
      if (!value.is_number_unsigned()) {
        bad("count " + key + " must be a non-negative integer");
      }
      uint64_t v = value.get<uint64_t>();
      if (key == "maps_enumerated") {
        r.maps_enumerated = v;
      } else if (key == "preservers_found") {
        r.preservers_found = v;
      } else if (key == "pairs_checked") {
        r.pairs_checked = v;
      } else {
        r.counts.emplace_back(key, v);
      }
    }
    for (auto const& c : j["checks"]) {
      expect_keys(c, {"name", "pass"}, "check");
      if (!c["pass"].is_boolean()) {
        bad("check pass must be a boolean");
      }
      r.checks.emplace_back(text(c["name"], "check name"), c["pass"].get<bool>());
    }
    for (auto const& w : j["witnesses"]) {
      expect_keys(w, {"label", "matrices"}, "witness");
      ReportWitness rw{text(w["label"], "label"), {}};
      if (!w["matrices"].is_object()) {
        bad("witness matrices must be an object");
      }
      for (auto const& [name, m] : w["matrices"].items()) {
        rw.matrices.emplace_back(name, matrix_from_json(m));
      }
      r.witnesses.push_back(std::move(rw));
    }
    return r;
  }

  std::string to_text(Matrix const& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i > 0) {
        s += "; ";
      }
      for (size_t j = 0; j < m.cols(); ++j) {
        if (j > 0) {
          s += ' ';
        }
        s += m(i, j).to_string();
      }
    }
    return s + "]";
  }

  std::string format_report(SuiteReport const& r, ReportStyle style) {
    if (style == ReportStyle::json) {
      return to_json(r).dump(2) + "\n";
    }
    std::ostringstream out;
    out << "suite " << r.suite << " over " << r.semifield << ", n = " << r.n
        << ", " << to_string(r.mode);
    if (r.seed) {
      out << ", seed " << *r.seed << " (" << generator_name << ")";
    }
    out << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    out << "  maps enumerated: " << r.maps_enumerated << "\n";
    out << "  preservers found: " << r.preservers_found << "\n";
    out << "  pairs checked: " << r.pairs_checked << "\n";
    for (auto const& [key, value] : r.counts) {
      out << "  " << key << ": " << value << "\n";
    }
    for (auto const& [name, ok] : r.checks) {
      out << "  [" << (ok ? "ok" : "FAILED") << "] " << name << "\n";
    }
    for (auto const& w : r.witnesses) {
      out << "  witness: " << w.label << "\n";
      for (auto const& [name, m] : w.matrices) {
        out << "    " << name << " = " << to_text(m) << "\n";
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Egg-box
  ////////////////////////////////////////////////////////////////////////

  json to_json(EggBox const& e) {
    json classes = json::array();
    for (auto const& d : e.classes) {
      json cells = json::array();
      for (auto const& row : d.cells) {
        json jr = json::array();
        for (auto const& cell : row) {
          json members = json::array();
          for (uint64_t code : cell) {
            members.push_back(bool_rows(code, e.n));
          }
          jr.push_back(std::move(members));
        }
        cells.push_back(std::move(jr));
      }
      classes.push_back(json{{"rank", d.rank},
                             {"size", d.size()},
                             {"r_classes", d.cells.size()},
                             {"l_classes", d.cells.front().size()},
                             {"cells", std::move(cells)}});
    }
    return json{{"n", e.n}, {"d_classes", std::move(classes)}};
  }

  std::string to_dot(EggBox const& e) {
    std::ostringstream out;
    out << "graph eggbox_" << e.n << " {\n";
    out << "  node [shape=box];\n";
    for (size_t k = 0; k < e.classes.size(); ++k) {
      auto const& d = e.classes[k];
      out << "  subgraph cluster_d" << k << " {\n";
      out << "    label=\"D_" << k << " rank=" << d.rank << " size=" << d.size()
          << "\";\n";
      for (size_t i = 0; i < d.cells.size(); ++i) {
        for (size_t j = 0; j < d.cells[i].size(); ++j) {
          out << "    d" << k << "_r" << i << "_l" << j << " [label=\"R_" << i
              << ",L_" << j << ",rank=" << d.rank
              << ",size=" << d.cells[i][j].size() << "\"];\n";
        }
      }
      out << "  }\n";
    }
    out << "}\n";
    return out.str();
  }

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      bad("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      bad(path + ": " + e.what());
    }
  }

}  // namespace semigreen
