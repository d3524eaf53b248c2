// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.
//
// JSON and DOT forms of the library's values.
//
//   matrix          {"semifield": "boolean" | "tropical" | "tropical_int",
//                    "rows": r, "cols": c, "entries": [["0", "-inf", ...], ...]}
//   monomial        {"perm": [...], "scale": ["...", ...]}  (0-based)
//   canonical form  {"p": monomial, "q": monomial, "transposed": bool}
//   linear map      {"n": n, "semifield": ..., "images": [matrix, ...]}
//                   with T(E_{i,j}) at index i * n + j
//
// Parsing is strict: missing or unknown keys, wrong arity and non-canonical
// value text all throw Error(parse_error).

#ifndef SEMIGREEN_IO_HPP_
#define SEMIGREEN_IO_HPP_

#include <string>  // for string

#include "nlohmann/json.hpp"

#include "green.hpp"
#include "linear_map.hpp"
#include "matrix.hpp"
#include "verify.hpp"

namespace semigreen {

  using json = nlohmann::ordered_json;

  json   to_json(Matrix const& m);
  Matrix matrix_from_json(json const& j);

  json           to_json(MonomialMatrix const& m);
  MonomialMatrix monomial_from_json(json const& j, Semifield s);

  json          to_json(CanonicalForm const& c);
  CanonicalForm canonical_form_from_json(json const& j, Semifield s);

  json      to_json(LinearMap const& t);
  LinearMap linear_map_from_json(json const& j);

  //! A CanonicalForm, or {"non_canonical": reason}.
  json to_json(ClassifyOutcome const& c);

  //! {"rank": k, "method": ...}, or {"rank": "undetermined"} for nullopt.
  json to_json(std::optional<RankResult> const& r);

  //! {"related": bool} plus "witness": {name: matrix, ...} when present.
  json to_json(RelateResult const& r);

  //! Fixed field order; no timings, so equal reports serialise equally.
  json        to_json(SuiteReport const& r);
  SuiteReport suite_report_from_json(json const& j);

  enum class ReportStyle { json, text };

  //! JSON (indented, trailing newline) or a human-readable summary.
  std::string format_report(SuiteReport const& r, ReportStyle style);

  //! Rows of a matrix in canonical text, e.g. "[0 -inf; 1/2 3]".
  std::string to_text(Matrix const& m);

  //! {"n": n, "d_classes": [{"rank", "size", "r_classes", "l_classes",
  //! "cells": [[[member, ...], ...], ...]}, ...]}, a member being its rows
  //! as 0/1 strings.
  json to_json(EggBox const& e);

  //! One cluster per D-class and one node per H-class, labelled
  //! "R_i,L_j,rank=r,size=s" with i, j local to the D-class.
  std::string to_dot(EggBox const& e);

  //! Reads and parses a JSON file; throws Error(parse_error).
  json read_json_file(std::string const& path);

}  // namespace semigreen

#endif  // SEMIGREEN_IO_HPP_
