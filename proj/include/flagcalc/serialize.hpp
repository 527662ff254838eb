#pragma once

// Input grammars and machine-readable output.
//
// Grammars: group descriptors are letter+rank labels ("A3"); parabolic
// subsets are brace-wrapped 1-based index lists ("{}", "{2}", "{1,3}");
// words are whitespace-separated simple-root indices with "e" for the
// identity; tuples are semicolon-separated words ("1 2; 1 2; 2 1").
//
// Output: single-line JSON records with pinned field order, or TSV with the
// identical field order (one header line, then one line per record).  Every
// record that carries Schubert class words is tagged "indexing":"paper",
// meaning words label the geometric classes [X_w] of codimension
// dim G/P - length(w).  All output is deterministic, byte for byte.

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan.hpp"
#include "cone.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "levi.hpp"
#include "numeric.hpp"
#include "sweep.hpp"
#include "weyl.hpp"

namespace flagcalc {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline int parse_int(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  if (t.empty()) throw ValidationError("empty " + what);
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw ValidationError("cannot parse " + what + " '" + t + "'");
  }
  if (pos != t.size()) throw ValidationError("cannot parse " + what + " '" + t + "'");
  return value;
}

inline CartanDatum parse_group(const std::string& s) {
  return CartanDatum::from_label(trim(s));
}

inline ParabolicSubset parse_parabolic(const std::string& s, int rank) {
  const std::string t = trim(s);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw ValidationError("parabolic subset must look like {} or {1,3}, got '" + s + "'");
  const std::string inner = trim(t.substr(1, t.size() - 2));
  std::vector<int> idx;
  if (!inner.empty()) {
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ','))
      idx.push_back(parse_int(item, "simple-root index"));
  }
  return ParabolicSubset(std::move(idx), rank);
}

inline std::vector<int> parse_word(const std::string& s) {
  const std::string t = trim(s);
  if (t == "e") return {};
  if (t.empty()) throw ValidationError("empty word (use 'e' for the identity)");
  std::vector<int> letters;
  std::stringstream ss(t);
  std::string item;
  while (ss >> item) letters.push_back(parse_int(item, "simple-root index"));
  return letters;
}

inline std::vector<std::vector<int>> parse_tuple(const std::string& s) {
  std::vector<std::vector<int>> words;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) words.push_back(parse_word(item));
  if (words.empty()) throw ValidationError("empty tuple");
  return words;
}

// ---------------------------------------------------------------------------
// JSON records (pinned field orders).
// ---------------------------------------------------------------------------

namespace detail {

// Constants are exact; emit as a JSON integer when it fits, else as a string.
inline ordered_json big_to_json(const BigInt& v) {
  static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

inline ordered_json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    BigInt n = numerator(r);
    return big_to_json(n);
  }
  return rational_to_string(r);
}

inline ordered_json words_json(const std::vector<WeylElement>& ws) {
  ordered_json arr = ordered_json::array();
  for (const WeylElement& w : ws) arr.push_back(w.word_string());
  return arr;
}

inline ordered_json residues_json(const std::map<int, Rational>& residues) {
  ordered_json obj = ordered_json::object();
  for (const auto& [i, r] : residues) obj["x" + std::to_string(i)] = rational_to_json(r);
  return obj;
}

}  // namespace detail

inline ordered_json factor_record(const FlagContext& ctx, const ParabolicSubset& P,
                                  const ParabolicSubset& Q, const CosetFactorization& f) {
  ordered_json rec;
  rec["group"] = ctx.label();
  rec["P"] = P.to_string();
  rec["Q"] = Q.to_string();
  rec["word"] = f.w.word_string();
  rec["u"] = f.u.word_string();
  rec["v"] = f.v.word_string();
  rec["indexing"] = "paper";
  return rec;
}

inline ordered_json dual_record(const FlagContext& ctx, const ParabolicSubset& P,
                                const WeylElement& w, const WeylElement& dual) {
  ordered_json rec;
  rec["group"] = ctx.label();
  rec["P"] = P.to_string();
  rec["word"] = w.word_string();
  rec["dual"] = dual.word_string();
  rec["indexing"] = "paper";
  return rec;
}

inline ordered_json constant_record(const FlagContext& ctx, const ParabolicSubset& P,
                                    const std::vector<WeylElement>& ws, const BigInt& c_w) {
  ordered_json rec;
  rec["group"] = ctx.label();
  rec["P"] = P.to_string();
  rec["tuple"] = detail::words_json(ws);
  rec["c_w"] = detail::big_to_json(c_w);
  rec["indexing"] = "paper";
  return rec;
}

inline ordered_json verify_record(const FlagContext& ctx, const ParabolicSubset& P,
                                  const ParabolicSubset& Q, const std::vector<WeylElement>& ws,
                                  const ProductFormulaReport& report) {
  ordered_json rec;
  rec["group"] = ctx.label();
  rec["P"] = P.to_string();
  rec["Q"] = Q.to_string();
  rec["tuple"] = detail::words_json(ws);
  rec["c_w"] = detail::big_to_json(report.c_w);
  rec["c_u"] = detail::big_to_json(report.c_u);
  rec["c_v"] = detail::big_to_json(report.c_v);
  rec["holds"] = report.holds;
  rec["indexing"] = "paper";
  return rec;
}

inline ordered_json levi_record(const FlagContext& ctx, const ParabolicSubset& P,
                                const std::vector<WeylElement>& ws, const LeviReport& report) {
  ordered_json rec;
  rec["tuple"] = detail::words_json(ws);
  rec["P"] = P.to_string();
  rec["c_w"] = detail::big_to_json(report.c);
  rec["residues"] = detail::residues_json(report.residues);
  rec["movable_w"] = report.movable;
  rec["indexing"] = "paper";
  (void)ctx;
  return rec;
}

inline ordered_json levi_descent_record(const FlagContext& ctx, const ParabolicSubset& P,
                                        const ParabolicSubset& Q,
                                        const std::vector<WeylElement>& ws,
                                        const LeviDescentReport& report) {
  ordered_json rec;
  rec["tuple"] = detail::words_json(ws);
  rec["P"] = P.to_string();
  rec["Q"] = Q.to_string();
  rec["c_w"] = detail::big_to_json(report.w.c);
  rec["c_u"] = detail::big_to_json(report.u.c);
  rec["c_v"] = detail::big_to_json(report.v.c);
  rec["residues"] = detail::residues_json(report.w.residues);
  rec["movable_w"] = report.w.movable;
  rec["movable_u"] = report.u.movable;
  rec["movable_v"] = report.v.movable;
  rec["indexing"] = "paper";
  (void)ctx;
  return rec;
}

inline ordered_json face_record(const FaceDescriptor& d) {
  ordered_json rec;
  rec["P"] = d.P.to_string();
  ordered_json witnesses = ordered_json::array();
  for (const auto& tuple : d.witnesses) {
    std::string joined;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (k) joined += "; ";
      joined += tuple[k].word_string();
    }
    witnesses.push_back(joined);
  }
  rec["tuple"] = witnesses;
  ordered_json alphas = ordered_json::array();
  ordered_json coeffs = ordered_json::array();
  for (const FaceFunctional& f : d.functionals) {
    alphas.push_back(f.alpha);
    ordered_json vec = ordered_json::array();
    for (const Rational& r : f.fw_coeffs) vec.push_back(rational_to_string(r));
    coeffs.push_back(vec);
  }
  rec["alpha"] = alphas;
  rec["coefficients"] = coeffs;
  rec["witness_c"] = 1;
  rec["indexing"] = "paper";
  return rec;
}

inline ordered_json sweep_chain_record(const FlagContext& ctx, int s, const ChainStats& stats) {
  ordered_json rec;
  rec["group"] = ctx.label();
  rec["P"] = stats.P.to_string();
  rec["Q"] = stats.Q.to_string();
  rec["s"] = s;
  rec["tuples"] = stats.tuples;
  rec["thm1_checked"] = stats.thm1_checked;
  rec["thm1_violations"] = stats.thm1_violations;
  rec["movable"] = stats.movable;
  rec["thm2_violations"] = stats.thm2_violations;
  return rec;
}

// ---------------------------------------------------------------------------
// TSV: identical field order; one header line, then one line per record.
// Arrays are joined with "; ", nested arrays with "," inside "; ", and
// objects as comma-separated key=value pairs.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string tsv_scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

inline std::string tsv_value(const ordered_json& v) {
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += "; ";
      if (v[i].is_array()) {
        for (std::size_t j = 0; j < v[i].size(); ++j) {
          if (j) out += ",";
          out += tsv_scalar(v[i][j]);
        }
      } else {
        out += tsv_scalar(v[i]);
      }
    }
    return out;
  }
  if (v.is_object()) {
    std::string out;
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",";
      first = false;
      out += it.key() + "=" + tsv_scalar(it.value());
    }
    return out;
  }
  return tsv_scalar(v);
}

}  // namespace detail

inline std::string tsv_header(const ordered_json& record) {
  std::string out;
  bool first = true;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!first) out += '\t';
    first = false;
    out += it.key();
  }
  return out;
}

inline std::string tsv_row(const ordered_json& record) {
  std::string out;
  bool first = true;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!first) out += '\t';
    first = false;
    out += detail::tsv_value(it.value());
  }
  return out;
}

}  // namespace flagcalc
