#pragma once

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tleib/constructions.hpp"
#include "tleib/expr.hpp"
#include "tleib/fpenum.hpp"

// JSON document layer: algebra and operator documents with strict schema
// validation, canonical byte-stable emission (sorted keys, canonical
// coefficient strings), and report serialization in JSON and text form.

namespace tleib {

// std::map-backed json: object keys always serialize in sorted order, which
// is what makes emission byte-stable.
using Json = nlohmann::json;

inline std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Validation helpers
// ---------------------------------------------------------------------------

namespace detail {

inline void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
}

inline void reject_unknown_keys(const Json& j, const std::string& path,
                                const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw SchemaError(path + "/" + it.key() + ": unknown field");
}

inline const Json& require_field(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key + ": missing required field");
  return *it;
}

inline std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

inline long long require_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return j.get<long long>();
}

inline const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array");
  return j;
}

inline bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha((unsigned char)s[0])) return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

inline std::vector<std::string> parse_params_field(const Json& j, const std::string& path) {
  const Json& arr = require_array(j, path);
  std::vector<std::string> params;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ip = path + "/" + std::to_string(i);
    std::string p = require_string(arr[i], ip);
    if (!valid_identifier(p)) throw SchemaError(ip + ": '" + p + "' is not a valid identifier");
    if (p == "i" || p == "sqrt")
      throw SchemaError(ip + ": '" + p + "' is reserved by the coefficient grammar");
    if (!seen.insert(p).second) throw SchemaError(ip + ": duplicate parameter '" + p + "'");
    params.push_back(std::move(p));
  }
  return params;
}

inline Field parse_roots_field(const Json& j, const std::string& path) {
  const Json& arr = require_array(j, path);
  std::vector<long long> roots;
  for (std::size_t i = 0; i < arr.size(); ++i)
    roots.push_back(require_integer(arr[i], path + "/" + std::to_string(i)));
  try {
    return make_field(roots);
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

inline RatFunc parse_coeff(const Field& f, const std::set<std::string>& params,
                           const std::string& text, const std::string& path) {
  try {
    return parse_expr(f, params, text);
  } catch (const UndeclaredParameter& e) {
    throw UndeclaredParameter(path + ": " + e.what());
  } catch (const UndeclaredRoot& e) {
    throw UndeclaredRoot(path + ": " + e.what());
  } catch (const Error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

inline int parse_index(const Json& j, const std::string& path, int dim) {
  long long v = require_integer(j, path);
  if (v == 0) throw SchemaError(path + ": index 0 (indices are 1-based)");
  if (v < 1 || v > dim)
    throw SchemaError(path + ": index " + std::to_string(v) + " out of range 1.." +
                      std::to_string(dim));
  return (int)v;
}

inline int parse_index_key(const std::string& key, const std::string& path, int dim) {
  bool ok = !key.empty() && key.size() <= 2 &&
            key.find_first_not_of("0123456789") == std::string::npos && key[0] != '0';
  if (!ok && key != "0")
    throw SchemaError(path + "/" + key + ": output index key is not a positive integer");
  long long v = key == "0" ? 0 : std::stoll(key);
  if (v == 0) throw SchemaError(path + "/" + key + ": index 0 (indices are 1-based)");
  if (v > dim)
    throw SchemaError(path + "/" + key + ": index " + key + " out of range 1.." +
                      std::to_string(dim));
  return (int)v;
}

// Walks one brackets array; forwards each (args, output index, coefficient)
// triple in document order, so a later duplicate assignment overwrites an
// earlier one.
template <class SetFn>
inline void parse_brackets_array(const Json& j, const std::string& path, int arity, int dim,
                                 const Field& f, const std::set<std::string>& params,
                                 SetFn&& set) {
  const Json& arr = require_array(j, path);
  for (std::size_t b = 0; b < arr.size(); ++b) {
    const std::string bp = path + "/" + std::to_string(b);
    require_object(arr[b], bp);
    reject_unknown_keys(arr[b], bp, {"args", "out"});
    const Json& args_j = require_array(require_field(arr[b], bp, "args"), bp + "/args");
    if ((int)args_j.size() != arity)
      throw SchemaError(bp + "/args: expected " + std::to_string(arity) + " indices");
    std::vector<int> args;
    for (std::size_t a = 0; a < args_j.size(); ++a)
      args.push_back(parse_index(args_j[a], bp + "/args/" + std::to_string(a), dim));
    const Json& out = require_field(arr[b], bp, "out");
    require_object(out, bp + "/out");
    if (out.empty()) throw SchemaError(bp + "/out: expected at least one output coordinate");
    for (auto it = out.begin(); it != out.end(); ++it) {
      int p = parse_index_key(it.key(), bp + "/out", dim);
      std::string coeff = require_string(it.value(), bp + "/out/" + it.key());
      set(args, p, parse_coeff(f, params, coeff, bp + "/out/" + it.key()));
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Algebra documents
// ---------------------------------------------------------------------------
//
// Schema: { name, arity: 2|3, dim, roots: [..], params: [..],
//           brackets: [{ args: [i,j,k], out: { "p": "coeff-expr" } }] }
// with an optional "brackets2" of the same shape turning the document into a
// compatible pair.  Indices are 1-based.  Canonical form: brackets sorted by
// args, output indices sorted, canonical coefficient strings, sorted keys.

struct AlgebraDocument {
  std::string name;
  int arity = 3;
  bool pair = false;
  TernaryStructure ternary, ternary2;  // populated when arity == 3
  BinaryStructure binary, binary2;     // populated when arity == 2

  int dim() const { return arity == 3 ? ternary.dim() : binary.dim(); }
  const Field& field() const { return arity == 3 ? ternary.field() : binary.field(); }
  const std::vector<std::string>& params() const {
    return arity == 3 ? ternary.params() : binary.params();
  }
};

inline AlgebraDocument make_document(std::string name, TernaryStructure t) {
  AlgebraDocument d;
  d.name = std::move(name);
  d.arity = 3;
  d.ternary = std::move(t);
  return d;
}

inline AlgebraDocument make_document(std::string name, BinaryStructure b) {
  AlgebraDocument d;
  d.name = std::move(name);
  d.arity = 2;
  d.binary = std::move(b);
  return d;
}

namespace detail {

inline void require_pair_compatible(int dim1, int dim2, const Field& f1, const Field& f2,
                                    const std::vector<std::string>& p1,
                                    const std::vector<std::string>& p2) {
  if (dim1 != dim2 || !(f1 == f2) || p1 != p2)
    throw SchemaError("a pair document needs both brackets over one dimension, field and "
                      "parameter list");
}

}  // namespace detail

inline AlgebraDocument make_document(std::string name, TernaryStructure t1, TernaryStructure t2) {
  detail::require_pair_compatible(t1.dim(), t2.dim(), t1.field(), t2.field(), t1.params(),
                                  t2.params());
  AlgebraDocument d = make_document(std::move(name), std::move(t1));
  d.pair = true;
  d.ternary2 = std::move(t2);
  return d;
}

inline AlgebraDocument make_document(std::string name, BinaryStructure b1, BinaryStructure b2) {
  detail::require_pair_compatible(b1.dim(), b2.dim(), b1.field(), b2.field(), b1.params(),
                                  b2.params());
  AlgebraDocument d = make_document(std::move(name), std::move(b1));
  d.pair = true;
  d.binary2 = std::move(b2);
  return d;
}

inline AlgebraDocument parse_algebra_document(const Json& doc) {
  detail::require_object(doc, "");
  detail::reject_unknown_keys(doc, "",
                              {"name", "arity", "dim", "roots", "params", "brackets",
                               "brackets2"});
  AlgebraDocument d;
  d.name = detail::require_string(detail::require_field(doc, "", "name"), "/name");
  long long arity = detail::require_integer(detail::require_field(doc, "", "arity"), "/arity");
  if (arity != 2 && arity != 3) throw SchemaError("/arity: must be 2 or 3");
  d.arity = (int)arity;
  long long dim = detail::require_integer(detail::require_field(doc, "", "dim"), "/dim");
  if (dim < 1 || dim > 9) throw SchemaError("/dim: must be between 1 and 9");
  Field f = detail::parse_roots_field(detail::require_field(doc, "", "roots"), "/roots");
  std::vector<std::string> params =
      detail::parse_params_field(detail::require_field(doc, "", "params"), "/params");
  std::set<std::string> pset(params.begin(), params.end());
  d.pair = doc.contains("brackets2");
  const Json& b1 = detail::require_field(doc, "", "brackets");
  if (d.arity == 3) {
    d.ternary = TernaryStructure((int)dim, f, params);
    detail::parse_brackets_array(b1, "/brackets", 3, (int)dim, f, pset,
                                 [&](const std::vector<int>& a, int p, RatFunc v) {
                                   d.ternary.set_chi(a[0] - 1, a[1] - 1, a[2] - 1, p - 1,
                                                     std::move(v));
                                 });
    if (d.pair) {
      d.ternary2 = TernaryStructure((int)dim, f, params);
      detail::parse_brackets_array(doc["brackets2"], "/brackets2", 3, (int)dim, f, pset,
                                   [&](const std::vector<int>& a, int p, RatFunc v) {
                                     d.ternary2.set_chi(a[0] - 1, a[1] - 1, a[2] - 1, p - 1,
                                                        std::move(v));
                                   });
    }
  } else {
    d.binary = BinaryStructure((int)dim, f, params);
    detail::parse_brackets_array(b1, "/brackets", 2, (int)dim, f, pset,
                                 [&](const std::vector<int>& a, int p, RatFunc v) {
                                   d.binary.set_c(a[0] - 1, a[1] - 1, p - 1, std::move(v));
                                 });
    if (d.pair) {
      d.binary2 = BinaryStructure((int)dim, f, params);
      detail::parse_brackets_array(doc["brackets2"], "/brackets2", 2, (int)dim, f, pset,
                                   [&](const std::vector<int>& a, int p, RatFunc v) {
                                     d.binary2.set_c(a[0] - 1, a[1] - 1, p - 1, std::move(v));
                                   });
    }
  }
  return d;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

inline AlgebraDocument parse_algebra_document(const std::string& text) {
  return parse_algebra_document(parse_json_text(text));
}

inline TernaryStructure parse_ternary_algebra(const std::string& text) {
  AlgebraDocument d = parse_algebra_document(text);
  if (d.arity != 3 || d.pair) throw SchemaError("expected a single ternary algebra document");
  return d.ternary;
}

inline BinaryStructure parse_binary_algebra(const std::string& text) {
  AlgebraDocument d = parse_algebra_document(text);
  if (d.arity != 2 || d.pair) throw SchemaError("expected a single binary algebra document");
  return d.binary;
}

namespace detail {

inline Json ternary_brackets_json(const TernaryStructure& T) {
  Json arr = Json::array();
  const int n = T.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Json out = Json::object();
        for (int p = 0; p < n; ++p)
          if (!T.chi(i, j, k, p).is_zero()) out[std::to_string(p + 1)] = T.chi(i, j, k, p).str();
        if (out.empty()) continue;
        Json item = Json::object();
        item["args"] = Json::array({i + 1, j + 1, k + 1});
        item["out"] = std::move(out);
        arr.push_back(std::move(item));
      }
  return arr;
}

inline Json binary_brackets_json(const BinaryStructure& B) {
  Json arr = Json::array();
  const int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Json out = Json::object();
      for (int p = 0; p < n; ++p)
        if (!B.c(i, j, p).is_zero()) out[std::to_string(p + 1)] = B.c(i, j, p).str();
      if (out.empty()) continue;
      Json item = Json::object();
      item["args"] = Json::array({i + 1, j + 1});
      item["out"] = std::move(out);
      arr.push_back(std::move(item));
    }
  return arr;
}

}  // namespace detail

inline Json algebra_document_to_json(const AlgebraDocument& d) {
  Json j = Json::object();
  j["name"] = d.name;
  j["arity"] = d.arity;
  j["dim"] = d.dim();
  j["roots"] = d.field().roots();
  j["params"] = d.params();
  if (d.arity == 3) {
    j["brackets"] = detail::ternary_brackets_json(d.ternary);
    if (d.pair) j["brackets2"] = detail::ternary_brackets_json(d.ternary2);
  } else {
    j["brackets"] = detail::binary_brackets_json(d.binary);
    if (d.pair) j["brackets2"] = detail::binary_brackets_json(d.binary2);
  }
  return j;
}

inline std::string emit_algebra_document(const AlgebraDocument& d) {
  return emit_json(algebra_document_to_json(d));
}

// ---------------------------------------------------------------------------
// Operator documents
// ---------------------------------------------------------------------------
//
// Schema: { name, class, weight: "expr", variant: "paper|standard",
//           matrices: [ [ ["expr",…], … ] ], params: [..] } plus an optional
// "roots" array (same meaning as in algebra documents) so that matrix entries
// may use i and sqrt(k); emission always writes it.

struct OperatorDocument {
  std::string name;
  OpClass cls = OpClass::centroid;
  Field field;
  std::vector<std::string> params;
  RatFunc weight;
  NijenhuisVariant variant = NijenhuisVariant::literal;
  std::vector<Mat> matrices;

  int dim() const { return matrices.empty() ? 0 : matrices.front().n(); }
};

inline OperatorDocument parse_operator_document(const Json& doc) {
  detail::require_object(doc, "");
  detail::reject_unknown_keys(
      doc, "", {"name", "class", "weight", "variant", "matrices", "params", "roots"});
  OperatorDocument d;
  d.name = detail::require_string(detail::require_field(doc, "", "name"), "/name");
  d.cls = opclass_from_name(
      detail::require_string(detail::require_field(doc, "", "class"), "/class"));
  if (doc.contains("roots")) d.field = detail::parse_roots_field(doc["roots"], "/roots");
  d.params = detail::parse_params_field(detail::require_field(doc, "", "params"), "/params");
  std::set<std::string> pset(d.params.begin(), d.params.end());
  d.weight = detail::parse_coeff(
      d.field, pset,
      detail::require_string(detail::require_field(doc, "", "weight"), "/weight"), "/weight");
  if (!opclass_uses_weight(d.cls) && !d.weight.is_zero())
    throw SchemaError(std::string("/weight: class ") + opclass_name(d.cls) +
                      " does not take a weight");
  d.variant = variant_from_name(
      detail::require_string(detail::require_field(doc, "", "variant"), "/variant"));
  const Json& mats = detail::require_array(detail::require_field(doc, "", "matrices"),
                                           "/matrices");
  if (mats.empty()) throw SchemaError("/matrices: expected at least one matrix");
  int n = -1;
  for (std::size_t m = 0; m < mats.size(); ++m) {
    const std::string mp = "/matrices/" + std::to_string(m);
    const Json& rows = detail::require_array(mats[m], mp);
    if (n == -1) {
      n = (int)rows.size();
      if (n < 1 || n > 9) throw SchemaError(mp + ": matrix dimension must be between 1 and 9");
    }
    if ((int)rows.size() != n)
      throw SchemaError(mp + ": expected " + std::to_string(n) + " rows");
    Mat mat(d.field, n);
    for (int r = 0; r < n; ++r) {
      const std::string rp = mp + "/" + std::to_string(r);
      const Json& row = detail::require_array(rows[(std::size_t)r], rp);
      if ((int)row.size() != n)
        throw SchemaError(rp + ": expected " + std::to_string(n) + " entries");
      for (int c = 0; c < n; ++c) {
        const std::string ep = rp + "/" + std::to_string(c);
        mat.at(r, c) =
            detail::parse_coeff(d.field, pset, detail::require_string(row[(std::size_t)c], ep),
                                ep);
      }
    }
    d.matrices.push_back(std::move(mat));
  }
  return d;
}

inline OperatorDocument parse_operator_document(const std::string& text) {
  return parse_operator_document(parse_json_text(text));
}

inline Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.n(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json operator_document_to_json(const OperatorDocument& d) {
  Json j = Json::object();
  j["name"] = d.name;
  j["class"] = opclass_name(d.cls);
  j["weight"] = d.weight.str();
  j["variant"] = variant_name(d.variant);
  j["params"] = d.params;
  j["roots"] = d.field.roots();
  Json mats = Json::array();
  for (const Mat& m : d.matrices) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  return j;
}

inline std::string emit_operator_document(const OperatorDocument& d) {
  return emit_json(operator_document_to_json(d));
}

// ---------------------------------------------------------------------------
// Report documents
// ---------------------------------------------------------------------------

inline Json residual_report_to_json(const ResidualReport& r) {
  Json j = Json::object();
  j["identically_zero"] = r.identically_zero;
  Json entries = Json::array();
  for (const ResidualEntry& e : r.entries) {
    Json je = Json::object();
    je["args"] = e.args;
    je["coord"] = e.coord;
    je["eq"] = e.eq;
    je["value"] = e.value.str();
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["side_conditions"] = r.side_conditions;
  return j;
}

inline std::string residual_report_text(const ResidualReport& r) {
  std::string s;
  if (r.identically_zero) {
    s += "residual: identically zero\n";
  } else {
    s += "residual: " + std::to_string(r.entries.size()) + " nonzero entr" +
         (r.entries.size() == 1 ? "y" : "ies") + "\n";
    for (const ResidualEntry& e : r.entries) {
      s += "  at (";
      for (std::size_t a = 0; a < e.args.size(); ++a)
        s += (a ? "," : "") + std::to_string(e.args[a]);
      s += ") coord " + std::to_string(e.coord);
      if (!e.eq.empty()) s += " [" + e.eq + "]";
      s += ": " + e.value.str() + "\n";
    }
  }
  for (const std::string& c : r.side_conditions) s += "  valid where " + c + " != 0\n";
  return s;
}

inline Json lift_report_to_json(const LiftReport& r) {
  Json j = Json::object();
  j["status"] = r.status;
  j["precondition"] = residual_report_to_json(r.precondition);
  j["conclusion"] = residual_report_to_json(r.conclusion);
  return j;
}

inline std::string lift_report_text(const LiftReport& r) {
  std::string s = "lift: " + r.status + "\n";
  s += "precondition " + residual_report_text(r.precondition);
  s += "conclusion " + residual_report_text(r.conclusion);
  return s;
}

namespace detail {

// Parses the deterministic witness rendering "w=2 [[1,0],[0,1]] | …" back
// into structured form so reports carry matrices as integer arrays.
inline Json witness_to_json(const std::string& s) {
  Json w = Json::object();
  std::size_t at = 0;
  if (s.rfind("w=", 0) == 0) {
    std::size_t sp = s.find(' ');
    w["weight"] = std::stoll(s.substr(2, sp - 2));
    at = sp + 1;
  }
  Json mats = Json::array();
  auto skip = [&] {
    while (at < s.size() && (s[at] == ' ' || s[at] == '|')) ++at;
  };
  skip();
  while (at < s.size() && s[at] == '[') {
    ++at;  // matrix '['
    Json rows = Json::array();
    while (at < s.size() && s[at] != ']') {
      if (s[at] == ',') {
        ++at;
        continue;
      }
      ++at;  // row '['
      Json row = Json::array();
      while (at < s.size() && s[at] != ']') {
        if (s[at] == ',') {
          ++at;
          continue;
        }
        std::size_t e = s.find_first_of(",]", at);
        row.push_back(std::stoll(s.substr(at, e - at)));
        at = e;
      }
      ++at;  // row ']'
      rows.push_back(std::move(row));
    }
    ++at;  // matrix ']'
    mats.push_back(std::move(rows));
    skip();
  }
  w["matrices"] = std::move(mats);
  w["text"] = s;
  return w;
}

}  // namespace detail

inline Json completeness_report_to_json(const CompletenessReport& r) {
  Json j = Json::object();
  j["class"] = opclass_name(r.cls);
  j["prime"] = r.p;
  j["weights"] = r.weights;
  j["family_points"] = r.family_points;
  j["skipped_points"] = r.skipped_points;
  j["family_count"] = r.family_count;
  j["all_count"] = r.all_count;
  j["contained"] = r.contained;
  j["complete"] = r.complete;
  Json ex = Json::array();
  for (const std::string& s : r.extraneous) ex.push_back(detail::witness_to_json(s));
  j["extraneous"] = std::move(ex);
  Json mi = Json::array();
  for (const std::string& s : r.missing) mi.push_back(detail::witness_to_json(s));
  j["missing"] = std::move(mi);
  return j;
}

inline std::string completeness_report_text(const CompletenessReport& r) {
  std::string s = std::string("completeness of class ") + opclass_name(r.cls) + " over F_" +
                  std::to_string(r.p) + "\n";
  s += "  contained: " + std::string(r.contained ? "yes" : "no") + "\n";
  s += "  complete: " + std::string(r.complete ? "yes" : "no") + "\n";
  s += "  family solutions |S_F| = " + std::to_string(r.family_count) +
       ", all solutions |S_all| = " + std::to_string(r.all_count) + "\n";
  s += "  family points visited: " + std::to_string(r.family_points) +
       ", skipped: " + std::to_string(r.skipped_points) + "\n";
  for (const std::string& m : r.extraneous) s += "  extraneous: " + m + "\n";
  for (const std::string& m : r.missing) s += "  missing: " + m + "\n";
  return s;
}

inline Json fp_solutions_to_json(const FpSolutionSet& s) {
  Json j = Json::object();
  j["class"] = opclass_name(s.cls);
  j["prime"] = s.p;
  j["dim"] = s.dim;
  j["tuple_size"] = s.tuple_size;
  j["weights"] = s.weights;
  j["candidates"] = s.candidates;
  j["total"] = s.total();
  Json sols = Json::object();
  for (const auto& [w, v] : s.solutions) {
    Json arr = Json::array();
    for (const auto& digits : v) {
      Json tup = Json::array();
      std::size_t at = 0;
      for (int t = 0; t < s.tuple_size; ++t) {
        Json m = Json::array();
        for (int r = 0; r < s.dim; ++r) {
          Json row = Json::array();
          for (int c = 0; c < s.dim; ++c) row.push_back((int)digits[at++]);
          m.push_back(std::move(row));
        }
        tup.push_back(std::move(m));
      }
      arr.push_back(std::move(tup));
    }
    sols[std::to_string(w)] = std::move(arr);
  }
  j["solutions"] = std::move(sols);
  return j;
}

inline std::string fp_solutions_text(const FpSolutionSet& s) {
  std::string out = std::string("solutions of class ") + opclass_name(s.cls) + " over F_" +
                    std::to_string(s.p) + ": " + std::to_string(s.total()) + " of " +
                    std::to_string(s.candidates) + " candidates\n";
  for (const auto& [w, v] : s.solutions) {
    if (opclass_uses_weight(s.cls))
      out += "  weight " + std::to_string(w) + ": " + std::to_string(v.size()) + "\n";
    for (const auto& digits : v)
      out += "  " + detail::render_candidate(digits, s.tuple_size, s.dim, s.cls, w) + "\n";
  }
  return out;
}

}  // namespace tleib
