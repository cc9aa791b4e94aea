#pragma once
// Built-in catalog: ternary Leibniz algebras and compatible pairs in
// dimensions 2 and 3, each with tables of operator families (derivations,
// averaging operators, Rota-Baxter operators, Nijenhuis operators, Reynolds
// operators, centroid elements), plus a conformance engine that re-checks
// every table row against the defining identities and reports the outcome.
//
// Table data is transcribed verbatim from the source classification tables,
// including apparent anomalies; those carry a transcription note and are
// audited like every other row.  The engine never repairs an entry silently.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <tleib/document.hpp>
#include <tleib/fpenum.hpp>
#include <tleib/identities.hpp>
#include <tleib/invariants.hpp>
#include <tleib/linear.hpp>
#include <tleib/operators.hpp>

namespace tleib {

enum class EntryKind { algebra, compatible_pair, operator_table };

inline const char* entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::algebra: return "algebra";
    case EntryKind::compatible_pair: return "compatible-pair";
    case EntryKind::operator_table: return "operator-table";
  }
  return "?";
}

inline EntryKind entry_kind_from_name(const std::string& s) {
  if (s == "algebra") return EntryKind::algebra;
  if (s == "compatible-pair") return EntryKind::compatible_pair;
  if (s == "operator-table") return EntryKind::operator_table;
  throw SchemaError("unknown entry kind '" + s + "'");
}

// Every catalog structure lives over one field so documents and operator
// tuples combine freely: Q(i, sqrt(2), sqrt(7)) covers all table entries.
inline const Field& catalog_field() {
  static const Field f = make_field({-1, 2, 7});
  return f;
}

struct OperatorFamilyEntry {
  std::string id;         // one-letter family label: "a", "b", ...
  std::vector<Mat> mats;  // symbolic matrix tuple (all shipped tables are unary)
  std::string note;       // transcription annotation, if any
};

struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::algebra;
  std::string source;  // where the entry sits in the catalog's own numbering
  std::string note;    // transcription annotation, if any
  int dimension = 0;

  AlgebraDocument doc;  // algebra and compatible-pair entries only

  // operator-table entries only
  std::string algebra_id;
  OpClass cls = OpClass::centroid;
  std::vector<OperatorFamilyEntry> families;

  int dim() const { return dimension; }
};

// Table segments use a stable slug per operator class; the derivation tables
// are stored under the weight-uniform convention (see derivation_weighted).
inline std::string table_slug(OpClass c) {
  return c == OpClass::derivation_weighted ? "derivations" : opclass_name(c);
}

inline OpClass table_class_from_slug(const std::string& slug) {
  if (slug == "derivations") return OpClass::derivation_weighted;
  return opclass_from_name(slug);
}

namespace detail {

// ---------------------------------------------------------------------------
// Spec-string parsers used by the embedded data below.
// ---------------------------------------------------------------------------

// Identifiers occurring in a spec string, minus the reserved "i" and "sqrt".
inline std::set<std::string> collect_identifiers(const std::string& text) {
  std::set<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = (unsigned char)text[i];
    if (std::isalpha(c) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum((unsigned char)text[j]) || text[j] == '_'))
        ++j;
      std::string tok = text.substr(i, j - i);
      if (tok != "i" && tok != "sqrt") out.insert(tok);
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace((unsigned char)c)) out += c;
  return out;
}

// Bracket lists are written "ijk:p=expr[,p=expr]; ..." with 1-based single
// digits.  Assignments apply in order, so a repeated coordinate overwrites —
// the same convention the document parser uses.
inline void apply_bracket_spec(TernaryStructure& t, const std::string& spec) {
  const std::set<std::string> params(t.params().begin(), t.params().end());
  std::string s = strip_spaces(spec);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    std::string chunk = s.substr(pos, end - pos);
    pos = end + 1;
    if (chunk.empty()) continue;
    if (chunk.size() < 5 || chunk[3] != ':')
      throw ParseError("malformed bracket chunk '" + chunk + "'");
    int idx[3];
    for (int a = 0; a < 3; ++a) {
      if (!std::isdigit((unsigned char)chunk[a]))
        throw ParseError("malformed bracket chunk '" + chunk + "'");
      idx[a] = chunk[a] - '1';
      if (idx[a] < 0 || idx[a] >= t.dim())
        throw ParseError("bracket index out of range in '" + chunk + "'");
    }
    std::size_t ap = 4;
    while (ap < chunk.size()) {
      std::size_t comma = chunk.find(',', ap);
      if (comma == std::string::npos) comma = chunk.size();
      std::string assign = chunk.substr(ap, comma - ap);
      ap = comma + 1;
      if (assign.size() < 3 || assign[1] != '=' ||
          !std::isdigit((unsigned char)assign[0]))
        throw ParseError("malformed bracket assignment '" + assign + "'");
      int p = assign[0] - '1';
      if (p < 0 || p >= t.dim())
        throw ParseError("bracket output index out of range in '" + assign + "'");
      t.set_chi(idx[0], idx[1], idx[2], p,
                parse_expr(t.field(), params, assign.substr(2)));
    }
  }
}

// Matrix literals are written "[[a,b],[c,d]]" with exact-arithmetic entries;
// commas split entries only at parenthesis depth zero.
inline Mat parse_matrix_literal(const Field& f, const std::set<std::string>& params,
                                const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.size() < 4 || s.front() != '[' || s.back() != ']')
    throw ParseError("malformed matrix literal '" + text + "'");
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 1;
  while (i < s.size() && s[i] == '[') {
    ++i;
    std::vector<std::string> row;
    std::string cur;
    int depth = 0;
    while (i < s.size() && (s[i] != ']' || depth > 0)) {
      char c = s[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        row.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
      ++i;
    }
    if (i >= s.size()) throw ParseError("unterminated matrix row in '" + text + "'");
    row.push_back(cur);
    rows.push_back(std::move(row));
    ++i;  // closing ']' of the row
    if (i < s.size() && s[i] == ',') ++i;
  }
  if (i + 1 != s.size() || s[i] != ']')
    throw ParseError("malformed matrix literal '" + text + "'");
  const int n = (int)rows.size();
  Mat m(f, n);
  for (int r = 0; r < n; ++r) {
    if ((int)rows[r].size() != n)
      throw ParseError("matrix literal is not square: '" + text + "'");
    for (int c = 0; c < n; ++c) m.at(r, c) = parse_expr(f, params, rows[r][c]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Embedded data.
// ---------------------------------------------------------------------------

struct AlgSpec {
  const char* id;
  int dim;
  const char* b1;
  const char* b2;  // nullptr for single algebras
  const char* note;
};

inline const std::vector<AlgSpec>& algebra_specs() {
  static const std::vector<AlgSpec> v = {
      // --- ternary classification, dim 2 ---
      {"T2.L1", 2, "111:2=1", nullptr, ""},
      {"T2.L2", 2, "122:1=1; 222:1=1", nullptr, ""},
      // --- ternary classification, dim 3 ---
      {"T3.L1", 3,
       "111:3=1; 121:3=1; 211:3=1; 212:3=1; 221:3=1; 222:3=1/2", nullptr, ""},
      {"T3.L2", 3, "113:2=1; 131:2=1; 133:2=1; 313:2=1; 333:2=1", nullptr, ""},
      {"T3.L3", 3, "122:1=1,3=1; 222:1=1,3=1; 322:1=1,3=1", nullptr, ""},
      {"T3.L4a", 3, "211:2=1; 213:2=alpha; 231:2=1; 233:2=1", nullptr, ""},
      {"T3.L5", 3, "133:1=1,2=1; 233:1=1,2=1; 333:1=1,2=1", nullptr, ""},
      {"T3.L6", 3,
       "222:1=1; 223:1=1; 232:1=1; 233:1=1; 323:1=1; 333:1=1", nullptr, ""},
      {"T3.L7", 3, "211:2=1; 213:2=1; 231:2=1; 233:2=1", nullptr,
       "coincides with T3.L4a at alpha=1"},
      {"T3.L8a", 3,
       "131:2=1; 133:2=1; 311:2=1; 313:2=1; 331:2=1; 333:2=2*alpha", nullptr,
       ""},
      // --- compatible-pair classification, dim 2 ---
      {"CT2.L1", 2, "111:2=1", "211:2=1", ""},
      {"CT2.L2a", 2, "111:2=1; 211:2=alpha", "111:2=1", ""},
      {"CT2.L3", 2, "122:1=1", "122:1=1; 222:1=1", ""},
      // --- compatible-pair classification, dim 3 ---
      {"CT3.L1", 3, "111:3=1; 211:3=1; 311:3=1", "111:3=1; 211:2=1; 311:2=1",
       ""},
      {"CT3.L2a", 3, "121:3=1; 122:3=alpha; 221:3=1",
       "121:3=1; 211:3=1; 212:3=1; 222:3=1", ""},
      {"CT3.L3a", 3, "133:1=2*alpha; 233:2=1; 333:2=1", "133:2=1; 333:2=1",
       ""},
      {"CT3.L4", 3, "131:2=1; 311:2=1; 313:2=1/2; 313:2=1",
       "113:2=1; 133:2=1; 333:2=1",
       "first bracket transcribed verbatim including a repeated (3,1,3) "
       "assignment; the later assignment wins"},
      {"CT3.L5", 3, "221:1=1; 222:3=1; 322:1=-1,3=1",
       "122:3=1; 222:3=1; 322:3=1", ""},
      {"CT3.L6a", 3, "213:2=1; 231:2=1; 233:2=1", "211:2=1; 233:2=alpha", ""},
      {"CT3.L7", 3, "133:1=1; 233:1=1; 333:2=1",
       "133:2=1; 233:1=1,2=1; 333:1=1,2=1", ""},
      {"CT3.L8", 3, "131:2=1; 133:2=1; 311:2=1",
       "111:2=1; 133:2=1; 313:2=1; 333:2=1", ""},
      {"CT3.L9a", 3, "122:1=1,3=-1; 222:1=1; 322:1=1",
       "122:1=1,3=alpha; 222:1=1,3=1; 322:3=1", ""},
  };
  return v;
}

struct FamSpec {
  const char* fam;
  const char* mat;
  const char* note;
};

struct TabSpec {
  const char* algebra;
  const char* slug;
  const char* note;
  std::vector<FamSpec> families;
};

inline const std::vector<TabSpec>& table_specs() {
  static const std::vector<TabSpec> v = {
      // ----------------------------------------------------------------- //
      // Derivations (stored weight-uniformly; audited at weight lambda and 0)
      // ----------------------------------------------------------------- //
      {"T2.L1", "derivations", "", {{"a", "[[0,0],[d21,0]]", ""}}},
      {"T2.L2", "derivations", "", {{"a", "[[d11,d11],[0,0]]", ""}}},
      {"T3.L1", "derivations", "",
       {{"a", "[[d11,0,d13],[0,d22,0],[d31,0,-d13]]", ""}}},
      {"T3.L2", "derivations", "",
       {{"a", "[[0,0,0],[d21,0,d23],[0,0,0]]", ""}}},
      {"T3.L3", "derivations", "",
       {{"a", "[[d33,d12,d13],[0,0,0],[d31,d13-d12+d33,d33]]", ""}}},
      {"T3.L4a", "derivations", "",
       {{"a", "[[0,0,0],[0,d22,0],[0,0,0]]", ""}}},
      {"T3.L5", "derivations", "",
       {{"a", "[[d11,d12,d13],[d21,d11,d11+d12-d13],[0,0,0]]", ""}}},
      {"T3.L6", "derivations", "",
       {{"a", "[[0,d12,d13],[0,0,0],[0,0,0]]", ""}}},
      {"T3.L7", "derivations", "",
       {{"a", "[[d11,0,d13],[0,d22,0],[-d11,0,-d13]]", ""}}},
      {"T3.L8a", "derivations", "",
       {{"a", "[[0,0,0],[d21,0,d23],[0,0,0]]", ""}}},
      {"CT2.L1", "derivations", "", {{"a", "[[0,0],[0,0]]", ""}}},
      {"CT2.L2a", "derivations", "", {{"a", "[[0,0],[0,0]]", ""}}},
      {"CT2.L3", "derivations", "", {{"a", "[[0,0],[0,0]]", ""}}},
      {"CT3.L1", "derivations", "",
       {{"a", "[[0,0,0],[0,0,0],[0,0,0]]", ""}}},
      {"CT3.L2a", "derivations", "",
       {{"a", "[[0,0,0],[0,0,0],[d31,d32,0]]", ""}}},
      {"CT3.L3a", "derivations", "",
       {{"a", "[[0,0,0],[0,0,0],[0,0,0]]", ""}}},
      {"CT3.L4", "derivations", "",
       {{"a", "[[0,0,0],[d21,0,d23],[0,0,0]]", ""}}},
      {"CT3.L5", "derivations", "",
       {{"a", "[[0,0,0],[0,0,0],[0,0,0]]", ""}}},
      {"CT3.L6a", "derivations", "",
       {{"a", "[[0,0,0],[0,0,0],[0,0,0]]", ""}}},
      {"CT3.L7", "derivations", "",
       {{"a", "[[0,0,0],[0,0,0],[0,0,0]]", ""}}},
      {"CT3.L8", "derivations", "",
       {{"a", "[[0,0,0],[d21,0,d23],[0,0,0]]", ""}}},
      {"CT3.L9a", "derivations", "",
       {{"a", "[[0,0,0],[0,0,0],[0,0,0]]", ""}}},
      // ----------------------------------------------------------------- //
      // Averaging operators
      // ----------------------------------------------------------------- //
      {"T2.L1", "averaging", "",
       {{"a", "[[th11,0],[th21,th11]]", ""},
        {"b", "[[0,0],[th21,th22]]", ""}}},
      {"T2.L2", "averaging", "",
       {{"a", "[[th11,0],[0,th11]]", ""},
        {"b", "[[th11,th12],[0,0]]", ""},
        {"c", "[[0,th12],[0,-th12]]", ""}}},
      {"T3.L1", "averaging", "",
       {{"a", "[[th11,0,0],[0,th11,0],[0,0,th11]]", ""},
        {"b", "[[0,0,0],[0,0,0],[th31,th32,th33]]", ""},
        {"c", "[[th11,0,0],[0,th11,0],[th31,th32,th11]]", ""}}},
      {"T3.L2", "averaging", "",
       {{"a", "[[th33,0,0],[th21,th33,th23],[0,0,th33]]", ""},
        {"b", "[[th11,0,th13],[th21,0,th23],[0,0,0]]", ""},
        {"c", "[[0,0,0],[th21,th22,th23],[0,0,0]]", ""},
        {"d", "[[0,0,th13],[th21,0,th23],[0,0,0]]", ""}}},
      {"T3.L3", "averaging", "",
       {{"a", "[[th22,0,0],[0,th22,0],[0,0,th22]]", ""},
        {"b", "[[th11,0,th13],[0,0,0],[0,0,0]]", ""},
        {"c", "[[0,0,0],[0,0,0],[0,th32,0]]",
         "final row truncated in the source table; the missing entry is "
         "transcribed as 0"}}},
      {"T3.L4a", "averaging", "",
       {{"a", "[[th22,0,0],[0,th22,0],[0,0,th22]]", ""},
        {"b", "[[0,0,0],[th21,th22,th23],[0,0,0]]", ""},
        {"c", "[[0,0,0],[0,th22,0],[0,0,0]]", ""},
        {"d", "[[th11,0,th13],[0,0,0],[th31,0,th33]]", ""}}},
      {"T3.L5", "averaging", "",
       {{"a", "[[th11,th12,th13],[th21,th22,th23],[0,0,0]]", ""},
        {"b",
         "[[th11,-th11,th13],[th21,-th21,th23],"
         "[-th11-th21,-th11+th21,-th13*th23]]",
         "the (3,3) entry is the literal product -th13*th23"},
        {"c", "[[th11,th12,th13],[th21,th11,-th13],[0,0,th11+th12]]", ""}}},
      {"T3.L6", "averaging", "",
       {{"a", "[[th33,0,0],[0,th33,0],[0,0,th33]]", ""},
        {"b", "[[th33,th12,th13],[0,th33,0],[0,0,th33]]", ""},
        {"c", "[[th11,th12,th13],[0,0,0],[0,0,0]]", ""},
        {"d", "[[0,-th32,0],[0,-th32,0],[0,th23,0]]",
         "the (3,2) entry reads th23 while the entries above it read -th32; "
         "transcribed verbatim"}}},
      {"T3.L7", "averaging", "",
       {{"a", "[[th11,th12,th13],[th21,th22,th23],[-th11,-th12,-th13]]", ""},
        {"b", "[[th11,0,th13],[0,th22,0],[th22-th11,0,th22-th13]]", ""},
        {"c", "[[th11,0,th13],[0,0,0],[th31,0,th33]]", ""}}},
      {"T3.L8a", "averaging", "",
       {{"a", "[[th33,0,0],[th21,th33,th23],[0,0,th33]]", ""},
        {"b", "[[th11,0,0],[th21,0,th23],[0,0,0]]", ""},
        {"c", "[[th11,0,th13],[th21,0,th23],[0,0,0]]", ""},
        {"d", "[[0,0,0],[th21,th22,th23],[0,0,0]]", ""}}},
      {"CT2.L1", "averaging", "",
       {{"a", "[[0,0],[th21,th22]]", ""},
        {"b", "[[th11,0],[0,0]]", ""},
        {"c", "[[th11,0],[0,th11]]", ""}}},
      {"CT2.L2a", "averaging", "",
       {{"a", "[[th11,0],[th21,th11]]", ""},
        {"b", "[[0,0],[th21,th22]]", ""}}},
      {"CT2.L3", "averaging", "",
       {{"a", "[[th11,th12],[0,0]]", ""},
        {"b", "[[th11,0],[0,th11]]", ""}}},
      {"CT3.L1", "averaging", "",
       {{"a", "[[0,0,0],[th21,th22,0],[th31,th32,0]]", ""},
        {"b", "[[th11,0,0],[th21,th11,0],[-th21,0,th11]]", ""}}},
      {"CT3.L2a", "averaging", "",
       {{"a", "[[th11,th12,0],[0,0,0],[th31,th32,0]]", ""},
        {"b", "[[0,0,0],[0,0,0],[th31,th32,th33]]", ""},
        {"c", "[[th22,0,0],[0,th22,0],[th31,th32,th22]]", ""},
        {"d", "[[0,0,0],[0,0,0],[th31,th32,0]]", ""}}},
      {"CT3.L3a", "averaging", "",
       {{"a", "[[th33,0,0],[0,th33,0],[0,0,th33]]", ""},
        {"b", "[[th11,th12,th13],[th21,th22,th23],[0,0,0]]", ""}}},
      {"CT3.L4", "averaging", "",
       {{"a", "[[th11,0,th13],[th21,0,th23],[0,0,0]]", ""},
        {"b", "[[0,0,th13],[th21,0,th23],[0,0,0]]", ""},
        {"c", "[[0,0,0],[th21,th22,th23],[0,0,0]]", ""},
        {"d", "[[th11,0,0],[0,th11,th23],[0,0,th11]]", ""}}},
      {"CT3.L5", "averaging", "",
       {{"a", "[[th11,th12,th13],[0,0,0],[th31,th32,th33]]", ""},
        {"b", "[[0,0,0],[0,th22,0],[th31,-th22,th22]]", ""},
        {"c", "[[th22,0,0],[0,th22,0],[0,0,th22]]", ""}}},
      {"CT3.L6a", "averaging", "",
       {{"a", "[[th11,0,th13],[0,0,0],[th31,0,th33]]", ""},
        {"b", "[[0,0,0],[th21,th22,th23],[0,0,0]]", ""},
        {"c", "[[0,0,0],[th21,0,th23],[0,0,0]]", ""},
        {"d", "[[th33,0,0],[0,th33,0],[0,0,th33]]", ""}}},
      {"CT3.L7", "averaging", "",
       {{"a", "[[th11,0,0],[0,th11,0],[0,0,0]]", ""},
        {"b", "[[0,0,0],[0,th22,0],[0,0,0]]", ""},
        {"c", "[[th11,0,0],[0,0,0],[0,0,th11]]", ""},
        {"d", "[[th11,0,0],[0,th11,0],[0,0,th11]]", ""}}},
      {"CT3.L8", "averaging", "",
       {{"a", "[[0,0,0],[th21,th22,th23],[0,0,0]]", ""},
        {"b", "[[0,0,0],[th21,0,th23],[0,0,0]]", ""},
        {"c", "[[th33,0,0],[0,th33,0],[0,0,th33]]", ""}}},
      {"CT3.L9a", "averaging", "",
       {{"a", "[[th11,th12,th13],[0,0,0],[th31,th32,th33]]", ""},
        {"b", "[[th22,0,0],[0,th22,0],[0,0,th22]]", ""}}},
      // ----------------------------------------------------------------- //
      // Rota-Baxter operators (weight lambda, symbolic)
      // ----------------------------------------------------------------- //
      {"T2.L1", "rota-baxter", "",
       {{"a",
         "[[r11,0],[r11*r11*r11-lambda*lambda*r22-lambda*r11*r22"
         "-3*r11*r11*r22,r22]]",
         "the (2,1) entry is transcribed from an ambiguously typeset "
         "polynomial"},
        {"b",
         "[[i*(i*lambda+sqrt(2)*lambda)/3,0],"
         "[r21,(lambda+2*i*sqrt(2)*lambda)/9]]",
         ""},
        {"c", "[[0,0],[r21,0]]", ""}}},
      {"T2.L2", "rota-baxter", "",
       {{"a",
         "[[(-lambda*lambda-lambda*r22+r22*r22)/(3*r22),"
         "(-lambda*lambda-lambda*r22-2*r22*r22)/(3*r22)],[0,r22]]",
         ""},
        {"b",
         "[[(lambda*lambda*r22+3*lambda*r22*r22+r22*r22*r22)/"
         "(lambda*(-lambda+2*r22)),(-lambda+r22*r22)/lambda],[0,r22]]",
         ""},
        {"c", "[[0,r12],[0,0]]", ""},
        {"d", "[[0,-r22],[0,r22]]", ""}}},
      {"T3.L1", "rota-baxter", "",
       {{"a", "[[0,r12,r13],[0,0,r23],[r31,r32,r33]]", ""},
        {"b", "[[r11,0,r13],[-r11,0,r23],[r31,r32,r33]]", ""},
        {"c", "[[r11,r12,r13],[r21,r22,r23],[r31,r32,0]]", ""},
        {"d", "[[0,0,r13],[0,0,r23],[r31,r32,r33]]", ""}}},
      {"T3.L2", "rota-baxter", "",
       {{"a", "[[r11,r12,r13],[r21,0,r23],[r31,r32,r33]]", ""},
        {"b", "[[r11,r12,r13],[r21,r22,-r12-r22],[r31,r32,r33]]", ""},
        {"c", "[[0,r12,-r33],[r21,r22,r23],[r31,r32,r33]]", ""},
        {"d", "[[0,r12,0],[r21,r22,r23],[0,r32,0]]", ""},
        {"e", "[[0,r12,0],[r21,0,r23],[r31,r32,0]]", ""}}},
      {"T3.L3", "rota-baxter", "",
       {{"a", "[[r11,r12,-r11],[0,0,0],[r31,r23,r33]]",
         "the (3,2) entry is named r23 in the source table"},
        {"b", "[[r11,r12,-r11],[r33-r11,r22,r11-r33],[-r33,-r12-r22,r33]]",
         ""},
        {"c", "[[-r31,r12,r13],[0,r22,0],[r31,-r12-r22,r33]]", ""},
        {"d", "[[r11,r12,-r11],[0,r22,0],[r31,-r22-r22,-r31]]",
         "the (3,2) entry is transcribed verbatim as -r22-r22"},
        {"e", "[[-r31,r12,r13],[0,r22,0],[r31,-2*r22,-r31]]", ""}}},
      {"T3.L4a", "rota-baxter", "",
       {{"a", "[[r11,0,0],[r21,0,r11-r21],[alpha*r11,0,0]]", ""},
        {"b", "[[r11,0,r13],[0,0,0],[r31,0,r33]]", ""},
        {"c", "[[0,0,0],[r21,0,r31-r21],[r31,0,r33]]", ""},
        {"d", "[[r11,0,0],[r21,0,r11-r21],[0,0,r11]]", ""},
        {"e", "[[0,0,r13],[r21,0,-r13-r21],[0,0,-r13]]", ""}}},
      {"T3.L5", "rota-baxter", "",
       {{"a", "[[r11,-r11,r33],[r11,-r11,r33],[0,0,r33]]", ""},
        {"b", "[[r11,-r11,r13],[-r11,r11,-r13-r33],[0,0,r33]]", ""},
        {"c", "[[r11,r12,r13],[r21,r22,r23],[0,0,0]]", ""},
        {"d",
         "[[r11,-r22,-2*(r11-r22)],[-r11,r22,2*(r11-r22)],[0,0,0]]", ""}}},
      {"T3.L6", "rota-baxter", "",
       {{"a", "[[0,0,r13],[0,0,0],[0,0,0]]", ""},
        {"b", "[[0,0,0],[0,0,-r33],[0,0,r33]]", ""},
        {"c", "[[r11,0,0],[r21,0,r11-r21],[0,0,0]]", ""},
        {"d",
         "[[0,0,0],[0,(-1/2+i/2)*r32,(-1/2+i/2)*r33],[0,r32,r33]]", ""}}},
      {"T3.L7", "rota-baxter", "",
       {{"a", "[[r11,0,r13],[0,0,0],[r31,0,r33]]", ""},
        {"b", "[[r11,0,r13],[r21,0,r23],[-r11,0,-r13]]", ""},
        {"c", "[[r11,r12,r13],[0,lambda,0],[-r11,-r12,-r13]]", ""},
        {"d",
         "[[r11,r12,r13],[-4*lambda,9*lambda,-4*lambda],"
         "[-r11,-r12,lambda-r13]]",
         ""}}},
      {"T3.L8a", "rota-baxter", "",
       {{"a", "[[r33,0,0],[r21,0,r33-r21],[0,0,r33]]", ""},
        {"b", "[[r11,0,0],[r21,0,r11-r21],[0,0,0]]", ""},
        {"c", "[[-alpha*r31,0,0],[r21,0,-r21-alpha*r31],[r31,0,0]]", ""},
        {"d", "[[0,0,0],[r21,r21,r23],[0,0,0]]", ""},
        {"e", "[[r11,0,r13],[r21,0,r23],[0,0,0]]", ""}}},
      {"CT2.L1", "rota-baxter", "", {{"a", "[[0,0],[0,r22]]", ""}}},
      {"CT2.L2a", "rota-baxter", "",
       {{"a",
         "[[r11,0],[(-lambda*lambda-lambda*r11-2*r11*r11)/(lambda+r11),"
         "r11]]",
         ""},
        {"b", "[[0,0],[r21,0]]", ""}}},
      {"CT2.L3", "rota-baxter", "", {{"a", "[[0,r12],[0,0]]", ""}}},
      {"CT3.L1", "rota-baxter", "",
       {{"a", "[[0,0,0],[r21,0,0],[r31,r32,0]]", ""}}},
      {"CT3.L2a", "rota-baxter", "",
       {{"a", "[[r11,r12,0],[0,0,0],[r31,r32,0]]", ""},
        {"b", "[[0,r12,0],[0,0,0],[r31,r32,0]]", ""}}},
      {"CT3.L3a", "rota-baxter", "",
       {{"a", "[[0,0,0],[r21,0,0],[0,0,0]]", ""}}},
      {"CT3.L4", "rota-baxter", "",
       {{"a", "[[0,0,r13],[r21,0,r23],[0,0,0]]", ""},
        {"b", "[[0,0,0],[r21,0,r23],[0,0,0]]", ""}}},
      {"CT3.L5", "rota-baxter", "",
       {{"a", "[[r11,0,0],[0,0,0],[0,0,0]]", ""}}},
      {"CT3.L6a", "rota-baxter",
       "the source table has no block for this entry; an adjacent block "
       "repeats the label of the next entry and is recorded under CT3.L7 "
       "families e and f",
       {}},
      {"CT3.L7", "rota-baxter", "",
       {{"a", "[[r11,0,r13],[0,0,0],[r31,0,r33]]", ""},
        {"b", "[[0,0,0],[r21,0,r23],[0,0,0]]", ""},
        {"c", "[[0,0,0],[-r23,0,r23],[0,0,0]]", ""},
        {"d", "[[r11,0,r13],[0,0,0],[-r13,0,r33]]", ""},
        {"e", "[[0,0,r12],[0,0,r23],[0,0,0]]",
         "from a second table block carrying the same entry label; the "
         "(1,3) entry is named r12"},
        {"f", "[[0,0,lambda-r12],[0,0,r23],[0,0,0]]",
         "from a second table block carrying the same entry label"}}},
      {"CT3.L8", "rota-baxter", "",
       {{"a", "[[0,0,0],[r21,0,r23],[0,0,0]]", ""}}},
      {"CT3.L9a", "rota-baxter", "",
       {{"a", "[[0,0,0],[r21,0,r23],[0,0,0]]", ""},
        {"b", "[[r11,0,0],[0,0,0],[0,0,0]]", ""}}},
      // ----------------------------------------------------------------- //
      // Nijenhuis operators
      // ----------------------------------------------------------------- //
      {"T2.L1", "nijenhuis", "", {{"a", "[[n11,0],[n21,n11]]", ""}}},
      {"T2.L2", "nijenhuis", "",
       {{"a", "[[n11,n12],[0,n11]]", ""},
        {"b", "[[n11,n11-n22],[0,n22]]", ""}}},
      {"T3.L1", "nijenhuis", "",
       {{"a", "[[n33,0,0],[0,n33,0],[n31,n32,n33]]", ""},
        {"b", "[[n33,0,0],[n21,n33,0],[n31,n32,n33]]", ""},
        {"c", "[[n33,0,0],[n21,n22,0],[n31,n32,n33]]", ""}}},
      {"T3.L2", "nijenhuis", "",
       {{"a", "[[n22,0,0],[n21,n22,n23],[0,0,n22]]", ""},
        {"b",
         "[[(4*n22-n31-i*n31*sqrt(7))/4,0,0],[0,n22,0],[n31,0,n22]]", ""},
        {"c", "[[n22,0,n13],[0,n22,0],[0,0,n22]]",
         "blank (2,3) cell transcribed as 0"}}},
      {"T3.L3", "nijenhuis", "",
       {{"a", "[[n22,n12,0],[n31,n32,n22],[0,0,n22]]", ""},
        {"b", "[[i*n13+n22,n12,n13],[0,n22,0],[n13,n32,-i*(n13+i*n22)]]",
         "blank (2,3) cell transcribed as 0"}}},
      {"T3.L4a", "nijenhuis", "",
       {{"a", "[[n11,0,0],[0,n22,0],[n31,0,n33]]",
         "blank (2,3) cell transcribed as 0"}}},
      {"T3.L5", "nijenhuis", "",
       {{"a", "[[n11,0,n13],[0,n33,n23],[0,0,n33]]", ""},
        {"b", "[[n11+n33,n12,n13],[0,n33,n12-n13],[0,0,n33]]", ""},
        {"c", "[[n33,n12,n13],[0,n33,n23],[0,0,n33]]", ""}}},
      {"T3.L6", "nijenhuis", "",
       {{"a", "[[n11,-n32,0],[0,n11-n32,0],[0,n32,n11]]", ""},
        {"b", "[[n11,n12,n13],[0,n11,0],[0,0,n11]]",
         "blank (2,3) cell transcribed as 0"},
        {"c", "[[n11,n32,-n23],[0,n11-n32,n23],[0,n32,n11-n23]]", ""}}},
      {"T3.L7", "nijenhuis", "",
       {{"a", "[[n11,0,n13],[0,n22,0],[n31,0,n33]]", ""},
        {"b", "[[n11,-n32,0],[0,n22,0],[0,n32,n11]]", ""},
        {"c", "[[n11,-n32,-n31],[0,n22,0],[n31,n32,n11+2*n31]]", ""}}},
      {"T3.L8a", "nijenhuis", "",
       {{"a", "[[n11,0,n13],[n21,n22,n23],[0,0,n22]]", ""},
        {"b", "[[n22,0,n13],[n21,n22,n23],[0,0,n22]]", ""},
        {"c", "[[n22,0,0],[n21,n22,n23],[0,0,n22]]", ""}}},
      {"CT2.L1", "nijenhuis", "",
       {{"a", "[[n11,0],[n21,n11]]", ""},
        {"b", "[[n11,0],[0,n22]]", ""}}},
      {"CT2.L2a", "nijenhuis", "", {{"a", "[[n11,0],[n21,n11]]", ""}}},
      {"CT2.L3", "nijenhuis", "",
       {{"a", "[[n11,n12],[0,n11]]", ""},
        {"b", "[[n11,0],[0,n11]]", ""}}},
      {"CT3.L1", "nijenhuis", "",
       {{"a", "[[n11,0,0],[n21,n11,n23],[0,0,n11]]", ""},
        {"b", "[[n11,0,0],[n21,n11,0],[n31,n32,n11]]", ""},
        {"c", "[[n11,0,0],[n21,n11+n23,n23],[n23-n21,0,n11]]", ""}}},
      {"CT3.L2a", "nijenhuis", "",
       {{"a", "[[n11,n12,0],[0,n33,0],[n31,n32,n33]]", ""},
        {"b", "[[n33,0,0],[0,n33,0],[n31,n32,n33]]", ""},
        {"c", "[[n11,0,0],[0,n33,0],[n31,n32,n33]]", ""}}},
      {"CT3.L3a", "nijenhuis", "",
       {{"a", "[[n33,0,n13],[n21,n33,n23],[0,0,n33]]", ""},
        {"b", "[[n33,0,n13],[0,n33,n23],[0,0,n33]]", ""},
        {"c",
         "[[2*n33-n22,n12,n13],[-(n22-n33)*(n22-n33)/n12,n22,n23],"
         "[0,0,n33]]",
         ""}}},
      {"CT3.L4", "nijenhuis", "",
       {{"a", "[[n22,0,n13],[n21,n22,n23],[0,0,n22]]", ""},
        {"b", "[[n22,0,n13],[n21,n22,0],[0,0,n22]]", ""},
        {"c", "[[n22,0,0],[n21,n22,n23],[0,0,n22]]", ""}}},
      {"CT3.L5", "nijenhuis", "",
       {{"a", "[[n22,n12,0],[0,n22,0],[n31,n32,n22]]", ""},
        {"b", "[[n22,n12,0],[0,n22,0],[0,n32,n33]]", ""},
        {"c", "[[n22-n12,n12,0],[0,n22,0],[0,n32,n22]]", ""}}},
      {"CT3.L6a", "nijenhuis", "",
       {{"a", "[[n33,0,0],[n21,n33,n23],[0,0,n33]]", ""},
        {"b", "[[n11,0,0],[0,n22,0],[0,0,n33]]", ""},
        {"c", "[[n33,0,n13],[0,n22,0],[0,0,n33]]", ""},
        {"d", "[[n11,0,n13],[0,n22,0],[n31,0,n33]]", ""}}},
      {"CT3.L7", "nijenhuis", "",
       {{"a", "[[n33,0,n13],[n21,n33,n23],[0,0,n33]]", ""},
        {"b", "[[n33,0,n13],[0,n33,n23],[0,0,n33]]", ""}}},
      {"CT3.L8", "nijenhuis", "",
       {{"a", "[[n22,0,0],[n21,n22,n23],[0,0,n22]]", ""}}},
      {"CT3.L9a", "nijenhuis", "",
       {{"a", "[[n22,n12,0],[0,n22,0],[n31,n32,n22]]", ""},
        {"b", "[[n22,n12,0],[0,n22,0],[0,n32,n22]]", ""}}},
      // ----------------------------------------------------------------- //
      // Reynolds operators
      // ----------------------------------------------------------------- //
      {"T2.L1", "reynolds", "",
       {{"a", "[[r11,0],[r21,r11/(3-r11)]]", ""},
        {"b", "[[0,0],[r21,r22]]", ""}}},
      {"T2.L2", "reynolds", "",
       {{"a", "[[r11,r12],[0,2]]", ""},
        {"b", "[[0,r12],[0,2]]", ""},
        {"c", "[[0,-r22],[0,r22]]", ""}}},
      {"T3.L1", "reynolds", "",
       {{"a", "[[0,0,0],[0,0,0],[r31,r32,r33]]", ""},
        {"b",
         "[[3*r33/(1+r33),0,0],[0,3*r33/(1+r33),0],[r31,r32,r33]]", ""}}},
      {"T3.L2", "reynolds", "",
       {{"a", "[[0,0,0],[r21,r22,r23],[0,0,0]]", ""},
        {"b", "[[0,0,r13],[r21,0,r23],[0,0,0]]", ""},
        {"c",
         "[[3*r22/(1-r22),0,0],[r21,r22,r23],[0,0,3*r22/(1-r22)]]", ""}}},
      {"T3.L3", "reynolds", "",
       {{"a", "[[r11,r12,-r11],[0,r22,0],[-r11,-r12-r22,r11]]", ""},
        {"b", "[[r11,r12,r11],[-r11-r31,0,r11+r31],[r31,-r12,-r31]]", ""}}},
      {"T3.L4a", "reynolds", "",
       {{"a", "[[r11,r12,r13],[0,r22,0],[-r11,-r12,-r13]]", ""},
        {"b", "[[r11,0,r13],[0,r22,0],[-r11,0,-r31]]",
         "the (3,3) entry is transcribed verbatim as -r31"},
        {"c", "[[r11,r12,r13],[r21,r22,r23],[-r11,-r12,-r31]]",
         "the (3,3) entry is transcribed verbatim as -r31"}}},
      {"T3.L5", "reynolds", "",
       {{"a", "[[r11,r12,r13],[r21,r22,r23],[0,0,0]]", ""},
        {"b", "[[r11,-r22,r13],[-r11,r22,-r13],[0,0,0]]", ""},
        {"c", "[[r11,-r11,r13],[-r11,r11,-r13-r33],[0,0,r33]]", ""}}},
      {"T3.L6", "reynolds", "",
       {{"a",
         "[[r11,r12,r13],[0,3*r11/(1+r11),0],[0,0,3*r11/(1+r11)]]", ""}}},
      {"T3.L7", "reynolds", "",
       {{"a", "[[r11,0,r13],[0,r22,0],[-r11,0,-r13]]", ""},
        {"b", "[[r11,r12,r13],[0,r22,0],[-r11,-r12,-r13]]", ""},
        {"c", "[[r11,r12,r13],[r21,r22,r23],[-r11,0,-r13]]", ""}}},
      {"T3.L8a", "reynolds", "",
       {{"a",
         "[[3*r22/(1+r22),0,0],[r21,r22,r23],[0,0,3*r22/(1+r22)]]", ""},
        {"b", "[[r11,0,r13],[r21,0,r23],[0,0,0]]", ""},
        {"c", "[[0,0,r13],[r21,0,r23],[0,0,0]]", ""},
        {"d", "[[0,0,0],[r21,r22,r23],[0,0,0]]", ""}}},
      {"CT2.L1", "reynolds", "", {{"a", "[[0,0],[r21,r22]]", ""}}},
      {"CT2.L2a", "reynolds", "",
       {{"a", "[[0,0],[r21,r22]]", ""},
        {"b", "[[r11,0],[r21,-r11/(r11+3)]]", ""}}},
      {"CT2.L3", "reynolds", "",
       {{"a", "[[r11,r12],[0,0]]", ""},
        {"b", "[[0,r12],[0,0]]", ""}}},
      {"CT3.L1", "reynolds", "",
       {{"a", "[[0,0,0],[r21,r22,r23],[r31,r32,r33]]", ""},
        {"b", "[[r21,0,0],[-r21,-r32,-r33],[0,r32,r33]]",
         "the (1,1) entry is named r21, coupling it to the (2,1) entry; "
         "transcribed verbatim"},
        {"c", "[[0,0,0],[r21,-r32,0],[-r21,r32,0]]", ""}}},
      {"CT3.L2a", "reynolds", "",
       {{"a", "[[r11,r12,0],[0,0,0],[r31,r32,0]]", ""},
        {"b", "[[r11,0,0],[0,0,0],[r31,r32,0]]", ""},
        {"c", "[[0,0,0],[0,0,0],[r31,r32,r33]]", ""},
        {"d",
         "[[3*r33/(1+r33),0,0],[0,3*r33/(1+r33),0],[r31,r32,r33]]", ""}}},
      {"CT3.L3a", "reynolds", "",
       {{"a", "[[r11,r12,r13],[r21,r22,r23],[0,0,0]]", ""},
        {"b", "[[r11,0,r13],[r21,0,r23],[0,0,0]]", ""},
        {"c", "[[r11,0,r13],[-alpha*r11,0,-alpha*r13],[0,0,0]]", ""}}},
      {"CT3.L4", "reynolds", "",
       {{"a", "[[r11,0,r13],[r21,0,r23],[0,0,0]]", ""},
        {"b", "[[0,0,0],[r21,r22,r23],[0,0,0]]", ""},
        {"c", "[[r11,0,0],[r21,0,r23],[0,0,0]]", ""}}},
      {"CT3.L5", "reynolds", "",
       {{"a", "[[r11,0,0],[0,0,0],[0,0,0]]", ""},
        {"b", "[[r11,r12,r13],[0,0,0],[r31,r32,r33]]", ""},
        {"c", "[[-r33,r12,-r33],[0,-r12,0],[r33,0,r33]]", ""},
        {"d", "[[0,0,0],[0,0,0],[r31,r32,0]]", ""}}},
      {"CT3.L6a", "reynolds", "",
       {{"a", "[[r11,0,r13],[0,0,0],[r31,0,r33]]", ""},
        {"b", "[[0,0,0],[r21,r22,r23],[0,0,0]]", ""},
        {"c", "[[0,0,0],[r21,0,r23],[0,0,0]]", ""},
        {"d", "[[0,0,0],[0,r22,0],[0,0,0]]", ""}}},
      {"CT3.L7", "reynolds", "",
       {{"a", "[[r11,r12,r13],[r21,r22,r23],[0,0,0]]", ""},
        {"b", "[[0,0,r13],[0,0,r23],[0,0,0]]", ""},
        {"c", "[[0,-r22,-r23],[0,r22,r23],[0,0,0]]", ""}}},
      {"CT3.L8", "reynolds", "",
       {{"a", "[[0,0,0],[r21,r22,r23],[0,0,0]]", ""},
        {"b", "[[0,0,0],[r21,0,r23],[0,0,0]]", ""}}},
      {"CT3.L9a", "reynolds", "",
       {{"a", "[[r11,r12,r13],[0,0,0],[r31,r32,r33]]", ""},
        {"b", "[[0,r12,0],[0,0,0],[0,r32,0]]", ""}}},
      // ----------------------------------------------------------------- //
      // Centroids
      // ----------------------------------------------------------------- //
      {"T2.L1", "centroid",
       "the source table lists scalar matrices only; the full centroid has "
       "dimension 2 (see the completeness audit)",
       {{"a", "[[c11,0],[0,c11]]", ""}}},
      {"T2.L2", "centroid", "", {{"a", "[[c11,0],[0,c11]]", ""}}},
      {"T3.L1", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
      {"T3.L2", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
      {"T3.L3", "centroid", "",
       {{"a", "[[c11,c12,c13],[0,c11+c13,0],[c31,c12,c11]]", ""}}},
      {"T3.L4a", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
      {"T3.L5", "centroid", "",
       {{"a", "[[c11,c12,c13],[c21,c11,-c13],[0,0,c11+c12]]", ""}}},
      {"T3.L6", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
      {"T3.L7", "centroid", "",
       {{"a", "[[c11,0,c13],[0,c22,0],[c22-c11,0,c22-c13]]", ""}}},
      {"T3.L8a", "centroid", "",
       {{"a", "[[c22,0,0],[0,c22,0],[0,0,c22]]", ""}}},
      {"CT2.L1", "centroid", "", {{"a", "[[c11,0],[0,c11]]", ""}}},
      {"CT2.L2a", "centroid", "", {{"a", "[[c11,0],[0,c11]]", ""}}},
      {"CT2.L3", "centroid", "", {{"a", "[[c11,0],[0,c11]]", ""}}},
      {"CT3.L1", "centroid", "",
       {{"a", "[[c11,0,0],[c21,c11,0],[-c21,0,c11]]", ""}}},
      {"CT3.L2a", "centroid", "",
       {{"a", "[[c33,0,0],[0,c33,0],[0,0,c33]]", ""}}},
      {"CT3.L3a", "centroid", "",
       {{"a", "[[c22,0,0],[0,c22,0],[0,0,c22]]", ""}}},
      {"CT3.L4", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
      {"CT3.L5", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
      {"CT3.L6a", "centroid", "",
       {{"a", "[[c33,0,0],[0,c33,0],[0,0,c33]]", ""}}},
      {"CT3.L7", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
      {"CT3.L8", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
      {"CT3.L9a", "centroid", "",
       {{"a", "[[c11,0,0],[0,c11,0],[0,0,c11]]", ""}}},
  };
  return v;
}

inline CatalogEntry make_algebra_entry(const AlgSpec& s) {
  CatalogEntry e;
  e.id = s.id;
  e.kind = s.b2 ? EntryKind::compatible_pair : EntryKind::algebra;
  e.note = s.note;
  e.dimension = s.dim;
  std::string joined = std::string(s.b1) + ";" + (s.b2 ? s.b2 : "");
  std::set<std::string> ps = collect_identifiers(joined);
  std::vector<std::string> params(ps.begin(), ps.end());
  TernaryStructure t1(s.dim, catalog_field(), params);
  apply_bracket_spec(t1, s.b1);
  if (s.b2) {
    TernaryStructure t2(s.dim, catalog_field(), params);
    apply_bracket_spec(t2, s.b2);
    e.doc = make_document(s.id, std::move(t1), std::move(t2));
    e.source = "compatible-pair classification, dim " + std::to_string(s.dim);
  } else {
    e.doc = make_document(s.id, std::move(t1));
    e.source = "ternary classification, dim " + std::to_string(s.dim);
  }
  return e;
}

inline CatalogEntry make_table_entry(const TabSpec& s, const CatalogEntry& alg) {
  CatalogEntry e;
  e.id = std::string(s.algebra) + "/" + s.slug;
  e.kind = EntryKind::operator_table;
  e.note = s.note;
  e.dimension = alg.dimension;
  e.algebra_id = s.algebra;
  e.cls = table_class_from_slug(s.slug);
  e.source = std::string(s.slug) + " table for " + s.algebra;
  for (const auto& f : s.families) {
    std::set<std::string> ps = collect_identifiers(f.mat);
    OperatorFamilyEntry fe;
    fe.id = f.fam;
    fe.mats = {parse_matrix_literal(catalog_field(), ps, f.mat)};
    fe.note = f.note;
    e.families.push_back(std::move(fe));
  }
  return e;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  std::map<std::string, std::size_t> index;
  for (const auto& s : algebra_specs()) {
    CatalogEntry e = make_algebra_entry(s);
    if (index.count(e.id)) throw std::logic_error("duplicate catalog id " + e.id);
    index[e.id] = out.size();
    out.push_back(std::move(e));
  }
  for (const auto& s : table_specs()) {
    auto it = index.find(s.algebra);
    if (it == index.end())
      throw std::logic_error(std::string("operator table references unknown algebra ") +
                             s.algebra);
    CatalogEntry e = make_table_entry(s, out[it->second]);
    if (index.count(e.id)) throw std::logic_error("duplicate catalog id " + e.id);
    index[e.id] = out.size();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog_entries())
    if (e.id == id) return e;
  throw UnknownEntry("no catalog entry named '" + id + "'");
}

// Operator document for one table family; the document name encodes the
// catalog path ("T2.L1/derivations/a").
inline OperatorDocument family_document(const CatalogEntry& table,
                                        const OperatorFamilyEntry& fam) {
  OperatorDocument d;
  d.name = table.id + "/" + fam.id;
  d.cls = table.cls;
  d.field = catalog_field();
  std::set<std::string> ps;
  for (const auto& m : fam.mats)
    for (const auto& v : m.variables()) ps.insert(v);
  if (opclass_uses_weight(table.cls)) {
    ps.insert("lambda");
    d.weight = RatFunc::variable(catalog_field(), "lambda");
  } else {
    d.weight = RatFunc(catalog_field());
  }
  d.params.assign(ps.begin(), ps.end());
  d.matrices = fam.mats;
  return d;
}

struct CatalogFilter {
  std::optional<EntryKind> kind;
  std::optional<int> dim;
  std::optional<OpClass> cls;
};

inline std::vector<std::string> catalog_list(const CatalogFilter& filter = {}) {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) {
    if (filter.kind && e.kind != *filter.kind) continue;
    if (filter.dim && e.dimension != *filter.dim) continue;
    if (filter.cls &&
        (e.kind != EntryKind::operator_table || e.cls != *filter.cls))
      continue;
    out.push_back(e.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Conformance engine.
// ---------------------------------------------------------------------------

struct ConformanceRow {
  std::string entry_id;
  std::string family_id;  // empty for algebra/pair rows
  std::string check;
  std::string verdict;     // PASS | FAIL | SKIPPED
  std::string witness;     // first nonzero residual (FAIL) or first gap witness
  std::string reason;      // SKIPPED only
  std::string conditions;  // denominator side conditions met on the way
  std::string note;        // carried transcription note
};

struct ConformanceReport {
  std::vector<ConformanceRow> rows;
  int pass = 0;
  int fail = 0;
  int skipped = 0;

  bool all_pass() const { return fail == 0; }
};

struct CheckOptions {
  bool completeness = false;  // also run the mod-p family coverage audit
  std::uint32_t prime = 3;
};

namespace detail {

inline std::string first_witness(const ResidualReport& r) {
  if (r.entries.empty()) return "";
  const auto& e = r.entries.front();
  std::string s = "at (";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e.args[i]);
  }
  s += ") coord " + std::to_string(e.coord);
  if (!e.eq.empty()) s += " [" + e.eq + "]";
  return s + ": " + e.value.str();
}

inline std::string join_conditions(const std::vector<std::string>& cs) {
  std::string s;
  for (const auto& c : cs) {
    if (!s.empty()) s += "; ";
    s += c + " != 0";
  }
  return s;
}

inline void push_row(ConformanceReport& rep, ConformanceRow row) {
  if (row.verdict == "PASS")
    ++rep.pass;
  else if (row.verdict == "FAIL")
    ++rep.fail;
  else
    ++rep.skipped;
  rep.rows.push_back(std::move(row));
}

inline void check_residual_row(ConformanceReport& rep, const std::string& entry_id,
                               const std::string& family_id, const std::string& check,
                               const ResidualReport& r, const std::string& note) {
  ConformanceRow row;
  row.entry_id = entry_id;
  row.family_id = family_id;
  row.check = check;
  row.verdict = r.identically_zero ? "PASS" : "FAIL";
  row.witness = first_witness(r);
  row.conditions = join_conditions(r.side_conditions);
  row.note = note;
  push_row(rep, std::move(row));
}

inline void check_operator_table(ConformanceReport& rep, const CatalogEntry& e,
                                 const CheckOptions& opts) {
  const CatalogEntry& alg = catalog_entry(e.algebra_id);
  const bool pair = alg.kind == EntryKind::compatible_pair;

  if (e.families.empty()) {
    ConformanceRow row;
    row.entry_id = e.id;
    row.check = "containment";
    row.verdict = "SKIPPED";
    row.reason = "no families recorded for this entry";
    row.note = e.note;
    push_row(rep, std::move(row));
  }

  for (const auto& fam : e.families) {
    std::vector<std::pair<std::string, RatFunc>> weights;
    if (e.cls == OpClass::derivation_weighted) {
      weights.emplace_back("containment(weight=lambda)",
                           RatFunc::variable(catalog_field(), "lambda"));
      weights.emplace_back("containment(weight=0)", RatFunc(catalog_field()));
    } else if (e.cls == OpClass::rota_baxter) {
      weights.emplace_back("containment(weight=lambda)",
                           RatFunc::variable(catalog_field(), "lambda"));
    } else {
      weights.emplace_back("containment", RatFunc(catalog_field()));
    }
    for (const auto& [check_name, w] : weights) {
      OperatorCheck chk =
          pair ? verify_family(alg.doc.ternary, alg.doc.ternary2, e.cls, fam.mats, w)
               : verify_family(alg.doc.ternary, e.cls, fam.mats, w);
      ConformanceRow row;
      row.entry_id = e.id;
      row.family_id = fam.id;
      row.check = check_name;
      row.verdict = chk.status;
      row.reason = chk.reason;
      row.witness = first_witness(chk.residual);
      row.conditions = join_conditions(chk.residual.side_conditions);
      row.note = fam.note.empty() ? e.note : fam.note;
      push_row(rep, std::move(row));
    }
  }

  if (!opts.completeness) return;

  const std::string comp_check = "completeness(p=" + std::to_string(opts.prime) + ")";
  ConformanceRow row;
  row.entry_id = e.id;
  row.check = comp_check;
  row.note = e.note;
  if (pair) {
    row.verdict = "SKIPPED";
    row.reason = "completeness audit covers single-bracket entries only";
    push_row(rep, std::move(row));
    return;
  }
  try {
    std::vector<OperatorFamily> fams;
    for (const auto& f : e.families) fams.push_back({f.id, f.mats});
    std::map<std::string, std::uint32_t> bind;
    for (const auto& p : alg.doc.params()) bind[p] = 2;  // generic point
    std::vector<std::uint32_t> ws = {0};
    if (opclass_uses_weight(e.cls)) {
      ws.clear();
      for (std::uint32_t w = 0; w < opts.prime; ++w) ws.push_back(w);
    }
    CompletenessReport cr =
        completeness_report(alg.doc.ternary, e.cls, opts.prime, fams, ws, bind);
    row.verdict = (cr.contained && cr.complete) ? "PASS" : "FAIL";
    if (!cr.contained)
      row.witness = "extraneous: " + cr.extraneous.front();
    else if (!cr.complete)
      row.witness = "missing: " + cr.missing.front() + " (" +
                    std::to_string(cr.missing.size()) + " of " +
                    std::to_string(cr.all_count) + " solutions uncovered)";
  } catch (const Error& err) {
    row.verdict = "SKIPPED";
    row.reason = err.what();
  }
  push_row(rep, std::move(row));
}

}  // namespace detail

inline ConformanceReport catalog_check(const std::vector<std::string>& ids = {},
                                       const CheckOptions& opts = {}) {
  std::set<std::string> scope(ids.begin(), ids.end());
  for (const auto& id : scope) catalog_entry(id);  // validate scope up front
  ConformanceReport rep;
  for (const auto& e : catalog_entries()) {
    if (!scope.empty() && !scope.count(e.id)) continue;
    switch (e.kind) {
      case EntryKind::algebra:
        detail::check_residual_row(rep, e.id, "", "leibniz",
                                   ternary_leibniz_residual(e.doc.ternary), e.note);
        break;
      case EntryKind::compatible_pair:
        detail::check_residual_row(rep, e.id, "", "leibniz-b1",
                                   ternary_leibniz_residual(e.doc.ternary), e.note);
        detail::check_residual_row(rep, e.id, "", "leibniz-b2",
                                   ternary_leibniz_residual(e.doc.ternary2), e.note);
        detail::check_residual_row(
            rep, e.id, "", "compatibility",
            ternary_compatibility_residual(e.doc.ternary, e.doc.ternary2), e.note);
        break;
      case EntryKind::operator_table:
        detail::check_operator_table(rep, e, opts);
        break;
    }
  }
  return rep;
}

inline Json conformance_report_to_json(const ConformanceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["entry"] = row.entry_id;
    if (!row.family_id.empty()) j["family"] = row.family_id;
    j["check"] = row.check;
    j["verdict"] = row.verdict;
    if (!row.witness.empty()) j["witness"] = row.witness;
    if (!row.reason.empty()) j["reason"] = row.reason;
    if (!row.conditions.empty()) j["conditions"] = row.conditions;
    if (!row.note.empty()) j["note"] = row.note;
    rows.push_back(std::move(j));
  }
  Json j;
  j["rows"] = std::move(rows);
  j["pass"] = r.pass;
  j["fail"] = r.fail;
  j["skipped"] = r.skipped;
  j["all_pass"] = r.all_pass();
  return j;
}

inline std::string conformance_report_text(const ConformanceReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    out += row.verdict + " " + row.entry_id;
    if (!row.family_id.empty()) out += " family " + row.family_id;
    out += " " + row.check;
    if (!row.witness.empty()) out += " -- " + row.witness;
    if (!row.reason.empty()) out += " -- " + row.reason;
    if (!row.conditions.empty()) out += " -- valid where " + row.conditions;
    if (!row.note.empty()) out += " -- note: " + row.note;
    out += "\n";
  }
  out += "pass " + std::to_string(r.pass) + ", fail " + std::to_string(r.fail) +
         ", skipped " + std::to_string(r.skipped) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Invariants and audits.
// ---------------------------------------------------------------------------

// Substitutes every structure parameter by a constant, producing a
// parameter-free structure suitable for invariant computations.
inline TernaryStructure instantiate(const TernaryStructure& t,
                                    const std::map<std::string, FieldElement>& bind) {
  TernaryStructure out(t.dim(), t.field(), {});
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
          const RatFunc& v = t.chi(i, j, k, p);
          if (v.is_zero()) continue;
          out.set_chi(i, j, k, p,
                      RatFunc::constant(t.field(), v.substitute(bind)));
        }
  return out;
}

namespace detail {

inline std::map<std::string, FieldElement> generic_bind(const TernaryStructure& t,
                                                        const Rat& value) {
  std::map<std::string, FieldElement> bind;
  for (const auto& p : t.params()) bind.emplace(p, FieldElement(t.field(), value));
  return bind;
}

}  // namespace detail

// Invariant records of an algebra or pair entry, parameters instantiated at
// the given rational point (one record per bracket).
inline std::vector<InvariantRecord> entry_invariants(const CatalogEntry& e,
                                                     const Rat& alpha = Rat(2)) {
  if (e.kind == EntryKind::operator_table)
    throw UnknownEntry("entry '" + e.id + "' is an operator table; invariants apply "
                       "to algebra and compatible-pair entries");
  std::vector<InvariantRecord> out;
  out.push_back(
      invariants(instantiate(e.doc.ternary, detail::generic_bind(e.doc.ternary, alpha))));
  if (e.kind == EntryKind::compatible_pair)
    out.push_back(invariants(
        instantiate(e.doc.ternary2, detail::generic_bind(e.doc.ternary2, alpha))));
  return out;
}

// Pairwise comparison of invariant records across one dimension's entries.
// A coincidence does not certify an isomorphism; it only means these
// invariants cannot separate the two entries.
struct DistinguishabilityReport {
  EntryKind kind = EntryKind::algebra;
  int dim = 0;
  Rat alpha = Rat(2);
  std::vector<std::string> entries;
  std::vector<std::pair<std::string, std::string>> coincidences;
};

inline DistinguishabilityReport distinguishability_audit(EntryKind kind, int dim,
                                                         const Rat& alpha = Rat(2)) {
  DistinguishabilityReport rep;
  rep.kind = kind;
  rep.dim = dim;
  rep.alpha = alpha;
  std::vector<std::vector<InvariantRecord>> recs;
  for (const auto& e : catalog_entries()) {
    if (e.kind != kind || e.dimension != dim) continue;
    rep.entries.push_back(e.id);
    recs.push_back(entry_invariants(e, alpha));
  }
  for (std::size_t a = 0; a < recs.size(); ++a)
    for (std::size_t b = a + 1; b < recs.size(); ++b)
      if (recs[a] == recs[b])
        rep.coincidences.emplace_back(rep.entries[a], rep.entries[b]);
  return rep;
}

// Audit of the classification's derivation-dimension corollaries: computes
// the weight-0 derivation dimension of every entry of one kind/dimension and
// compares the observed range against the claimed one.
struct DerivationDimensionAudit {
  EntryKind kind = EntryKind::algebra;
  int dim = 0;
  Rat alpha = Rat(2);
  std::map<std::string, std::size_t> dims;  // entry id -> dimension
  std::size_t observed_lo = 0, observed_hi = 0;
  std::size_t claimed_lo = 0, claimed_hi = 0;
  bool within_claimed = false;     // every observed value inside the claimed range
  bool endpoints_attained = false; // both claimed endpoints observed
};

inline DerivationDimensionAudit derivation_dimension_audit(EntryKind kind, int dim,
                                                           const Rat& alpha = Rat(2)) {
  if (kind == EntryKind::operator_table)
    throw UnknownEntry("derivation-dimension audit applies to algebra and "
                       "compatible-pair entries");
  DerivationDimensionAudit rep;
  rep.kind = kind;
  rep.dim = dim;
  rep.alpha = alpha;
  if (kind == EntryKind::algebra) {
    rep.claimed_lo = dim == 2 ? 1 : 1;
    rep.claimed_hi = dim == 2 ? 1 : 4;
  } else {
    rep.claimed_lo = 0;
    rep.claimed_hi = dim == 2 ? 0 : 2;
  }
  const RatFunc zero_weight(catalog_field());
  for (const auto& e : catalog_entries()) {
    if (e.kind != kind || e.dimension != dim) continue;
    TernaryStructure t1 =
        instantiate(e.doc.ternary, detail::generic_bind(e.doc.ternary, alpha));
    std::size_t d;
    if (kind == EntryKind::compatible_pair) {
      TernaryStructure t2 =
          instantiate(e.doc.ternary2, detail::generic_bind(e.doc.ternary2, alpha));
      LinearSystem sys =
          linear_system(t1, t2, OpClass::derivation_weighted, zero_weight);
      d = nullspace(sys).basis.size();
    } else {
      LinearSystem sys = linear_system(t1, OpClass::derivation_weighted, zero_weight);
      d = nullspace(sys).basis.size();
    }
    rep.dims[e.id] = d;
  }
  if (!rep.dims.empty()) {
    rep.observed_lo = rep.dims.begin()->second;
    rep.observed_hi = rep.dims.begin()->second;
    for (const auto& [id, d] : rep.dims) {
      rep.observed_lo = std::min(rep.observed_lo, d);
      rep.observed_hi = std::max(rep.observed_hi, d);
    }
    rep.within_claimed =
        rep.observed_lo >= rep.claimed_lo && rep.observed_hi <= rep.claimed_hi;
    bool lo_seen = false, hi_seen = false;
    for (const auto& [id, d] : rep.dims) {
      lo_seen |= d == rep.claimed_lo;
      hi_seen |= d == rep.claimed_hi;
    }
    rep.endpoints_attained = lo_seen && hi_seen;
  }
  return rep;
}

}  // namespace tleib
