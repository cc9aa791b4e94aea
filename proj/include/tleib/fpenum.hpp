#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tleib/linear.hpp"
#include "tleib/modp.hpp"

namespace tleib {

inline constexpr std::uint64_t kSearchSpaceGuard = 100000000;  // 1e8 candidates

// Ternary structure constants reduced mod p, with the nonzero entries also
// kept as a flat list: brackets of L-algebra tables are very sparse and the
// enumeration inner loop lives on that list.
struct FpTernary {
  std::uint32_t p = 0;
  int n = 0;
  std::vector<std::uint32_t> dense;                   // ((i n + j) n + k) n + s
  std::vector<std::array<std::uint32_t, 5>> nonzero;  // (i, j, k, s, value)

  std::uint32_t chi(int i, int j, int k, int s) const {
    return dense[(std::size_t)(((i * n + j) * n + k) * n + s)];
  }
};

struct FpBinary {
  std::uint32_t p = 0;
  int n = 0;
  std::vector<std::uint32_t> dense;                   // (i n + j) n + s
  std::vector<std::array<std::uint32_t, 4>> nonzero;  // (i, j, s, value)

  std::uint32_t c(int i, int j, int s) const {
    return dense[(std::size_t)((i * n + j) * n + s)];
  }
};

inline FpTernary reduce_mod_p(const TernaryStructure& T, std::uint32_t p,
                              const std::map<std::string, std::uint32_t>& bind = {}) {
  Fp fp(p);
  for (const auto& name : T.params())
    if (!bind.count(name))
      throw ParametricAlgebra("parameter '" + name + "' needs a residue before reduction");
  FpTernary out;
  out.p = p;
  out.n = T.dim();
  const int n = T.dim();
  out.dense.assign((std::size_t)(n * n * n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s) {
          std::uint32_t v = fp.reduce_ratfunc(T.chi(i, j, k, s), bind);
          out.dense[(std::size_t)(((i * n + j) * n + k) * n + s)] = v;
          if (v) out.nonzero.push_back({(std::uint32_t)i, (std::uint32_t)j, (std::uint32_t)k,
                                        (std::uint32_t)s, v});
        }
  return out;
}

inline FpBinary reduce_mod_p(const BinaryStructure& B, std::uint32_t p,
                             const std::map<std::string, std::uint32_t>& bind = {}) {
  Fp fp(p);
  for (const auto& name : B.params())
    if (!bind.count(name))
      throw ParametricAlgebra("parameter '" + name + "' needs a residue before reduction");
  FpBinary out;
  out.p = p;
  out.n = B.dim();
  const int n = B.dim();
  out.dense.assign((std::size_t)(n * n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s) {
        std::uint32_t v = fp.reduce_ratfunc(B.c(i, j, s), bind);
        out.dense[(std::size_t)((i * n + j) * n + s)] = v;
        if (v)
          out.nonzero.push_back({(std::uint32_t)i, (std::uint32_t)j, (std::uint32_t)s, v});
      }
  return out;
}

namespace detail {

constexpr int kMaxDim = 4;
using FpVec = std::array<std::uint32_t, kMaxDim>;

// Numeric residual checks, one triple/pair at a time with early exit.  This
// mirrors the symbolic expansion independently; the two routes cross-check
// each other in the test suite.
struct FpTernaryChecker {
  const FpTernary& T;
  std::uint32_t p;
  int n;
  const std::uint32_t* M[4] = {nullptr, nullptr, nullptr, nullptr};  // tuple, row-major
  std::uint32_t lam = 0;
  std::uint32_t M2[kMaxDim * kMaxDim];  // M[0]^2 and ^3 for nijenhuis
  std::uint32_t M3[kMaxDim * kMaxDim];

  FpTernaryChecker(const FpTernary& t) : T(t), p(t.p), n(t.n) {}

  void bracket(const FpVec& x, const FpVec& y, const FpVec& z, FpVec& out) const {
    out.fill(0);
    for (const auto& e : T.nonzero) {
      std::uint64_t v = (std::uint64_t)e[4] * x[e[0]] % p * y[e[1]] % p * z[e[2]] % p;
      out[e[3]] = (out[e[3]] + (std::uint32_t)v) % p;
    }
  }
  void apply(const std::uint32_t* m, const FpVec& x, FpVec& out) const {
    for (int r = 0; r < n; ++r) {
      std::uint64_t acc = 0;
      for (int c = 0; c < n; ++c) acc += (std::uint64_t)m[r * n + c] * x[c];
      out[r] = (std::uint32_t)(acc % p);
    }
  }
  FpVec basis(int i) const {
    FpVec v{};
    v[i] = 1;
    return v;
  }
  FpVec column(const std::uint32_t* m, int j) const {
    FpVec v{};
    for (int r = 0; r < n; ++r) v[r] = m[r * n + j];
    return v;
  }
  FpVec chi_col(int i, int j, int k) const {
    FpVec v{};
    for (int s = 0; s < n; ++s) v[s] = T.chi(i, j, k, s);
    return v;
  }
  static void addv(FpVec& a, const FpVec& b, std::uint32_t p) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % p;
  }
  void scale(FpVec& a, std::uint32_t k) const {
    for (auto& x : a) x = (std::uint32_t)((std::uint64_t)x * k % p);
  }
  bool eq(const FpVec& a, const FpVec& b) const {
    for (int i = 0; i < n; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  void matmul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::uint64_t acc = 0;
        for (int k = 0; k < n; ++k) acc += (std::uint64_t)a[i * n + k] * b[k * n + j];
        out[i * n + j] = (std::uint32_t)(acc % p);
      }
  }

  void prepare(OpClass cls) {
    if (cls == OpClass::nijenhuis) {
      matmul(M[0], M[0], M2);
      matmul(M2, M[0], M3);
    }
  }

  bool check_triple(OpClass cls, int i, int j, int k) const {
    FpVec col = chi_col(i, j, k);
    switch (cls) {
      case OpClass::central_derivation: {
        FpVec a, b1, b2, b3;
        apply(M[0], col, a);
        bracket(column(M[0], i), basis(j), basis(k), b1);
        bracket(basis(i), column(M[0], j), basis(k), b2);
        bracket(basis(i), basis(j), column(M[0], k), b3);
        FpVec zero{};
        return eq(a, zero) && eq(b1, zero) && eq(b2, zero) && eq(b3, zero);
      }
      case OpClass::generalized_derivation: {
        FpVec lhs, t1, t2, t3;
        apply(M[3], col, lhs);
        bracket(column(M[0], i), basis(j), basis(k), t1);
        bracket(basis(i), column(M[1], j), basis(k), t2);
        bracket(basis(i), basis(j), column(M[2], k), t3);
        addv(t1, t2, p);
        addv(t1, t3, p);
        return eq(lhs, t1);
      }
      case OpClass::quasiderivation: {
        FpVec lhs, t1, t2, t3;
        apply(M[1], col, lhs);
        bracket(column(M[0], i), basis(j), basis(k), t1);
        bracket(basis(i), column(M[0], j), basis(k), t2);
        bracket(basis(i), basis(j), column(M[0], k), t3);
        addv(t1, t2, p);
        addv(t1, t3, p);
        return eq(lhs, t1);
      }
      case OpClass::derivation_weighted: {
        const std::uint32_t* D = M[0];
        FpVec lhs, acc, t;
        apply(D, col, lhs);
        bracket(column(D, i), basis(j), basis(k), acc);
        bracket(basis(i), column(D, j), basis(k), t);
        addv(acc, t, p);
        bracket(basis(i), basis(j), column(D, k), t);
        addv(acc, t, p);
        FpVec two{};
        bracket(column(D, i), column(D, j), basis(k), two);
        bracket(basis(i), column(D, j), column(D, k), t);
        addv(two, t, p);
        bracket(column(D, i), basis(j), column(D, k), t);
        addv(two, t, p);
        scale(two, lam);
        addv(acc, two, p);
        FpVec three;
        bracket(column(D, i), column(D, j), column(D, k), three);
        scale(three, (std::uint32_t)((std::uint64_t)lam * lam % p));
        addv(acc, three, p);
        return eq(lhs, acc);
      }
      case OpClass::averaging: {
        const std::uint32_t* Bm = M[0];
        FpVec bi = column(Bm, i), bj = column(Bm, j), bk = column(Bm, k);
        FpVec t, e0, e1, e2, e3;
        bracket(bi, bj, basis(k), t);
        apply(Bm, t, e0);
        bracket(bi, basis(j), bk, t);
        apply(Bm, t, e1);
        bracket(basis(i), bj, bk, t);
        apply(Bm, t, e2);
        bracket(bi, bj, bk, e3);
        return eq(e0, e1) && eq(e0, e2) && eq(e0, e3);
      }
      case OpClass::rota_baxter: {
        const std::uint32_t* R = M[0];
        FpVec ri = column(R, i), rj = column(R, j), rk = column(R, k);
        FpVec lhs, inner, t;
        bracket(ri, rj, rk, lhs);
        bracket(ri, rj, basis(k), inner);
        bracket(ri, basis(j), rk, t);
        addv(inner, t, p);
        bracket(basis(i), rj, rk, t);
        addv(inner, t, p);
        FpVec low, u;
        bracket(ri, basis(j), basis(k), low);
        bracket(basis(i), rj, basis(k), u);
        addv(low, u, p);
        bracket(basis(i), basis(j), rk, u);
        addv(low, u, p);
        scale(low, lam);
        addv(inner, low, p);
        FpVec cc = col;
        scale(cc, (std::uint32_t)((std::uint64_t)lam * lam % p));
        addv(inner, cc, p);
        FpVec rhs;
        apply(R, inner, rhs);
        return eq(lhs, rhs);
      }
      case OpClass::nijenhuis: {
        const std::uint32_t* N = M[0];
        FpVec ni = column(N, i), nj = column(N, j), nk = column(N, k);
        FpVec lhs;
        bracket(ni, nj, nk, lhs);
        FpVec mid, t;
        bracket(ni, nj, basis(k), mid);
        bracket(ni, basis(j), nk, t);
        addv(mid, t, p);
        bracket(basis(i), nj, nk, t);
        addv(mid, t, p);
        FpVec low, u;
        bracket(ni, basis(j), basis(k), low);
        bracket(basis(i), nj, basis(k), u);
        addv(low, u, p);
        bracket(basis(i), basis(j), nk, u);
        addv(low, u, p);
        FpVec rhs, r2, r3;
        apply(N, mid, rhs);
        apply(M2, low, r2);
        apply(M3, col, r3);
        // rhs - r2 + r3 must equal lhs
        for (int s = 0; s < n; ++s) {
          std::uint32_t want = (rhs[s] + p - r2[s] + r3[s]) % p;
          if (lhs[s] != want) return false;
        }
        return true;
      }
      case OpClass::reynolds: {
        const std::uint32_t* R = M[0];
        FpVec ri = column(R, i), rj = column(R, j), rk = column(R, k);
        FpVec lhs, inner, t;
        bracket(ri, rj, rk, lhs);
        bracket(ri, rj, basis(k), inner);
        bracket(ri, basis(j), rk, t);
        addv(inner, t, p);
        bracket(basis(i), rj, rk, t);
        addv(inner, t, p);
        for (int s = 0; s < n; ++s) inner[s] = (inner[s] + p - lhs[s]) % p;
        FpVec rhs;
        apply(R, inner, rhs);
        return eq(lhs, rhs);
      }
      case OpClass::centroid: {
        const std::uint32_t* H = M[0];
        FpVec e0, e1, e2, e3;
        apply(H, col, e0);
        bracket(column(H, i), basis(j), basis(k), e1);
        bracket(basis(i), column(H, j), basis(k), e2);
        bracket(basis(i), basis(j), column(H, k), e3);
        return eq(e0, e1) && eq(e0, e2) && eq(e0, e3);
      }
      case OpClass::averaging_compatibility:
        throw WrongTupleArity("averaging-compatibility is a binary-algebra condition");
    }
    return false;
  }

  bool check(OpClass cls) {
    prepare(cls);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!check_triple(cls, i, j, k)) return false;
    return true;
  }
};

}  // namespace detail

// Exhaustive solution set of one operator class over F_p.
struct FpSolutionSet {
  std::uint32_t p = 0;
  OpClass cls = OpClass::centroid;
  int dim = 0;
  int tuple_size = 0;
  std::vector<std::uint32_t> weights;  // residues tried (just {0} for weightless classes)
  // weight residue -> lexicographically ordered flat candidates (tuple
  // matrices concatenated row-major).
  std::map<std::uint32_t, std::vector<std::vector<std::uint8_t>>> solutions;
  std::uint64_t candidates = 0;

  std::size_t count(std::uint32_t w) const {
    auto it = solutions.find(w);
    return it == solutions.end() ? 0 : it->second.size();
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [w, v] : solutions) t += v.size();
    return t;
  }
};

inline std::uint64_t pow_checked(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Brute-force enumeration of every operator tuple over F_p satisfying the
// class identity on T.  Deterministic lexicographic candidate order.
inline FpSolutionSet enumerate_over_fp(const TernaryStructure& T, OpClass cls, std::uint32_t p,
                                       std::vector<std::uint32_t> weights = {0},
                                       const std::map<std::string, std::uint32_t>& bind = {},
                                       const FpTernary* pre = nullptr) {
  require_prime(p);
  if (!opclass_uses_weight(cls))
    for (std::uint32_t w : weights)
      if (w % p != 0) throw Error("weightless class given a nonzero weight");
  FpTernary ft = pre ? *pre : reduce_mod_p(T, p, bind);
  const int n = ft.n;
  if (n > detail::kMaxDim) throw DimensionMismatch("enumeration supports dimension <= 4");
  const int tuple = tuple_arity(cls, 3);
  const std::uint32_t unknowns = (std::uint32_t)(tuple * n * n);
  if (pow_checked(p, unknowns, kSearchSpaceGuard) > kSearchSpaceGuard)
    throw SearchSpaceTooLarge("p^" + std::to_string(unknowns) + " exceeds the candidate guard");

  FpSolutionSet out;
  out.p = p;
  out.cls = cls;
  out.dim = n;
  out.tuple_size = tuple;
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  out.weights = weights;
  for (std::uint32_t w : weights) out.solutions[w];  // fix key order

  std::vector<std::uint8_t> digits(unknowns, 0);
  detail::FpTernaryChecker chk(ft);
  std::vector<std::uint32_t> flat(unknowns, 0);
  for (;;) {
    ++out.candidates;
    for (std::uint32_t i = 0; i < unknowns; ++i) flat[i] = digits[i];
    for (int t = 0; t < tuple; ++t) chk.M[t] = flat.data() + (std::size_t)t * n * n;
    for (std::uint32_t w : weights) {
      chk.lam = w % p;
      if (chk.check(cls)) out.solutions[w].push_back(digits);
    }
    // odometer, most significant digit first
    int pos = (int)unknowns - 1;
    while (pos >= 0) {
      if (++digits[(std::size_t)pos] < p) break;
      digits[(std::size_t)pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

// Rank of the operator linear system after reduction mod p (Gaussian
// elimination over F_p).  Throws NonInvertibleDenominator / RootHasNoResidue
// if a coefficient cannot be reduced.
inline std::size_t fp_rank(const LinearSystem& sys, std::uint32_t p) {
  Fp fp(p);
  std::vector<std::vector<std::uint32_t>> m;
  m.reserve(sys.rows.size());
  for (const auto& row : sys.rows) {
    std::vector<std::uint32_t> r(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) r[i] = fp.reduce_field_element(row[i]);
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < sys.unknowns && rank < m.size(); ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    std::uint32_t inv = fp.inv(m[rank][c]);
    for (std::size_t j = c; j < sys.unknowns; ++j)
      m[rank][j] = (std::uint32_t)((std::uint64_t)m[rank][j] * inv % p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      std::uint64_t f = m[r][c];
      for (std::size_t j = c; j < sys.unknowns; ++j)
        m[r][j] = (std::uint32_t)((m[r][j] + (p - f % p) * m[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

inline std::size_t fp_nullspace_dimension(const LinearSystem& sys, std::uint32_t p) {
  return sys.unknowns - fp_rank(sys, p);
}

// One published solution family: a symbolic matrix tuple whose free entries
// sweep the whole field.
struct OperatorFamily {
  std::string id;
  std::vector<Mat> mats;
};

// Containment audit: does a list of families cover every F_p solution?
struct CompletenessReport {
  OpClass cls = OpClass::centroid;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> weights;
  std::uint64_t family_points = 0;   // parameter assignments visited
  std::uint64_t skipped_points = 0;  // denominator/root obstructions
  std::size_t family_count = 0;      // |S_F| (dedup, identity-satisfying)
  std::size_t all_count = 0;         // |S_all| from exhaustive enumeration
  bool contained = true;             // no family instance fails the identity
  bool complete = true;              // S_all subset of S_F
  std::vector<std::string> extraneous;  // family instances failing the identity
  std::vector<std::string> missing;     // solutions outside every family
};

namespace detail {

inline std::string render_candidate(const std::vector<std::uint8_t>& digits, int tuple, int n,
                                    OpClass cls, std::uint32_t w) {
  std::string s;
  if (opclass_uses_weight(cls)) s += "w=" + std::to_string(w) + " ";
  std::size_t at = 0;
  for (int t = 0; t < tuple; ++t) {
    if (t) s += " | ";
    s += "[";
    for (int r = 0; r < n; ++r) {
      if (r) s += ",";
      s += "[";
      for (int c = 0; c < n; ++c) {
        if (c) s += ",";
        s += std::to_string((int)digits[at++]);
      }
      s += "]";
    }
    s += "]";
  }
  return s;
}

inline std::string render_assignment(const std::vector<std::string>& names,
                                     const std::vector<std::uint8_t>& vals) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ", ";
    s += names[i] + "=" + std::to_string((int)vals[i]);
  }
  return s + "}";
}

}  // namespace detail

// Sweeps every family over all parameter residues mod p and compares the
// resulting matrix set with the exhaustive solution set.
inline CompletenessReport completeness_report(const TernaryStructure& T, OpClass cls,
                                              std::uint32_t p,
                                              const std::vector<OperatorFamily>& families,
                                              std::vector<std::uint32_t> weights = {0},
                                              const std::map<std::string, std::uint32_t>& bind =
                                                  {}) {
  require_prime(p);
  Fp fp(p);
  FpTernary ft = reduce_mod_p(T, p, bind);
  const int n = ft.n;
  const int tuple = tuple_arity(cls, 3);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

  CompletenessReport rep;
  rep.cls = cls;
  rep.p = p;
  rep.weights = weights;

  std::map<std::uint32_t, std::set<std::vector<std::uint8_t>>> covered;
  detail::FpTernaryChecker chk(ft);

  for (std::uint32_t w : weights) {
    for (const auto& fam : families) {
      if ((int)fam.mats.size() != tuple)
        throw WrongTupleArity("family '" + fam.id + "' has the wrong tuple size");
      // Family parameters: every variable in the entries except bound ones
      // and the weight symbol, which tracks the enumeration weight.
      std::set<std::string> var_set;
      for (const auto& m : fam.mats)
        for (const auto& v : m.variables()) var_set.insert(v);
      var_set.erase("lambda");
      for (const auto& [k, v] : bind) var_set.erase(k);
      std::vector<std::string> vars(var_set.begin(), var_set.end());

      std::vector<std::uint8_t> assig(vars.size(), 0);
      for (;;) {
        ++rep.family_points;
        std::map<std::string, std::uint32_t> full = bind;
        full["lambda"] = w;
        for (std::size_t i = 0; i < vars.size(); ++i) full[vars[i]] = assig[i];
        std::vector<std::uint8_t> digits;
        digits.reserve((std::size_t)tuple * n * n);
        bool ok = true;
        try {
          for (const auto& m : fam.mats)
            for (int r = 0; r < n; ++r)
              for (int c = 0; c < n; ++c)
                digits.push_back((std::uint8_t)fp.reduce_ratfunc(m.at(r, c), full));
        } catch (const NonInvertibleDenominator&) {
          ok = false;
        } catch (const RootHasNoResidue&) {
          ok = false;
        }
        if (!ok) {
          ++rep.skipped_points;
        } else {
          std::vector<std::uint32_t> flat(digits.begin(), digits.end());
          for (int t = 0; t < tuple; ++t) chk.M[t] = flat.data() + (std::size_t)t * n * n;
          chk.lam = w % p;
          if (chk.check(cls)) {
            covered[w].insert(digits);
          } else {
            rep.contained = false;
            rep.extraneous.push_back(fam.id + " " +
                                     detail::render_assignment(vars, assig) + " -> " +
                                     detail::render_candidate(digits, tuple, n, cls, w));
          }
        }
        // advance the assignment odometer
        std::size_t pos = vars.size();
        while (pos > 0) {
          if (++assig[pos - 1] < p) break;
          assig[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
  }

  FpSolutionSet all = enumerate_over_fp(T, cls, p, weights, bind, &ft);
  for (std::uint32_t w : weights) {
    rep.family_count += covered[w].size();
    rep.all_count += all.count(w);
    for (const auto& sol : all.solutions[w])
      if (!covered[w].count(sol)) {
        rep.complete = false;
        rep.missing.push_back(detail::render_candidate(sol, tuple, n, cls, w));
      }
  }
  return rep;
}

// Pair variant: the tuple must satisfy the class on both brackets.
inline FpSolutionSet enumerate_over_fp(const TernaryStructure& T1, const TernaryStructure& T2,
                                       OpClass cls, std::uint32_t p,
                                       std::vector<std::uint32_t> weights = {0},
                                       const std::map<std::string, std::uint32_t>& bind = {}) {
  FpTernary f1 = reduce_mod_p(T1, p, bind), f2 = reduce_mod_p(T2, p, bind);
  if (f1.n != f2.n) throw DimensionMismatch("pair enumeration requires equal dimensions");
  const int n = f1.n;
  const int tuple = tuple_arity(cls, 3);
  const std::uint32_t unknowns = (std::uint32_t)(tuple * n * n);
  if (pow_checked(p, unknowns, kSearchSpaceGuard) > kSearchSpaceGuard)
    throw SearchSpaceTooLarge("p^" + std::to_string(unknowns) + " exceeds the candidate guard");

  FpSolutionSet out;
  out.p = p;
  out.cls = cls;
  out.dim = n;
  out.tuple_size = tuple;
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  out.weights = weights;
  for (std::uint32_t w : weights) out.solutions[w];

  std::vector<std::uint8_t> digits(unknowns, 0);
  detail::FpTernaryChecker c1(f1), c2(f2);
  std::vector<std::uint32_t> flat(unknowns, 0);
  for (;;) {
    ++out.candidates;
    for (std::uint32_t i = 0; i < unknowns; ++i) flat[i] = digits[i];
    for (int t = 0; t < tuple; ++t) {
      c1.M[t] = flat.data() + (std::size_t)t * n * n;
      c2.M[t] = flat.data() + (std::size_t)t * n * n;
    }
    for (std::uint32_t w : weights) {
      c1.lam = c2.lam = w % p;
      if (c1.check(cls) && c2.check(cls)) out.solutions[w].push_back(digits);
    }
    int pos = (int)unknowns - 1;
    while (pos >= 0) {
      if (++digits[(std::size_t)pos] < p) break;
      digits[(std::size_t)pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace tleib
