#pragma once

#include <string>
#include <vector>

#include "tleib/identities.hpp"

namespace tleib {

enum class OpClass {
  central_derivation,
  generalized_derivation,
  quasiderivation,
  derivation_weighted,
  averaging,
  averaging_compatibility,
  rota_baxter,
  nijenhuis,
  reynolds,
  centroid,
};

inline const char* opclass_name(OpClass c) {
  switch (c) {
    case OpClass::central_derivation: return "central-derivation";
    case OpClass::generalized_derivation: return "generalized-derivation";
    case OpClass::quasiderivation: return "quasiderivation";
    case OpClass::derivation_weighted: return "derivation-weighted";
    case OpClass::averaging: return "averaging";
    case OpClass::averaging_compatibility: return "averaging-compatibility";
    case OpClass::rota_baxter: return "rota-baxter";
    case OpClass::nijenhuis: return "nijenhuis";
    case OpClass::reynolds: return "reynolds";
    case OpClass::centroid: return "centroid";
  }
  return "?";
}

inline OpClass opclass_from_name(const std::string& s) {
  for (OpClass c : {OpClass::central_derivation, OpClass::generalized_derivation,
                    OpClass::quasiderivation, OpClass::derivation_weighted, OpClass::averaging,
                    OpClass::averaging_compatibility, OpClass::rota_baxter, OpClass::nijenhuis,
                    OpClass::reynolds, OpClass::centroid})
    if (s == opclass_name(c)) return c;
  throw SchemaError("unknown operator class '" + s + "'");
}

inline bool opclass_uses_weight(OpClass c) {
  return c == OpClass::derivation_weighted || c == OpClass::rota_baxter;
}

// Number of matrices in an operator tuple.  A generalized derivation chains
// one auxiliary map per bracket slot plus the outer map.
inline int tuple_arity(OpClass c, int algebra_arity) {
  switch (c) {
    case OpClass::generalized_derivation: return algebra_arity + 1;
    case OpClass::quasiderivation: return 2;
    case OpClass::averaging_compatibility:
      if (algebra_arity != 2)
        throw WrongTupleArity("averaging-compatibility is a binary-algebra condition");
      return 2;
    default: return 1;
  }
}

namespace detail {

inline void validate_tuple(OpClass cls, int algebra_arity, const std::vector<Mat>& mats, int dim,
                           const RatFunc& weight) {
  if ((int)mats.size() != tuple_arity(cls, algebra_arity))
    throw WrongTupleArity(std::string("class ") + opclass_name(cls) + " takes " +
                          std::to_string(tuple_arity(cls, algebra_arity)) +
                          " matrices, got " + std::to_string(mats.size()));
  for (const auto& m : mats)
    if (m.n() != dim) throw DimensionMismatch("operator matrix size does not match algebra");
  if (!opclass_uses_weight(cls) && !weight.is_zero())
    throw Error(std::string("class ") + opclass_name(cls) + " does not take a weight");
}

inline void collect_operator_side_conditions(ResidualReport& rep, const std::vector<Mat>& mats,
                                             const RatFunc& weight) {
  for (const auto& m : mats)
    for (const auto& v : m.entries()) rep.collect_side_condition(v);
  rep.collect_side_condition(weight);
}

// All-pairwise-difference expansion of an equality chain; `zero_bound` adds
// the individual "= 0" condition for each chain member.
inline void add_chain(ResidualReport& rep, const std::vector<int>& args,
                      const std::vector<Vec>& exprs, bool zero_bound) {
  for (std::size_t a = 0; a < exprs.size(); ++a) {
    if (zero_bound) rep.add(args, exprs[a], "c" + std::to_string(a));
    for (std::size_t b = a + 1; b < exprs.size(); ++b)
      rep.add(args, exprs[a] - exprs[b], "c" + std::to_string(a) + "-c" + std::to_string(b));
  }
}

}  // namespace detail

// Residual of one operator-class identity on a ternary algebra, evaluated on
// all basis triples.  Orientation is LHS - RHS of the defining equation; for
// equality chains every pairwise difference is reported.
inline ResidualReport ternary_operator_residual(const TernaryStructure& T, OpClass cls,
                                                const std::vector<Mat>& mats,
                                                const RatFunc& weight = RatFunc()) {
  detail::validate_tuple(cls, 3, mats, T.dim(), weight);
  ResidualReport rep;
  rep.side_conditions = T.side_conditions();
  detail::collect_operator_side_conditions(rep, mats, weight);
  const int n = T.dim();
  const RatFunc& lam = weight;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec col = T.column(i, j, k);
        std::vector<int> args{i, j, k};
        switch (cls) {
          case OpClass::central_derivation: {
            const Mat& D = mats[0];
            std::vector<Vec> ex{D.apply(col), T.bracket(D.col(i), T.e(j), T.e(k)),
                                T.bracket(T.e(i), D.col(j), T.e(k)),
                                T.bracket(T.e(i), T.e(j), D.col(k))};
            detail::add_chain(rep, args, ex, /*zero_bound=*/true);
            break;
          }
          case OpClass::generalized_derivation: {
            Vec r = mats[3].apply(col) - T.bracket(mats[0].col(i), T.e(j), T.e(k)) -
                    T.bracket(T.e(i), mats[1].col(j), T.e(k)) -
                    T.bracket(T.e(i), T.e(j), mats[2].col(k));
            rep.add(args, r);
            break;
          }
          case OpClass::quasiderivation: {
            const Mat& D = mats[0];
            Vec r = mats[1].apply(col) - T.bracket(D.col(i), T.e(j), T.e(k)) -
                    T.bracket(T.e(i), D.col(j), T.e(k)) -
                    T.bracket(T.e(i), T.e(j), D.col(k));
            rep.add(args, r);
            break;
          }
          case OpClass::derivation_weighted: {
            const Mat& D = mats[0];
            Vec once = T.bracket(D.col(i), T.e(j), T.e(k)) +
                       T.bracket(T.e(i), D.col(j), T.e(k)) +
                       T.bracket(T.e(i), T.e(j), D.col(k));
            Vec twice = T.bracket(D.col(i), D.col(j), T.e(k)) +
                        T.bracket(T.e(i), D.col(j), D.col(k)) +
                        T.bracket(D.col(i), T.e(j), D.col(k));
            Vec thrice = T.bracket(D.col(i), D.col(j), D.col(k));
            Vec r = D.apply(col) - once - lam * twice - (lam * lam) * thrice;
            rep.add(args, r);
            break;
          }
          case OpClass::averaging: {
            const Mat& B = mats[0];
            std::vector<Vec> ex{B.apply(T.bracket(B.col(i), B.col(j), T.e(k))),
                                B.apply(T.bracket(B.col(i), T.e(j), B.col(k))),
                                B.apply(T.bracket(T.e(i), B.col(j), B.col(k))),
                                T.bracket(B.col(i), B.col(j), B.col(k))};
            detail::add_chain(rep, args, ex, /*zero_bound=*/false);
            break;
          }
          case OpClass::rota_baxter: {
            const Mat& R = mats[0];
            Vec lhs = T.bracket(R.col(i), R.col(j), R.col(k));
            Vec inner = T.bracket(R.col(i), R.col(j), T.e(k)) +
                        T.bracket(R.col(i), T.e(j), R.col(k)) +
                        T.bracket(T.e(i), R.col(j), R.col(k)) +
                        lam * (T.bracket(R.col(i), T.e(j), T.e(k)) +
                               T.bracket(T.e(i), R.col(j), T.e(k)) +
                               T.bracket(T.e(i), T.e(j), R.col(k))) +
                        (lam * lam) * col;
            rep.add(args, lhs - R.apply(inner));
            break;
          }
          case OpClass::nijenhuis: {
            const Mat& N = mats[0];
            Mat N2 = N * N;
            Mat N3 = N2 * N;
            Vec lhs = T.bracket(N.col(i), N.col(j), N.col(k));
            Vec mid = T.bracket(N.col(i), N.col(j), T.e(k)) +
                      T.bracket(N.col(i), T.e(j), N.col(k)) +
                      T.bracket(T.e(i), N.col(j), N.col(k));
            Vec low = T.bracket(N.col(i), T.e(j), T.e(k)) +
                      T.bracket(T.e(i), N.col(j), T.e(k)) +
                      T.bracket(T.e(i), T.e(j), N.col(k));
            rep.add(args, lhs - N.apply(mid) + N2.apply(low) - N3.apply(col));
            break;
          }
          case OpClass::reynolds: {
            const Mat& R = mats[0];
            Vec lhs = T.bracket(R.col(i), R.col(j), R.col(k));
            Vec inner = T.bracket(R.col(i), R.col(j), T.e(k)) +
                        T.bracket(R.col(i), T.e(j), R.col(k)) +
                        T.bracket(T.e(i), R.col(j), R.col(k)) - lhs;
            rep.add(args, lhs - R.apply(inner));
            break;
          }
          case OpClass::centroid: {
            const Mat& H = mats[0];
            std::vector<Vec> ex{H.apply(col), T.bracket(H.col(i), T.e(j), T.e(k)),
                                T.bracket(T.e(i), H.col(j), T.e(k)),
                                T.bracket(T.e(i), T.e(j), H.col(k))};
            detail::add_chain(rep, args, ex, /*zero_bound=*/false);
            break;
          }
          case OpClass::averaging_compatibility:
            throw WrongTupleArity("averaging-compatibility is a binary-algebra condition");
        }
      }
  return rep;
}

// Binary counterparts.
inline ResidualReport binary_operator_residual(const BinaryStructure& B, OpClass cls,
                                               const std::vector<Mat>& mats,
                                               const RatFunc& weight = RatFunc()) {
  detail::validate_tuple(cls, 2, mats, B.dim(), weight);
  ResidualReport rep;
  rep.side_conditions = B.side_conditions();
  detail::collect_operator_side_conditions(rep, mats, weight);
  const int n = B.dim();
  const RatFunc& lam = weight;

  if (cls == OpClass::averaging_compatibility) {
    // beta2([beta1(x),y]) and beta1([beta2(x),y]) agree with the two mixed
    // brackets after bracketing with any z.
    const Mat& b1 = mats[0];
    const Mat& b2 = mats[1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs_inner = b2.apply(B.bracket(b1.col(i), B.e(j))) +
                        b1.apply(B.bracket(b2.col(i), B.e(j)));
        Vec rhs_inner = B.bracket(b1.col(i), b2.col(j)) + B.bracket(b2.col(i), b1.col(j));
        for (int k = 0; k < n; ++k) {
          Vec r = B.bracket(lhs_inner, B.e(k)) - B.bracket(rhs_inner, B.e(k));
          rep.add({i, j, k}, r);
        }
      }
    return rep;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec col = B.column(i, j);
      std::vector<int> args{i, j};
      switch (cls) {
        case OpClass::central_derivation: {
          const Mat& D = mats[0];
          std::vector<Vec> ex{D.apply(col), B.bracket(D.col(i), B.e(j)),
                              B.bracket(B.e(i), D.col(j))};
          detail::add_chain(rep, args, ex, /*zero_bound=*/true);
          break;
        }
        case OpClass::generalized_derivation: {
          Vec r = mats[2].apply(col) - B.bracket(mats[0].col(i), B.e(j)) -
                  B.bracket(B.e(i), mats[1].col(j));
          rep.add(args, r);
          break;
        }
        case OpClass::quasiderivation: {
          const Mat& D = mats[0];
          Vec r = mats[1].apply(col) - B.bracket(D.col(i), B.e(j)) -
                  B.bracket(B.e(i), D.col(j));
          rep.add(args, r);
          break;
        }
        case OpClass::derivation_weighted: {
          const Mat& D = mats[0];
          Vec r = D.apply(col) - B.bracket(D.col(i), B.e(j)) - B.bracket(B.e(i), D.col(j)) -
                  lam * col;
          rep.add(args, r);
          break;
        }
        case OpClass::averaging: {
          const Mat& b = mats[0];
          std::vector<Vec> ex{b.apply(B.bracket(b.col(i), B.e(j))),
                              B.bracket(b.col(i), b.col(j)),
                              b.apply(B.bracket(B.e(i), b.col(j)))};
          detail::add_chain(rep, args, ex, /*zero_bound=*/false);
          break;
        }
        case OpClass::rota_baxter: {
          const Mat& R = mats[0];
          Vec lhs = B.bracket(R.col(i), R.col(j));
          Vec inner = B.bracket(R.col(i), B.e(j)) + B.bracket(B.e(i), R.col(j)) + lam * col;
          rep.add(args, lhs - R.apply(inner));
          break;
        }
        case OpClass::nijenhuis: {
          const Mat& N = mats[0];
          Vec lhs = B.bracket(N.col(i), N.col(j));
          Vec r = lhs - N.apply(B.bracket(N.col(i), B.e(j)) + B.bracket(B.e(i), N.col(j))) +
                  (N * N).apply(col);
          rep.add(args, r);
          break;
        }
        case OpClass::reynolds: {
          const Mat& R = mats[0];
          Vec lhs = B.bracket(R.col(i), R.col(j));
          Vec inner = B.bracket(R.col(i), B.e(j)) + B.bracket(B.e(i), R.col(j)) - lhs;
          rep.add(args, lhs - R.apply(inner));
          break;
        }
        case OpClass::centroid: {
          const Mat& H = mats[0];
          std::vector<Vec> ex{H.apply(col), B.bracket(H.col(i), B.e(j)),
                              B.bracket(B.e(i), H.col(j))};
          detail::add_chain(rep, args, ex, /*zero_bound=*/false);
          break;
        }
        case OpClass::averaging_compatibility:;  // handled above
      }
    }
  return rep;
}

// Verdict wrapper used by the conformance machinery.
struct OperatorCheck {
  std::string status;  // PASS | FAIL | SKIPPED
  std::string reason;  // only for SKIPPED
  ResidualReport residual;

  bool pass() const { return status == "PASS"; }
};

inline OperatorCheck make_check(ResidualReport rep) {
  OperatorCheck c;
  c.status = rep.identically_zero ? "PASS" : "FAIL";
  c.residual = std::move(rep);
  return c;
}

inline OperatorCheck verify_family(const TernaryStructure& T, OpClass cls,
                                   const std::vector<Mat>& mats,
                                   const RatFunc& weight = RatFunc()) {
  return make_check(ternary_operator_residual(T, cls, mats, weight));
}
inline OperatorCheck verify_family(const BinaryStructure& B, OpClass cls,
                                   const std::vector<Mat>& mats,
                                   const RatFunc& weight = RatFunc()) {
  return make_check(binary_operator_residual(B, cls, mats, weight));
}

// Compatible pair: the same tuple must satisfy the class on both brackets.
inline OperatorCheck verify_family(const TernaryStructure& T1, const TernaryStructure& T2,
                                   OpClass cls, const std::vector<Mat>& mats,
                                   const RatFunc& weight = RatFunc()) {
  ResidualReport r1 = ternary_operator_residual(T1, cls, mats, weight);
  ResidualReport r2 = ternary_operator_residual(T2, cls, mats, weight);
  ResidualReport merged;
  merged.side_conditions = r1.side_conditions;
  merged.merge_side_conditions(r2);
  merged.identically_zero = r1.identically_zero && r2.identically_zero;
  for (auto& e : r1.entries) {
    e.eq = e.eq.empty() ? "b1" : "b1:" + e.eq;
    merged.entries.push_back(std::move(e));
  }
  for (auto& e : r2.entries) {
    e.eq = e.eq.empty() ? "b2" : "b2:" + e.eq;
    merged.entries.push_back(std::move(e));
  }
  return make_check(std::move(merged));
}

}  // namespace tleib
