#pragma once

#include <string>
#include <vector>

#include "tleib/operators.hpp"

namespace tleib {

// {x,y,z} = [x,[y,z]]: a binary Leibniz bracket induces a ternary one.
// chi(i,j,k,p) = sum_r c(j,k,r) c(i,r,p).
inline TernaryStructure induced_ternary(const BinaryStructure& B, bool skip_check = false) {
  if (!skip_check && !B.parametric() && !binary_leibniz_residual(B).identically_zero)
    throw PreconditionFailed("binary bracket does not satisfy the Leibniz identity");
  TernaryStructure T(B.dim(), B.field(), B.params());
  const int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec out = B.bracket(B.e(i), B.column(j, k));
        for (int p = 0; p < n; ++p)
          if (!out[(std::size_t)p].is_zero()) T.set_chi(i, j, k, p, out[(std::size_t)p]);
      }
  return T;
}

namespace detail {
inline std::vector<std::string> with_matrix_params(const std::vector<std::string>& base,
                                                   const Mat& m) {
  std::vector<std::string> params = base;
  for (const auto& v : m.variables())
    if (std::find(params.begin(), params.end(), v) == params.end()) params.push_back(v);
  return params;
}
}  // namespace detail

// [x,y,z]_beta = [beta(x), beta(y), z] for an injective averaging operator.
inline TernaryStructure averaging_induced_ternary(const TernaryStructure& T, const Mat& beta,
                                                  bool skip_check = false) {
  if (beta.n() != T.dim()) throw DimensionMismatch("operator size does not match algebra");
  if (!skip_check) {
    if (!ternary_operator_residual(T, OpClass::averaging, {beta}).identically_zero)
      throw PreconditionFailed("operator is not averaging for the ternary bracket");
    if (beta.det().is_zero())
      throw PreconditionFailed("averaging operator must be injective");
  }
  Field f = T.field().root_count() ? T.field() : beta.field();
  TernaryStructure R(T.dim(), f, detail::with_matrix_params(T.params(), beta));
  const int n = T.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec out = T.bracket(beta.col(i), beta.col(j), T.e(k));
        for (int p = 0; p < n; ++p)
          if (!out[(std::size_t)p].is_zero()) R.set_chi(i, j, k, p, out[(std::size_t)p]);
      }
  return R;
}

// [x,y]_beta = [beta(x), y] for a binary averaging operator.
inline BinaryStructure averaging_induced_binary(const BinaryStructure& B, const Mat& beta,
                                                bool skip_check = false) {
  if (beta.n() != B.dim()) throw DimensionMismatch("operator size does not match algebra");
  if (!skip_check) {
    if (!binary_operator_residual(B, OpClass::averaging, {beta}).identically_zero)
      throw PreconditionFailed("operator is not averaging for the binary bracket");
    if (beta.det().is_zero())
      throw PreconditionFailed("averaging operator must be injective");
  }
  Field f = B.field().root_count() ? B.field() : beta.field();
  BinaryStructure R(B.dim(), f, detail::with_matrix_params(B.params(), beta));
  const int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec out = B.bracket(beta.col(i), B.e(j));
      for (int p = 0; p < n; ++p)
        if (!out[(std::size_t)p].is_zero()) R.set_c(i, j, p, out[(std::size_t)p]);
    }
  return R;
}

// Deformed bracket along a Nijenhuis operator.  Two published shapes of the
// last term exist; both are implemented and the choice is always recorded:
//   literal:  [x,y]_N = [Nx,y] + [x,Ny] - [x,y]
//   operator: [x,y]_N = [Nx,y] + [x,Ny] - N([x,y])
enum class NijenhuisVariant { literal, operator_form };

inline const char* variant_name(NijenhuisVariant v) {
  return v == NijenhuisVariant::literal ? "paper" : "standard";
}
inline NijenhuisVariant variant_from_name(const std::string& s) {
  if (s == "paper") return NijenhuisVariant::literal;
  if (s == "standard") return NijenhuisVariant::operator_form;
  throw SchemaError("unknown variant '" + s + "' (expected paper|standard)");
}

inline BinaryStructure nijenhuis_deformed_binary(const BinaryStructure& B, const Mat& N,
                                                 NijenhuisVariant variant,
                                                 bool skip_check = false) {
  if (N.n() != B.dim()) throw DimensionMismatch("operator size does not match algebra");
  if (!skip_check &&
      !binary_operator_residual(B, OpClass::nijenhuis, {N}).identically_zero)
    throw PreconditionFailed("operator does not satisfy the Nijenhuis identity");
  Field f = B.field().root_count() ? B.field() : N.field();
  BinaryStructure R(B.dim(), f, detail::with_matrix_params(B.params(), N));
  const int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec col = B.column(i, j);
      Vec out = B.bracket(N.col(i), B.e(j)) + B.bracket(B.e(i), N.col(j)) -
                (variant == NijenhuisVariant::literal ? col : N.apply(col));
      for (int p = 0; p < n; ++p)
        if (!out[(std::size_t)p].is_zero()) R.set_c(i, j, p, out[(std::size_t)p]);
    }
  return R;
}

// Lift audit: given operators satisfying a class condition on a binary
// Leibniz algebra (with the chain equations linking auxiliary maps), report
// whether the corresponding ternary condition holds on the induced ternary
// algebra [x,[y,z]].
struct LiftReport {
  std::string status;           // PASS | FAIL
  ResidualReport precondition;  // binary class + chain residuals
  ResidualReport conclusion;    // ternary class residual on the induced algebra
};

namespace detail {

// Chain equation residual D2[x,y] = [D0 x, y] + [x, D1 y].
inline void add_binary_chain(ResidualReport& rep, const BinaryStructure& B, const Mat& d0,
                             const Mat& d1, const Mat& d2, const std::string& tag) {
  const int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec r = d2.apply(B.column(i, j)) - B.bracket(d0.col(i), B.e(j)) -
              B.bracket(B.e(i), d1.col(j));
      rep.add({i, j}, r, tag);
    }
}

}  // namespace detail

inline LiftReport lift_check(const BinaryStructure& B, OpClass cls,
                             const std::vector<Mat>& mats, const RatFunc& weight = RatFunc()) {
  LiftReport rep;
  switch (cls) {
    case OpClass::central_derivation:
    case OpClass::averaging:
    case OpClass::rota_baxter:
    case OpClass::nijenhuis:
    case OpClass::reynolds:
    case OpClass::centroid: {
      rep.precondition = binary_operator_residual(B, cls, mats, weight);
      TernaryStructure T = induced_ternary(B);
      rep.conclusion = ternary_operator_residual(T, cls, mats, weight);
      break;
    }
    case OpClass::generalized_derivation: {
      // Binary tuple (D, D', D'', D''') with both chain equations; the
      // ternary tuple is (D, D, D', D''').
      if (mats.size() != 4)
        throw WrongTupleArity("generalized-derivation lift takes 4 matrices");
      rep.precondition =
          binary_operator_residual(B, OpClass::generalized_derivation,
                                   {mats[0], mats[1], mats[2]});
      detail::add_binary_chain(rep.precondition, B, mats[0], mats[2], mats[3], "chain2");
      rep.precondition.identically_zero = rep.precondition.entries.empty();
      TernaryStructure T = induced_ternary(B);
      rep.conclusion = ternary_operator_residual(T, OpClass::generalized_derivation,
                                                 {mats[0], mats[0], mats[1], mats[3]});
      break;
    }
    case OpClass::quasiderivation: {
      // Binary tuple (D, D', D'') chained twice; the ternary pair is (D, D'').
      if (mats.size() != 3) throw WrongTupleArity("quasiderivation lift takes 3 matrices");
      rep.precondition = binary_operator_residual(B, OpClass::quasiderivation,
                                                  {mats[0], mats[1]});
      detail::add_binary_chain(rep.precondition, B, mats[1], mats[1], mats[2], "chain2");
      rep.precondition.identically_zero = rep.precondition.entries.empty();
      TernaryStructure T = induced_ternary(B);
      rep.conclusion =
          ternary_operator_residual(T, OpClass::quasiderivation, {mats[0], mats[2]});
      break;
    }
    case OpClass::derivation_weighted: {
      // A binary weight-w derivation satisfies D[x,[y,z]] = (three slot
      // terms) + 2w [x,[y,z]], so it lifts to the generalized-derivation
      // tuple (D, D, D, D - 2w id) on the induced ternary bracket.
      if (mats.size() != 1) throw WrongTupleArity("derivation lift takes 1 matrix");
      rep.precondition =
          binary_operator_residual(B, OpClass::derivation_weighted, mats, weight);
      TernaryStructure T = induced_ternary(B);
      Field f = mats[0].field().root_count() ? mats[0].field() : B.field();
      Mat shifted = mats[0] - Mat::scalar(f, B.dim(), rf(f, 2) * weight);
      rep.conclusion = ternary_operator_residual(
          T, OpClass::generalized_derivation, {mats[0], mats[0], mats[0], shifted});
      break;
    }
    default:
      throw Error(std::string("no lift is defined for class ") + opclass_name(cls));
  }
  if (!rep.precondition.identically_zero)
    throw PreconditionFailed("operators do not satisfy the binary hypothesis");
  rep.status = rep.conclusion.identically_zero ? "PASS" : "FAIL";
  return rep;
}

// Pair lift: both binary brackets must be Leibniz, compatible, and carry the
// class; the induced ternary brackets are checked for compatibility before
// the lifted class conditions.
inline LiftReport lift_check(const BinaryStructure& B1, const BinaryStructure& B2, OpClass cls,
                             const std::vector<Mat>& mats, const RatFunc& weight = RatFunc()) {
  if (!binary_compatibility_residual(B1, B2).identically_zero)
    throw PreconditionFailed("binary brackets are not compatible");
  TernaryStructure T1 = induced_ternary(B1);
  TernaryStructure T2 = induced_ternary(B2);
  if (!ternary_compatibility_residual(T1, T2).identically_zero)
    throw PreconditionFailed("induced ternary brackets are not compatible");

  LiftReport a = lift_check(B1, cls, mats, weight);
  LiftReport b = lift_check(B2, cls, mats, weight);
  LiftReport rep;
  rep.precondition = a.precondition;
  for (auto& e : b.precondition.entries) rep.precondition.entries.push_back(std::move(e));
  rep.precondition.identically_zero = rep.precondition.entries.empty();
  rep.precondition.merge_side_conditions(b.precondition);
  rep.conclusion = a.conclusion;
  for (auto& e : b.conclusion.entries) rep.conclusion.entries.push_back(std::move(e));
  rep.conclusion.identically_zero = rep.conclusion.entries.empty();
  rep.conclusion.merge_side_conditions(b.conclusion);
  rep.status = rep.conclusion.identically_zero ? "PASS" : "FAIL";
  return rep;
}

}  // namespace tleib
