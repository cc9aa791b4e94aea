#pragma once

#include <string>
#include <vector>

#include "tleib/structure.hpp"

namespace tleib {

// Defining identity of a (right) ternary Leibniz algebra, as the residual
//   [[x,y,z],t,u] - [x,y,[z,t,u]] - [x,[y,t,u],z] - [[x,t,u],y,z]
// evaluated on all basis 5-tuples.  Residual orientation is LHS - RHS
// throughout this library.
inline ResidualReport ternary_leibniz_residual(const TernaryStructure& T) {
  ResidualReport rep;
  rep.side_conditions = T.side_conditions();
  const int n = T.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec inner_ijk = T.column(i, j, k);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            Vec lhs = T.bracket(inner_ijk, T.e(p), T.e(q));
            Vec rhs = T.bracket(T.e(i), T.e(j), T.column(k, p, q)) +
                      T.bracket(T.e(i), T.column(j, p, q), T.e(k)) +
                      T.bracket(T.column(i, p, q), T.e(j), T.e(k));
            rep.add({i, j, k, p, q}, lhs - rhs);
          }
      }
  return rep;
}

// Binary (right) Leibniz identity residual: [[x,y],z] - [x,[y,z]] - [[x,z],y].
inline ResidualReport binary_leibniz_residual(const BinaryStructure& B) {
  ResidualReport rep;
  rep.side_conditions = B.side_conditions();
  const int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = B.bracket(B.column(i, j), B.e(k));
        Vec rhs = B.bracket(B.e(i), B.column(j, k)) + B.bracket(B.column(i, k), B.e(j));
        rep.add({i, j, k}, lhs - rhs);
      }
  return rep;
}

// Compatibility of two ternary brackets: the mixed Leibniz expansion
//   [[x,y,z]_1,t,u]_2 + [[x,y,z]_2,t,u]_1
//     - [x,y,[z,t,u]_1]_2 - [x,y,[z,t,u]_2]_1
//     - [x,[y,t,u]_1,z]_2 - [x,[y,t,u]_2,z]_1
//     - [[x,t,u]_1,y,z]_2 - [[x,t,u]_2,y,z]_1
// must vanish.  Symmetric under swapping the two structures.
inline ResidualReport ternary_compatibility_residual(const TernaryStructure& A,
                                                     const TernaryStructure& B) {
  if (A.dim() != B.dim())
    throw DimensionMismatch("compatibility check requires equal dimensions");
  ResidualReport rep;
  rep.side_conditions = A.side_conditions();
  ResidualReport tmp;
  tmp.side_conditions = B.side_conditions();
  rep.merge_side_conditions(tmp);
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec in1 = A.column(i, j, k), in2 = B.column(i, j, k);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            Vec lhs = B.bracket(in1, A.e(p), A.e(q)) + A.bracket(in2, B.e(p), B.e(q));
            Vec rhs = B.bracket(A.e(i), A.e(j), A.column(k, p, q)) +
                      A.bracket(B.e(i), B.e(j), B.column(k, p, q)) +
                      B.bracket(A.e(i), A.column(j, p, q), A.e(k)) +
                      A.bracket(B.e(i), B.column(j, p, q), B.e(k)) +
                      B.bracket(A.column(i, p, q), A.e(j), A.e(k)) +
                      A.bracket(B.column(i, p, q), B.e(j), B.e(k));
            rep.add({i, j, k, p, q}, lhs - rhs);
          }
      }
  return rep;
}

// Compatibility of two binary brackets:
//   [[x,y]_1,z]_2 + [[x,y]_2,z]_1 - [x,[y,z]_1]_2 - [x,[y,z]_2]_1
//     - [[x,z]_1,y]_2 - [[x,z]_2,y]_1.
inline ResidualReport binary_compatibility_residual(const BinaryStructure& A,
                                                    const BinaryStructure& B) {
  if (A.dim() != B.dim())
    throw DimensionMismatch("compatibility check requires equal dimensions");
  ResidualReport rep;
  rep.side_conditions = A.side_conditions();
  ResidualReport tmp;
  tmp.side_conditions = B.side_conditions();
  rep.merge_side_conditions(tmp);
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = B.bracket(A.column(i, j), A.e(k)) + A.bracket(B.column(i, j), B.e(k));
        Vec rhs = B.bracket(A.e(i), A.column(j, k)) + A.bracket(B.e(i), B.column(j, k)) +
                  B.bracket(A.column(i, k), A.e(j)) + A.bracket(B.column(i, k), B.e(j));
        rep.add({i, j, k}, lhs - rhs);
      }
  return rep;
}

// Formal pencil k1*[.,.,.]_1 + k2*[.,.,.]_2 with k1, k2 fresh parameters.
inline TernaryStructure pencil(const TernaryStructure& A, const TernaryStructure& B,
                               const std::string& k1 = "k1", const std::string& k2 = "k2") {
  if (A.dim() != B.dim()) throw DimensionMismatch("pencil requires equal dimensions");
  std::vector<std::string> params = A.params();
  for (const auto& p : B.params())
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  for (const auto& k : {k1, k2}) {
    if (std::find(params.begin(), params.end(), k) != params.end())
      throw Error("pencil coefficient name '" + k + "' collides with a structure parameter");
    params.push_back(k);
  }
  Field f = A.field().root_count() ? A.field() : B.field();
  TernaryStructure P(A.dim(), f, params);
  RatFunc v1 = RatFunc::variable(f, k1), v2 = RatFunc::variable(f, k2);
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
          RatFunc v = v1 * A.chi(i, j, k, p) + v2 * B.chi(i, j, k, p);
          if (!v.is_zero()) P.set_chi(i, j, k, p, std::move(v));
        }
  return P;
}

namespace detail {
template <typename Structure>
Structure change_basis_impl(const Structure& S, const Mat& P) {
  if (P.n() != S.dim()) throw DimensionMismatch("basis matrix size mismatch");
  Mat Pinv = P.inverse();
  std::vector<std::string> params = S.params();
  for (const auto& v : P.variables())
    if (std::find(params.begin(), params.end(), v) == params.end()) params.push_back(v);
  Field f = S.field().root_count() ? S.field() : P.field();
  Structure R(S.dim(), f, params);
  const int n = S.dim();
  if constexpr (Structure::arity == 3) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vec out = Pinv.apply(S.bracket(P.col(i), P.col(j), P.col(k)));
          for (int p = 0; p < n; ++p)
            if (!out[(std::size_t)p].is_zero()) R.set_chi(i, j, k, p, out[(std::size_t)p]);
        }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec out = Pinv.apply(S.bracket(P.col(i), P.col(j)));
        for (int p = 0; p < n; ++p)
          if (!out[(std::size_t)p].is_zero()) R.set_c(i, j, p, out[(std::size_t)p]);
      }
  }
  return R;
}
}  // namespace detail

// Structure constants in the basis e'_j = sum_i P(i,j) e_i.
inline TernaryStructure change_basis(const TernaryStructure& T, const Mat& P) {
  return detail::change_basis_impl(T, P);
}
inline BinaryStructure change_basis(const BinaryStructure& B, const Mat& P) {
  return detail::change_basis_impl(B, P);
}

}  // namespace tleib
