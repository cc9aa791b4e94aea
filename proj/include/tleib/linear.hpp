#pragma once

#include <string>
#include <vector>

#include "tleib/operators.hpp"

namespace tleib {

// Homogeneous linear system A u = 0 over the scalar field, rows indexed by
// residual components, unknowns by operator-matrix entries (row-major, tuple
// order).
struct LinearSystem {
  std::size_t unknowns = 0;
  int dim = 0;
  int tuple_size = 0;
  std::vector<std::vector<FieldElement>> rows;
};

struct NullspaceResult {
  std::size_t rank = 0;
  std::vector<std::vector<FieldElement>> basis;  // echelon-normalized
};

namespace detail {

inline std::string unknown_name(std::size_t i) { return "u" + std::to_string(i); }

inline std::vector<Mat> symbolic_tuple(const Field& f, int count, int n) {
  std::vector<Mat> mats;
  std::size_t next = 0;
  for (int t = 0; t < count; ++t) {
    Mat m(f, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = RatFunc::variable(f, unknown_name(next++));
    mats.push_back(std::move(m));
  }
  return mats;
}

template <typename Structure>
LinearSystem linear_system_impl(const Structure& S, OpClass cls, const RatFunc& weight) {
  if (S.parametric())
    throw ParametricAlgebra("linear system requires numeric structure constants");
  if (!weight.is_zero())
    throw NonlinearClass("only weight 0 keeps the operator identity linear");
  const int n = S.dim();
  const int count = tuple_arity(cls, Structure::arity);
  LinearSystem sys;
  sys.dim = n;
  sys.tuple_size = count;
  sys.unknowns = (std::size_t)count * n * n;
  std::vector<Mat> mats = symbolic_tuple(S.field(), count, n);

  ResidualReport rep;
  if constexpr (Structure::arity == 3)
    rep = ternary_operator_residual(S, cls, mats, RatFunc(S.field()));
  else
    rep = binary_operator_residual(S, cls, mats, RatFunc(S.field()));

  for (const auto& entry : rep.entries) {
    if (!entry.value.is_polynomial())
      throw NonlinearClass("operator identity divides by the unknowns");
    std::vector<FieldElement> row(sys.unknowns, FieldElement(S.field()));
    bool nonzero = false;
    for (const auto& [mono, coeff] : entry.value.num().terms()) {
      if (mono.empty() || total_degree(mono) > 1)
        throw NonlinearClass(std::string("class ") + opclass_name(cls) +
                             " is not linear in the operator entries");
      const std::string& name = mono.begin()->first;
      if (name.empty() || name[0] != 'u')
        throw NonlinearClass("unexpected symbol in linear extraction: " + name);
      std::size_t idx = (std::size_t)std::stoul(name.substr(1));
      row[idx] = row[idx] + coeff / entry.value.den().constant_value();
      nonzero = true;
    }
    if (nonzero) sys.rows.push_back(std::move(row));
  }
  return sys;
}

}  // namespace detail

inline LinearSystem linear_system(const TernaryStructure& T, OpClass cls,
                                  const RatFunc& weight = RatFunc()) {
  return detail::linear_system_impl(T, cls, weight);
}
inline LinearSystem linear_system(const BinaryStructure& B, OpClass cls,
                                  const RatFunc& weight = RatFunc()) {
  return detail::linear_system_impl(B, cls, weight);
}

// Stacked system for a compatible pair (condition imposed on both brackets).
inline LinearSystem linear_system(const TernaryStructure& T1, const TernaryStructure& T2,
                                  OpClass cls, const RatFunc& weight = RatFunc()) {
  LinearSystem a = linear_system(T1, cls, weight);
  LinearSystem b = linear_system(T2, cls, weight);
  for (auto& r : b.rows) a.rows.push_back(std::move(r));
  return a;
}

// Reduced row echelon form over the exact field; pivots are chosen
// deterministically (first nonzero entry scanning rows in order).
inline NullspaceResult nullspace(const LinearSystem& sys) {
  std::vector<std::vector<FieldElement>> m = sys.rows;
  const std::size_t cols = sys.unknowns;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    FieldElement inv = m[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      FieldElement f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] - f * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }

  NullspaceResult res;
  res.rank = rank;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  Field field;
  if (!m.empty() && !m[0].empty()) field = m[0][0].field();
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols, FieldElement(field));
    v[free] = FieldElement::one(field);
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
    res.basis.push_back(std::move(v));
  }
  return res;
}

// Nullspace vectors reshaped back into operator-matrix tuples.
inline std::vector<std::vector<Mat>> reshape_solutions(const LinearSystem& sys,
                                                       const NullspaceResult& ns,
                                                       const Field& f) {
  std::vector<std::vector<Mat>> out;
  for (const auto& v : ns.basis) {
    std::vector<Mat> tuple;
    std::size_t at = 0;
    for (int t = 0; t < sys.tuple_size; ++t) {
      Mat m(f, sys.dim);
      for (int r = 0; r < sys.dim; ++r)
        for (int c = 0; c < sys.dim; ++c)
          m.at(r, c) = RatFunc::constant(f, v[at++]);
      tuple.push_back(std::move(m));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

// Rank of a rectangular FieldElement matrix (helper for invariants).
inline std::size_t matrix_rank(std::vector<std::vector<FieldElement>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    FieldElement inv = m[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      FieldElement f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace tleib
