#pragma once

#include <string>
#include <vector>

#include "tleib/linear.hpp"

namespace tleib {

// Isomorphism invariants of a (numeric) ternary structure.  Operator
// dimensions are nullspace dimensions of the corresponding linear systems;
// annihilators ask for the bracket to die with a fixed argument slot.
struct InvariantRecord {
  int dim = 0;
  std::size_t centroid_dim = 0;
  std::size_t derivation0_dim = 0;  // weight-0 derivations
  std::size_t central_derivation_dim = 0;
  std::size_t quasiderivation_dim = 0;
  std::size_t left_annihilator_dim = 0;
  std::size_t middle_annihilator_dim = 0;
  std::size_t right_annihilator_dim = 0;
  std::size_t bracket_rank = 0;

  bool operator==(const InvariantRecord&) const = default;
};

namespace detail {

inline FieldElement numeric_entry(const RatFunc& v) {
  if (!v.is_constant())
    throw ParametricAlgebra("invariants require numeric structure constants");
  return v.constant_value();
}

enum class Slot { left, middle, right };

inline std::size_t annihilator_dim(const TernaryStructure& T, Slot slot) {
  const int n = T.dim();
  LinearSystem sys;
  sys.unknowns = (std::size_t)n;
  sys.dim = n;
  sys.tuple_size = 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int s = 0; s < n; ++s) {
        std::vector<FieldElement> row((std::size_t)n, FieldElement(T.field()));
        for (int v = 0; v < n; ++v) {
          const RatFunc& c = slot == Slot::left    ? T.chi(v, a, b, s)
                             : slot == Slot::middle ? T.chi(a, v, b, s)
                                                    : T.chi(a, b, v, s);
          row[(std::size_t)v] = numeric_entry(c);
        }
        sys.rows.push_back(std::move(row));
      }
  return nullspace(sys).basis.size();
}

}  // namespace detail

inline InvariantRecord invariants(const TernaryStructure& T) {
  InvariantRecord rec;
  rec.dim = T.dim();
  rec.centroid_dim = nullspace(linear_system(T, OpClass::centroid)).basis.size();
  rec.derivation0_dim =
      nullspace(linear_system(T, OpClass::derivation_weighted)).basis.size();
  rec.central_derivation_dim =
      nullspace(linear_system(T, OpClass::central_derivation)).basis.size();
  rec.quasiderivation_dim =
      nullspace(linear_system(T, OpClass::quasiderivation)).basis.size();
  rec.left_annihilator_dim = detail::annihilator_dim(T, detail::Slot::left);
  rec.middle_annihilator_dim = detail::annihilator_dim(T, detail::Slot::middle);
  rec.right_annihilator_dim = detail::annihilator_dim(T, detail::Slot::right);

  // Rank of the bracket image: span of all output columns.
  const int n = T.dim();
  std::vector<std::vector<FieldElement>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<FieldElement> row;
        row.reserve((std::size_t)n);
        for (int s = 0; s < n; ++s) row.push_back(detail::numeric_entry(T.chi(i, j, k, s)));
        rows.push_back(std::move(row));
      }
  rec.bracket_rank = matrix_rank(std::move(rows));
  return rec;
}

}  // namespace tleib
