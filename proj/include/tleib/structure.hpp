#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tleib/matrix.hpp"

namespace tleib {

// One nonzero component of a residual tensor.  `args` are the 1-based basis
// indices fed to the identity, `coord` the 1-based output coordinate, `eq`
// names the equation when an identity expands to several (chains).
struct ResidualEntry {
  std::vector<int> args;
  int coord = 0;
  std::string eq;
  RatFunc value;
};

struct ResidualReport {
  bool identically_zero = true;
  std::vector<ResidualEntry> entries;
  std::vector<std::string> side_conditions;  // nonconstant denominators met on the way

  void add(const std::vector<int>& args0, const Vec& value, const std::string& eq = "") {
    for (std::size_t p = 0; p < value.size(); ++p) {
      collect_side_condition(value[p]);
      if (value[p].is_zero()) continue;
      identically_zero = false;
      ResidualEntry e;
      e.args.reserve(args0.size());
      for (int a : args0) e.args.push_back(a + 1);
      e.coord = (int)p + 1;
      e.eq = eq;
      e.value = value[p];
      entries.push_back(std::move(e));
    }
  }

  void collect_side_condition(const RatFunc& v) {
    if (v.is_polynomial()) return;
    std::string s = v.den().str();
    if (!std::binary_search(side_conditions.begin(), side_conditions.end(), s))
      side_conditions.insert(
          std::upper_bound(side_conditions.begin(), side_conditions.end(), s), s);
  }

  void merge_side_conditions(const ResidualReport& o) {
    for (const auto& s : o.side_conditions)
      if (!std::binary_search(side_conditions.begin(), side_conditions.end(), s))
        side_conditions.insert(
            std::upper_bound(side_conditions.begin(), side_conditions.end(), s), s);
  }
};

namespace detail {
inline void check_index(int v, int dim, const char* what) {
  if (v < 0 || v >= dim)
    throw DimensionMismatch(std::string(what) + " index " + std::to_string(v + 1) +
                            " outside 1.." + std::to_string(dim));
}
}  // namespace detail

// Ternary algebra by structure constants: [e_i, e_j, e_k] = sum_p chi(i,j,k,p) e_p.
// Entries are rational functions in the declared parameters.
class TernaryStructure {
 public:
  static constexpr int arity = 3;

  TernaryStructure() = default;
  TernaryStructure(int dim, Field field = {}, std::vector<std::string> params = {})
      : dim_(dim),
        field_(std::move(field)),
        params_(std::move(params)),
        chi_((std::size_t)(dim * dim * dim * dim), RatFunc(field_)) {}

  int dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& params() const { return params_; }
  bool parametric() const { return !params_.empty(); }

  const RatFunc& chi(int i, int j, int k, int p) const { return chi_[idx(i, j, k, p)]; }
  void set_chi(int i, int j, int k, int p, RatFunc v) { chi_[idx(i, j, k, p)] = std::move(v); }

  // Output column [e_i, e_j, e_k] as a coordinate vector.
  Vec column(int i, int j, int k) const {
    Vec v;
    v.reserve((std::size_t)dim_);
    for (int p = 0; p < dim_; ++p) v.push_back(chi(i, j, k, p));
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const {
    Vec out = zero_vec(field_, dim_);
    for (int i = 0; i < dim_; ++i) {
      if (x[(std::size_t)i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[(std::size_t)j].is_zero()) continue;
        RatFunc xy = x[(std::size_t)i] * y[(std::size_t)j];
        for (int k = 0; k < dim_; ++k) {
          if (z[(std::size_t)k].is_zero()) continue;
          for (int p = 0; p < dim_; ++p) {
            const RatFunc& c = chi(i, j, k, p);
            if (!c.is_zero()) out[(std::size_t)p] += xy * z[(std::size_t)k] * c;
          }
        }
      }
    }
    return out;
  }

  Vec e(int i) const { return basis_vec(field_, dim_, i); }

  std::vector<std::string> side_conditions() const {
    ResidualReport r;
    for (const auto& c : chi_) r.collect_side_condition(c);
    return r.side_conditions;
  }

  bool operator==(const TernaryStructure& o) const {
    return dim_ == o.dim_ && chi_ == o.chi_;
  }

 private:
  std::size_t idx(int i, int j, int k, int p) const {
    detail::check_index(i, dim_, "bracket");
    detail::check_index(j, dim_, "bracket");
    detail::check_index(k, dim_, "bracket");
    detail::check_index(p, dim_, "output");
    return (std::size_t)(((i * dim_ + j) * dim_ + k) * dim_ + p);
  }

  int dim_ = 0;
  Field field_;
  std::vector<std::string> params_;
  std::vector<RatFunc> chi_;
};

// Binary algebra by structure constants: [e_i, e_j] = sum_p c(i,j,p) e_p.
class BinaryStructure {
 public:
  static constexpr int arity = 2;

  BinaryStructure() = default;
  BinaryStructure(int dim, Field field = {}, std::vector<std::string> params = {})
      : dim_(dim),
        field_(std::move(field)),
        params_(std::move(params)),
        c_((std::size_t)(dim * dim * dim), RatFunc(field_)) {}

  int dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& params() const { return params_; }
  bool parametric() const { return !params_.empty(); }

  const RatFunc& c(int i, int j, int p) const { return c_[idx(i, j, p)]; }
  void set_c(int i, int j, int p, RatFunc v) { c_[idx(i, j, p)] = std::move(v); }

  Vec column(int i, int j) const {
    Vec v;
    v.reserve((std::size_t)dim_);
    for (int p = 0; p < dim_; ++p) v.push_back(c(i, j, p));
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(field_, dim_);
    for (int i = 0; i < dim_; ++i) {
      if (x[(std::size_t)i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[(std::size_t)j].is_zero()) continue;
        RatFunc xy = x[(std::size_t)i] * y[(std::size_t)j];
        for (int p = 0; p < dim_; ++p) {
          const RatFunc& v = c(i, j, p);
          if (!v.is_zero()) out[(std::size_t)p] += xy * v;
        }
      }
    }
    return out;
  }

  Vec e(int i) const { return basis_vec(field_, dim_, i); }

  std::vector<std::string> side_conditions() const {
    ResidualReport r;
    for (const auto& v : c_) r.collect_side_condition(v);
    return r.side_conditions;
  }

  bool operator==(const BinaryStructure& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  std::size_t idx(int i, int j, int p) const {
    detail::check_index(i, dim_, "bracket");
    detail::check_index(j, dim_, "bracket");
    detail::check_index(p, dim_, "output");
    return (std::size_t)((i * dim_ + j) * dim_ + p);
  }

  int dim_ = 0;
  Field field_;
  std::vector<std::string> params_;
  std::vector<RatFunc> c_;
};

}  // namespace tleib
