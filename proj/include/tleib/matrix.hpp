#pragma once

#include <set>
#include <string>
#include <vector>

#include "tleib/ratfunc.hpp"

namespace tleib {

using Vec = std::vector<RatFunc>;

inline Vec zero_vec(const Field& f, int n) { return Vec((std::size_t)n, RatFunc(f)); }

inline Vec basis_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[(std::size_t)i] = rf(f, 1);
  return v;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
inline Vec operator*(const RatFunc& k, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= k;
  return r;
}
inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Square matrix over the rational-function field, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, int n) : n_(n), a_((std::size_t)(n * n), RatFunc(f)) {}

  static Mat identity(const Field& f, int n) {
    Mat m(f, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = rf(f, 1);
    return m;
  }
  static Mat scalar(const Field& f, int n, const RatFunc& k) {
    Mat m(f, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = k;
    return m;
  }

  int n() const { return n_; }
  RatFunc& at(int r, int c) { return a_[(std::size_t)(r * n_ + c)]; }
  const RatFunc& at(int r, int c) const { return a_[(std::size_t)(r * n_ + c)]; }
  const std::vector<RatFunc>& entries() const { return a_; }
  std::vector<RatFunc>& entries() { return a_; }

  Vec col(int j) const {
    Vec v;
    v.reserve((std::size_t)n_);
    for (int i = 0; i < n_; ++i) v.push_back(at(i, j));
    return v;
  }

  Vec apply(const Vec& x) const {
    Vec out = zero_vec(field(), n_);
    for (int c = 0; c < n_; ++c) {
      if (x[(std::size_t)c].is_zero()) continue;
      for (int r = 0; r < n_; ++r)
        if (!at(r, c).is_zero()) out[(std::size_t)r] += at(r, c) * x[(std::size_t)c];
    }
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r(a.field(), a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < a.n_; ++j)
          if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }
  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }

  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Field field() const {
    for (const auto& x : a_)
      if (x.field().root_count()) return x.field();
    return a_.empty() ? Field() : a_[0].field();
  }

  std::set<std::string> variables() const {
    std::set<std::string> vs;
    for (const auto& x : a_)
      for (const auto& v : x.variables()) vs.insert(v);
    return vs;
  }

  RatFunc det() const {
    Mat m = *this;
    RatFunc d = rf(field(), 1);
    for (int c = 0; c < n_; ++c) {
      int pivot = -1;
      for (int r = c; r < n_; ++r)
        if (!m.at(r, c).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return RatFunc(field());
      if (pivot != c) {
        for (int j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
        d = -d;
      }
      d *= m.at(c, c);
      for (int r = c + 1; r < n_; ++r) {
        if (m.at(r, c).is_zero()) continue;
        RatFunc factor = m.at(r, c) / m.at(c, c);
        for (int j = c; j < n_; ++j) m.at(r, j) -= factor * m.at(c, j);
      }
    }
    return d;
  }

  // Gauss-Jordan inverse; pivots are exact nonzero tests on rational
  // functions, so a parametric matrix inverts generically.
  Mat inverse() const {
    Mat m = *this, inv = identity(field(), n_);
    for (int c = 0; c < n_; ++c) {
      int pivot = -1;
      for (int r = c; r < n_; ++r)
        if (!m.at(r, c).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw SingularMatrix("matrix has no inverse");
      if (pivot != c)
        for (int j = 0; j < n_; ++j) {
          std::swap(m.at(pivot, j), m.at(c, j));
          std::swap(inv.at(pivot, j), inv.at(c, j));
        }
      RatFunc lead = m.at(c, c);
      for (int j = 0; j < n_; ++j) {
        m.at(c, j) = m.at(c, j) / lead;
        inv.at(c, j) = inv.at(c, j) / lead;
      }
      for (int r = 0; r < n_; ++r) {
        if (r == c || m.at(r, c).is_zero()) continue;
        RatFunc factor = m.at(r, c);
        for (int j = 0; j < n_; ++j) {
          m.at(r, j) -= factor * m.at(c, j);
          inv.at(r, j) -= factor * inv.at(c, j);
        }
      }
    }
    return inv;
  }

 private:
  int n_ = 0;
  std::vector<RatFunc> a_;
};

}  // namespace tleib
