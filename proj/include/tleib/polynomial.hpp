#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tleib/field.hpp"

namespace tleib {

// Exponent map, positive exponents only.  x*x*y <-> {x:2, y:1}.
using Monomial = std::map<std::string, int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

// Graded lexicographic order: compare total degree first, then lex with
// alphabetically earlier variables more significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (ia->first != ib->first) return ia->first > ib->first;
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    }
    return false;  // equal degree and all shared prefixes equal => equal
  }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) r[v] += e;
  return r;
}

// a / b when b divides a, else nullopt.
inline std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) {
    auto it = r.find(v);
    if (it == r.end() || it->second < e) return std::nullopt;
    it->second -= e;
    if (it->second == 0) r.erase(it);
  }
  return r;
}

// Multivariate polynomial with FieldElement coefficients, stored in canonical
// graded-lex order with no zero terms.
class Polynomial {
 public:
  using Terms = std::map<Monomial, FieldElement, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(Field f) : field_(std::move(f)) {}
  Polynomial(Field f, const FieldElement& c) : field_(std::move(f)) {
    if (!c.is_zero()) t_[Monomial{}] = c;
  }

  static Polynomial constant(const Field& f, const FieldElement& c) { return {f, c}; }
  static Polynomial constant(const Field& f, const Rat& r) { return {f, FieldElement(f, r)}; }
  static Polynomial variable(const Field& f, const std::string& name) {
    Polynomial p(f);
    p.t_[Monomial{{name, 1}}] = FieldElement::one(f);
    return p;
  }

  const Field& field() const { return field_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
  }
  FieldElement constant_value() const {
    auto it = t_.find(Monomial{});
    return it == t_.end() ? FieldElement(field_) : it->second;
  }
  int degree() const { return t_.empty() ? -1 : total_degree(t_.rbegin()->first); }

  const Monomial& leading_monomial() const { return t_.rbegin()->first; }
  const FieldElement& leading_coefficient() const { return t_.rbegin()->second; }

  std::set<std::string> variables() const {
    std::set<std::string> vs;
    for (const auto& [m, c] : t_)
      for (const auto& [v, e] : m) vs.insert(v);
    return vs;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r.field_ = a.merged_field(b);
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r.field_ = a.merged_field(b);
    for (const auto& [m, c] : b.t_) r.add_term(m, -c);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(field_);
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.merged_field(b));
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Polynomial scaled(const FieldElement& k) const {
    Polynomial r(field_);
    if (k.is_zero()) return r;
    for (const auto& [m, c] : t_) r.add_term(m, c * k);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const { return t_ == o.t_; }
  bool operator!=(const Polynomial& o) const { return t_ != o.t_; }

  // Full evaluation; every live variable must be bound.
  FieldElement substitute(const std::map<std::string, FieldElement>& bind) const {
    FieldElement acc(field_);
    for (const auto& [m, c] : t_) {
      FieldElement term = c;
      for (const auto& [v, e] : m) {
        auto it = bind.find(v);
        if (it == bind.end()) throw MissingParameter("no binding for parameter " + v);
        for (int q = 0; q < e; ++q) term *= it->second;
      }
      acc += term;
    }
    return acc;
  }

  // Exact single-divisor division; nullopt when not an exact multiple.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    Polynomial q(a.field_), r = a;
    const Monomial& lb = b.leading_monomial();
    const FieldElement& cb = b.leading_coefficient();
    while (!r.is_zero()) {
      auto m = mono_div(r.leading_monomial(), lb);
      if (!m) return std::nullopt;
      Polynomial t(a.field_);
      t.t_[*m] = r.leading_coefficient() / cb;
      q += t;
      r -= t * b;
    }
    return q;
  }

  // Canonical text, leading (graded-lex greatest) term first.
  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = false;
      std::string cs;
      if (c.coords().size() == 1) {  // single basis part: sign can be extracted
        auto [mask, v] = *c.coords().begin();
        neg = v < 0;
        FieldElement av = neg ? -c : c;
        cs = av.str();
        if (!m.empty() && av == FieldElement::one(field_)) cs.clear();
      } else {
        cs = (m.empty() && out.empty()) ? c.str() : "(" + c.str() + ")";
      }
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string ms = mono_str(m);
      if (ms.empty())
        out += cs.empty() ? "1" : cs;
      else if (cs.empty())
        out += ms;
      else
        out += cs + "*" + ms;
    }
    return out;
  }

 private:
  static std::string mono_str(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m)
      for (int q = 0; q < e; ++q) {
        if (!s.empty()) s += "*";
        s += v;
      }
    return s;
  }

  void add_term(const Monomial& m, const FieldElement& c) {
    auto it = t_.find(m);
    if (it == t_.end()) {
      if (!c.is_zero()) t_[m] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }

  Field merged_field(const Polynomial& o) const {
    if (field_.root_count() == 0) return o.field_;
    if (o.field_.root_count() == 0) return field_;
    if (field_ != o.field_) throw FieldMismatch("polynomials over different towers");
    return field_;
  }

  Field field_;
  Terms t_;
};

}  // namespace tleib
