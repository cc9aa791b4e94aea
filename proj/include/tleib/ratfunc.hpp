#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "tleib/polynomial.hpp"

namespace tleib {

// Ratio of polynomials.  No gcd machinery: the representation is normalized
// opportunistically (constant denominators folded in, exact multiples
// divided out, denominator made monic) and equality is decided by
// cross-multiplication, which is exact regardless of representation.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Polynomial::constant(Field(), Rat(1))) {}
  explicit RatFunc(Field f)
      : num_(Polynomial(f)), den_(Polynomial::constant(f, Rat(1))) {}
  RatFunc(Polynomial num) : num_(std::move(num)) {
    den_ = Polynomial::constant(num_.field(), Rat(1));
    normalize();
  }
  RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
  }

  static RatFunc constant(const Field& f, const Rat& r) {
    return RatFunc(Polynomial::constant(f, r));
  }
  static RatFunc constant(const Field& f, const FieldElement& c) {
    return RatFunc(Polynomial::constant(f, c));
  }
  static RatFunc variable(const Field& f, const std::string& name) {
    return RatFunc(Polynomial::variable(f, name));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  FieldElement constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  std::set<std::string> variables() const {
    std::set<std::string> vs = num_.variables();
    for (const auto& v : den_.variables()) vs.insert(v);
    return vs;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  // Exact equality as rational functions (cross-multiplication).
  bool operator==(const RatFunc& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  FieldElement substitute(const std::map<std::string, FieldElement>& bind) const {
    FieldElement d = den_.substitute(bind);
    if (d.is_zero())
      throw DenominatorVanishes("denominator (" + den_.str() + ") vanishes at substitution point");
    return num_.substitute(bind) / d;
  }

  std::string str() const {
    if (den_.is_constant()) return num_.str();
    bool wrap_num = num_.terms().size() > 1;
    std::string n = wrap_num ? "(" + num_.str() + ")" : num_.str();
    return n + "/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial::constant(num_.field(), Rat(1));
      return;
    }
    if (den_.is_constant()) {
      FieldElement c = den_.constant_value();
      if (!(c == FieldElement::one(den_.field()))) {
        num_ = num_.scaled(c.inverse());
        den_ = Polynomial::constant(num_.field(), Rat(1));
      }
      return;
    }
    if (auto q = Polynomial::divide_exact(num_, den_)) {
      num_ = *q;
      den_ = Polynomial::constant(num_.field(), Rat(1));
      return;
    }
    FieldElement lc = den_.leading_coefficient();
    if (!(lc == FieldElement::one(den_.field()))) {
      num_ = num_.scaled(lc.inverse());
      den_ = den_.scaled(lc.inverse());
    }
  }

  Polynomial num_, den_;
};

inline RatFunc rf(const Field& f, long long n, long long d = 1) {
  return RatFunc::constant(f, rat(n, d));
}

}  // namespace tleib
