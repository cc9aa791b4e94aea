#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tleib/errors.hpp"
#include "tleib/rational.hpp"

namespace tleib {

// A real-or-complex multi-quadratic tower Q(sqrt(d_1), ..., sqrt(d_k)).
// Roots are stored as distinct squarefree integers (possibly negative; -1
// adjoins i); the Q-basis is indexed by subsets of the root list, so every
// element is a vector of 2^k rationals.
class Field {
 public:
  Field() : roots_(std::make_shared<std::vector<long long>>()) {}
  explicit Field(std::vector<long long> squarefree_roots)
      : roots_(std::make_shared<std::vector<long long>>(std::move(squarefree_roots))) {}

  const std::vector<long long>& roots() const { return *roots_; }
  std::size_t root_count() const { return roots_->size(); }
  std::size_t basis_size() const { return std::size_t(1) << roots_->size(); }

  // Index of a squarefree core in the root list, or npos.
  std::size_t root_index(long long core) const {
    for (std::size_t i = 0; i < roots_->size(); ++i)
      if ((*roots_)[i] == core) return i;
    return std::size_t(-1);
  }

  bool operator==(const Field& o) const { return *roots_ == *o.roots_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const std::vector<long long>> roots_;
};

namespace detail {

// GF(2) independence of the (sign, prime-parity) vectors of squarefree ints.
// Dependent sets (e.g. {2,3,6}) would collapse the 2^k basis.
inline bool squarefree_independent(const std::vector<long long>& cores) {
  std::vector<long long> primes;
  std::vector<unsigned long long> rows;
  for (long long c : cores) {
    unsigned long long row = c < 0 ? 1ull : 0ull;  // bit 0: sign
    long long m = c < 0 ? -c : c;
    for (long long f = 2; f * f <= m; ++f) {
      if (m % f == 0) {
        m /= f;  // squarefree: each prime appears once
        auto it = std::find(primes.begin(), primes.end(), f);
        std::size_t idx = it == primes.end() ? (primes.push_back(f), primes.size() - 1)
                                             : std::size_t(it - primes.begin());
        row |= 1ull << (idx + 1);
      }
    }
    if (m > 1) {
      auto it = std::find(primes.begin(), primes.end(), m);
      std::size_t idx = it == primes.end() ? (primes.push_back(m), primes.size() - 1)
                                           : std::size_t(it - primes.begin());
      row |= 1ull << (idx + 1);
    }
    rows.push_back(row);
  }
  // Gaussian elimination over GF(2).
  std::vector<unsigned long long> basis;
  for (unsigned long long row : rows) {
    for (unsigned long long b : basis) {
      unsigned long long top = 1ull << (63 - __builtin_clzll(b));
      if (row & top) row ^= b;
    }
    if (row == 0) return false;
    basis.push_back(row);
  }
  return true;
}

}  // namespace detail

// Validates and canonicalizes a root list: each entry is replaced by its
// squarefree core (8 -> 2, 12 -> 3, -4 -> -1), entries reducing to 0 or 1 are
// rejected, duplicates and multiplicatively dependent sets are rejected.
inline Field make_field(const std::vector<long long>& roots) {
  std::vector<long long> cores;
  for (long long r : roots) {
    auto [core, scale] = squarefree_core(Int(r));
    (void)scale;
    if (core == 0 || core == 1)
      throw InvalidRoot("field root " + std::to_string(r) + " reduces to " + core.str());
    cores.push_back(core.convert_to<long long>());
  }
  std::sort(cores.begin(), cores.end());
  if (std::adjacent_find(cores.begin(), cores.end()) != cores.end())
    throw DuplicateRoot("duplicate squarefree core in field roots");
  if (cores.size() > 16) throw InvalidRoot("too many adjoined roots");
  if (!detail::squarefree_independent(cores))
    throw DependentRoots("field roots are multiplicatively dependent");
  return Field(cores);
}

// One element of the tower: a map basis-subset-mask -> rational coordinate.
// Zero coordinates are never stored, so equality is structural.
class FieldElement {
 public:
  FieldElement() = default;  // zero over Q
  explicit FieldElement(Field f) : field_(std::move(f)) {}
  FieldElement(Field f, const Rat& r) : field_(std::move(f)) {
    if (!tleib::is_zero(r)) c_[0] = r;
  }

  static FieldElement one(const Field& f) { return FieldElement(f, Rat(1)); }
  // sqrt(roots()[idx]) as an element.
  static FieldElement root(const Field& f, std::size_t idx) {
    FieldElement e(f);
    e.c_[1u << idx] = 1;
    return e;
  }

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  Rat rational_part() const {
    auto it = c_.find(0);
    return it == c_.end() ? Rat(0) : it->second;
  }
  const std::map<unsigned, Rat>& coords() const { return c_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldElement r(a.merged_field(b));
    r.c_ = a.c_;
    for (const auto& [m, v] : b.c_) {
      Rat& slot = r.c_[m];
      slot += v;
      if (tleib::is_zero(slot)) r.c_.erase(m);
    }
    return r;
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a + (-b);
  }
  FieldElement operator-() const {
    FieldElement r(field_);
    for (const auto& [m, v] : c_) r.c_[m] = -v;
    return r;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldElement r(a.merged_field(b));
    const auto& roots = r.field_.roots();
    for (const auto& [ma, va] : a.c_)
      for (const auto& [mb, vb] : b.c_) {
        Rat term = va * vb;
        unsigned common = ma & mb;
        for (std::size_t i = 0; common >> i; ++i)
          if (common & (1u << i)) term *= roots[i];
        Rat& slot = r.c_[ma ^ mb];
        slot += term;
        if (tleib::is_zero(slot)) r.c_.erase(ma ^ mb);
      }
    return r;
  }

  // Exact inverse by conjugation over the highest adjoined root present.
  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    unsigned support = 0;
    for (const auto& [m, v] : c_) support |= m;
    if (support == 0) {
      return FieldElement(field_, Rat(1) / c_.begin()->second);
    }
    std::size_t j = 0;
    while (support >> (j + 1)) ++j;  // highest live root index
    unsigned bit = 1u << j;
    FieldElement a(field_), b(field_);
    for (const auto& [m, v] : c_)
      (m & bit ? b.c_[m & ~bit] : a.c_[m]) = v;
    FieldElement d(field_, Rat(field_.roots()[j]));
    FieldElement norm = a * a - b * b * d;  // lives in the subfield below j
    if (norm.is_zero())
      throw DivisionByZero("degenerate tower: conjugate norm vanished");
    FieldElement conj = a;
    for (const auto& [m, v] : b.c_) conj.c_[m | bit] = -v;
    return conj * norm.inverse();
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const { return c_ == o.c_; }
  bool operator!=(const FieldElement& o) const { return c_ != o.c_; }
  // Deterministic order for use as a container key.
  bool operator<(const FieldElement& o) const { return c_ < o.c_; }

  // Canonical text: basis monomials in ascending subset-mask order,
  // e.g. "1/2 + 3*i - i*sqrt(2)".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [m, v] : c_) {
      Rat av = v < 0 ? Rat(-v) : v;
      if (out.empty())
        out += v < 0 ? "-" : "";
      else
        out += v < 0 ? " - " : " + ";
      std::string mono = monomial_str(m);
      if (mono.empty())
        out += tleib::to_string(av);
      else if (av == 1)
        out += mono;
      else
        out += tleib::to_string(av) + "*" + mono;
    }
    return out;
  }

 private:
  std::string monomial_str(unsigned mask) const {
    std::string s;
    const auto& roots = field_.roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (mask & (1u << i)) {
        if (!s.empty()) s += "*";
        s += roots[i] == -1 ? "i" : "sqrt(" + std::to_string(roots[i]) + ")";
      }
    return s;
  }

  // Values over plain Q coexist with any tower; distinct towers never mix.
  Field merged_field(const FieldElement& o) const {
    if (field_.root_count() == 0) return o.field_;
    if (o.field_.root_count() == 0) return field_;
    if (field_ != o.field_) throw FieldMismatch("elements from different field towers");
    return field_;
  }

  Field field_;
  std::map<unsigned, Rat> c_;
};

inline FieldElement fe(const Field& f, long long n, long long d = 1) {
  return FieldElement(f, rat(n, d));
}

}  // namespace tleib
