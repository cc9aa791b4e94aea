#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tleib/ratfunc.hpp"

namespace tleib {

// Arithmetic in F_p for the brute-force oracles.  Primes are deliberately
// restricted: enumeration counts only stay meaningful for tiny fields.
inline constexpr std::uint32_t kAllowedPrimes[] = {2, 3, 5, 7};

inline void require_prime(std::uint32_t p) {
  for (std::uint32_t q : kAllowedPrimes)
    if (p == q) return;
  throw UnsupportedPrime("prime " + std::to_string(p) + " is not in the supported set {2,3,5,7}");
}

struct Fp {
  std::uint32_t p;

  explicit Fp(std::uint32_t prime) : p(prime) { require_prime(prime); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b % p) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p; }
  std::uint32_t neg(std::uint32_t a) const { return (p - a % p) % p; }

  std::uint32_t pow(std::uint32_t a, std::uint32_t e) const {
    std::uint32_t r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t inv(std::uint32_t a) const {
    a %= p;
    if (a == 0) throw NonInvertibleDenominator("0 has no inverse mod " + std::to_string(p));
    return pow(a, p - 2);
  }

  // Residue of a signed big integer.
  std::uint32_t reduce_int(const Int& n) const {
    Int r = n % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
  }

  std::uint32_t reduce_rat(const Rat& q) const {
    std::uint32_t d = reduce_int(Int(denominator(q)));
    if (d == 0)
      throw NonInvertibleDenominator("denominator of " + tleib::to_string(q) +
                                     " vanishes mod " + std::to_string(p));
    return mul(reduce_int(Int(numerator(q))), inv(d));
  }

  // Smallest nonnegative square root of d mod p, if one exists.
  std::optional<std::uint32_t> sqrt_residue(long long d) const {
    long long m = d % (long long)p;
    if (m < 0) m += p;
    for (std::uint32_t r = 0; r < p; ++r)
      if (r * r % p == (std::uint32_t)m) return r;
    return std::nullopt;
  }

  // Reduce a tower element: each adjoined root maps to its canonical residue.
  // A root with no residue mod p makes the reduction undefined.
  std::uint32_t reduce_field_element(const FieldElement& x) const {
    const auto& roots = x.field().roots();
    std::uint32_t acc = 0;
    for (const auto& [mask, q] : x.coords()) {
      std::uint32_t term = reduce_rat(q);
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (mask & (1u << i)) {
          auto r = sqrt_residue(roots[i]);
          if (!r)
            throw RootHasNoResidue("root " + std::to_string(roots[i]) +
                                   " has no square root mod " + std::to_string(p));
          term = mul(term, *r);
        }
      acc = add(acc, term);
    }
    return acc;
  }

  std::uint32_t reduce_polynomial(const Polynomial& poly,
                                  const std::map<std::string, std::uint32_t>& bind) const {
    std::uint32_t acc = 0;
    for (const auto& [mono, coeff] : poly.terms()) {
      std::uint32_t term = reduce_field_element(coeff);
      for (const auto& [var, exp] : mono) {
        auto it = bind.find(var);
        if (it == bind.end()) throw MissingParameter("no residue bound for parameter " + var);
        term = mul(term, pow(it->second, (std::uint32_t)exp));
      }
      acc = add(acc, term);
    }
    return acc;
  }

  std::uint32_t reduce_ratfunc(const RatFunc& r,
                               const std::map<std::string, std::uint32_t>& bind = {}) const {
    std::uint32_t d = reduce_polynomial(r.den(), bind);
    if (d == 0)
      throw NonInvertibleDenominator("denominator (" + r.den().str() + ") vanishes mod " +
                                     std::to_string(p));
    return mul(reduce_polynomial(r.num(), bind), inv(d));
  }
};

}  // namespace tleib
