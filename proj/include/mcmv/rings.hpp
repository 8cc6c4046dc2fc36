#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcmv {

using Integer = mpz_class;

/// p-adic valuation of a nonzero integer.
inline unsigned valuation(const Integer& a, unsigned long p) {
  if (sgn(a) == 0) throw std::domain_error("valuation of zero");
  Integer t = a;
  unsigned v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Nonnegative residue of a modulo m.
inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline std::uint64_t mod_u(const Integer& a, std::uint64_t m) {
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

inline bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// The integers as a coefficient domain.
struct IntegerRing {
  using value_type = Integer;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  void add_to(value_type& acc, const value_type& a) const { acc += a; }
  void sub_from(value_type& acc, const value_type& a) const { acc -= a; }
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool divides(const value_type& d, const value_type& a) const {
    if (sgn(d) == 0) return sgn(a) == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
  }
  value_type exact_div(const value_type& a, const value_type& d) const {
    value_type q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
  }
  value_type gcd(const value_type& a, const value_type& b) const {
    value_type g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  /// Unit that makes `a` canonical (positive) when multiplied in.
  value_type normal_unit(const value_type& a) const { return sgn(a) < 0 ? -1 : 1; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// The prime field F_p with residues stored in [0, p).
struct PrimeField {
  using value_type = std::uint64_t;

  std::uint64_t p = 3;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument("PrimeField: modulus is not prime");
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(p) : r);
  }
  value_type from_integer(const Integer& v) const { return mod_u(v, p); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  void add_to(value_type& acc, value_type a) const { acc = (acc + a) % p; }
  void sub_from(value_type& acc, value_type a) const { acc = (acc + p - a) % p; }
  void add_mul(value_type& acc, value_type a, value_type b) const { acc = (acc + a * b) % p; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    value_type r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  bool divides(value_type d, value_type a) const { return d != 0 || a == 0; }
  value_type exact_div(value_type a, value_type d) const { return mul(a, inv(d)); }
  value_type gcd(value_type a, value_type b) const { return (a == 0 && b == 0) ? 0 : 1; }
  value_type normal_unit(value_type a) const { return inv(a); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

}  // namespace mcmv
