#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rings.hpp"

namespace mcmv {

/// Sparse multivariate polynomial over a coefficient ring.
///
/// Terms are kept sorted by decreasing degrevlex order with no zero
/// coefficients, so structural equality is value equality.
template <class Ring>
class Polynomial {
 public:
  using ring_type = Ring;
  using coeff_type = typename Ring::value_type;

  struct Term {
    Monomial mon;
    coeff_type coeff;
    friend bool operator==(const Term& a, const Term& b) { return a.mon == b.mon && a.coeff == b.coeff; }
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, Ring ring = Ring{}) : ring_(std::move(ring)), nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, coeff_type c, Ring ring = Ring{}) {
    Polynomial r(nvars, ring);
    if (!r.ring_.is_zero(c)) r.terms_.push_back({Monomial(nvars), std::move(c)});
    return r;
  }
  static Polynomial constant_int(std::size_t nvars, long c, Ring ring = Ring{}) {
    return constant(nvars, ring.from_int(c), ring);
  }
  static Polynomial variable(std::size_t nvars, std::size_t i, Ring ring = Ring{}) {
    Polynomial r(nvars, ring);
    r.terms_.push_back({Monomial::variable(nvars, i), r.ring_.one()});
    return r;
  }
  static Polynomial monomial(const Monomial& m, coeff_type c, Ring ring = Ring{}) {
    Polynomial r(m.nvars(), ring);
    if (!r.ring_.is_zero(c)) r.terms_.push_back({m, std::move(c)});
    return r;
  }
  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms, Ring ring = Ring{}) {
    Polynomial r(nvars, ring);
    r.terms_ = std::move(terms);
    r.canonicalize();
    return r;
  }

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mon; }
  const coeff_type& leading_coeff() const { return leading_term().coeff; }

  std::uint32_t total_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mon[var]);
    return d;
  }

  coeff_type constant_coeff() const {
    if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coeff;
    return ring_.zero();
  }

  coeff_type coeff_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return degrevlex_compare(t.mon, key) > 0;
    });
    if (it != terms_.end() && it->mon == m) return it->coeff;
    return ring_.zero();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = ring_.neg(t.coeff);
    return r;
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = merge(*this, b, false); }
  Polynomial& operator-=(const Polynomial& b) { return *this = merge(*this, b, true); }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial r(a.nvars_, a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mon, b.terms_[0].coeff);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mon, a.terms_[0].coeff);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) r.terms_.push_back({s.mon * t.mon, a.ring_.mul(s.coeff, t.coeff)});
    r.canonicalize();
    return r;
  }

  Polynomial scaled(const coeff_type& c) const {
    Polynomial r(nvars_, ring_);
    if (ring_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.mon, std::move(v)});
    }
    return r;
  }

  Polynomial mul_term(const Monomial& m, const coeff_type& c) const {
    Polynomial r(nvars_, ring_);
    if (ring_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.mon * m, std::move(v)});
    }
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(nvars_, ring_.one(), ring_);
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial r(nvars_, ring_);
    for (const auto& t : terms_) {
      const auto e = t.mon[var];
      if (e == 0) continue;
      Monomial m = t.mon;
      m.set(var, static_cast<Monomial::exponent_type>(e - 1));
      auto c = ring_.mul(t.coeff, ring_.from_int(e));
      if (!ring_.is_zero(c)) r.terms_.push_back({m, std::move(c)});
    }
    r.canonicalize();
    return r;
  }

  /// Coefficient-wise exact division by a constant; nullopt if some
  /// coefficient is not divisible.
  std::optional<Polynomial> divide_by_constant(const coeff_type& d) const {
    Polynomial r(nvars_, ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!ring_.divides(d, t.coeff)) return std::nullopt;
      r.terms_.push_back({t.mon, ring_.exact_div(t.coeff, d)});
    }
    return r;
  }

  /// Exact quotient a / b when b divides a in R[X]; nullopt otherwise.
  friend std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    Polynomial q(a.nvars_, a.ring_);
    Polynomial r = a;
    const auto& lt = b.leading_term();
    std::vector<Term> quotient_terms;
    while (!r.is_zero()) {
      const auto& rt = r.leading_term();
      if (!lt.mon.divides(rt.mon) || !a.ring_.divides(lt.coeff, rt.coeff)) return std::nullopt;
      Monomial m = rt.mon / lt.mon;
      auto c = a.ring_.exact_div(rt.coeff, lt.coeff);
      r -= b.mul_term(m, c);
      quotient_terms.push_back({m, std::move(c)});
    }
    q.terms_ = std::move(quotient_terms);  // generated in decreasing order
    return q;
  }

  /// Maps coefficients into another ring (e.g. reduction mod p).
  template <class OtherRing, class F>
  Polynomial<OtherRing> map_coeffs(const OtherRing& other, F&& f) const {
    std::vector<typename Polynomial<OtherRing>::Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.mon, f(t.coeff)});
    return Polynomial<OtherRing>::from_terms(nvars_, std::move(ts), other);
  }

  /// Substitutes x_var -> value (a polynomial in the same ring).
  Polynomial substitute(std::size_t var, const Polynomial& value) const {
    Polynomial result(nvars_, ring_);
    std::vector<Polynomial> powers{constant(nvars_, ring_.one(), ring_)};
    for (const auto& t : terms_) {
      const unsigned e = t.mon[var];
      while (powers.size() <= e) powers.push_back(powers.back() * value);
      Monomial m = t.mon;
      m.set(var, 0);
      result += powers[e].mul_term(m, t.coeff);
    }
    return result;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return degrevlex_compare(x.mon, y.mon) > 0; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Term acc = std::move(terms_[i]);
      std::size_t j = i + 1;
      while (j < terms_.size() && terms_[j].mon == acc.mon) {
        ring_.add_to(acc.coeff, terms_[j].coeff);
        ++j;
      }
      if (!ring_.is_zero(acc.coeff)) terms_[out++] = std::move(acc);
      i = j;
    }
    terms_.resize(out);
  }

 private:
  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials over different variable sets");
    if (!(a.ring_ == b.ring_)) throw std::invalid_argument("polynomials over different coefficient rings");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_compatible(a, b);
    Polynomial r(a.nvars_, a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    const Ring& ring = a.ring_;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = degrevlex_compare(a.terms_[i].mon, b.terms_[j].mon);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mon, subtract ? ring.neg(t.coeff) : t.coeff});
      } else {
        auto v = a.terms_[i].coeff;
        if (subtract) ring.sub_from(v, b.terms_[j].coeff);
        else ring.add_to(v, b.terms_[j].coeff);
        if (!ring.is_zero(v)) r.terms_.push_back({a.terms_[i].mon, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ring ring_{};
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using IntPoly = Polynomial<IntegerRing>;
using ModPPoly = Polynomial<PrimeField>;

/// Integer content (nonnegative gcd of the coefficients); 0 for the zero polynomial.
inline Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Reduction modulo p into F_p[X].
inline ModPPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
  PrimeField fp(p);
  return f.map_coeffs(fp, [&](const Integer& c) { return fp.from_integer(c); });
}

/// Lift of an F_p polynomial with coefficients in [0, p).
inline IntPoly lift(const ModPPoly& f) {
  return f.map_coeffs(IntegerRing{}, [](std::uint64_t c) { return Integer(static_cast<unsigned long>(c)); });
}

inline IntPoly int_constant(std::size_t nvars, long c) { return IntPoly::constant(nvars, Integer(c)); }
inline IntPoly int_constant(std::size_t nvars, const Integer& c) { return IntPoly::constant(nvars, c); }

/// Coefficient-wise product with an integer.
inline IntPoly operator*(const Integer& c, const IntPoly& f) { return f.scaled(c); }

/// Smallest p-adic valuation among the coefficients (0 for the zero polynomial
/// is meaningless and rejected).
inline unsigned poly_valuation(const IntPoly& f, unsigned long p) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
  return valuation(content(f), p);
}

}  // namespace mcmv
