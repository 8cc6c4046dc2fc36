#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace mcmv {

namespace detail {

// A polynomial viewed as univariate in one variable: coeffs[e] is the
// coefficient of x_var^e and does not involve x_var.
template <class Ring>
struct Univariate {
  std::vector<Polynomial<Ring>> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Polynomial<Ring>& lead() const { return coeffs.back(); }
  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

template <class Ring>
Univariate<Ring> to_univariate(const Polynomial<Ring>& f, std::size_t var) {
  Univariate<Ring> u;
  const unsigned d = f.degree_in(var);
  u.coeffs.assign(d + 1, Polynomial<Ring>(f.nvars(), f.ring()));
  std::vector<std::vector<typename Polynomial<Ring>::Term>> buckets(d + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.mon;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  for (unsigned e = 0; e <= d; ++e)
    u.coeffs[e] = Polynomial<Ring>::from_terms(f.nvars(), std::move(buckets[e]), f.ring());
  u.trim();
  return u;
}

template <class Ring>
Polynomial<Ring> from_univariate(const Univariate<Ring>& u, std::size_t var, std::size_t nvars, const Ring& ring) {
  Polynomial<Ring> r(nvars, ring);
  for (std::size_t e = 0; e < u.coeffs.size(); ++e) {
    if (u.coeffs[e].is_zero()) continue;
    r += u.coeffs[e].mul_term(Monomial::variable(nvars, var, static_cast<Monomial::exponent_type>(e)), ring.one());
  }
  return r;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
template <class Ring>
Univariate<Ring> pseudo_remainder(Univariate<Ring> a, const Univariate<Ring>& b) {
  const int db = b.degree();
  const auto& lb = b.lead();
  while (!a.coeffs.empty() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const Polynomial<Ring> la = a.lead();
    for (auto& c : a.coeffs) c = c * lb;
    for (int i = 0; i <= db; ++i) a.coeffs[i + shift] -= b.coeffs[i] * la;
    a.trim();
  }
  return a;
}

}  // namespace detail

template <class Ring>
Polynomial<Ring> normalize_unit(const Polynomial<Ring>& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.ring().normal_unit(f.leading_coeff()));
}

/// Greatest common divisor in R[X1..Xn] for R = Z or F_p, including the
/// coefficient content.  Normalized to positive (Z) or monic (F_p)
/// leading coefficient.
template <class Ring>
Polynomial<Ring> gcd(const Polynomial<Ring>& a, const Polynomial<Ring>& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("gcd: variable count mismatch");
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  const Ring& ring = a.ring();
  const std::size_t n = a.nvars();

  std::optional<std::size_t> var;
  for (std::size_t i = n; i-- > 0;) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = i;
      break;
    }
  }
  if (!var) {
    return Polynomial<Ring>::constant(n, ring.gcd(a.leading_coeff(), b.leading_coeff()), ring);
  }

  auto ua = detail::to_univariate(a, *var);
  auto ub = detail::to_univariate(b, *var);
  auto content_of = [&](const detail::Univariate<Ring>& u) {
    Polynomial<Ring> c(n, ring);
    for (const auto& k : u.coeffs) {
      c = gcd(c, k);
      if (c.is_constant() && !c.is_zero() && ring.is_one(c.leading_coeff())) break;
    }
    return c;
  };
  auto primitive = [&](detail::Univariate<Ring>& u) {
    const auto c = content_of(u);
    for (auto& k : u.coeffs) k = *exact_divide(k, c);
    return c;
  };

  const auto ca = primitive(ua);
  const auto cb = primitive(ub);
  const auto c = gcd(ca, cb);

  if (ua.degree() < ub.degree()) std::swap(ua, ub);
  while (ub.degree() > 0) {
    auto r = detail::pseudo_remainder(ua, ub);
    if (r.coeffs.empty()) break;
    primitive(r);
    ua = std::move(ub);
    ub = std::move(r);
  }
  if (ub.degree() == 0) return normalize_unit(c);
  return normalize_unit(c * detail::from_univariate(ub, *var, n, ring));
}

}  // namespace mcmv
