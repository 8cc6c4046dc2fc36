#pragma once

// p-local predicates on Z[X1..Xn], read in the localization of Z[X1..Xn]
// at the maximal ideal (p, X1, ..., Xn).
//
// Frobenius on F_p[X] sends sum c_a X^a to sum c_a X^(p a), so f reduces to a
// p-th power mod p exactly when every exponent surviving mod p is divisible
// by p. In the localization a p-th power forces every prime multiplicity to
// be divisible by p, so this polynomial test already decides membership of
// f in the lifted Frobenius image.

#include <optional>
#include <stdexcept>

#include "poly_gcd.hpp"
#include "polynomial.hpp"

namespace mcmv {

/// h with h^p = f mod p and coefficients in [0, p), or nullopt when f mod p
/// is not a p-th power in F_p[X].
inline std::optional<IntPoly> pth_root_mod_p(const IntPoly& f, unsigned long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("pth_root_mod_p: p must be an odd prime");
  std::vector<IntPoly::Term> root;
  for (const auto& t : f.terms()) {
    const auto c = mod_u(t.coeff, p);
    if (c == 0) continue;
    Monomial m(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.mon[i] % p != 0) return std::nullopt;
      m.set(i, static_cast<Monomial::exponent_type>(t.mon[i] / p));
    }
    // c^p = c in F_p, so the coefficient carries over unchanged.
    root.push_back({m, Integer(static_cast<unsigned long>(c))});
  }
  return IntPoly::from_terms(f.nvars(), std::move(root));
}

/// True iff f lies outside (p, X1, ..., Xn).
inline bool is_local_unit(const IntPoly& f, unsigned long p) { return mod_u(f.constant_coeff(), p) != 0; }

inline bool is_local_unit(const ModPPoly& f) { return f.constant_coeff() != 0; }

/// f with the content stripped (sign normalized).
inline IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (sgn(f.leading_coeff()) < 0) c = -c;
  return *f.divide_by_constant(c);
}

/// Square-freeness in the local ring: p^2 does not divide the content, and
/// every repeated prime factor of the primitive part is a local unit.
///
/// In characteristic zero a repeated factor q of a primitive polynomial
/// divides all partial derivatives, and gcd(pp, d pp/dX1, ...) is exactly the
/// product of q^(e-1) over prime powers q^e of pp; so the repeated factors are
/// all units iff that gcd is a unit.
inline bool squarefree_local(const IntPoly& f, unsigned long p) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_local: zero polynomial");
  if (valuation(content(f), p) >= 2) return false;
  const IntPoly pp = primitive_part(f);
  IntPoly g = pp;
  for (std::size_t i = 0; i < f.nvars() && !g.is_constant(); ++i) g = gcd(g, pp.derivative(i));
  return is_local_unit(g, p);
}

/// No height-one prime of the local ring contains both f and g, i.e.
/// gcd(f, g) over Z[X] (content included) is a local unit.
inline bool coprime_a1(const IntPoly& f, const IntPoly& g, unsigned long p) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("coprime_a1: zero polynomial");
  return is_local_unit(gcd(f, g), p);
}

}  // namespace mcmv
