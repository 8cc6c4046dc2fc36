#pragma once

// Explicit S-generators of the integral closure R in each case, the duals
// (A :_K I) of the grade-two perfect ideals that produce them, and the
// conductor ideals.
//
// Dual ideals use the cofactor formula: if I is the ideal of maximal minors
// delta_i of an r x (r-1) matrix E and v is a relation column, then with
// E' = [E | v] the quotients E'_ii / delta_i generate I^* over A.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "classify.hpp"
#include "lattice.hpp"
#include "linalg.hpp"

namespace mcmv {

/// A generating set of R together with the (i, j) shifted exponent of each
/// generator ({-1, -1} for epsilon).
struct GeneratorSet {
  CaseLabel label;
  Lattice gens;
  std::vector<std::array<int, 2>> shape;
};

/// p^-e (w - h1)^i (u - h2)^j.
inline KElem shifted_over_p(const InstancePtr& in, unsigned i, unsigned j, unsigned e) {
  return shifted_monomial(in, i, j).div_p(e);
}

namespace detail {

// Builds the p^2 shifted monomials with denominators p^expo(i, j).
template <class Expo>
GeneratorSet t_set(const InstancePtr& in, const CaseLabel& label, Expo expo) {
  GeneratorSet gs{label, Lattice(in), {}};
  const unsigned p = static_cast<unsigned>(in->p);
  for (unsigned j = 0; j < p; ++j)
    for (unsigned i = 0; i < p; ++i) {
      const auto [e, tag] = expo(i, j);
      gs.gens.add(shifted_over_p(in, i, j, e),
                  tag == 3 ? "T3" : "T" + std::to_string(tag) + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
      gs.shape.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return gs;
}

}  // namespace detail

/// T1 = {s^i t^j : i + j < p}, T2 = {p^-1 s^i t^j : i + j >= p}.
inline GeneratorSet lemma_t_set(const InstancePtr& in, const CaseLabel& label) {
  const unsigned p = static_cast<unsigned>(in->p);
  return detail::t_set(in, label, [p](unsigned i, unsigned j) {
    return i + j < p ? std::pair<unsigned, int>{0, 1} : std::pair<unsigned, int>{1, 2};
  });
}

/// epsilon for the decomposition h1 = z c, h2 = z e; for the fg^i index i
/// the role of h1 is played by i h1, so c is replaced by i c.
inline KElem epsilon_for(const InstancePtr& in, unsigned i_star) {
  const auto d = zce_decompose(*in);
  return epsilon(in, d.c.scaled(Integer(i_star)), d.e);
}

inline GeneratorSet closure_gens(const InstancePtr& in, const CaseLabel& label) {
  if (!(classify(*in) == label)) throw std::invalid_argument("closure_gens: case label does not match the instance");
  const unsigned p = static_cast<unsigned>(in->p);
  switch (label.kind) {
    case CaseKind::CM_NotNormal_Both:
      return detail::t_set(in, label, [p](unsigned i, unsigned j) {
        if (i + j < p - 1) return std::pair<unsigned, int>{0, 1};
        if (i + j == 2 * p - 2) return std::pair<unsigned, int>{2, 3};
        return std::pair<unsigned, int>{1, 2};
      });
    case CaseKind::CM_NotNormal_One: {
      const bool f_side = label.f_non_normal;
      return detail::t_set(in, label, [p, f_side](unsigned i, unsigned j) {
        const unsigned a = f_side ? i : j, b = f_side ? j : i;
        if (a == p - 1 && b == 0) return std::pair<unsigned, int>{1, 3};
        if (a + b < p) return std::pair<unsigned, int>{0, 1};
        return std::pair<unsigned, int>{1, 2};
      });
    }
    case CaseKind::CM_NormalNoFgi:
      return lemma_t_set(in, label);
    case CaseKind::CM_TwoGenQ:
    case CaseKind::NotCM_GradeThree:
    case CaseKind::NotCM_GradeTwoOpen: {
      auto gs = lemma_t_set(in, label);
      gs.gens.add(epsilon_for(in, *label.i_star), "epsilon");
      gs.shape.push_back({-1, -1});
      return gs;
    }
  }
  throw std::logic_error("closure_gens: unknown case");
}

// ---- duals by cofactors ---------------------------------------------------

/// x with d x = y, provided x has a p-power denominator.
inline std::optional<KElem> k_divide(const KElem& y, const KElem& d) {
  const auto& in = d.instance();
  if (d.is_zero()) throw std::domain_error("k_divide: division by zero");
  const std::size_t n = in->dim();
  std::vector<la::Vec> cols;
  for (unsigned j = 0; j < in->p; ++j)
    for (unsigned i = 0; i < in->p; ++i) {
      const KElem col = d * KElem::monomial(in, i, j, int_constant(in->n, 1));
      cols.push_back(col.scaled_coeffs(d.k()));
    }
  const auto sol = la::solve_square(cols, {y.coeffs()}, in->n);
  if (!sol) throw std::domain_error("k_divide: multiplication matrix is singular");
  const unsigned long p = in->p;
  const unsigned v = poly_valuation(sol->det, p);
  const IntPoly w = *sol->det.divide_by_constant(ipow(Integer(p), v));
  std::vector<IntPoly> coeffs;
  coeffs.reserve(n);
  for (const auto& num : sol->numerators[0]) {
    auto q = w.is_constant() ? num.divide_by_constant(w.constant_coeff()) : exact_divide(num, w);
    if (!q) return std::nullopt;
    coeffs.push_back(std::move(*q));
  }
  // x = p^(d.k - y.k - v) * coeffs
  const long e = static_cast<long>(d.k()) - static_cast<long>(y.k()) - static_cast<long>(v);
  if (e >= 0) return KElem(in, 0, std::move(coeffs)).scaled(ipow(Integer(p), static_cast<unsigned long>(e)));
  return KElem(in, static_cast<unsigned>(-e), std::move(coeffs));
}

inline KElem k_determinant(const std::vector<std::vector<KElem>>& m, const InstancePtr& in) {
  const std::size_t r = m.size();
  if (r == 0) return KElem::from_int(in, 1);
  if (r == 1) return m[0][0];
  KElem acc(in);
  for (std::size_t c = 0; c < r; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<KElem>> minor;
    for (std::size_t i = 1; i < r; ++i) {
      std::vector<KElem> row;
      for (std::size_t j = 0; j < r; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const KElem t = m[0][c] * k_determinant(minor, in);
    acc = c % 2 == 0 ? acc + t : acc - t;
  }
  return acc;
}

namespace detail {

inline std::vector<std::vector<KElem>> drop(const std::vector<std::vector<KElem>>& m, std::size_t row, std::size_t col) {
  std::vector<std::vector<KElem>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<KElem> r;
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// {E'_ii / delta_i} for the square matrix E' whose last column is the
/// relation column; delta_i is the signed minor of the first r-1 columns
/// with row i removed.
inline Lattice cofactor_dual(const InstancePtr& in, const std::vector<std::vector<KElem>>& eprime) {
  const std::size_t r = eprime.size();
  Lattice out(in);
  for (std::size_t i = 0; i < r; ++i) {
    KElem delta = k_determinant(detail::drop(eprime, i, r - 1), in);
    if ((i + r - 1) % 2 == 1) delta = -delta;
    if (delta.is_zero()) continue;
    const KElem cof = k_determinant(detail::drop(eprime, i, i), in);
    auto q = k_divide(cof, delta);
    if (!q) throw std::domain_error("cofactor_dual: quotient has a non-p-power denominator");
    out.add(*q, "cofactor[" + std::to_string(i + 1) + "]");
  }
  return out;
}

enum class DualKind { H, P1, P2, PPow };

/// Presentation matrices with relation column:
///   H(i) = (m, p):          [[m, alpha], [p, Phi]],  m Phi = p alpha
///   P1 = (w - h1, p):       [[s, a], [p, Phi1]],     s Phi1 = p a
///   P^(p-1):                bidiagonal (t on, s below the diagonal) with
///                           relation column (s k2, 0, ..., 0, -k1 t)
inline std::vector<std::vector<KElem>> dual_presentation(const InstancePtr& in, DualKind which, unsigned i = 0) {
  const unsigned long p = in->p;
  const KElem P = KElem::from_int(in, static_cast<long>(p));
  const KElem zero(in);
  switch (which) {
    case DualKind::H: {
      const KElem m = m_elem(in, i);
      const KElem phi = tau_i(in, i).scaled(Integer(p));
      const KElem alpha = (m * phi).div_p(1);
      return {{m, alpha}, {P, phi}};
    }
    case DualKind::P1:
      return {{s_elem(in), KElem::from_S(in, in->a)}, {P, tau1(in).scaled(Integer(p))}};
    case DualKind::P2:
      return {{t_elem(in), KElem::from_S(in, in->b)}, {P, tau2(in).scaled(Integer(p))}};
    case DualKind::PPow: {
      const KElem s = s_elem(in), t = t_elem(in);
      std::vector<std::vector<KElem>> m(p, std::vector<KElem>(p, zero));
      for (unsigned long c = 0; c + 1 < p; ++c) {
        m[c][c] = t;
        m[c + 1][c] = s;
      }
      m[0][p - 1] = s * k2_elem(in);
      m[p - 1][p - 1] = -(k1_elem(in) * t);
      return m;
    }
  }
  throw std::logic_error("dual_presentation: unknown kind");
}

/// Up to sign the quotients are eta[1..p-1], 1 for P^(p-1) and tau, 1 for the
/// two-generated ideals; they are tagged accordingly.
inline Lattice dual_via_cofactors(const InstancePtr& in, DualKind which, unsigned i = 0) {
  if (which == DualKind::H) check_index(in, i);
  const Lattice raw = cofactor_dual(in, dual_presentation(in, which, i));
  Lattice out(in);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const bool last = k + 1 == raw.size();
    std::string tag = last ? "1" : which == DualKind::PPow ? "eta[" + std::to_string(k + 1) + "]" : "tau";
    out.add(raw[k], std::move(tag));
  }
  return out;
}

/// The ideal whose dual dual_via_cofactors returns, as A-generators.
inline std::vector<KElem> dual_ideal_gens(const InstancePtr& in, DualKind which, unsigned i = 0) {
  const auto m = dual_presentation(in, which, i);
  std::vector<KElem> out;
  const std::size_t r = m.size();
  for (std::size_t row = 0; row < r; ++row) out.push_back(k_determinant(detail::drop(m, row, r - 1), in));
  return out;
}

/// P^* = <1, p^-1 (w - h1)^(p-1) (u - h2)^(p-1)>_A, expanded over the A-basis
/// and minimalized to p^2 S-generators.
inline Lattice pstar_a_gens(const InstancePtr& in) {
  const unsigned q = static_cast<unsigned>(in->p - 1);
  Lattice l(in);
  l.add(KElem::from_int(in, 1), "1");
  l.add(shifted_over_p(in, q, q, 1), "sigma");
  return l;
}

inline Lattice pstar_gens(const InstancePtr& in) {
  const auto a = pstar_a_gens(in);
  return minimalize(Lattice::expand(in, a.gens(), a.tags()));
}

// ---- ideals ---------------------------------------------------------------

enum class IdealName { P, PPow, PSymb, I, H, F2, Fscr };

inline const char* ideal_name(IdealName n) {
  switch (n) {
    case IdealName::P: return "P";
    case IdealName::PPow: return "P_pow";
    case IdealName::PSymb: return "P_symb";
    case IdealName::I: return "I";
    case IdealName::H: return "H";
    case IdealName::F2: return "F2";
    case IdealName::Fscr: return "Fscr";
  }
  return "?";
}

struct IdealSpec {
  IdealName name;
  Lattice a_gens;  // generators as an A-ideal
  Lattice gens;    // the same ideal as an S-module
};

namespace detail {

// p^c s^a t^b over c + a + b = k, tagged.
inline Lattice power_of_p_ideal(const InstancePtr& in, unsigned k, const KElem& factor, bool include_pure_p) {
  Lattice l(in);
  for (unsigned c = 0; c <= k; ++c)
    for (unsigned a = 0; a + c <= k; ++a) {
      const unsigned b = k - c - a;
      if (c == k && !include_pure_p) continue;
      const KElem x = shifted_monomial(in, 0, 0).scaled(ipow(Integer(in->p), c)) * s_elem(in).pow(a) * t_elem(in).pow(b);
      l.add(factor * x, "p^" + std::to_string(c) + "*s^" + std::to_string(a) + "*t^" + std::to_string(b));
    }
  return l;
}

}  // namespace detail

/// k is the power for P_pow, the index i for H and I (defaulting to 1).
inline IdealSpec ideal_spec(const InstancePtr& in, IdealName name, unsigned k = 0) {
  const unsigned p = static_cast<unsigned>(in->p);
  const KElem one = KElem::from_int(in, 1);
  const KElem P = KElem::from_int(in, static_cast<long>(p));
  Lattice a(in);
  switch (name) {
    case IdealName::P:
      a = detail::power_of_p_ideal(in, 1, one, true);
      break;
    case IdealName::PPow:
      a = detail::power_of_p_ideal(in, k, one, true);
      break;
    case IdealName::PSymb:
      a.add(P, "p");
      a.append(detail::power_of_p_ideal(in, p - 1, one, false));
      break;
    case IdealName::I: {
      const unsigned i = k ? k : 1;
      a.add(P, "p");
      a.append(detail::power_of_p_ideal(in, p - 2, m_elem(in, i), true));
      break;
    }
    case IdealName::H: {
      const unsigned i = k ? k : 1;
      a.add(P, "p");
      a.add(m_elem(in, i), "m");
      break;
    }
    case IdealName::F2:
      a.add(P, "p");
      a.append(detail::power_of_p_ideal(in, p, one, false));
      break;
    case IdealName::Fscr: {
      const unsigned i = k ? k : 1;
      a.add(P, "p");
      a.append(detail::power_of_p_ideal(in, p, one, false));
      a.add(m_elem(in, i), "m");
      break;
    }
  }
  return {name, a, Lattice::expand(in, a.gens(), a.tags())};
}

/// The conductor (A :_K R): P^(p-1) = (p) + P^(p-1) when R is S-free with no
/// fg^i index; I = pA + P^(p-2) m(i) when epsilon is needed.
inline IdealSpec conductor_gens(const InstancePtr& in, const CaseLabel& label) {
  if (label.kind == CaseKind::CM_NormalNoFgi) return ideal_spec(in, IdealName::PSymb);
  if (label.uses_epsilon()) return ideal_spec(in, IdealName::I, *label.i_star);
  throw std::invalid_argument(std::string("conductor_gens: no conductor is known for case ") + label.name());
}

}  // namespace mcmv
