#pragma once

// Certificates over the local base ring S: span membership with explicit
// coefficients, ring closure, freeness, conductors, the presentation of R
// when it needs p^2 + 1 generators, and a free birational module when R is
// not Cohen-Macaulay.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "lattice.hpp"
#include "linalg.hpp"

namespace mcmv {

using la::Fraction;

// ---- span membership with coefficients ------------------------------------

namespace detail {

inline gb::Column unit_column(std::size_t len, std::size_t i, std::size_t nvars) {
  gb::Column c(len, IntPoly(nvars));
  c[i] = int_constant(nvars, 1);
  return c;
}

inline bool is_zero_column(const gb::Column& c) {
  return std::all_of(c.begin(), c.end(), [](const IntPoly& e) { return e.is_zero(); });
}

// sum_k coeffs[k] * cols[k] == den * z
inline bool recombines(const std::vector<gb::Column>& cols, const std::vector<Fraction>& coeffs, const gb::Column& z) {
  const std::size_t n = z.size();
  const std::size_t nv = z.empty() ? 0 : z[0].nvars();
  IntPoly den = int_constant(nv, 1);
  for (const auto& c : coeffs) den = la::detail::divexact(den * c.den, gcd(den, c.den));
  for (std::size_t r = 0; r < n; ++r) {
    IntPoly acc(nv);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (coeffs[k].num.is_zero() || cols[k][r].is_zero()) continue;
      acc += coeffs[k].num * la::detail::divexact(den, coeffs[k].den) * cols[k][r];
    }
    if (!(acc == den * z[r])) return false;
  }
  return true;
}

}  // namespace detail

/// Coefficients c_k in the localization with sum c_k gens[k] = target, or
/// nothing when the target is outside the localized span.
inline std::optional<std::vector<Fraction>> span_solve(const KElem& target, const Lattice& gens, Audit* audit = nullptr,
                                                       const std::string& what = {}) {
  const auto& in = gens.instance();
  const unsigned long p = in->p;
  const unsigned K = gens.common_k();
  if (target.k() > K) return std::nullopt;
  const auto cols = gens.columns(K);
  const gb::Column z = scaled_column(target, K);
  const std::size_t dim = in->dim();
  const auto ech = la::echelon(cols, in->n);

  if (gens.size() == dim && ech.rank() == dim) {
    auto sol = la::solve_square(cols, {z}, in->n);
    std::vector<Fraction> out;
    bool local = true;
    for (const auto& num : sol->numerators[0]) {
      out.push_back(la::reduce_fraction(num, sol->det));
      local = local && is_local_unit(out.back().den, p);
    }
    if (audit)
      audit->record({what, std::make_shared<gb::SubmoduleGens>(in->n, dim, cols), z, K, local});
    if (!local) return std::nullopt;
    return out;
  }

  LocalSpan span(gb::SubmoduleGens(in->n, dim, cols), p, K, audit);
  if (!span.contains(z, what)) return std::nullopt;
  gb::EliminationBasis eb(in->n, dim, gens.size());
  for (std::size_t k = 0; k < cols.size(); ++k) eb.add(cols[k], detail::unit_column(gens.size(), k, in->n));
  eb.compute();
  IntPoly u = int_constant(in->n, 1);
  auto [top, bottom] = eb.reduce(z);
  if (!detail::is_zero_column(top)) {
    const auto j = gb::colon(gb::SubmoduleGens(in->n, dim, cols), z);
    auto it = std::find_if(j.columns.begin(), j.columns.end(), [&](const gb::Column& c) { return is_local_unit(c[0], p); });
    if (it == j.columns.end()) throw std::logic_error("span_solve: local membership without a unit multiplier");
    u = (*it)[0];
    gb::Column uz = z;
    for (auto& e : uz) e *= u;
    std::tie(top, bottom) = eb.reduce(uz);
    if (!detail::is_zero_column(top)) throw std::logic_error("span_solve: unit multiple did not reduce to zero");
  }
  std::vector<Fraction> out;
  for (const auto& b : bottom) out.push_back(la::reduce_fraction(-b, u));
  if (!detail::recombines(cols, out, z)) throw std::logic_error("span_solve: coefficients do not reproduce the target");
  return out;
}

// ---- ring closure, freeness, conductor ------------------------------------

struct ClosureReport {
  bool closed = true;
  std::size_t products = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;
  std::vector<KElem> witnesses;  // the products outside the span
};

/// Every product of two generators lies in the localized span.
inline ClosureReport verify_ring_closure(const Lattice& gens, Audit* audit = nullptr) {
  ClosureReport rep;
  LocalSpan span = LocalSpan::of(gens, audit, "closure");
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      const KElem prod = gens[i] * gens[j];
      ++rep.products;
      if (span.contains(prod, gens.tags()[i] + "*" + gens.tags()[j])) continue;
      rep.closed = false;
      rep.failures.emplace_back(i, j);
      rep.witnesses.push_back(prod);
    }
  return rep;
}

struct FreeReport {
  bool free = false;
  std::size_t rank = 0;           // rank over the fraction field
  std::size_t minimal_count = 0;  // minimal number of generators over the local ring
  std::vector<std::size_t> dropped;
};

/// Generators of the syzygies of the columns.  When the columns have full
/// rank, relations det * e_i = B adj(B) e_i of a maximal independent block B
/// are added first; they are syzygy-module hints that keep coefficients small.
inline std::vector<gb::Column> syzygy_columns(const std::vector<gb::Column>& cols, std::size_t nvars) {
  const std::size_t s = cols.size();
  const std::size_t dim = cols.empty() ? 0 : cols[0].size();
  gb::EliminationBasis eb(nvars, dim, s);
  for (std::size_t k = 0; k < s; ++k) eb.add(cols[k], detail::unit_column(s, k, nvars));
  const auto ech = la::echelon(cols, nvars);
  if (ech.rank() == dim && dim > 0) {
    std::vector<la::Vec> block;
    for (auto i : ech.pivots) block.push_back(cols[i]);
    std::vector<la::Vec> rhs;
    for (std::size_t i = 0; i < dim; ++i) rhs.push_back(detail::unit_column(dim, i, nvars));
    const auto sol = la::solve_square(block, rhs, nvars);
    for (std::size_t i = 0; i < dim; ++i) {
      // det e_i - sum_k num_k cols[pivot_k] = 0, written as an element (det e_i | ...) of the module
      gb::Column bottom(s, IntPoly(nvars));
      for (std::size_t k = 0; k < dim; ++k) bottom[ech.pivots[k]] = sol->numerators[i][k];
      gb::Column top(dim, IntPoly(nvars));
      top[i] = sol->det;
      eb.add(top, bottom);
    }
  }
  eb.compute();
  return eb.eliminated();
}

/// Nakayama reduction: while some syzygy has a unit coordinate k, generator k
/// is redundant; drop it and eliminate it from the remaining syzygies.
inline FreeReport verify_free(const Lattice& gens) {
  FreeReport rep;
  const auto& in = gens.instance();
  const auto cols = gens.columns(gens.common_k());
  rep.rank = la::echelon(cols, in->n).rank();
  if (rep.rank == gens.size()) {
    rep.free = true;
    rep.minimal_count = rep.rank;
    return rep;
  }
  auto syz = syzygy_columns(cols, in->n);
  std::vector<bool> alive(gens.size(), true);
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> hit;  // (syzygy, coordinate)
    for (std::size_t a = 0; a < syz.size() && !hit; ++a)
      for (std::size_t k = gens.size(); k-- > 0;)
        if (alive[k] && is_local_unit(syz[a][k], in->p)) {
          hit = {{a, k}};
          break;
        }
    if (!hit) break;
    const auto [a, k] = *hit;
    alive[k] = false;
    rep.dropped.push_back(k);
    const gb::Column sigma = syz[a];
    std::vector<gb::Column> next;
    for (std::size_t b = 0; b < syz.size(); ++b) {
      if (b == a) continue;
      gb::Column tau = syz[b];
      if (!tau[k].is_zero()) {
        const IntPoly tk = tau[k];
        for (std::size_t c = 0; c < tau.size(); ++c) tau[c] = sigma[k] * tau[c] - tk * sigma[c];
      }
      if (!detail::is_zero_column(tau)) next.push_back(std::move(tau));
    }
    syz = std::move(next);
  }
  rep.minimal_count = gens.size() - rep.dropped.size();
  rep.free = rep.minimal_count == rep.rank;
  return rep;
}

struct ConductorReport {
  bool ok = true;
  std::size_t products = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // (conductor tag, R tag)
};

/// Every conductor generator times every generator of R lies in A.
inline ConductorReport verify_conductor(const IdealSpec& conductor, const Lattice& r_gens) {
  ConductorReport rep;
  const auto& c = conductor.a_gens;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < r_gens.size(); ++j) {
      ++rep.products;
      if ((c[i] * r_gens[j]).in_A()) continue;
      rep.ok = false;
      rep.failures.emplace_back(c.tags()[i], r_gens.tags()[j]);
    }
  return rep;
}

inline ConductorReport verify_conductor(const InstancePtr& in, const CaseLabel& label) {
  return verify_conductor(conductor_gens(in, label), closure_gens(in, label).gens);
}

// ---- presentation of R = <T, epsilon> -------------------------------------

struct ResolutionCertificate {
  std::size_t nu = 0;
  unsigned pd = 0;
  /// Relation sum psi_k T_k + psi_last epsilon = 0, T in the order below.
  std::vector<Fraction> psi;
  std::vector<std::array<unsigned, 2>> ordering;  // (Gamma, Gamma') = (i + j, i)
  std::vector<std::string> tags;
  std::size_t zero_block_start = 0;  // 1-based index m
  bool tail_is_minus_p = false;
  bool zero_block = false;
  bool in_maximal_ideal = false;
  bool kernel_generated = false;     // some entry outside pS, so psi spans the relations
  std::string ordering_flag;         // empty, or a note when ascending order fails the zero block
  std::optional<FreeReport> remin;   // when psi has a unit entry
};

inline ResolutionCertificate resolution(const InstancePtr& in, const CaseLabel& label, Audit* audit = nullptr) {
  if (!label.uses_epsilon()) throw std::invalid_argument("resolution: the case has no epsilon presentation");
  const unsigned long p = in->p;
  const std::size_t p2 = in->dim();
  const auto gs = closure_gens(in, label);

  // T ordered ascending by (i + j, i); epsilon last
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < gs.shape.size(); ++k)
    if (gs.shape[k][0] >= 0) order.push_back(k);
  auto key = [&](std::size_t k) {
    const auto [i, j] = gs.shape[k];
    return std::array<int, 2>{i + j, i};
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::size_t eps = 0;
  for (std::size_t k = 0; k < gs.shape.size(); ++k)
    if (gs.shape[k][0] < 0) eps = k;

  ResolutionCertificate cert;
  Lattice t = gs.gens.subset(order);
  for (auto k : order) {
    const auto kk = key(k);
    cert.ordering.push_back({static_cast<unsigned>(kk[0]), static_cast<unsigned>(kk[1])});
    cert.tags.push_back(gs.gens.tags()[k]);
  }
  cert.tags.push_back(gs.gens.tags()[eps]);

  const KElem target = gs.gens[eps].scaled(Integer(p));
  const auto coeffs = span_solve(target, t, audit, "p*epsilon over T");
  if (!coeffs) throw std::logic_error("resolution: p * epsilon is not in the span of T");
  cert.psi = *coeffs;
  cert.psi.push_back({int_constant(in->n, -static_cast<long>(p)), int_constant(in->n, 1)});

  cert.zero_block_start = p2 - (p - 1) * p / 2 + 1;
  auto block_zero = [&](const std::vector<Fraction>& v) {
    for (std::size_t k = cert.zero_block_start - 1; k < p2; ++k)
      if (!v[k].num.is_zero()) return false;
    return true;
  };
  cert.zero_block = block_zero(cert.psi);
  if (!cert.zero_block) {
    std::vector<Fraction> rev(cert.psi.begin(), cert.psi.begin() + static_cast<long>(p2));
    std::reverse(rev.begin(), rev.end());
    cert.ordering_flag = block_zero(rev) ? "zero block holds only for the descending order"
                                         : "zero block fails in both orders";
  }
  cert.tail_is_minus_p = cert.psi.back().num == int_constant(in->n, -static_cast<long>(p));
  cert.in_maximal_ideal = std::none_of(cert.psi.begin(), cert.psi.end(), [&](const Fraction& f) {
    return !f.num.is_zero() && is_local_unit(f.num, p);
  });
  cert.kernel_generated = std::any_of(cert.psi.begin(), cert.psi.end() - 1, [&](const Fraction& f) {
    return !f.num.is_zero() && poly_valuation(f.num, p) == 0;
  });
  if (cert.in_maximal_ideal) {
    cert.nu = p2 + 1;
    cert.pd = 1;
  } else {
    Lattice all = t;
    all.add(gs.gens[eps], gs.gens.tags()[eps]);
    cert.remin = verify_free(all);
    cert.nu = cert.remin->minimal_count;
    cert.pd = cert.remin->free ? 0 : 1;
  }
  return cert;
}

// ---- birational maximal Cohen-Macaulay module -----------------------------

class MCMError : public std::runtime_error {
 public:
  enum class Kind { IntersectionRankMismatch, StabilityFailure };
  MCMError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct MCMCertificate {
  Lattice basis;
  IntPoly det;  // of the basis in shifted coordinates over p^scale
  unsigned scale = 0;
  std::vector<std::vector<std::vector<Fraction>>> stability;  // [r][b] -> coefficients
  std::vector<std::string> r_tags;
  bool in_f1 = false, in_f2 = false, stable = false;
  std::vector<std::string> trace;
};

/// M = F1 cap F2 with F1 = p^-1 P^* and F2 = m^-1 (P^(p-1))^*, computed as
/// { x in F1 : m x in <T> } so no denominator other than p appears.
inline MCMCertificate mcm_certificate(const InstancePtr& in, const CaseLabel& label, Audit* audit = nullptr) {
  if (label.kind == CaseKind::NotCM_GradeTwoOpen)
    throw ValidationError(ErrorCode::OpenCase, "no birational maximal Cohen-Macaulay module is known when (p, h1, h2) is not perfect");
  if (label.kind != CaseKind::NotCM_GradeThree)
    throw std::invalid_argument("mcm_certificate: requires the grade-three non-Cohen-Macaulay case");
  const unsigned long p = in->p;
  const std::size_t dim = in->dim();
  const std::size_t nv = in->n;
  const KElem m = m_elem(in, *label.i_star);

  MCMCertificate cert{Lattice(in), IntPoly(nv), 0, {}, {}, false, false, false, {}};
  Lattice pstar = pstar_gens(in);
  Lattice f1(in);
  for (std::size_t i = 0; i < pstar.size(); ++i) f1.add(pstar[i].div_p(1), "p^-1*" + pstar.tags()[i]);
  const Lattice t = lemma_t_set(in, label).gens;
  cert.trace.push_back("F1 = p^-1 P^*: " + std::to_string(f1.size()) + " generators");
  cert.trace.push_back("F2 = m^-1 <T>: " + std::to_string(t.size()) + " generators");

  const unsigned K = std::max(f1.common_k(), t.common_k());
  cert.scale = K;
  const Integer pk = ipow(Integer(p), K);
  gb::EliminationBasis eb(nv, dim, dim);
  for (std::size_t k = 0; k < f1.size(); ++k) eb.add(scaled_column(m * f1[k], K), scaled_column(f1[k], K));
  const gb::Column zero(dim, IntPoly(nv));
  for (std::size_t k = 0; k < t.size(); ++k) eb.add(scaled_column(t[k], K), zero);
  for (std::size_t i = 0; i < dim; ++i) {
    // A lies in <T> and in M
    gb::Column e(dim, IntPoly(nv));
    e[i] = int_constant(nv, pk);
    eb.add(e, zero);
    const KElem d = from_shifted(in, 0, detail::unit_column(dim, i, nv));
    eb.add(scaled_column(m * d, K), e);
  }
  eb.compute();
  Lattice raw(in);
  for (const auto& c : eb.eliminated()) raw.add(from_shifted(in, K, c), "M");
  cert.trace.push_back("intersection: " + std::to_string(raw.size()) + " generators before minimalization");
  Lattice basis = minimalize(raw);
  for (std::size_t i = 0; i < basis.size(); ++i) cert.basis.add(basis[i], "M[" + std::to_string(i) + "]");
  cert.trace.push_back("minimal generators: " + std::to_string(cert.basis.size()));
  if (cert.basis.size() != dim)
    throw MCMError(MCMError::Kind::IntersectionRankMismatch,
                   "intersection needs " + std::to_string(cert.basis.size()) + " generators, expected " + std::to_string(dim));
  const auto cols = cert.basis.columns(K);
  const auto ech = la::echelon(cols, nv);
  if (ech.rank() != dim)
    throw MCMError(MCMError::Kind::IntersectionRankMismatch, "basis is linearly dependent over the fraction field");
  cert.det = la::solve_square(cols, {}, nv)->det;

  const LocalSpan f1_span = LocalSpan::of(f1, audit, "M in F1");
  const LocalSpan t_span = LocalSpan::of(t, audit, "m*M in <T>");
  cert.in_f1 = cert.in_f2 = true;
  for (std::size_t i = 0; i < cert.basis.size(); ++i) {
    cert.in_f1 = f1_span.contains(cert.basis[i], cert.basis.tags()[i]) && cert.in_f1;
    cert.in_f2 = t_span.contains(m * cert.basis[i], cert.basis.tags()[i]) && cert.in_f2;
  }

  const auto r = closure_gens(in, label).gens;
  cert.stable = true;
  for (std::size_t a = 0; a < r.size(); ++a) {
    cert.r_tags.push_back(r.tags()[a]);
    std::vector<std::vector<Fraction>> row;
    for (std::size_t b = 0; b < cert.basis.size(); ++b) {
      auto c = span_solve(r[a] * cert.basis[b], cert.basis, audit, "stability " + r.tags()[a] + "*" + cert.basis.tags()[b]);
      if (!c)
        throw MCMError(MCMError::Kind::StabilityFailure,
                       "product " + r.tags()[a] + " * " + cert.basis.tags()[b] + " leaves the module");
      row.push_back(std::move(*c));
    }
    cert.stability.push_back(std::move(row));
  }
  return cert;
}

// ---- the two claims behind the construction -------------------------------

struct ClaimsReport {
  bool claim1_forward = false;   // Fscr in F2 + (m)
  bool claim1_backward = false;  // F2 + (m) in Fscr
  bool claim2_forward = false;   // (F2 : m) in (p) + P^(p-1)
  bool claim2_backward = false;  // (p) + P^(p-1) in (F2 : m)
  std::size_t colon_generators = 0;
  bool claim1() const { return claim1_forward && claim1_backward; }
  bool claim2() const { return claim2_forward && claim2_backward; }
};

namespace detail {

inline bool all_in(const Lattice& xs, const LocalSpan& span) {
  bool ok = true;
  for (std::size_t i = 0; i < xs.size(); ++i) ok = span.contains(xs[i], xs.tags()[i]) && ok;
  return ok;
}

}  // namespace detail

inline ClaimsReport verify_theorem_claims(const InstancePtr& in, const CaseLabel& label, Audit* audit = nullptr) {
  if (label.kind != CaseKind::NotCM_GradeThree)
    throw std::invalid_argument("verify_theorem_claims: requires the grade-three non-Cohen-Macaulay case");
  const unsigned long p = in->p;
  const std::size_t dim = in->dim();
  const std::size_t nv = in->n;
  const unsigned i = *label.i_star;
  const KElem m = m_elem(in, i);
  ClaimsReport rep;

  // Fscr = m P^* + p <T>
  Lattice fscr = pstar_gens(in).scaled(m);
  fscr.append(lemma_t_set(in, label).gens.scaled(KElem::from_int(in, static_cast<long>(p))));
  const IdealSpec f2m = ideal_spec(in, IdealName::Fscr, i);
  const LocalSpan fscr_span = LocalSpan::of(fscr, audit, "claim 1 backward");
  const LocalSpan f2m_span = LocalSpan::of(f2m.gens, audit, "claim 1 forward");
  rep.claim1_forward = detail::all_in(fscr, f2m_span);
  rep.claim1_backward = detail::all_in(f2m.gens, fscr_span);

  // (F2 :_A m) as { x in A : m x in F2 }
  const IdealSpec f2 = ideal_spec(in, IdealName::F2);
  gb::EliminationBasis eb(nv, dim, dim);
  const gb::Column zero(dim, IntPoly(nv));
  for (std::size_t k = 0; k < dim; ++k) {
    const auto e = detail::unit_column(dim, k, nv);
    eb.add(scaled_column(m * from_shifted(in, 0, e), 0), e);
  }
  for (const auto& c : f2.gens.columns(0)) eb.add(c, zero);
  for (std::size_t k = 0; k < dim; ++k) {
    gb::Column e(dim, IntPoly(nv));
    e[k] = int_constant(nv, static_cast<long>(p));
    eb.add(e, zero);  // p A lies in F2
  }
  eb.compute();
  Lattice colon_ideal(in);
  for (const auto& c : eb.eliminated()) colon_ideal.add(from_shifted(in, 0, c), "(F2:m)");
  rep.colon_generators = colon_ideal.size();
  const IdealSpec target = ideal_spec(in, IdealName::PSymb);
  const LocalSpan colon_span = LocalSpan::of(colon_ideal, audit, "claim 2 backward");
  const LocalSpan target_span = LocalSpan::of(target.gens, audit, "claim 2 forward");
  rep.claim2_forward = detail::all_in(colon_ideal, target_span);
  rep.claim2_backward = detail::all_in(target.gens, colon_span);
  return rep;
}

}  // namespace mcmv
