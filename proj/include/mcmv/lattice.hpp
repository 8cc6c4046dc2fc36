#pragma once

// Finitely generated S-submodules of K = Frac(A), stored as lists of KElems
// and handed to the Groebner engine in shifted coordinates over a common
// denominator p^K.
//
// Membership is decided in the localization at (p, X1..Xn).  When the
// generators contain a full-rank square block whose determinant is p^v times
// a local unit, the adjugate shows p^v S^r lies in the localized span, so
// p^v e_i may be added to the module without changing the local answer.
// Those extra generators keep integer coefficients from exploding.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grobner.hpp"
#include "linalg.hpp"
#include "tower.hpp"

namespace mcmv {

/// Shifted coordinates of x over the denominator p^K (K >= x.k()).
inline gb::Column scaled_column(const KElem& x, unsigned K) {
  if (K < x.k()) throw std::invalid_argument("scaled_column: scale below the denominator");
  auto c = to_shifted(x);
  const Integer s = ipow(Integer(x.p()), K - x.k());
  if (s != 1)
    for (auto& e : c) e = e.scaled(s);
  return c;
}

class Lattice {
 public:
  explicit Lattice(InstancePtr inst) : inst_(std::move(inst)) {}

  void add(KElem x, std::string tag = {}) {
    if (x.instance() != inst_) throw std::invalid_argument("Lattice: instance mismatch");
    gens_.push_back(std::move(x));
    tags_.push_back(std::move(tag));
  }

  /// The S-module generated by a * (w - h1)^i (u - h2)^j over the A-generators a.
  static Lattice expand(const InstancePtr& in, const std::vector<KElem>& a_gens, const std::vector<std::string>& tags = {}) {
    Lattice l(in);
    const unsigned p = static_cast<unsigned>(in->p);
    for (std::size_t g = 0; g < a_gens.size(); ++g)
      for (unsigned j = 0; j < p; ++j)
        for (unsigned i = 0; i < p; ++i) {
          std::string tag = g < tags.size() ? tags[g] : "gen[" + std::to_string(g) + "]";
          if (i + j > 0) tag += "*D[" + std::to_string(i) + "," + std::to_string(j) + "]";
          l.add(a_gens[g] * shifted_monomial(in, i, j), std::move(tag));
        }
    return l;
  }

  const InstancePtr& instance() const { return inst_; }
  const std::vector<KElem>& gens() const { return gens_; }
  const std::vector<std::string>& tags() const { return tags_; }
  const KElem& operator[](std::size_t i) const { return gens_.at(i); }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  unsigned common_k() const {
    unsigned k = 0;
    for (const auto& g : gens_) k = std::max(k, g.k());
    return k;
  }

  std::vector<gb::Column> columns(unsigned K) const {
    std::vector<gb::Column> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(scaled_column(g, K));
    return out;
  }

  gb::SubmoduleGens module(unsigned K) const { return gb::SubmoduleGens(inst_->n, inst_->dim(), columns(K)); }

  Lattice subset(const std::vector<std::size_t>& idx) const {
    Lattice l(inst_);
    for (auto i : idx) l.add(gens_.at(i), tags_.at(i));
    return l;
  }

  Lattice scaled(const KElem& c) const {
    Lattice l(inst_);
    for (std::size_t i = 0; i < gens_.size(); ++i) l.add(c * gens_[i], tags_[i]);
    return l;
  }

  void append(const Lattice& other) {
    for (std::size_t i = 0; i < other.size(); ++i) add(other.gens_[i], other.tags_[i]);
  }

 private:
  InstancePtr inst_;
  std::vector<KElem> gens_;
  std::vector<std::string> tags_;
};

/// One local membership verdict, kept so an independent procedure can re-check it.
struct Decision {
  std::string label;
  std::shared_ptr<const gb::SubmoduleGens> span;
  gb::Column target;
  unsigned scale = 0;  // coordinates carry the denominator p^scale
  bool member = false;
};

class Audit {
 public:
  void record(Decision d) { decisions_.push_back(std::move(d)); }
  const std::vector<Decision>& decisions() const { return decisions_; }
  std::size_t size() const { return decisions_.size(); }

 private:
  std::vector<Decision> decisions_;
};

/// Extra generators d e_i for a module of full rank: p^v e_i when the
/// determinant of a maximal independent block is p^v times a local unit,
/// otherwise det e_i (which lies in the global span).  `extra` raises the
/// power of p further.
inline std::vector<gb::Column> bounding_columns(const gb::SubmoduleGens& m, unsigned long p, unsigned extra = 0,
                                                std::optional<unsigned>* v_out = nullptr) {
  if (v_out) *v_out = std::nullopt;
  if (m.columns.empty()) return {};
  const auto ech = la::echelon(m.columns, m.nvars);
  if (ech.rank() < m.rank) return {};
  IntPoly d = ech.last_pivot;
  if (auto v = la::p_power_times_unit(d, p)) {
    d = int_constant(m.nvars, ipow(Integer(p), *v + extra));
    if (v_out) *v_out = *v;
  } else if (extra > 0) {
    d = d.scaled(ipow(Integer(p), extra));
  }
  std::vector<gb::Column> out;
  for (std::size_t i = 0; i < m.rank; ++i) {
    gb::Column c(m.rank, IntPoly(m.nvars));
    c[i] = d;
    out.push_back(std::move(c));
  }
  return out;
}

/// The span of a submodule of Z[X]^r read over the localization at (p, X).
class LocalSpan {
 public:
  LocalSpan(gb::SubmoduleGens m, unsigned long p, unsigned scale = 0, Audit* audit = nullptr, std::string label = {})
      : p_(p), scale_(scale), audit_(audit), label_(std::move(label)) {
    auto shared = std::make_shared<gb::SubmoduleGens>(std::move(m));
    original_ = shared;
    bounded_ = *shared;
    for (auto& c : bounding_columns(*shared, p, 0, &bound_)) bounded_.add(std::move(c));
    gb_ = gb::strong_gb(bounded_);
  }

  static LocalSpan of(const Lattice& l, Audit* audit = nullptr, std::string label = {}) {
    const unsigned K = l.common_k();
    return LocalSpan(l.module(K), l.instance()->p, K, audit, std::move(label));
  }

  unsigned scale() const { return scale_; }
  /// v with p^v S^r inside the localized span, when detected.
  std::optional<unsigned> bound() const { return bound_; }
  const gb::GroebnerBasis& basis() const { return gb_; }
  const gb::SubmoduleGens& generators() const { return *original_; }

  bool contains(const gb::Column& z, const std::string& what = {}) const {
    const bool ans = decide(z);
    if (audit_) audit_->record({label_.empty() ? what : label_ + ": " + what, original_, z, scale_, ans});
    return ans;
  }

  /// x lies in the span; false at once if x has a larger denominator than
  /// every generator.
  bool contains(const KElem& x, const std::string& what = {}) const {
    if (x.k() > scale_) return false;
    return contains(scaled_column(x, scale_), what);
  }

 private:
  bool decide(const gb::Column& z) const {
    if (std::all_of(z.begin(), z.end(), [](const IntPoly& e) { return e.is_zero(); })) return true;
    if (gb::is_member(z, gb_)) return true;
    const auto j = gb::colon(bounded_, z);
    return std::any_of(j.columns.begin(), j.columns.end(), [&](const gb::Column& c) { return is_local_unit(c[0], p_); });
  }

  unsigned long p_;
  unsigned scale_;
  Audit* audit_;
  std::string label_;
  std::shared_ptr<const gb::SubmoduleGens> original_;
  gb::SubmoduleGens bounded_;
  std::optional<unsigned> bound_;
  gb::GroebnerBasis gb_;
};

/// Indices of a minimal generating set of the localized span.  A generator is
/// dropped when it lies in the span of the others plus p^(v+1) S^r, where
/// p^v S^r is inside the span: then it is redundant modulo m * span, hence
/// redundant by Nakayama.  Later generators are dropped first.
inline std::vector<std::size_t> minimal_generators(const gb::SubmoduleGens& m, unsigned long p) {
  std::vector<std::size_t> kept(m.size());
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;
  const auto extra = bounding_columns(m, p, 1);
  for (std::size_t k = m.size(); k-- > 0;) {
    gb::SubmoduleGens rest(m.nvars, m.rank);
    for (auto i : kept)
      if (i != k) rest.add(m.columns[i]);
    for (const auto& c : extra) rest.add(c);
    if (rest.columns.empty()) continue;
    if (gb::local_member(m.columns[k], rest, p)) kept.erase(std::find(kept.begin(), kept.end(), k));
  }
  return kept;
}

inline Lattice minimalize(const Lattice& l) {
  return l.subset(minimal_generators(l.module(l.common_k()), l.instance()->p));
}

}  // namespace mcmv
