#pragma once

// Strong Groebner bases over Z for submodules of Z[X1..Xn]^r.
//
// Module order: position over term, component 0 most significant, monomials
// compared by degrevlex.  Reduction is Euclidean: a term c*x^a*e_i is
// reduced by the basis element whose leading term d*x^b*e_i (b | a) has the
// smallest |d|, leaving the residue of c in [0, |d|).  With a reduced strong
// basis this makes normal forms canonical.
//
// Local questions (membership in the localization at (p, X1..Xn)) are never
// answered by localizing the data: everything is computed over Z[X] and the
// answer is read off a colon ideal, which commutes with localization.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "zpoly.hpp"

namespace mcmv::gb {

using Column = std::vector<IntPoly>;

/// Generators (columns) of a submodule of Z[X]^rank.
struct SubmoduleGens {
  std::size_t nvars = 0;
  std::size_t rank = 0;
  std::vector<Column> columns;

  SubmoduleGens() = default;
  SubmoduleGens(std::size_t nvars_, std::size_t rank_, std::vector<Column> cols = {})
      : nvars(nvars_), rank(rank_), columns(std::move(cols)) {
    for (const auto& c : columns) check(c);
  }

  static SubmoduleGens ideal(std::size_t nvars, const std::vector<IntPoly>& gens) {
    SubmoduleGens m(nvars, 1);
    for (const auto& g : gens) m.columns.push_back({g});
    return m;
  }

  void add(Column c) {
    check(c);
    columns.push_back(std::move(c));
  }
  std::size_t size() const { return columns.size(); }

  void check(const Column& c) const {
    if (c.size() != rank) throw std::invalid_argument("column length differs from the ambient rank");
    for (const auto& e : c)
      if (e.nvars() != nvars) throw std::invalid_argument("column entry over a different variable set");
  }
};

struct VecTerm {
  std::uint32_t comp;
  Monomial mon;
  Integer coeff;
};

/// >0 if (ca, ma) is larger than (cb, mb) in the position-over-term order.
inline int pot_compare(std::uint32_t ca, const Monomial& ma, std::uint32_t cb, const Monomial& mb) {
  if (ca != cb) return ca < cb ? 1 : -1;
  return degrevlex_compare(ma, mb);
}

/// Sparse vector in Z[X]^rank, terms sorted decreasingly in the module order.
class ModVec {
 public:
  ModVec() = default;
  ModVec(std::size_t nvars, std::size_t rank) : nvars_(nvars), rank_(rank) {}

  static ModVec from_column(const Column& col, std::size_t nvars, std::uint32_t offset = 0, std::size_t rank = 0) {
    ModVec v(nvars, rank ? rank : col.size() + offset);
    for (std::size_t i = 0; i < col.size(); ++i)
      for (const auto& t : col[i].terms()) v.terms_.push_back({static_cast<std::uint32_t>(i + offset), t.mon, t.coeff});
    return v;  // components ascend, each poly is sorted: already in order
  }

  Column to_column(std::uint32_t offset, std::size_t len) const {
    std::vector<std::vector<IntPoly::Term>> parts(len);
    for (const auto& t : terms_)
      if (t.comp >= offset && t.comp < offset + len) parts[t.comp - offset].push_back({t.mon, t.coeff});
    Column c;
    c.reserve(len);
    for (auto& p : parts) c.push_back(IntPoly::from_terms(nvars_, std::move(p)));
    return c;
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<VecTerm>& terms() const { return terms_; }
  std::vector<VecTerm>& mutable_terms() { return terms_; }
  const VecTerm& lead() const { return terms_.front(); }

  /// True iff every nonzero entry lies at a component index >= c.
  bool vanishes_below(std::uint32_t c) const { return terms_.empty() || terms_.front().comp >= c; }

  ModVec mul_term(const Monomial& m, const Integer& c) const {
    ModVec r(nvars_, rank_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mon * m, t.coeff * c});
    return r;
  }

  void negate() {
    for (auto& t : terms_) t.coeff = -t.coeff;
  }

  /// this = a*this + b*x^m*other (merged, exact).
  void combine(const Integer& a, const ModVec& other, const Monomial& m, const Integer& b) {
    std::vector<VecTerm> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    const bool scale_self = a != 1;
    while (i < terms_.size() || j < other.terms_.size()) {
      int c;
      Monomial om;
      if (j < other.terms_.size()) om = other.terms_[j].mon * m;
      if (i == terms_.size()) c = -1;
      else if (j == other.terms_.size()) c = 1;
      else c = pot_compare(terms_[i].comp, terms_[i].mon, other.terms_[j].comp, om);
      if (c > 0) {
        VecTerm t = std::move(terms_[i++]);
        if (scale_self) t.coeff *= a;
        out.push_back(std::move(t));
      } else if (c < 0) {
        out.push_back({other.terms_[j].comp, om, other.terms_[j].coeff * b});
        ++j;
      } else {
        VecTerm t = std::move(terms_[i++]);
        if (scale_self) t.coeff *= a;
        mpz_addmul(t.coeff.get_mpz_t(), other.terms_[j].coeff.get_mpz_t(), b.get_mpz_t());
        ++j;
        if (sgn(t.coeff) != 0) {
          t.mon = om;
          out.push_back(std::move(t));
        }
      }
    }
    terms_ = std::move(out);
  }

  friend bool operator==(const ModVec& a, const ModVec& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& x = a.terms_[i];
      const auto& y = b.terms_[i];
      if (x.comp != y.comp || !(x.mon == y.mon) || x.coeff != y.coeff) return false;
    }
    return true;
  }

 private:
  std::size_t nvars_ = 0;
  std::size_t rank_ = 0;
  std::vector<VecTerm> terms_;
};

struct EngineStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_pruned = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t basis_size = 0;
};

/// A reduced strong Groebner basis.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t nvars, std::size_t rank, std::vector<ModVec> elems, EngineStats stats)
      : nvars_(nvars), rank_(rank), elems_(std::move(elems)), stats_(stats) {
    index();
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModVec>& elements() const { return elems_; }
  const EngineStats& stats() const { return stats_; }
  bool reduced() const { return true; }

  /// Euclidean normal form; zero iff v lies in the span.
  ModVec reduce(ModVec v) const {
    std::vector<VecTerm> done;
    while (!v.is_zero()) {
      auto& lt = v.mutable_terms().front();
      const ModVec* g = best_reducer(lt.comp, lt.mon);
      if (g) {
        Integer r, q;
        mpz_mod(r.get_mpz_t(), lt.coeff.get_mpz_t(), g->lead().coeff.get_mpz_t());
        q = lt.coeff - r;
        if (sgn(q) != 0) {
          mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g->lead().coeff.get_mpz_t());
          v.combine(1, *g, lt.mon / g->lead().mon, -q);
          continue;
        }
      }
      done.push_back(std::move(lt));
      v.mutable_terms().erase(v.mutable_terms().begin());
    }
    ModVec out(nvars_, rank_);
    out.mutable_terms() = std::move(done);
    return out;
  }

  /// Leading-term reducer with minimal |coefficient|, or nullptr.
  const ModVec* best_reducer(std::uint32_t comp, const Monomial& mon) const {
    const auto it = by_comp_.find(comp);
    if (it == by_comp_.end()) return nullptr;
    const ModVec* best = nullptr;
    const auto mask = mon.divmask();
    for (const auto idx : it->second) {
      const auto& e = elems_[idx];
      if ((masks_[idx] & ~mask) != 0 || !e.lead().mon.divides(mon)) continue;
      if (!best || cmpabs(e.lead().coeff, best->lead().coeff) < 0) best = &e;
    }
    return best;
  }

 private:
  void index() {
    masks_.clear();
    by_comp_.clear();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      masks_.push_back(elems_[i].lead().mon.divmask());
      by_comp_[elems_[i].lead().comp].push_back(i);
    }
  }

  std::size_t nvars_ = 0;
  std::size_t rank_ = 0;
  std::vector<ModVec> elems_;
  std::vector<std::uint32_t> masks_;
  std::map<std::uint32_t, std::vector<std::size_t>> by_comp_;
  EngineStats stats_;
};

namespace detail {

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Buchberger's algorithm for strong bases over Z: every critical pair
// contributes an S-vector and, when neither leading coefficient divides the
// other, a gcd-vector.  Redundant elements stop spawning new pairs once a
// newer element strongly divides their leading term, and the chain criterion
// prunes S-vectors whose leading-term syzygy factors through a third element.
class Buchberger {
 public:
  Buchberger(std::size_t nvars, std::size_t rank) : nvars_(nvars), rank_(rank) {}

  /// Seeds with elements already known to form a Groebner basis.
  void seed_basis(const std::vector<ModVec>& gb) {
    for (const auto& g : gb) push_element(g, /*make_pairs=*/false);
  }

  void add_generator(ModVec v) {
    v = full_reduce(std::move(v));
    if (!v.is_zero()) insert(std::move(v));
  }

  GroebnerBasis finish() {
    while (!queue_.empty()) {
      const Pair pr = queue_.top();
      queue_.pop();
      if (pr.dead()) continue;
      ++stats_.pairs_considered;
      if (pr.need_s && !pruned_.count(key(pr.i, pr.j))) process(s_vector(pr));
      else if (pr.need_s) ++stats_.pairs_pruned;
      if (pr.need_g) process(g_vector(pr));
    }
    return extract();
  }

 private:
  struct Pair {
    std::size_t i, j;
    std::uint32_t comp;
    Monomial lcm;
    bool need_s, need_g;
    std::uint64_t seq;
    bool dead() const { return !need_s && !need_g; }
  };
  struct PairOrder {
    bool operator()(const Pair& a, const Pair& b) const {
      // priority_queue pops the largest: invert to select the smallest lcm
      const int c = pot_compare(a.comp, a.lcm, b.comp, b.lcm);
      if (c != 0) return c > 0;
      return a.seq > b.seq;
    }
  };

  static std::uint64_t key(std::size_t i, std::size_t j) { return (static_cast<std::uint64_t>(i) << 32) | j; }

  void process(ModVec v) {
    v = full_reduce(std::move(v));
    if (v.is_zero()) {
      ++stats_.reductions_to_zero;
      return;
    }
    insert(std::move(v));
  }

  ModVec s_vector(const Pair& pr) const {
    const auto& f = elems_[pr.i];
    const auto& g = elems_[pr.j];
    const Integer l = lcm_int(f.lead().coeff, g.lead().coeff);
    const Integer a = l / f.lead().coeff;
    const Integer b = l / g.lead().coeff;
    ModVec s = f.mul_term(pr.lcm / f.lead().mon, a);
    s.combine(1, g, pr.lcm / g.lead().mon, -b);
    return s;
  }

  ModVec g_vector(const Pair& pr) const {
    const auto& f = elems_[pr.i];
    const auto& g = elems_[pr.j];
    Integer d, u, v;
    mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), f.lead().coeff.get_mpz_t(), g.lead().coeff.get_mpz_t());
    ModVec s = f.mul_term(pr.lcm / f.lead().mon, u);
    s.combine(1, g, pr.lcm / g.lead().mon, v);
    return s;
  }

  const ModVec* reducer(std::uint32_t comp, const Monomial& mon) const {
    const auto it = by_comp_.find(comp);
    if (it == by_comp_.end()) return nullptr;
    const ModVec* best = nullptr;
    const auto mask = mon.divmask();
    for (const auto idx : it->second) {
      const auto& e = elems_[idx];
      if ((masks_[idx] & ~mask) != 0 || !e.lead().mon.divides(mon)) continue;
      if (!best || cmpabs(e.lead().coeff, best->lead().coeff) < 0) best = &e;
    }
    return best;
  }

  ModVec full_reduce(ModVec v) const {
    std::vector<VecTerm> done;
    auto& ts = v.mutable_terms();
    while (!ts.empty()) {
      auto& lt = ts.front();
      const ModVec* g = reducer(lt.comp, lt.mon);
      if (g) {
        Integer r;
        mpz_mod(r.get_mpz_t(), lt.coeff.get_mpz_t(), g->lead().coeff.get_mpz_t());
        Integer q = lt.coeff - r;
        if (sgn(q) != 0) {
          mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g->lead().coeff.get_mpz_t());
          v.combine(1, *g, lt.mon / g->lead().mon, -q);
          continue;
        }
      }
      done.push_back(std::move(lt));
      ts.erase(ts.begin());
    }
    ts = std::move(done);
    return v;
  }

  static bool strongly_divides(const VecTerm& a, std::uint32_t comp, const Monomial& mon, const Integer& coeff) {
    return a.comp == comp && a.mon.divides(mon) && mpz_divisible_p(coeff.get_mpz_t(), a.coeff.get_mpz_t());
  }

  void push_element(ModVec v, bool make_pairs) {
    if (sgn(v.lead().coeff) < 0) v.negate();
    const std::size_t h = elems_.size();
    const auto& lt = v.lead();
    masks_.push_back(lt.mon.divmask());
    by_comp_[lt.comp].push_back(h);
    redundant_.push_back(false);
    elems_.push_back(std::move(v));
    if (!make_pairs) return;
    const VecTerm& nlt = elems_[h].lead();

    // chain criterion on pending S-vectors
    for (auto& [k, pr] : pending_) {
      (void)k;
      if (!pr.need_s || pr.comp != nlt.comp || redundant_[pr.i] || redundant_[pr.j]) continue;
      const auto& fi = elems_[pr.i].lead();
      const auto& fj = elems_[pr.j].lead();
      const Integer lij = lcm_int(fi.coeff, fj.coeff);
      if (!strongly_divides(nlt, pr.comp, pr.lcm, lij)) continue;
      const Monomial lih = lcm(fi.mon, nlt.mon), ljh = lcm(fj.mon, nlt.mon);
      const Integer cih = lcm_int(fi.coeff, nlt.coeff), cjh = lcm_int(fj.coeff, nlt.coeff);
      if ((lih == pr.lcm && cih == lij) || (ljh == pr.lcm && cjh == lij)) continue;
      pruned_.insert(key(pr.i, pr.j));
    }

    for (std::size_t i = 0; i < h; ++i) {
      if (redundant_[i]) continue;
      const auto& olt = elems_[i].lead();
      if (olt.comp != nlt.comp) continue;
      Pair pr{i, h, nlt.comp, lcm(olt.mon, nlt.mon), true, false, seq_++};
      const bool a_div_b = mpz_divisible_p(nlt.coeff.get_mpz_t(), olt.coeff.get_mpz_t());
      const bool b_div_a = mpz_divisible_p(olt.coeff.get_mpz_t(), nlt.coeff.get_mpz_t());
      pr.need_g = !a_div_b && !b_div_a;
      pending_.emplace(key(i, h), pr);
      queue_.push(pr);
    }
    for (std::size_t i = 0; i < h; ++i) {
      if (redundant_[i]) continue;
      const auto& olt = elems_[i].lead();
      if (strongly_divides(nlt, olt.comp, olt.mon, olt.coeff)) redundant_[i] = true;
    }
  }

  void insert(ModVec v) { push_element(std::move(v), true); }

  GroebnerBasis extract() {
    // minimal: drop elements whose leading term is strongly divisible by another's
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const auto& li = elems_[i].lead();
      bool drop = false;
      for (std::size_t j = 0; j < elems_.size() && !drop; ++j) {
        if (i == j) continue;
        const auto& lj = elems_[j].lead();
        if (!strongly_divides(lj, li.comp, li.mon, li.coeff)) continue;
        const bool same = lj.mon == li.mon && cmpabs(lj.coeff, li.coeff) == 0;
        drop = !same || j < i;
      }
      if (!drop) keep.push_back(i);
    }
    std::vector<ModVec> minimal;
    for (auto i : keep) minimal.push_back(elems_[i]);
    std::sort(minimal.begin(), minimal.end(), [](const ModVec& a, const ModVec& b) {
      const int c = pot_compare(a.lead().comp, a.lead().mon, b.lead().comp, b.lead().mon);
      if (c != 0) return c > 0;
      return cmpabs(a.lead().coeff, b.lead().coeff) < 0;
    });
    // tail reduction against the others
    std::vector<ModVec> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<ModVec> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      GroebnerBasis rest(nvars_, rank_, std::move(others), {});
      ModVec tail(nvars_, rank_);
      tail.mutable_terms().assign(minimal[i].terms().begin() + 1, minimal[i].terms().end());
      tail = rest.reduce(std::move(tail));
      ModVec e(nvars_, rank_);
      e.mutable_terms().push_back(minimal[i].lead());
      for (auto& t : tail.mutable_terms()) e.mutable_terms().push_back(std::move(t));
      reduced.push_back(std::move(e));
    }
    stats_.basis_size = reduced.size();
    return GroebnerBasis(nvars_, rank_, std::move(reduced), stats_);
  }

  std::size_t nvars_, rank_;
  std::vector<ModVec> elems_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> redundant_;
  std::map<std::uint32_t, std::vector<std::size_t>> by_comp_;
  std::map<std::uint64_t, Pair> pending_;
  std::set<std::uint64_t> pruned_;
  std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue_;
  std::uint64_t seq_ = 0;
  EngineStats stats_;
};

}  // namespace detail

inline GroebnerBasis strong_gb(const SubmoduleGens& m) {
  detail::Buchberger bb(m.nvars, m.rank);
  for (const auto& c : m.columns) bb.add_generator(ModVec::from_column(c, m.nvars));
  return bb.finish();
}

inline Column normal_form(const Column& v, const GroebnerBasis& gb) {
  if (v.size() != gb.rank()) throw std::invalid_argument("normal_form: rank mismatch");
  return gb.reduce(ModVec::from_column(v, gb.nvars())).to_column(0, gb.rank());
}

inline IntPoly normal_form(const IntPoly& f, const GroebnerBasis& gb) { return normal_form(Column{f}, gb)[0]; }

inline bool is_member(const Column& v, const GroebnerBasis& gb) {
  if (v.size() != gb.rank()) throw std::invalid_argument("is_member: rank mismatch");
  return gb.reduce(ModVec::from_column(v, gb.nvars())).is_zero();
}

/// Basis of an augmented module [top | bottom] with top block dominant.
/// Elements vanishing on the top block generate the part of the module
/// that lies in 0 + Z[X]^bottom.
class EliminationBasis {
 public:
  EliminationBasis(std::size_t nvars, std::size_t top, std::size_t bottom)
      : nvars_(nvars), top_(top), bottom_(bottom) {}

  void add(const Column& top_part, const Column& bottom_part) {
    Column c = top_part;
    c.insert(c.end(), bottom_part.begin(), bottom_part.end());
    gens_.push_back(ModVec::from_column(c, nvars_));
  }

  void compute() {
    detail::Buchberger bb(nvars_, top_ + bottom_);
    for (auto& g : gens_) bb.add_generator(g);
    gb_ = bb.finish();
  }

  const GroebnerBasis& basis() const { return gb_; }

  /// Bottom parts of the basis elements with zero top part.
  std::vector<Column> eliminated() const {
    std::vector<Column> out;
    for (const auto& e : gb_.elements())
      if (e.vanishes_below(static_cast<std::uint32_t>(top_))) out.push_back(e.to_column(static_cast<std::uint32_t>(top_), bottom_));
    return out;
  }

  /// Reduces (v | 0) using the basis; returns (top normal form, bottom part).
  std::pair<Column, Column> reduce(const Column& v) const {
    Column c = v;
    for (std::size_t i = 0; i < bottom_; ++i) c.push_back(IntPoly(nvars_));
    ModVec r = reduce_top(ModVec::from_column(c, nvars_));
    return {r.to_column(0, top_), r.to_column(static_cast<std::uint32_t>(top_), bottom_)};
  }

 private:
  // Reduces only terms in the top block, carrying the bottom block along.
  ModVec reduce_top(ModVec v) const {
    std::vector<VecTerm> done;
    auto& ts = v.mutable_terms();
    while (!ts.empty() && ts.front().comp < top_) {
      auto& lt = ts.front();
      const ModVec* g = gb_.best_reducer(lt.comp, lt.mon);
      if (g) {
        Integer r;
        mpz_mod(r.get_mpz_t(), lt.coeff.get_mpz_t(), g->lead().coeff.get_mpz_t());
        Integer q = lt.coeff - r;
        if (sgn(q) != 0) {
          mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g->lead().coeff.get_mpz_t());
          v.combine(1, *g, lt.mon / g->lead().mon, -q);
          continue;
        }
      }
      done.push_back(std::move(lt));
      ts.erase(ts.begin());
    }
    done.insert(done.end(), std::make_move_iterator(ts.begin()), std::make_move_iterator(ts.end()));
    ts = std::move(done);
    return v;
  }

  std::size_t nvars_, top_, bottom_;
  std::vector<ModVec> gens_;
  GroebnerBasis gb_;
};

/// Generators of the kernel of the map Z[X]^s -> Z[X]^r given by the columns.
inline SubmoduleGens syzygies(const SubmoduleGens& m) {
  const std::size_t s = m.size();
  EliminationBasis eb(m.nvars, m.rank, s);
  for (std::size_t k = 0; k < s; ++k) {
    Column e(s, IntPoly(m.nvars));
    e[k] = int_constant(m.nvars, 1);
    eb.add(m.columns[k], e);
  }
  eb.compute();
  return SubmoduleGens(m.nvars, s, eb.eliminated());
}

/// { sum s_k b_k : sum s_k a_k in span(other) } for paired columns a_k, b_k.
inline SubmoduleGens preimage(const SubmoduleGens& a, const SubmoduleGens& b, const SubmoduleGens& other) {
  if (a.size() != b.size()) throw std::invalid_argument("preimage: column counts differ");
  if (a.rank != other.rank) throw std::invalid_argument("preimage: rank mismatch");
  EliminationBasis eb(a.nvars, a.rank, b.rank);
  for (std::size_t k = 0; k < a.size(); ++k) eb.add(a.columns[k], b.columns[k]);
  const Column zero(b.rank, IntPoly(a.nvars));
  for (const auto& c : other.columns) eb.add(c, zero);
  eb.compute();
  return SubmoduleGens(a.nvars, b.rank, eb.eliminated());
}

inline SubmoduleGens module_intersect(const SubmoduleGens& m1, const SubmoduleGens& m2) {
  if (m1.rank != m2.rank) throw std::invalid_argument("module_intersect: rank mismatch");
  return preimage(m1, m1, m2);
}

/// The ideal { s : s*z in span(m) }.
inline SubmoduleGens colon(const SubmoduleGens& m, const Column& z) {
  SubmoduleGens a(m.nvars, m.rank, {z});
  SubmoduleGens one(m.nvars, 1, {{int_constant(m.nvars, 1)}});
  return preimage(a, one, m);
}

inline SubmoduleGens colon(const SubmoduleGens& ideal, const IntPoly& z) { return colon(ideal, Column{z}); }

/// Membership in the span of m over the localization at (p, X1..Xn).
inline bool local_member(const Column& z, const SubmoduleGens& m, unsigned long p) {
  if (z.size() != m.rank) throw std::invalid_argument("local_member: rank mismatch");
  if (std::all_of(z.begin(), z.end(), [](const IntPoly& e) { return e.is_zero(); })) return true;
  if (is_member(z, strong_gb(m))) return true;
  const auto j = colon(m, z);
  return std::any_of(j.columns.begin(), j.columns.end(), [&](const Column& c) { return is_local_unit(c[0], p); });
}

inline bool local_member(const IntPoly& z, const SubmoduleGens& ideal, unsigned long p) {
  return local_member(Column{z}, ideal, p);
}

}  // namespace mcmv::gb
