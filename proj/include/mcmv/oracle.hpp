#pragma once

// Falsification oracle for local membership questions.
//
// The map S_(p,X) -> (Z/p^k)[X]/(X)^N is a ring map (local units stay
// invertible), so membership over S_(p,X) survives truncation.  A "no"
// in the finite ring therefore refutes membership; a "yes" is only
// consistency.  The finite question is plain linear algebra over the chain
// ring Z/p^k: a target lies in the Z/p^k-span of x^a * g (deg a < N).
//
// Coordinates that carry a common denominator p^s are scaled integers, so
// the modulus is raised to p^(k+s) to keep k digits of p-adic depth.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "grobner.hpp"
#include "lattice.hpp"

namespace mcmv {

enum class OracleVerdict { No, Consistent };

inline const char* verdict_name(OracleVerdict v) { return v == OracleVerdict::No ? "NO" : "consistent"; }

namespace detail {

// Monomials of total degree < N in n variables, ascending degree.
class TruncatedMonomials {
 public:
  TruncatedMonomials(std::size_t nvars, unsigned N) : nvars_(nvars), N_(N) {
    std::vector<unsigned> e(nvars, 0);
    for (unsigned d = 0; d < N; ++d) enumerate(0, d, e);
  }
  std::size_t size() const { return mons_.size(); }
  const std::vector<unsigned>& operator[](std::size_t i) const { return mons_[i]; }
  std::optional<std::size_t> index(const std::vector<unsigned>& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> index(const Monomial& m) const {
    std::vector<unsigned> e(nvars_);
    unsigned d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += e[i] = m[i];
    if (d >= N_) return std::nullopt;
    return index(e);
  }

 private:
  void enumerate(std::size_t var, unsigned left, std::vector<unsigned>& e) {
    if (var + 1 == nvars_ || nvars_ == 0) {
      if (nvars_) e[var] = left;
      else if (left) return;
      index_[e] = mons_.size();
      mons_.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[var] = a;
      enumerate(var + 1, left - a, e);
    }
    e[var] = 0;
  }

  std::size_t nvars_;
  unsigned N_;
  std::vector<std::vector<unsigned>> mons_;
  std::map<std::vector<unsigned>, std::size_t> index_;
};

}  // namespace detail

/// A Z/p^e-submodule of (Z/p^e)^D in Howell-style echelon form: the rows
/// with pivot at position >= r span every element vanishing before r.
class ChainRingEchelon {
 public:
  ChainRingEchelon(unsigned long p, unsigned e, std::size_t dim) : p_(p), e_(e), dim_(dim), rows_(dim) {
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) q_ *= static_cast<std::int64_t>(p);
  }

  std::int64_t modulus() const { return q_; }

  void insert(std::vector<std::int64_t> v) {
    std::vector<std::vector<std::int64_t>> work{std::move(v)};
    while (!work.empty()) {
      auto x = std::move(work.back());
      work.pop_back();
      for (;;) {
        const auto r = lead(x);
        if (!r) break;
        const unsigned w = val(x[*r]);
        auto& row = rows_[*r];
        if (row.empty()) {
          normalize(x, *r);
          row = x;
          if (w > 0) work.push_back(scaled(row, pw(e_ - w)));
          break;
        }
        const unsigned wb = val(row[*r]);
        if (w >= wb) {
          subtract(x, row, x[*r] / pw(wb), *r);
          continue;
        }
        normalize(x, *r);
        std::swap(x, row);
        work.push_back(scaled(row, pw(e_ - w)));
      }
    }
  }

  bool contains(std::vector<std::int64_t> x) const {
    for (;;) {
      const auto r = lead(x);
      if (!r) return true;
      const auto& row = rows_[*r];
      if (row.empty()) return false;
      const unsigned wb = val(row[*r]);
      if (val(x[*r]) < wb) return false;
      subtract(x, row, x[*r] / pw(wb), *r);
    }
  }

 private:
  std::optional<std::size_t> lead(const std::vector<std::int64_t>& x) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (x[i] != 0) return i;
    return std::nullopt;
  }
  unsigned val(std::int64_t a) const {
    unsigned w = 0;
    while (w < e_ && a % static_cast<std::int64_t>(p_) == 0) {
      a /= static_cast<std::int64_t>(p_);
      ++w;
    }
    return w;
  }
  std::int64_t pw(unsigned k) const {
    std::int64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= static_cast<std::int64_t>(p_);
    return r;
  }
  std::int64_t inverse(std::int64_t a) const {
    // a is a unit mod q
    std::int64_t t = 0, nt = 1, r = q_, nr = a % q_;
    while (nr != 0) {
      const std::int64_t qt = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - qt * nt);
      std::tie(r, nr) = std::make_pair(nr, r - qt * nr);
    }
    return ((t % q_) + q_) % q_;
  }
  void normalize(std::vector<std::int64_t>& x, std::size_t r) const {
    const unsigned w = val(x[r]);
    const std::int64_t u = inverse(x[r] / pw(w));
    for (std::size_t i = r; i < dim_; ++i) x[i] = x[i] * u % q_;
  }
  std::vector<std::int64_t> scaled(const std::vector<std::int64_t>& x, std::int64_t c) const {
    std::vector<std::int64_t> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * c % q_;
    return y;
  }
  void subtract(std::vector<std::int64_t>& x, const std::vector<std::int64_t>& row, std::int64_t c, std::size_t from) const {
    c %= q_;
    for (std::size_t i = from; i < dim_; ++i) {
      if (row[i] == 0) continue;
      x[i] = ((x[i] - c * row[i]) % q_ + q_) % q_;
    }
  }

  unsigned long p_;
  unsigned e_;
  std::size_t dim_;
  std::int64_t q_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Decides membership questions about submodules of Z[X]^r in the
/// truncation (Z/p^(k+s))[X]/(X)^N; spans are cached by identity.
class TruncationOracle {
 public:
  TruncationOracle(unsigned long p, unsigned k, unsigned N) : p_(p), k_(k), N_(N) {
    if (k == 0 || N == 0) throw std::invalid_argument("TruncationOracle: k and N must be positive");
  }

  unsigned depth() const { return k_; }
  unsigned degree() const { return N_; }

  OracleVerdict decide(const gb::Column& target, const gb::SubmoduleGens& span, unsigned scale = 0) {
    auto& ech = echelon_for(span, scale);
    return ech.contains(flatten(target, span.nvars, ech.modulus())) ? OracleVerdict::Consistent : OracleVerdict::No;
  }

  OracleVerdict decide(const Decision& d) { return decide(d.target, *d.span, d.scale); }

 private:
  struct Key {
    const gb::SubmoduleGens* span;
    unsigned scale;
    bool operator<(const Key& o) const { return std::tie(span, scale) < std::tie(o.span, o.scale); }
  };

  const detail::TruncatedMonomials& monomials(std::size_t nvars) {
    auto it = mons_.find(nvars);
    if (it == mons_.end()) it = mons_.emplace(nvars, detail::TruncatedMonomials(nvars, N_)).first;
    return it->second;
  }

  std::vector<std::int64_t> flatten(const gb::Column& c, std::size_t nvars, std::int64_t q) {
    const auto& mons = monomials(nvars);
    std::vector<std::int64_t> v(mons.size() * c.size(), 0);
    for (std::size_t comp = 0; comp < c.size(); ++comp)
      for (const auto& t : c[comp].terms()) {
        const auto idx = mons.index(t.mon);
        if (!idx) continue;
        v[*idx * c.size() + comp] = static_cast<std::int64_t>(mod_u(t.coeff, static_cast<std::uint64_t>(q)));
      }
    return v;
  }

  ChainRingEchelon& echelon_for(const gb::SubmoduleGens& span, unsigned scale) {
    const Key key{&span, scale};
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second.second;
    const auto& mons = monomials(span.nvars);
    auto ech = std::make_unique<ChainRingEchelon>(p_, k_ + scale, mons.size() * span.rank);
    for (const auto& g : span.columns) {
      for (std::size_t a = 0; a < mons.size(); ++a) {
        Monomial shift(span.nvars);
        for (std::size_t v = 0; v < span.nvars; ++v)
          if (mons[a][v]) shift = shift * Monomial::variable(span.nvars, v, static_cast<Monomial::exponent_type>(mons[a][v]));
        gb::Column moved;
        for (const auto& e : g) moved.push_back(e.mul_term(shift, Integer(1)));
        ech->insert(flatten(moved, span.nvars, ech->modulus()));
      }
    }
    // keep the span alive as long as its echelon is cached
    auto& slot = cache_[key];
    slot.first = span;
    slot.second = std::move(ech);
    return *slot.second;
  }

  unsigned long p_;
  unsigned k_, N_;
  std::map<std::size_t, detail::TruncatedMonomials> mons_;
  std::map<Key, std::pair<gb::SubmoduleGens, std::unique_ptr<ChainRingEchelon>>> cache_;
};

/// One-shot form of the oracle.
inline OracleVerdict truncation_oracle(const gb::Column& target, const gb::SubmoduleGens& span, unsigned long p, unsigned k,
                                       unsigned N, unsigned scale = 0) {
  TruncationOracle o(p, k, N);
  return o.decide(target, span, scale);
}

}  // namespace mcmv
