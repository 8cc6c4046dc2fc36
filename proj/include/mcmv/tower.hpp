#pragma once

// Arithmetic in A = S[w, u] with w^p = f, u^p = g, and in its fraction field
// restricted to p-power denominators.  Elements are stored in the monomial
// basis w^i u^j (0 <= i, j < p); the shifted basis (w - h1)^i (u - h2)^j is
// produced on demand.

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly_io.hpp"
#include "polynomial.hpp"
#include "zpoly.hpp"

namespace mcmv {

/// Binomial coefficient as an Integer.
inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Coefficients (in a radical variable W, index = power) of
///   C'(W) = ((W^p - h^p) - (W - h)^p) / (p (W - h)).
/// Returns the empty list for h = 0.
inline std::vector<IntPoly> cprime(const IntPoly& h, unsigned long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("cprime: p must be an odd prime");
  if (h.is_zero()) return {};
  const std::size_t n = h.nvars();
  // D(W) = ((W^p - h^p) - (W - h)^p) / p = -sum_{j=1}^{p-1} binom(p,j)/p (-h)^(p-j) W^j
  std::vector<IntPoly> d(p, IntPoly(n));
  for (unsigned long j = 1; j < p; ++j) {
    Integer c = binomial(p, j) / Integer(p);
    IntPoly term = (-h).pow(static_cast<unsigned>(p - j)).scaled(-c);
    d[j] = term;
  }
  // synthetic division by (W - h)
  std::vector<IntPoly> q(p - 1, IntPoly(n));
  q[p - 2] = d[p - 1];
  for (unsigned long j = p - 2; j >= 1; --j) q[j - 1] = d[j] + h * q[j];
  if (!(d[0] + h * q[0]).is_zero()) throw std::logic_error("cprime: division by W - h not exact");
  return q;
}

/// The data of one biradical tower over Z[X1..Xn] localized at (p, X1..Xn).
struct Instance {
  unsigned long p = 3;
  std::size_t n = 0;
  std::vector<std::string> vars;
  IntPoly f, g, h1, h2, a, b;
  std::vector<IntPoly> c1p, c2p;  // C' coefficients for h1 (in w) and h2 (in u)

  std::size_t dim() const { return p * p; }

  /// Builds h1, h2, a, b, c1', c2' from p, f, g.  Throws if f or g is not a
  /// p-th power mod p; all other hypotheses are checked by classify.
  static std::shared_ptr<const Instance> make(unsigned long p, std::vector<std::string> vars, IntPoly f, IntPoly g) {
    auto inst = std::make_shared<Instance>();
    inst->p = p;
    inst->n = vars.size();
    inst->vars = std::move(vars);
    const auto r1 = pth_root_mod_p(f, p);
    const auto r2 = pth_root_mod_p(g, p);
    if (!r1 || !r2) throw std::invalid_argument("Instance: f or g is not a p-th power mod p");
    inst->h1 = *r1;
    inst->h2 = *r2;
    inst->a = *(f - inst->h1.pow(static_cast<unsigned>(p))).divide_by_constant(Integer(p));
    inst->b = *(g - inst->h2.pow(static_cast<unsigned>(p))).divide_by_constant(Integer(p));
    inst->f = std::move(f);
    inst->g = std::move(g);
    inst->c1p = cprime(inst->h1, p);
    inst->c2p = cprime(inst->h2, p);
    return inst;
  }
};

using InstancePtr = std::shared_ptr<const Instance>;

/// p^-k * sum coeffs[i + p j] w^i u^j, canonical: k > 0 implies some
/// coefficient is not divisible by p.
class KElem {
 public:
  KElem() = default;
  explicit KElem(InstancePtr inst) : inst_(std::move(inst)), c_(inst_->dim(), IntPoly(inst_->n)) {}
  KElem(InstancePtr inst, unsigned k, std::vector<IntPoly> coeffs) : inst_(std::move(inst)), k_(k), c_(std::move(coeffs)) {
    if (c_.size() != inst_->dim()) throw std::invalid_argument("KElem: wrong coefficient count");
    canonicalize();
  }

  static KElem from_S(InstancePtr inst, const IntPoly& s) {
    KElem r(std::move(inst));
    r.c_[0] = s;
    return r;
  }
  static KElem from_int(InstancePtr inst, long v) {
    const auto n = inst->n;
    return from_S(std::move(inst), int_constant(n, v));
  }
  static KElem monomial(InstancePtr inst, unsigned i, unsigned j, const IntPoly& coeff) {
    KElem r(inst);
    r.c_.at(r.index(i, j)) = coeff;
    return r;
  }
  static KElem omega(InstancePtr inst) {
    const auto n = inst->n;
    return monomial(inst, 1, 0, int_constant(n, 1));
  }
  static KElem mu(InstancePtr inst) {
    const auto n = inst->n;
    return monomial(inst, 0, 1, int_constant(n, 1));
  }

  const InstancePtr& instance() const { return inst_; }
  unsigned k() const { return k_; }
  unsigned long p() const { return inst_->p; }
  const std::vector<IntPoly>& coeffs() const { return c_; }
  const IntPoly& coeff(unsigned i, unsigned j) const { return c_.at(index(i, j)); }
  std::size_t index(unsigned i, unsigned j) const { return i + inst_->p * j; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool in_A() const { return k_ == 0; }

  KElem operator-() const {
    KElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend KElem operator+(const KElem& x, const KElem& y) { return add(x, y, false); }
  friend KElem operator-(const KElem& x, const KElem& y) { return add(x, y, true); }
  KElem& operator+=(const KElem& y) { return *this = *this + y; }
  KElem& operator-=(const KElem& y) { return *this = *this - y; }
  KElem& operator*=(const KElem& y) { return *this = *this * y; }

  friend KElem operator*(const KElem& x, const KElem& y) {
    check_same(x, y);
    const auto& in = *x.inst_;
    const unsigned long p = in.p;
    const std::size_t w = 2 * p - 1;
    std::vector<IntPoly> full(w * w, IntPoly(in.n));
    for (unsigned long j1 = 0; j1 < p; ++j1)
      for (unsigned long i1 = 0; i1 < p; ++i1) {
        const auto& a = x.c_[i1 + p * j1];
        if (a.is_zero()) continue;
        for (unsigned long j2 = 0; j2 < p; ++j2)
          for (unsigned long i2 = 0; i2 < p; ++i2) {
            const auto& b = y.c_[i2 + p * j2];
            if (b.is_zero()) continue;
            full[(i1 + i2) + w * (j1 + j2)] += a * b;
          }
      }
    std::vector<IntPoly> out(p * p, IntPoly(in.n));
    for (unsigned long j = 0; j < w; ++j)
      for (unsigned long i = 0; i < w; ++i) {
        IntPoly& c = full[i + w * j];
        if (c.is_zero()) continue;
        if (i >= p) c *= in.f;
        if (j >= p) c *= in.g;
        out[(i % p) + p * (j % p)] += c;
      }
    return KElem(x.inst_, x.k_ + y.k_, std::move(out));
  }

  KElem scaled(const IntPoly& s) const {
    KElem r = *this;
    for (auto& c : r.c_) c = c * s;
    r.canonicalize();
    return r;
  }
  KElem scaled(const Integer& s) const {
    KElem r = *this;
    for (auto& c : r.c_) c = c.scaled(s);
    r.canonicalize();
    return r;
  }
  /// this * p^-e
  KElem div_p(unsigned e) const { return KElem(inst_, k_ + e, c_); }

  KElem pow(unsigned e) const {
    KElem r = from_int(inst_, 1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// Coefficients over the common denominator p^K, K >= k.
  std::vector<IntPoly> scaled_coeffs(unsigned K) const {
    if (K < k_) throw std::invalid_argument("scaled_coeffs: exponent below the denominator");
    const Integer s = ipow(Integer(inst_->p), K - k_);
    std::vector<IntPoly> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c.scaled(s));
    return r;
  }

  friend bool operator==(const KElem& x, const KElem& y) {
    return x.inst_ == y.inst_ && x.k_ == y.k_ && x.c_ == y.c_;
  }
  friend bool operator!=(const KElem& x, const KElem& y) { return !(x == y); }

 private:
  static void check_same(const KElem& x, const KElem& y) {
    if (!x.inst_ || x.inst_ != y.inst_) throw std::invalid_argument("KElem: instance mismatch");
  }

  static KElem add(const KElem& x, const KElem& y, bool sub) {
    check_same(x, y);
    const unsigned K = std::max(x.k_, y.k_);
    auto a = x.scaled_coeffs(K);
    const auto b = y.scaled_coeffs(K);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sub) a[i] -= b[i];
      else a[i] += b[i];
    }
    return KElem(x.inst_, K, std::move(a));
  }

  void canonicalize() {
    const Integer p(inst_->p);
    while (k_ > 0) {
      for (const auto& c : c_)
        for (const auto& t : c.terms())
          if (!mpz_divisible_ui_p(t.coeff.get_mpz_t(), inst_->p)) return;
      for (auto& c : c_) c = *c.divide_by_constant(p);
      --k_;
    }
  }

  InstancePtr inst_;
  unsigned k_ = 0;
  std::vector<IntPoly> c_;
};

/// "p^-k * ( (poly)*w^i*u^j + ... )" with the radical variables named w, u.
inline std::string render(const KElem& x) {
  const auto& in = *x.instance();
  std::ostringstream os;
  if (x.k() > 0) os << in.p << "^-" << x.k() << " * ";
  os << "( ";
  bool first = true;
  for (unsigned j = 0; j < in.p; ++j)
    for (unsigned i = 0; i < in.p; ++i) {
      const auto& c = x.coeff(i, j);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << '(' << to_string(c, in.vars) << ')';
      if (i > 0) os << "*w" << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) os << "*u" << (j > 1 ? "^" + std::to_string(j) : "");
    }
  if (first) os << '0';
  os << " )";
  return os.str();
}

// ---- shifted basis --------------------------------------------------------

/// Coordinates of x in the shifted basis (w - h1)^l (u - h2)^m, same
/// denominator exponent as x.
inline std::vector<IntPoly> to_shifted(const KElem& x) {
  const auto& in = *x.instance();
  const unsigned long p = in.p;
  // w^i = sum_l binom(i,l) h1^(i-l) s^l (degree < p, no reduction needed)
  std::vector<IntPoly> h1p(p, int_constant(in.n, 1)), h2p(p, int_constant(in.n, 1));
  for (unsigned long e = 1; e < p; ++e) {
    h1p[e] = h1p[e - 1] * in.h1;
    h2p[e] = h2p[e - 1] * in.h2;
  }
  // first transform the w index, then the u index
  std::vector<IntPoly> mid(p * p, IntPoly(in.n)), out(p * p, IntPoly(in.n));
  for (unsigned long j = 0; j < p; ++j)
    for (unsigned long i = 0; i < p; ++i) {
      const auto& c = x.coeffs()[i + p * j];
      if (c.is_zero()) continue;
      for (unsigned long l = 0; l <= i; ++l) mid[l + p * j] += (c * h1p[i - l]).scaled(binomial(i, l));
    }
  for (unsigned long j = 0; j < p; ++j)
    for (unsigned long l = 0; l < p; ++l) {
      const auto& c = mid[l + p * j];
      if (c.is_zero()) continue;
      for (unsigned long m = 0; m <= j; ++m) out[l + p * m] += (c * h2p[j - m]).scaled(binomial(j, m));
    }
  return out;
}

/// Inverse of to_shifted.
inline KElem from_shifted(const InstancePtr& inst, unsigned k, const std::vector<IntPoly>& coords) {
  const auto& in = *inst;
  const unsigned long p = in.p;
  std::vector<IntPoly> nh1(p, int_constant(in.n, 1)), nh2(p, int_constant(in.n, 1));
  for (unsigned long e = 1; e < p; ++e) {
    nh1[e] = nh1[e - 1] * (-in.h1);
    nh2[e] = nh2[e - 1] * (-in.h2);
  }
  std::vector<IntPoly> mid(p * p, IntPoly(in.n)), out(p * p, IntPoly(in.n));
  for (unsigned long m = 0; m < p; ++m)
    for (unsigned long l = 0; l < p; ++l) {
      const auto& c = coords[l + p * m];
      if (c.is_zero()) continue;
      for (unsigned long i = 0; i <= l; ++i) mid[i + p * m] += (c * nh1[l - i]).scaled(binomial(l, i));
    }
  for (unsigned long m = 0; m < p; ++m)
    for (unsigned long i = 0; i < p; ++i) {
      const auto& c = mid[i + p * m];
      if (c.is_zero()) continue;
      for (unsigned long j = 0; j <= m; ++j) out[i + p * j] += (c * nh2[m - j]).scaled(binomial(m, j));
    }
  return KElem(inst, k, std::move(out));
}

// ---- named elements -------------------------------------------------------

inline KElem s_elem(const InstancePtr& in) { return KElem::omega(in) - KElem::from_S(in, in->h1); }
inline KElem t_elem(const InstancePtr& in) { return KElem::mu(in) - KElem::from_S(in, in->h2); }

/// (w - h1)^i (u - h2)^j.
inline KElem shifted_monomial(const InstancePtr& in, unsigned i, unsigned j) {
  std::vector<IntPoly> coords(in->dim(), IntPoly(in->n));
  coords.at(i + in->p * j) = int_constant(in->n, 1);
  return from_shifted(in, 0, coords);
}

/// Evaluates a polynomial in one radical variable with IntPoly coefficients at x.
inline KElem eval_radical_poly(const std::vector<IntPoly>& coeffs, const KElem& x) {
  KElem r(x.instance());
  for (std::size_t e = coeffs.size(); e-- > 0;) r = r * x + KElem::from_S(x.instance(), coeffs[e]);
  return r;
}

inline KElem c1prime(const InstancePtr& in) { return eval_radical_poly(in->c1p, KElem::omega(in)); }
inline KElem c2prime(const InstancePtr& in) { return eval_radical_poly(in->c2p, KElem::mu(in)); }

/// k1 = a - c1' (w - h1), so that (w - h1)^p = p k1.
inline KElem k1_elem(const InstancePtr& in) { return KElem::from_S(in, in->a) - c1prime(in) * s_elem(in); }
inline KElem k2_elem(const InstancePtr& in) { return KElem::from_S(in, in->b) - c2prime(in) * t_elem(in); }

/// p^-1 sum_l x^l y^(p-1-l) for x in S and y in A.
inline KElem geometric_over_p(const InstancePtr& in, const IntPoly& x, const KElem& y) {
  KElem sum(in), ypow = KElem::from_int(in, 1);
  IntPoly xpow = int_constant(in->n, 1);
  std::vector<KElem> ys;
  for (unsigned long e = 0; e < in->p; ++e) {
    ys.push_back(ypow);
    ypow *= y;
  }
  for (unsigned long l = 0; l < in->p; ++l) {
    sum += ys[in->p - 1 - l].scaled(xpow);
    xpow *= x;
  }
  return sum.div_p(1);
}

/// tau_1 = p^-1 (w^(p-1) + h1 w^(p-2) + ... + h1^(p-1)).
inline KElem tau1(const InstancePtr& in) { return geometric_over_p(in, in->h1, KElem::omega(in)); }
inline KElem tau2(const InstancePtr& in) { return geometric_over_p(in, in->h2, KElem::mu(in)); }

/// w u^i.
inline KElem omega_mu_i(const InstancePtr& in, unsigned i) { return KElem::omega(in) * KElem::mu(in).pow(i); }

inline void check_index(const InstancePtr& in, unsigned i) {
  if (i < 1 || i >= in->p) throw std::out_of_range("index must lie in 1..p-1");
}

/// tau_i = p^-1 sum_l (h1 h2^i)^l (w u^i)^(p-1-l).
inline KElem tau_i(const InstancePtr& in, unsigned i) {
  check_index(in, i);
  return geometric_over_p(in, in->h1 * in->h2.pow(i), omega_mu_i(in, i));
}

/// eta_i = p^-1 (w - h1)^i (u - h2)^(p-i).
inline KElem eta(const InstancePtr& in, unsigned i) {
  check_index(in, i);
  return shifted_monomial(in, i, static_cast<unsigned>(in->p - i)).div_p(1);
}

/// m(i) = w u^i - h1 h2^i.
inline KElem m_elem(const InstancePtr& in, unsigned i) {
  check_index(in, i);
  return omega_mu_i(in, i) - KElem::from_S(in, in->h1 * in->h2.pow(i));
}

/// C' for h = h1 h2^i evaluated at W = w u^i.
inline KElem d_elem(const InstancePtr& in, unsigned i) {
  check_index(in, i);
  return eval_radical_poly(cprime(in->h1 * in->h2.pow(i), in->p), omega_mu_i(in, i));
}

/// p^-1 sum_{l=1}^p (-1)^l c^(p-l) e^(l-1) (u - h2)^(p-l) (w - h1)^(l-1).
inline KElem epsilon(const InstancePtr& in, const IntPoly& c, const IntPoly& e) {
  if (c.is_zero()) throw std::invalid_argument("epsilon: c must be nonzero");
  const unsigned long p = in->p;
  std::vector<IntPoly> coords(in->dim(), IntPoly(in->n));
  for (unsigned long l = 1; l <= p; ++l) {
    IntPoly term = c.pow(static_cast<unsigned>(p - l)) * e.pow(static_cast<unsigned>(l - 1));
    if (l % 2 == 1) term = -term;
    coords[(l - 1) + p * (p - l)] += term;
  }
  return from_shifted(in, 0, coords).div_p(1);
}

/// x in P = (p, w - h1, u - h2): the image under w -> h1, u -> h2 vanishes mod p.
inline bool p_membership(const KElem& x) {
  if (!x.in_A()) throw std::invalid_argument("p_membership: element has a denominator");
  return reduce_mod(to_shifted(x)[0], x.p()).is_zero();
}

/// Names accepted by build_named: tau1, tau2, tau_i, eta, m, k1, k2, d, c1p, c2p.
inline KElem build_named(const InstancePtr& in, const std::string& name, unsigned i = 0) {
  if (name == "tau1") return tau1(in);
  if (name == "tau2") return tau2(in);
  if (name == "tau_i") return tau_i(in, i);
  if (name == "eta") return eta(in, i);
  if (name == "m") return m_elem(in, i);
  if (name == "k1") return k1_elem(in);
  if (name == "k2") return k2_elem(in);
  if (name == "d") return d_elem(in, i);
  if (name == "c1p") return c1prime(in);
  if (name == "c2p") return c2prime(in);
  throw std::invalid_argument("unknown element name '" + name + "'");
}

}  // namespace mcmv
