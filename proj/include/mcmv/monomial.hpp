#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace mcmv {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of a monomial in at most kMaxVars variables.
///
/// The total degree is cached since every comparison in the graded orders
/// looks at it first.
class Monomial {
 public:
  using exponent_type = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  }

  static Monomial variable(std::size_t nvars, std::size_t i, exponent_type e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t nvars() const { return n_; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  exponent_type operator[](std::size_t i) const { return exp_[i]; }

  void set(std::size_t i, exponent_type e) {
    assert(i < n_);
    deg_ = deg_ - exp_[i] + e;
    exp_[i] = e;
  }

  /// Bit signature used to reject divisibility tests quickly.
  std::uint32_t divmask() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto e = exp_[i];
      if (e > 0) mask |= 1u << (4 * i);
      if (e > 1) mask |= 1u << (4 * i + 1);
      if (e > 3) mask |= 1u << (4 * i + 2);
      if (e > 7) mask |= 1u << (4 * i + 3);
    }
    return mask;
  }

  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    assert(a.n_ == b.n_);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.exp_[i] = static_cast<exponent_type>(a.exp_[i] + b.exp_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    assert(b.divides(a));
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.exp_[i] = static_cast<exponent_type>(a.exp_[i] - b.exp_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  Monomial pow(unsigned k) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = static_cast<exponent_type>(exp_[i] * k);
    r.deg_ = deg_ * k;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
      d += r.exp_[i];
    }
    r.deg_ = d;
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
      d += r.exp_[i];
    }
    r.deg_ = d;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_ || a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.exp_[i] != b.exp_[i]) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = deg_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u + exp_[i];
    return h;
  }

 private:
  std::array<exponent_type, kMaxVars> exp_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

/// Graded reverse lexicographic comparison: >0 if a > b, <0 if a < b.
inline int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace mcmv

template <>
struct std::hash<mcmv::Monomial> {
  std::size_t operator()(const mcmv::Monomial& m) const { return m.hash(); }
};
