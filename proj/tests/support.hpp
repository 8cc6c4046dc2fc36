#pragma once

// Shared helpers for the test binaries: parsing shortcuts and random valid
// instances.

#include <random>
#include <string>
#include <vector>

#include "mcmv/classify.hpp"
#include "mcmv/poly_io.hpp"

namespace testing_support {

using namespace mcmv;

inline const std::vector<std::string>& xy() {
  static const std::vector<std::string> v{"X", "Y"};
  return v;
}

inline IntPoly P(const std::string& s) { return parse_poly(s, xy()); }

inline InstancePtr make(unsigned long p, const std::string& f, const std::string& g) {
  return validate(p, xy(), P(f), P(g));
}

inline InstancePtr example1() { return make(3, "-5*X^3+9", "-2*Y^3+9"); }
inline InstancePtr example2() { return make(3, "-2*X^6+9", "4*X^3*Y^3+9"); }

inline IntPoly random_poly(std::mt19937& rng, int max_deg, int terms, int coeff) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-coeff, coeff);
  IntPoly r(2);
  for (int t = 0; t < terms; ++t) {
    Monomial m(2);
    m.set(0, static_cast<Monomial::exponent_type>(deg(rng)));
    m.set(1, static_cast<Monomial::exponent_type>(deg(rng)));
    r += IntPoly::monomial(m, Integer(c(rng)));
  }
  return r;
}

/// A random instance f = h1^p + p a, g = h2^p + p b passing validation.
/// The a, b parts are chosen as (constant) + (terms) so that every branch of
/// the classification is reachable.
inline InstancePtr random_instance(std::mt19937& rng, unsigned long p, int max_tries = 1000) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const IntPoly h1 = random_poly(rng, 1, 2, static_cast<int>(p) - 1);
    const IntPoly h2 = random_poly(rng, 1, 2, static_cast<int>(p) - 1);
    const IntPoly a = random_poly(rng, 2, 2, 3);
    const IntPoly b = random_poly(rng, 2, 2, 3);
    const unsigned pe = static_cast<unsigned>(p);
    const IntPoly f = h1.pow(pe) + a.scaled(Integer(p));
    const IntPoly g = h2.pow(pe) + b.scaled(Integer(p));
    try {
      return validate(p, xy(), f, g);
    } catch (const ValidationError&) {
    }
  }
  throw std::runtime_error("random_instance: no valid instance found");
}

/// A random instance with an fg^i index: a = -i w h1^p + p r1 and
/// b = w h2^p + p r2 make a h2^p + i b h1^p vanish mod p.
inline InstancePtr random_fgi_instance(std::mt19937& rng, unsigned long p, int max_tries = 1000) {
  std::uniform_int_distribution<int> idx(1, static_cast<int>(p) - 1);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const IntPoly h1 = random_poly(rng, 1, 2, static_cast<int>(p) - 1);
    const IntPoly h2 = random_poly(rng, 1, 2, static_cast<int>(p) - 1);
    const IntPoly w = random_poly(rng, 1, 2, 3);
    const unsigned pe = static_cast<unsigned>(p);
    const Integer i(idx(rng));
    const IntPoly a = (w * h1.pow(pe)).scaled(-i) + random_poly(rng, 1, 2, 2).scaled(Integer(p));
    const IntPoly b = w * h2.pow(pe) + random_poly(rng, 1, 2, 2).scaled(Integer(p));
    try {
      return validate(p, xy(), h1.pow(pe) + a.scaled(Integer(p)), h2.pow(pe) + b.scaled(Integer(p)));
    } catch (const ValidationError&) {
    }
  }
  throw std::runtime_error("random_fgi_instance: no valid instance found");
}

}  // namespace testing_support
