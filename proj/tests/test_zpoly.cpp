#include <gtest/gtest.h>

#include <random>

#include "mcmv/poly_gcd.hpp"
#include "mcmv/poly_io.hpp"
#include "mcmv/zpoly.hpp"

using namespace mcmv;

namespace {

const std::vector<std::string> XY{"X", "Y"};

IntPoly P(const std::string& s) { return parse_poly(s, XY); }

IntPoly random_poly(std::mt19937& rng, int max_deg = 3, int terms = 4, int coeff = 9) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-coeff, coeff);
  IntPoly r(2);
  for (int t = 0; t < terms; ++t) {
    Monomial m(2);
    m.set(0, deg(rng));
    m.set(1, deg(rng));
    r += IntPoly::monomial(m, Integer(c(rng)));
  }
  return r;
}

}  // namespace

TEST(Parse, CanonicalTerms) {
  const IntPoly f = P("-5*X^3+9");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.leading_coeff(), -5);
  EXPECT_EQ(f.constant_coeff(), 9);
  EXPECT_EQ(to_string(f, XY), "-5*X^3+9");
}

TEST(Parse, ZeroIsEmpty) { EXPECT_TRUE(P("0").is_zero()); }

TEST(Parse, MissingExponentReportsOffset) {
  try {
    P("X^");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Parse, RejectsImplicitMultiplicationAndUnknownNames) {
  EXPECT_THROW(P("3X"), ParseError);
  EXPECT_THROW(P("3*Z"), UnknownVariable);
  EXPECT_THROW(P("(X+1"), ParseError);
}

TEST(Parse, PrecedenceAndParentheses) {
  EXPECT_EQ(P("2*X^2"), P("2*(X*X)"));
  EXPECT_EQ(P("-X^2"), P("-(X^2)"));
  EXPECT_EQ(P("(X+Y)^2"), P("X^2+2*X*Y+Y^2"));
  EXPECT_EQ(P(" 3 * X - - Y "), P("3*X+Y"));
}

TEST(Parse, RoundTripOnRandomPolynomials) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const IntPoly f = random_poly(rng, 5, 6, 1000);
    EXPECT_EQ(P(to_string(f, XY)), f);
  }
}

TEST(Arithmetic, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Arithmetic, ExactDivision) {
  const IntPoly a = P("X^2-Y^2"), b = P("X+Y");
  ASSERT_TRUE(exact_divide(a, b).has_value());
  EXPECT_EQ(*exact_divide(a, b), P("X-Y"));
  EXPECT_FALSE(exact_divide(P("X^2+1"), P("X+1")).has_value());
}

TEST(PthRoot, PaperExamples) {
  EXPECT_EQ(pth_root_mod_p(P("-5*X^3+9"), 3), P("X"));
  EXPECT_EQ(pth_root_mod_p(P("4*X^3*Y^3+9"), 3), P("X*Y"));
  EXPECT_FALSE(pth_root_mod_p(P("X^2+1"), 3).has_value());
}

TEST(PthRoot, CoefficientsInRangeAndRejectsBadPrimes) {
  EXPECT_EQ(pth_root_mod_p(P("-2*Y^3+9"), 3), P("Y"));
  EXPECT_EQ(pth_root_mod_p(P("2*X^3+3"), 3), P("2*X"));
  EXPECT_EQ(pth_root_mod_p(P("6*X"), 3), IntPoly(2));
  EXPECT_THROW(pth_root_mod_p(P("X"), 2), std::invalid_argument);
  EXPECT_THROW(pth_root_mod_p(P("X"), 9), std::invalid_argument);
}

TEST(PthRoot, RoundTripCongruence) {
  std::mt19937 rng(7);
  for (unsigned long p : {3ul, 5ul}) {
    for (int t = 0; t < 50; ++t) {
      const IntPoly h = random_poly(rng, 2, 3);
      const IntPoly f = h.pow(p) + random_poly(rng).scaled(Integer(p));
      const auto r = pth_root_mod_p(f, p);
      ASSERT_TRUE(r.has_value());
      EXPECT_TRUE(reduce_mod(r->pow(p) - f, p).is_zero());
    }
  }
}

TEST(LocalUnit, Examples) {
  EXPECT_TRUE(is_local_unit(P("1+X"), 3));
  EXPECT_FALSE(is_local_unit(P("3+X"), 3));
  EXPECT_TRUE(is_local_unit(P("5"), 3));
  EXPECT_FALSE(is_local_unit(IntPoly(2), 3));
}

TEST(LocalUnit, MultiplicativeOnRandomPairs) {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const IntPoly f = random_poly(rng), g = random_poly(rng);
    EXPECT_EQ(is_local_unit(f * g, 3), is_local_unit(f, 3) && is_local_unit(g, 3));
  }
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(squarefree_local(P("-5*X^3+9"), 3));
  EXPECT_FALSE(squarefree_local(P("X^2"), 3));
  EXPECT_TRUE(squarefree_local(P("4*X^3*Y^3+9"), 3));
  EXPECT_FALSE(squarefree_local(P("X^6+6*X^3+9"), 3));
  // repeated factor (1+X) is a unit in the local ring
  EXPECT_TRUE(squarefree_local(P("X*(1+X)^2"), 3));
  EXPECT_FALSE(squarefree_local(P("9*X"), 3));
  EXPECT_TRUE(squarefree_local(P("3*(1+X)"), 3));
  EXPECT_THROW(squarefree_local(IntPoly(2), 3), std::invalid_argument);
}

TEST(Squarefree, OracleOnKnownFactorizations) {
  // The only repeated-factor candidates of -5X^3+9 divide its derivative -15X^2,
  // i.e. are powers of X; X does not divide f.
  EXPECT_FALSE(exact_divide(P("-5*X^3+9"), P("X")).has_value());
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    IntPoly q = random_poly(rng, 2, 3);
    if (q.is_constant()) continue;
    // q^2 divides q^2 * X: square-free iff q is a local unit
    EXPECT_EQ(squarefree_local(q * q * P("X+3"), 3), is_local_unit(primitive_part(q), 3) && valuation(content(q), 3) == 0);
  }
}

TEST(Coprime, Examples) {
  EXPECT_TRUE(coprime_a1(P("-5*X^3+9"), P("-2*Y^3+9"), 3));
  EXPECT_FALSE(coprime_a1(P("X"), P("X*Y"), 3));
  EXPECT_TRUE(coprime_a1(P("X"), P("1+X"), 3));
  EXPECT_FALSE(coprime_a1(P("3*X"), P("3*Y"), 3));
  EXPECT_THROW(coprime_a1(IntPoly(2), P("X"), 3), std::invalid_argument);
}

TEST(Gcd, DividesBothAndCofactorsCoprime) {
  std::mt19937 rng(13);
  for (int t = 0; t < 60; ++t) {
    const IntPoly common = random_poly(rng, 2, 2);
    const IntPoly f = random_poly(rng) * common, g = random_poly(rng) * common;
    if (f.is_zero() || g.is_zero()) continue;
    const IntPoly d = gcd(f, g);
    ASSERT_TRUE(exact_divide(f, d).has_value());
    ASSERT_TRUE(exact_divide(g, d).has_value());
    if (!common.is_zero()) EXPECT_TRUE(exact_divide(d, primitive_part(common)).has_value());
    const IntPoly e = gcd(*exact_divide(f, d), *exact_divide(g, d));
    EXPECT_TRUE(e.is_constant());
    EXPECT_EQ(e.constant_coeff(), 1);
  }
}

TEST(Gcd, OverPrimeField) {
  const PrimeField F{3};
  const ModPPoly a = reduce_mod(P("X^2*Y"), 3), b = reduce_mod(P("2*X*Y^2"), 3);
  EXPECT_EQ(gcd(a, b), reduce_mod(P("X*Y"), 3));
  (void)F;
}
