#include <gtest/gtest.h>

#include <random>

#include "mcmv/grobner.hpp"
#include "mcmv/tower.hpp"

using namespace mcmv;

namespace {

const std::vector<std::string> XY{"X", "Y"};

IntPoly P(const std::string& s) { return parse_poly(s, XY); }

InstancePtr example1() { return Instance::make(3, XY, P("-5*X^3+9"), P("-2*Y^3+9")); }

IntPoly random_poly(std::mt19937& rng, int max_deg = 2, int terms = 3, int coeff = 5) {
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

KElem random_kelem(std::mt19937& rng, const InstancePtr& in) {
  std::vector<IntPoly> c;
  for (std::size_t i = 0; i < in->dim(); ++i) c.push_back(random_poly(rng, 1, 2, 4));
  return KElem(in, std::uniform_int_distribution<unsigned>(0, 2)(rng), c);
}

// Polynomial in Z[W, X, Y] from a coefficient list in W over Z[X, Y].
IntPoly in_w(const std::vector<IntPoly>& coeffs) {
  IntPoly r(3);
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    for (const auto& t : coeffs[e].terms()) {
      Monomial m(3);
      m.set(0, static_cast<Monomial::exponent_type>(e));
      m.set(1, t.mon[0]);
      m.set(2, t.mon[1]);
      r += IntPoly::monomial(m, t.coeff);
    }
  return r;
}

IntPoly lift3(const IntPoly& h) { return in_w({h}); }

}  // namespace

TEST(Instance, Example1Data) {
  const auto in = example1();
  EXPECT_EQ(in->h1, P("X"));
  EXPECT_EQ(in->h2, P("Y"));
  EXPECT_EQ(in->a, P("3-2*X^3"));
  EXPECT_EQ(in->b, P("3-Y^3"));
  EXPECT_TRUE((in->f - in->h1.pow(3) - in->a.scaled(Integer(3))).is_zero());
}

TEST(Mul, DefiningRelation) {
  const auto in = example1();
  const KElem w = KElem::omega(in);
  EXPECT_EQ(w * w * w, KElem::from_S(in, in->f));
  EXPECT_EQ(KElem::mu(in).pow(3), KElem::from_S(in, in->g));
}

TEST(Mul, ShiftedPowerIsPTimesK1) {
  const auto in = example1();
  EXPECT_EQ(s_elem(in).pow(3), k1_elem(in).scaled(Integer(3)));
  EXPECT_EQ(t_elem(in).pow(3), k2_elem(in).scaled(Integer(3)));
}

TEST(Mul, EtaProductLandsInA) {
  const auto in = example1();
  const KElem prod = eta(in, 1) * eta(in, 2);
  EXPECT_TRUE(prod.in_A());
  EXPECT_EQ(prod, k1_elem(in) * k2_elem(in));
}

TEST(Mul, InstanceMismatchThrows) {
  const auto a = example1(), b = example1();
  EXPECT_THROW(KElem::omega(a) * KElem::omega(b), std::invalid_argument);
}

TEST(Mul, RingAxiomsOnRandomElements) {
  std::mt19937 rng(17);
  for (unsigned long p : {3ul, 5ul}) {
    const auto in = Instance::make(p, XY, P("X").pow(p) + P("3*Y+1").scaled(Integer(p)), P("Y").pow(p) + P("X").scaled(Integer(p)));
    for (int t = 0; t < (p == 3 ? 20 : 4); ++t) {
      const KElem x = random_kelem(rng, in), y = random_kelem(rng, in), z = random_kelem(rng, in);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_TRUE((x - x).is_zero());
    }
  }
}

TEST(Canonical, DenominatorReduces) {
  const auto in = example1();
  const KElem x = KElem::from_int(in, 9).div_p(2);
  EXPECT_EQ(x.k(), 0u);
  EXPECT_EQ(x, KElem::from_int(in, 1));
  EXPECT_EQ(KElem::from_int(in, 3).div_p(2).k(), 1u);
}

TEST(Shifted, RoundTrip) {
  std::mt19937 rng(2);
  const auto in = example1();
  for (int t = 0; t < 20; ++t) {
    const KElem x = random_kelem(rng, in);
    EXPECT_EQ(from_shifted(in, x.k(), to_shifted(x)), x);
  }
  EXPECT_EQ(shifted_monomial(in, 2, 1), s_elem(in).pow(2) * t_elem(in));
}

TEST(Cprime, Examples) {
  const auto c = cprime(P("X"), 3);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(c[0].is_zero());
  EXPECT_EQ(c[1], P("X"));
  EXPECT_TRUE(cprime(IntPoly(2), 3).empty());
  // modulo (3, W - X): C' = X W reduces to X^2
  const std::vector<std::string> WXY{"W", "X", "Y"};
  const auto gb = gb::strong_gb(gb::SubmoduleGens::ideal(3, {parse_poly("3", WXY), parse_poly("W-X", WXY)}));
  EXPECT_EQ(gb::normal_form(in_w(c), gb), parse_poly("X^2", WXY));
}

TEST(Cprime, DefiningIdentityAndCongruenceOnRandomH) {
  std::mt19937 rng(8);
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    const IntPoly W = parse_poly("W", {"W", "X", "Y"});
    for (int t = 0; t < 10; ++t) {
      const IntPoly h = random_poly(rng);
      if (h.is_zero()) continue;
      const IntPoly H = lift3(h);
      const IntPoly C = in_w(cprime(h, p));
      const unsigned pe = static_cast<unsigned>(p);
      EXPECT_EQ((W - H) * C * int_constant(3, static_cast<long>(p)), (W.pow(pe) - H.pow(pe)) - (W - H).pow(pe));
      const auto gb = gb::strong_gb(gb::SubmoduleGens::ideal(3, {int_constant(3, static_cast<long>(p)), W - H}));
      EXPECT_TRUE(gb::normal_form(C - H.pow(pe - 1), gb).is_zero());
    }
  }
}

TEST(Named, Eta1) {
  const auto in = example1();
  const KElem e = eta(in, 1);
  EXPECT_EQ(e.k(), 1u);
  EXPECT_EQ(e, (s_elem(in) * t_elem(in).pow(2)).div_p(1));
  EXPECT_THROW(eta(in, 0), std::out_of_range);
  EXPECT_THROW(eta(in, 3), std::out_of_range);
}

TEST(Named, MAndK1OnExample1) {
  const auto in = example1();
  EXPECT_EQ(m_elem(in, 1), KElem::omega(in) * KElem::mu(in) - KElem::from_S(in, P("X*Y")));
  const KElem xw = KElem::omega(in).scaled(P("X"));
  EXPECT_EQ(c1prime(in), xw);
  EXPECT_EQ(k1_elem(in), KElem::from_S(in, P("3-2*X^3")) - xw * (KElem::omega(in) - KElem::from_S(in, P("X"))));
  EXPECT_EQ(build_named(in, "k1"), k1_elem(in));
  EXPECT_THROW(build_named(in, "zeta"), std::invalid_argument);
}

TEST(Named, Tau1Form) {
  const auto in = example1();
  // tau1 = p^-1 (w - h1)^(p-1) + c1'
  EXPECT_EQ(tau1(in), s_elem(in).pow(2).div_p(1) + c1prime(in));
  EXPECT_EQ(tau_i(in, 1).k(), 1u);
}

TEST(Named, TauQuadraticWhenAInPS) {
  const auto in = Instance::make(3, XY, P("X^3+9"), P("Y^3+3"));
  ASSERT_EQ(in->a, P("3"));
  const KElem T = tau1(in);
  const KElem aprime = KElem::from_int(in, 1);
  EXPECT_TRUE((T * T - c1prime(in) * T - aprime * s_elem(in)).is_zero());
}

TEST(Named, EpsilonExample1) {
  const auto in = example1();
  const KElem e = epsilon(in, P("X"), P("Y"));
  const KElem s = s_elem(in), t = t_elem(in);
  const KElem want = (t.pow(2).scaled(P("-X^2")) + (t * s).scaled(P("X*Y")) + s.pow(2).scaled(P("-Y^2"))).div_p(1);
  EXPECT_EQ(e, want);
  EXPECT_EQ(e.k(), 1u);
  EXPECT_TRUE(e.scaled(Integer(3)).in_A());
  EXPECT_THROW(epsilon(in, IntPoly(2), P("Y")), std::invalid_argument);
}

TEST(PMembership, Examples) {
  const auto in = example1();
  EXPECT_TRUE(p_membership(s_elem(in)));
  EXPECT_FALSE(p_membership(KElem::from_int(in, 1)));
  const IntPoly factor = in->a * in->h2.pow(3) + in->b * in->h1.pow(3);
  EXPECT_TRUE(p_membership(KElem::from_S(in, factor)));
  EXPECT_THROW(p_membership(eta(in, 1)), std::invalid_argument);
}

TEST(PMembership, IdealProperty) {
  std::mt19937 rng(4);
  const auto in = example1();
  for (int t = 0; t < 30; ++t) {
    KElem x = random_kelem(rng, in), y = random_kelem(rng, in);
    x = x.scaled(ipow(Integer(3), x.k()));
    y = y.scaled(ipow(Integer(3), y.k()));
    if (p_membership(x)) EXPECT_TRUE(p_membership(x * y));
    EXPECT_TRUE(p_membership(x * s_elem(in)));
  }
}

TEST(Render, Format) {
  const auto in = example1();
  EXPECT_EQ(render(eta(in, 1)).rfind("3^-1 * ( ", 0), 0u);
  EXPECT_EQ(render(KElem::omega(in)), "( (1)*w )");
  EXPECT_EQ(render(KElem(in)), "( 0 )");
}
