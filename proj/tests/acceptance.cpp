// Acceptance run: one PASS/FAIL line per criterion.  Every criterion is exact
// (integer or polynomial equality, boolean certificates); runtimes are
// reported against their targets but do not decide the verdict.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mcmv/oracle.hpp"
#include "mcmv/report.hpp"
#include "mcmv/verify.hpp"
#include "support.hpp"

using namespace mcmv;
using testing_support::make;
using testing_support::P;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Audit& audit() {
  static Audit a;
  return a;
}

int failures = 0;

void criterion(int n, const std::string& title, double target_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::printf("%s  criterion %d: %s;%s (%.2f s, target < %.0f s)\n", o.ok ? "PASS" : "FAIL", n, title.c_str(),
              o.detail.str().c_str(), secs, target_seconds);
  std::fflush(stdout);
}

// Z[W, X, Y] helpers for the C' identities.
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

// C'(h) computed by Horner in Z[X, Y].
IntPoly eval_at(const std::vector<IntPoly>& coeffs, const IntPoly& h) {
  IntPoly r(h.nvars());
  for (std::size_t e = coeffs.size(); e-- > 0;) r = r * h + coeffs[e];
  return r;
}

bool cprime_identities(const IntPoly& h, unsigned long p) {
  if (h.is_zero()) return true;
  const unsigned pe = static_cast<unsigned>(p);
  const auto c = cprime(h, p);
  const IntPoly W = parse_poly("W", {"W", "X", "Y"});
  const IntPoly H = in_w({h}), C = in_w(c);
  const IntPoly pp = int_constant(3, static_cast<long>(p));
  if (!((W - H) * C * pp == (W.pow(pe) - H.pow(pe)) - (W - H).pow(pe))) return false;
  // C' = h^(p-1) mod (p, W - h), by normal form and by substituting W = h
  const auto gb = gb::strong_gb(gb::SubmoduleGens::ideal(3, {pp, W - H}));
  const bool by_gb = gb::normal_form(C - H.pow(pe - 1), gb).is_zero();
  const bool by_subst = reduce_mod(eval_at(c, h) - h.pow(pe - 1), p).is_zero();
  return by_gb && by_subst;
}

struct IdentityCounts {
  int instances = 0, cprime = 0, shifted = 0, tau = 0, fgi = 0, fail = 0;
};

void identities(const InstancePtr& in, IdentityCounts& n) {
  const unsigned long p = in->p;
  ++n.instances;
  if (!cprime_identities(in->h1, p) || !cprime_identities(in->h2, p)) ++n.fail;
  ++n.cprime;
  const KElem P_ = KElem::from_int(in, static_cast<long>(p));
  if (!(s_elem(in).pow(static_cast<unsigned>(p)) == k1_elem(in) * P_)) ++n.fail;
  if (!(t_elem(in).pow(static_cast<unsigned>(p)) == k2_elem(in) * P_)) ++n.fail;
  ++n.shifted;
  for (const Which w : {Which::F, Which::G}) {
    if (!in_sp_p2(*in, w)) continue;
    const bool f = w == Which::F;
    const KElem T = f ? tau1(in) : tau2(in);
    const KElem c = f ? c1prime(in) : c2prime(in);
    const KElem sh = f ? s_elem(in) : t_elem(in);
    const KElem aprime = KElem::from_S(in, *(f ? in->a : in->b).divide_by_constant(Integer(p)));
    if (!(T * T - c * T - aprime * sh.pow(static_cast<unsigned>(p - 2))).is_zero()) ++n.fail;
    ++n.tau;
  }
  if (!in_sp_p2(*in, Which::F) && !in_sp_p2(*in, Which::G)) {
    // at most one i; fgi_index itself refuses a second solution
    int solutions = 0;
    for (unsigned i = 1; i < p; ++i)
      if (reduce_mod(in->a * in->h2.pow(static_cast<unsigned>(p)) + (in->b * in->h1.pow(static_cast<unsigned>(p))).scaled(Integer(i)), p)
              .is_zero())
        ++solutions;
    const auto idx = fgi_index(*in);
    if (solutions > 1 || idx.has_value() != (solutions == 1)) ++n.fail;
    ++n.fgi;
  }
}

// f = h1^p + p a with a in pS, so that f lies in S^{p^p^2}.
InstancePtr random_non_normal(std::mt19937& rng, unsigned long p) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const IntPoly h1 = testing_support::random_poly(rng, 1, 2, static_cast<int>(p) - 1);
    const IntPoly h2 = testing_support::random_poly(rng, 1, 2, static_cast<int>(p) - 1);
    const IntPoly a = testing_support::random_poly(rng, 1, 2, 3).scaled(Integer(p)) + int_constant(2, static_cast<long>(p));
    const IntPoly b = testing_support::random_poly(rng, 2, 2, 3);
    const unsigned pe = static_cast<unsigned>(p);
    try {
      return validate(p, testing_support::xy(), h1.pow(pe) + a.scaled(Integer(p)), h2.pow(pe) + b.scaled(Integer(p)));
    } catch (const ValidationError&) {
    }
  }
  throw std::runtime_error("random_non_normal: no valid instance found");
}

}  // namespace

int main() {
  const auto ex1 = testing_support::example1();
  const auto ex2 = testing_support::example2();

  criterion(1, "example 1 resolution (exact)", 60, [&](Outcome& o) {
    const auto label = classify(*ex1);
    o.require(label.kind == CaseKind::NotCM_GradeThree, "case NotCM_GradeThree");
    o.require(label.i_star == 1u, "i* = 1");
    verify_ring_closure(closure_gens(ex1, label).gens, &audit());
    const bool eps_on_t = LocalSpan::of(lemma_t_set(ex1, label).gens, &audit(), "T").contains(epsilon_for(ex1, 1), "epsilon");
    o.require(!eps_on_t, "epsilon outside span(T)");
    const auto rc = resolution(ex1, label, &audit());
    o.require(rc.nu == 10, "nu = 10");
    o.require(rc.pd == 1, "pd = 1");
    o.require(rc.psi.size() == 10 && rc.psi.back().num == P("-3") && rc.psi.back().den == P("1"), "psi tail -3");
    o.require(rc.zero_block_start == 7 && rc.zero_block, "zero block 7..9");
    for (std::size_t k = 6; k < 9 && k < rc.psi.size(); ++k) o.require(rc.psi[k].num.is_zero(), "psi entry " + std::to_string(k + 1) + " zero");
    o.require(rc.in_maximal_ideal, "entries in the maximal ideal");
    o.detail << " case " << label.name() << ", i* " << (label.i_star ? *label.i_star : 0) << ", nu " << rc.nu << ", pd " << rc.pd
             << ", psi tail " << to_string(rc.psi.back().num, ex1->vars) << ", zero block from " << rc.zero_block_start;
  });

  criterion(2, "example 1 MCM certificate and claims", 600, [&](Outcome& o) {
    const auto label = classify(*ex1);
    const auto mc = mcm_certificate(ex1, label, &audit());
    std::size_t products = 0;
    bool local = true;
    for (const auto& row : mc.stability)
      for (const auto& coeffs : row) {
        ++products;
        for (const auto& f : coeffs) local = local && la::is_local_fraction(f.num, f.den, ex1->p);
      }
    o.require(mc.basis.size() == 9, "9 basis elements");
    o.require(!mc.det.is_zero(), "nonzero determinant");
    o.require(products == 90 && mc.stable && local, "90 local stability products");
    o.require(mc.in_f1 && mc.in_f2, "basis in F1 and F2");
    const auto cl = verify_theorem_claims(ex1, label, &audit());
    o.require(cl.claim1_forward && cl.claim1_backward, "claim 1 both directions");
    o.require(cl.claim2_forward && cl.claim2_backward, "claim 2 both directions");
    o.detail << " basis " << mc.basis.size() << ", stability products " << products << ", claim1 " << cl.claim1() << ", claim2 "
             << cl.claim2();
  });

  criterion(3, "example 2 open case (exact)", 60, [&](Outcome& o) {
    const auto label = classify(*ex2);
    o.require(label.kind == CaseKind::NotCM_GradeTwoOpen, "case NotCM_GradeTwoOpen");
    const auto rc = resolution(ex2, label, &audit());
    o.require(rc.nu == 10 && rc.pd == 1, "nu 10, pd 1");
    std::string code = "none";
    try {
      mcm_certificate(ex2, label, &audit());
    } catch (const ValidationError& e) {
      code = code_name(e.code());
    }
    o.require(code == "OPEN_CASE", "mcm refuses with OPEN_CASE");
    o.detail << " case " << label.name() << ", nu " << rc.nu << ", pd " << rc.pd << ", mcm " << code;
  });

  criterion(4, "Cohen-Macaulay branches free of rank 9", 180, [&](Outcome& o) {
    const std::vector<std::pair<std::string, std::string>> cases{{"X^3+9", "Y^3+9"}, {"X^3+9", "Y^3+3"}, {"X^3+3", "Y^3+3"}};
    const std::vector<CaseKind> kinds{CaseKind::CM_NotNormal_Both, CaseKind::CM_NotNormal_One, CaseKind::CM_NormalNoFgi};
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto in = make(3, cases[k].first, cases[k].second);
      const auto label = classify(*in);
      o.require(label.kind == kinds[k], "case of (" + cases[k].first + ", " + cases[k].second + ")");
      const auto gs = closure_gens(in, label);
      const bool closed = verify_ring_closure(gs.gens, &audit()).closed;
      const auto fr = verify_free(gs.gens);
      o.require(closed, "closed");
      o.require(fr.free && fr.rank == 9, "free of rank 9");
      o.detail << " " << label.name() << ": closed " << closed << ", free rank " << (fr.free ? fr.rank : 0) << ";";
      if (label.kind == CaseKind::CM_NormalNoFgi) {
        const auto cond = verify_conductor(in, label);
        o.require(cond.ok && conductor_gens(in, label).name == IdealName::PSymb, "conductor P^(p-1)");
        o.detail << " conductor " << cond.ok << ";";
      }
    }
  });

  criterion(5, "identity suite, 100 instances at p=3 and 10 at p=5", 600, [&](Outcome& o) {
    std::mt19937 rng(20240601);
    IdentityCounts n;
    for (unsigned long p : {3ul, 5ul}) {
      const int count = p == 3 ? 100 : 10;
      for (int t = 0; t < count; ++t) {
        InstancePtr in;
        switch (t % 3) {
          case 0: in = testing_support::random_instance(rng, p); break;
          case 1: in = testing_support::random_fgi_instance(rng, p); break;
          default: in = random_non_normal(rng, p); break;
        }
        identities(in, n);
      }
    }
    o.require(n.fail == 0, "zero identity failures");
    o.require(n.instances == 110, "110 instances");
    o.require(n.tau > 0 && n.fgi > 0, "every identity exercised");
    o.detail << " instances " << n.instances << ", C' checks " << n.cprime << ", shifted powers " << n.shifted << ", tau relations "
             << n.tau << ", fg^i uniqueness " << n.fgi << ", failures " << n.fail;
  });

  criterion(6, "truncation oracle at (k=3, N=12) never refutes a YES", 600, [&](Outcome& o) {
    TruncationOracle oracle(3, 3, 12);
    std::size_t yes = 0, contradictions = 0, refuted = 0;
    for (const auto& d : audit().decisions()) {
      const auto v = oracle.decide(d);
      if (d.member) {
        ++yes;
        if (v == OracleVerdict::No) {
          ++contradictions;
          o.detail << " contradiction: " << d.label << ";";
        }
      } else if (v == OracleVerdict::No) {
        ++refuted;
      }
    }
    o.require(audit().size() > 0, "decisions recorded");
    o.require(contradictions == 0, "zero contradictions");
    o.detail << " decisions " << audit().size() << ", yes " << yes << ", contradictions " << contradictions
             << ", no-verdicts confirmed " << refuted;
  });

  std::printf("%s  %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
