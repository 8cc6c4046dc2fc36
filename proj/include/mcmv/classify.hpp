#pragma once

// Input validation and case selection for a pair (f, g) over Z[X1..Xn]
// localized at (p, X1..Xn).
//
// f = h^p + a p lies in S^{p^p^2} (i.e. f = x^p + y p^2 for some x, y) exactly
// when a is divisible by p: (h + p t)^p = h^p mod p^2, so the only freedom in
// x is invisible mod p^2, and f - h^p = a p must itself vanish mod p^2.

#include <optional>
#include <stdexcept>
#include <string>

#include "poly_gcd.hpp"
#include "tower.hpp"
#include "zpoly.hpp"

namespace mcmv {

enum class ErrorCode {
  BadPrime,
  BadVars,
  NotInSp,
  FIsUnit,
  GIsUnit,
  NotSquarefree,
  NotCoprimeA1,
  HZero,
  UniquenessViolated,
  OpenCase,
  ParseFailure,
  BadConfig,
};

inline const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadPrime: return "BAD_PRIME";
    case ErrorCode::BadVars: return "BAD_VARS";
    case ErrorCode::NotInSp: return "NOT_IN_SP";
    case ErrorCode::FIsUnit: return "F_IS_UNIT";
    case ErrorCode::GIsUnit: return "G_IS_UNIT";
    case ErrorCode::NotSquarefree: return "NOT_SQUAREFREE";
    case ErrorCode::NotCoprimeA1: return "NOT_COPRIME_A1";
    case ErrorCode::HZero: return "DEGENERATE_H";
    case ErrorCode::UniquenessViolated: return "UNIQUENESS_VIOLATED";
    case ErrorCode::OpenCase: return "OPEN_CASE";
    case ErrorCode::ParseFailure: return "PARSE_ERROR";
    case ErrorCode::BadConfig: return "BAD_CONFIG";
  }
  return "UNKNOWN";
}

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ValidateOptions {
  /// Accept h1 = 0 or h2 = 0; such instances only ever reach the CM branches.
  bool allow_degenerate_h = false;
};

inline InstancePtr validate(unsigned long p, const std::vector<std::string>& vars, const IntPoly& f, const IntPoly& g,
                            ValidateOptions opts = {}) {
  if (p < 3 || !is_prime(p)) throw ValidationError(ErrorCode::BadPrime, "p must be an odd prime");
  if (vars.size() < 2 || vars.size() > kMaxVars)
    throw ValidationError(ErrorCode::BadVars, "need between 2 and " + std::to_string(kMaxVars) + " variables");
  if (f.nvars() != vars.size() || g.nvars() != vars.size())
    throw ValidationError(ErrorCode::BadVars, "f, g must be polynomials in the declared variables");
  if (f.is_zero() || g.is_zero()) throw ValidationError(ErrorCode::NotSquarefree, "f and g must be nonzero");
  if (!pth_root_mod_p(f, p)) throw ValidationError(ErrorCode::NotInSp, "f is not a p-th power modulo p");
  if (!pth_root_mod_p(g, p)) throw ValidationError(ErrorCode::NotInSp, "g is not a p-th power modulo p");
  if (is_local_unit(f, p)) throw ValidationError(ErrorCode::FIsUnit, "f is a unit of the local ring");
  if (is_local_unit(g, p)) throw ValidationError(ErrorCode::GIsUnit, "g is a unit of the local ring");
  if (!squarefree_local(f, p)) throw ValidationError(ErrorCode::NotSquarefree, "f is not square free");
  if (!squarefree_local(g, p)) throw ValidationError(ErrorCode::NotSquarefree, "g is not square free");
  if (!coprime_a1(f, g, p)) throw ValidationError(ErrorCode::NotCoprimeA1, "f and g share a height-one prime");
  auto inst = Instance::make(p, vars, f, g);
  if ((inst->h1.is_zero() || inst->h2.is_zero()) && !opts.allow_degenerate_h)
    throw ValidationError(ErrorCode::HZero, "h1 or h2 vanishes modulo p");
  return inst;
}

inline bool degenerate_h(const Instance& in) { return in.h1.is_zero() || in.h2.is_zero(); }

enum class Which { F, G };

/// f (resp. g) lies in S^{p^p^2}, i.e. a (resp. b) is divisible by p.
inline bool in_sp_p2(const Instance& in, Which which) {
  const IntPoly& r = which == Which::F ? in.a : in.b;
  return reduce_mod(r, in.p).is_zero();
}

/// The unique i in 1..p-1 with a h2^p + i b h1^p = 0 mod p, if any.
inline std::optional<unsigned> fgi_index(const Instance& in) {
  if (in_sp_p2(in, Which::F) || in_sp_p2(in, Which::G))
    throw std::invalid_argument("fgi_index: requires f, g outside S^{p^p^2}");
  const unsigned pe = static_cast<unsigned>(in.p);
  const ModPPoly x = reduce_mod(in.a * in.h2.pow(pe), in.p);
  const ModPPoly y = reduce_mod(in.b * in.h1.pow(pe), in.p);
  std::optional<unsigned> found;
  for (unsigned i = 1; i < in.p; ++i) {
    if (!(x + y.scaled(i)).is_zero()) continue;
    if (found)
      throw ValidationError(ErrorCode::UniquenessViolated,
                            "indices " + std::to_string(*found) + " and " + std::to_string(i) + " both satisfy the fg^i condition");
    found = i;
  }
  return found;
}

/// h1 = z c, h2 = z e mod p with c, e coprime in F_p[X] and c monic.
struct ZceDecomposition {
  IntPoly z, c, e;
};

inline ZceDecomposition zce_decompose(const Instance& in) {
  const ModPPoly h1 = reduce_mod(in.h1, in.p), h2 = reduce_mod(in.h2, in.p);
  if (h1.is_zero() || h2.is_zero()) throw std::invalid_argument("zce_decompose: h1 and h2 must be nonzero mod p");
  const ModPPoly d = gcd(h1, h2);
  ModPPoly c = *exact_divide(h1, d), e = *exact_divide(h2, d);
  const auto lc = c.leading_coeff();
  const PrimeField F{in.p};
  const ModPPoly z = d.scaled(lc);
  c = c.scaled(F.inv(lc));
  e = e.scaled(F.inv(lc));
  return {lift(z), lift(c), lift(e)};
}

enum class QClass { TwoGenOrAll, GradeThree, GradeTwoNotPerfect };

inline const char* qclass_name(QClass q) {
  switch (q) {
    case QClass::TwoGenOrAll: return "TwoGenOrAll";
    case QClass::GradeThree: return "GradeThree";
    case QClass::GradeTwoNotPerfect: return "GradeTwoNotPerfect";
  }
  return "?";
}

/// Shape of Q = (p, f, g), read off (p, h1, h2) through the decomposition.
inline QClass q_class(const ZceDecomposition& d, unsigned long p) {
  if (is_local_unit(d.c, p) || is_local_unit(d.e, p)) return QClass::TwoGenOrAll;
  if (is_local_unit(d.z, p)) return QClass::GradeThree;
  return QClass::GradeTwoNotPerfect;
}

inline QClass q_class(const Instance& in) { return q_class(zce_decompose(in), in.p); }

enum class CaseKind { CM_NotNormal_Both, CM_NotNormal_One, CM_NormalNoFgi, CM_TwoGenQ, NotCM_GradeThree, NotCM_GradeTwoOpen };

inline const char* case_name(CaseKind k) {
  switch (k) {
    case CaseKind::CM_NotNormal_Both: return "CM_NotNormal_Both";
    case CaseKind::CM_NotNormal_One: return "CM_NotNormal_One";
    case CaseKind::CM_NormalNoFgi: return "CM_NormalNoFgi";
    case CaseKind::CM_TwoGenQ: return "CM_TwoGenQ";
    case CaseKind::NotCM_GradeThree: return "NotCM_GradeThree";
    case CaseKind::NotCM_GradeTwoOpen: return "NotCM_GradeTwoOpen";
  }
  return "?";
}

struct CaseLabel {
  CaseKind kind;
  std::optional<unsigned> i_star;
  /// For CM_NotNormal_One: true when f is the one in S^{p^p^2}.
  bool f_non_normal = false;
  bool degenerate_h = false;

  bool cohen_macaulay() const {
    return kind != CaseKind::NotCM_GradeThree && kind != CaseKind::NotCM_GradeTwoOpen;
  }
  /// T together with epsilon generates R.
  bool uses_epsilon() const { return i_star.has_value(); }
  std::string name() const { return case_name(kind); }

  friend bool operator==(const CaseLabel& a, const CaseLabel& b) {
    return a.kind == b.kind && a.i_star == b.i_star && a.f_non_normal == b.f_non_normal && a.degenerate_h == b.degenerate_h;
  }
};

inline CaseLabel classify(const Instance& in) {
  CaseLabel l{CaseKind::CM_NormalNoFgi, std::nullopt};
  l.degenerate_h = degenerate_h(in);
  const bool fp = in_sp_p2(in, Which::F), gp = in_sp_p2(in, Which::G);
  if (fp && gp) {
    l.kind = CaseKind::CM_NotNormal_Both;
    return l;
  }
  if (fp || gp) {
    l.kind = CaseKind::CM_NotNormal_One;
    l.f_non_normal = fp;
    return l;
  }
  l.i_star = fgi_index(in);
  if (!l.i_star) return l;
  switch (q_class(in)) {
    case QClass::TwoGenOrAll: l.kind = CaseKind::CM_TwoGenQ; break;
    case QClass::GradeThree: l.kind = CaseKind::NotCM_GradeThree; break;
    case QClass::GradeTwoNotPerfect: l.kind = CaseKind::NotCM_GradeTwoOpen; break;
  }
  return l;
}

}  // namespace mcmv
