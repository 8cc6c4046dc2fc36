#pragma once

// Job configuration and report assembly for the command-line front end.
//
// Config files are flat key = value lines; strings are double-quoted and lists
// bracketed.  The report is an ordered JSON tree; the text form prints the
// same tree as indented records, so field order is stable in both.

#include <cctype>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "classify.hpp"
#include "closure.hpp"
#include "oracle.hpp"
#include "poly_io.hpp"
#include "verify.hpp"

namespace mcmv::cli {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> k{"classify", "closure", "conductor", "resolution", "mcm", "claims"};
  return k;
}

struct JobConfig {
  unsigned long p = 0;
  std::vector<std::string> vars;
  std::string f, g;
  std::vector<std::string> commands;                     // empty: the default set
  std::optional<std::pair<unsigned, unsigned>> oracle;  // (k, N)
};

class ConfigError : public ValidationError {
 public:
  explicit ConfigError(const std::string& what) : ValidationError(ErrorCode::BadConfig, what) {}
};

namespace detail {

using Value = std::variant<long, std::string, std::vector<std::variant<long, std::string>>>;

class ValueParser {
 public:
  ValueParser(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  Value parse() {
    skip();
    Value v;
    if (peek() == '[') {
      ++pos_;
      std::vector<std::variant<long, std::string>> items;
      skip();
      if (peek() == ']') {
        ++pos_;
      } else {
        for (;;) {
          items.push_back(scalar());
          skip();
          const char c = peek();
          ++pos_;
          if (c == ']') break;
          if (c != ',') fail("expected ',' or ']'");
        }
      }
      v = std::move(items);
    } else {
      auto sc = scalar();
      if (auto* n = std::get_if<long>(&sc)) v = *n;
      else v = std::get<std::string>(sc);
    }
    skip();
    if (pos_ != s_.size() && s_[pos_] != '#') fail("trailing characters");
    return v;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError("line " + std::to_string(line_) + ": " + why);
  }
  std::variant<long, std::string> scalar() {
    skip();
    if (peek() == '"') {
      ++pos_;
      std::string out;
      while (pos_ < s_.size() && s_[pos_] != '"') out += s_[pos_++];
      if (pos_ == s_.size()) fail("unterminated string");
      ++pos_;
      return out;
    }
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected a number or a quoted string");
    try {
      return std::stol(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::string want_string(const Value& v, const std::string& key) {
  if (auto* s = std::get_if<std::string>(&v)) return *s;
  throw ConfigError(key + " must be a quoted string");
}

inline std::vector<std::string> want_string_list(const Value& v, const std::string& key) {
  const auto* l = std::get_if<std::vector<std::variant<long, std::string>>>(&v);
  if (!l) throw ConfigError(key + " must be a bracketed list of strings");
  std::vector<std::string> out;
  for (const auto& e : *l) {
    if (!std::holds_alternative<std::string>(e)) throw ConfigError(key + " must be a bracketed list of strings");
    out.push_back(std::get<std::string>(e));
  }
  return out;
}

inline void check_commands(const std::vector<std::string>& cmds) {
  for (const auto& c : cmds) {
    if (c == "all") continue;
    if (std::find(known_commands().begin(), known_commands().end(), c) == known_commands().end())
      throw ConfigError("unknown command '" + c + "'");
  }
}

}  // namespace detail

/// Parses "k,N" as given on the command line.
inline std::pair<unsigned, unsigned> parse_oracle_spec(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ConfigError("oracle must be given as k,N");
  try {
    std::size_t used = 0;
    const long k = std::stol(s.substr(0, comma), &used);
    if (used != comma) throw ConfigError("oracle must be given as k,N");
    const std::string rest = s.substr(comma + 1);
    const long N = std::stol(rest, &used);
    if (used != rest.size()) throw ConfigError("oracle must be given as k,N");
    if (k <= 0 || N <= 0) throw ConfigError("oracle depth and degree must be positive");
    return {static_cast<unsigned>(k), static_cast<unsigned>(N)};
  } catch (const std::logic_error&) {
    throw ConfigError("oracle must be given as k,N");
  }
}

inline JobConfig parse_config(std::string_view text) {
  JobConfig cfg;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    if (b == line.size() || line[b] == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key(line.substr(b, eq - b));
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    const auto v = detail::ValueParser(line.substr(eq + 1), line_no).parse();
    if (key == "p") {
      const auto* n = std::get_if<long>(&v);
      if (!n || *n <= 0) throw ConfigError("p must be a positive integer");
      cfg.p = static_cast<unsigned long>(*n);
    } else if (key == "vars") {
      cfg.vars = detail::want_string_list(v, key);
    } else if (key == "f") {
      cfg.f = detail::want_string(v, key);
    } else if (key == "g") {
      cfg.g = detail::want_string(v, key);
    } else if (key == "commands") {
      if (auto* s = std::get_if<std::string>(&v)) {
        std::istringstream is(*s);
        for (std::string w; is >> w;) cfg.commands.push_back(w);
      } else {
        cfg.commands = detail::want_string_list(v, key);
      }
      detail::check_commands(cfg.commands);
    } else if (key == "oracle") {
      const auto* l = std::get_if<std::vector<std::variant<long, std::string>>>(&v);
      if (!l || l->size() != 2 || !std::holds_alternative<long>((*l)[0]) || !std::holds_alternative<long>((*l)[1]))
        throw ConfigError("oracle must be [k, N]");
      const long k = std::get<long>((*l)[0]), N = std::get<long>((*l)[1]);
      if (k <= 0 || N <= 0) throw ConfigError("oracle depth and degree must be positive");
      cfg.oracle = {static_cast<unsigned>(k), static_cast<unsigned>(N)};
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (end == text.size()) break;
  }
  for (const char* k : {"p", "vars", "f", "g"})
    if (!seen.count(k)) throw ConfigError(std::string("missing key '") + k + "'");
  return cfg;
}

inline std::string render_config(const JobConfig& cfg) {
  std::ostringstream os;
  os << "p = " << cfg.p << "\n";
  os << "vars = [";
  for (std::size_t i = 0; i < cfg.vars.size(); ++i) os << (i ? ", " : "") << '"' << cfg.vars[i] << '"';
  os << "]\n";
  os << "f = \"" << cfg.f << "\"\n";
  os << "g = \"" << cfg.g << "\"\n";
  if (!cfg.commands.empty()) {
    os << "commands = [";
    for (std::size_t i = 0; i < cfg.commands.size(); ++i) os << (i ? ", " : "") << '"' << cfg.commands[i] << '"';
    os << "]\n";
  }
  if (cfg.oracle) os << "oracle = [" << cfg.oracle->first << ", " << cfg.oracle->second << "]\n";
  return os.str();
}

/// The two worked examples, p = 3.
inline JobConfig example_config(int which) {
  JobConfig c;
  c.p = 3;
  c.vars = {"X", "Y"};
  if (which == 1) {
    c.f = "-5*X^3+9";
    c.g = "-2*Y^3+9";
  } else if (which == 2) {
    c.f = "-2*X^6+9";
    c.g = "4*X^3*Y^3+9";
  } else {
    throw ConfigError("examples are numbered 1 and 2");
  }
  return c;
}

/// Requested commands in dependency order; classify always runs.
inline std::vector<std::string> resolve_commands(const std::vector<std::string>& requested) {
  std::set<std::string> want{"classify"};
  const std::vector<std::string> def{"classify", "closure", "resolution"};
  for (const auto& c : requested.empty() ? def : requested) {
    if (c == "all") want.insert(known_commands().begin(), known_commands().end());
    else want.insert(c);
  }
  detail::check_commands(std::vector<std::string>(want.begin(), want.end()));
  std::vector<std::string> out;
  for (const auto& c : known_commands())
    if (want.count(c)) out.push_back(c);
  return out;
}

// ---- rendering ------------------------------------------------------------

inline std::string poly_text(const IntPoly& f, const Instance& in) { return to_string(f, in.vars); }

/// A KElem as its text form plus its coefficients on w^i u^j over p^k.
inline Json kelem_json(const KElem& x) {
  const auto& in = *x.instance();
  Json coeffs = Json::array();
  for (unsigned j = 0; j < in.p; ++j)
    for (unsigned i = 0; i < in.p; ++i) {
      const auto& c = x.coeff(i, j);
      if (c.is_zero()) continue;
      coeffs.push_back(Json{{"w", i}, {"u", j}, {"c", poly_text(c, in)}});
    }
  return Json{{"text", render(x)}, {"k", x.k()}, {"coeffs", coeffs}};
}

inline Json lattice_json(const Lattice& l) {
  Json out = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    Json e{{"tag", l.tags()[i]}};
    e.update(kelem_json(l[i]));
    out.push_back(std::move(e));
  }
  return out;
}

inline Json fraction_json(const la::Fraction& f, const Instance& in) {
  return Json{{"num", poly_text(f.num, in)}, {"den", poly_text(f.den, in)}};
}

// ---- running --------------------------------------------------------------

struct RunOptions {
  bool timings = false;
  std::optional<long> seed;
};

struct RunResult {
  Json report;
  int exit_code = 0;  // 0 all checks passed or refused as documented, 1 a check failed, 2 invalid input
};

namespace detail {

inline Json refusal(ErrorCode code, const std::string& why) {
  return Json{{"status", "REFUSED"}, {"code", code_name(code)}, {"reason", why}};
}

inline Json not_applicable(const std::string& why) { return Json{{"status", "NOT_APPLICABLE"}, {"reason", why}}; }

inline const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

class Job {
 public:
  Job(InstancePtr in, CaseLabel label, Audit* audit) : in_(std::move(in)), label_(label), audit_(audit) {}

  Json classify_section() const {
    Json j{{"status", "PASS"}, {"case", label_.name()}, {"cohen_macaulay", label_.cohen_macaulay()}};
    j["i_star"] = label_.i_star ? Json(*label_.i_star) : Json(nullptr);
    Json reasons = Json::array();
    const bool fp = in_sp_p2(*in_, Which::F), gp = in_sp_p2(*in_, Which::G);
    reasons.push_back(std::string("f ") + (fp ? "lies" : "does not lie") + " in S^{p^p^2} (a " + (fp ? "in" : "not in") + " pS)");
    reasons.push_back(std::string("g ") + (gp ? "lies" : "does not lie") + " in S^{p^p^2} (b " + (gp ? "in" : "not in") + " pS)");
    if (!fp && !gp) {
      if (label_.i_star) {
        reasons.push_back("a h2^p + i b h1^p = 0 mod p for i = " + std::to_string(*label_.i_star));
        const auto z = zce_decompose(*in_);
        j["zce"] = Json{{"z", poly_text(z.z, *in_)}, {"c", poly_text(z.c, *in_)}, {"e", poly_text(z.e, *in_)}};
        reasons.push_back(std::string("Q = (p, h1, h2) is ") + qclass_name(q_class(z, in_->p)));
      } else {
        reasons.push_back("no i in 1..p-1 with a h2^p + i b h1^p = 0 mod p");
      }
    }
    if (label_.degenerate_h) reasons.push_back("h1 or h2 vanishes modulo p");
    j["reasons"] = reasons;
    return j;
  }

  Json closure_section() const {
    const auto gs = closure_gens(in_, label_);
    const auto cr = verify_ring_closure(gs.gens, audit_);
    const auto fr = verify_free(gs.gens);
    // R is S-free exactly in the Cohen-Macaulay cases
    const bool ok = cr.closed && fr.free == label_.cohen_macaulay() && (!fr.free || fr.rank == in_->dim());
    Json j{{"status", pass_fail(ok)}, {"generators", lattice_json(gs.gens)}};
    j["ring_closed"] = cr.closed;
    j["products_checked"] = cr.products;
    Json fails = Json::array();
    for (std::size_t k = 0; k < cr.failures.size(); ++k) {
      const auto [a, b] = cr.failures[k];
      fails.push_back(Json{{"left", gs.gens.tags()[a]}, {"right", gs.gens.tags()[b]}, {"product", kelem_json(cr.witnesses[k])}});
    }
    j["closure_failures"] = fails;
    j["free"] = fr.free;
    j["rank"] = fr.rank;
    j["minimal_generators"] = fr.minimal_count;
    return j;
  }

  Json conductor_section() const {
    if (label_.kind != CaseKind::CM_NormalNoFgi && !label_.uses_epsilon())
      return not_applicable(std::string("no conductor is stated for case ") + label_.name());
    const auto spec = conductor_gens(in_, label_);
    const auto gs = closure_gens(in_, label_);
    const auto rep = verify_conductor(spec, gs.gens);
    Json j{{"status", pass_fail(rep.ok)}, {"ideal", ideal_name(spec.name)}, {"generators", lattice_json(spec.a_gens)}};
    j["products_checked"] = rep.products;
    Json fails = Json::array();
    for (const auto& [c, r] : rep.failures) fails.push_back(Json{{"conductor", c}, {"r", r}});
    j["failures"] = fails;
    return j;
  }

  Json resolution_section() const {
    if (!label_.uses_epsilon()) {
      // R is S-free on T itself; the resolution is 0 -> S^(p^2) -> R -> 0
      const auto gs = closure_gens(in_, label_);
      const auto fr = verify_free(gs.gens);
      Json j{{"status", pass_fail(fr.free && fr.rank == in_->dim())}, {"nu", fr.minimal_count}, {"pd", 0}};
      j["free_rank"] = fr.rank;
      return j;
    }
    const auto rc = resolution(in_, label_, audit_);
    bool ok = rc.tail_is_minus_p && rc.zero_block;
    if (rc.pd == 1) ok = ok && rc.in_maximal_ideal && rc.nu == in_->dim() + 1;
    else ok = ok && rc.remin && rc.remin->free && rc.remin->rank == in_->dim();
    Json j{{"status", pass_fail(ok)}, {"nu", rc.nu}, {"pd", rc.pd}};
    Json psi = Json::array();
    for (std::size_t k = 0; k < rc.psi.size(); ++k) {
      Json e{{"tag", rc.tags[k]}};
      e.update(fraction_json(rc.psi[k], *in_));
      psi.push_back(std::move(e));
    }
    j["psi"] = psi;
    Json ord = Json::array();
    for (const auto& o : rc.ordering) ord.push_back(Json::array({o[0], o[1]}));
    j["ordering"] = ord;
    j["zero_block_start"] = rc.zero_block_start;
    j["zero_block"] = rc.zero_block;
    j["tail_is_minus_p"] = rc.tail_is_minus_p;
    j["in_maximal_ideal"] = rc.in_maximal_ideal;
    j["kernel_generated"] = rc.kernel_generated;
    if (!rc.ordering_flag.empty()) j["ordering_flag"] = rc.ordering_flag;
    if (rc.remin) j["free_rank_after_reduction"] = rc.remin->rank;
    return j;
  }

  Json mcm_section() const {
    if (label_.cohen_macaulay()) {
      // R itself is a birational MCM module
      const auto gs = closure_gens(in_, label_);
      const auto cr = verify_ring_closure(gs.gens, audit_);
      const auto fr = verify_free(gs.gens);
      const bool ok = cr.closed && fr.free && fr.rank == in_->dim();
      Json j{{"status", pass_fail(ok)}, {"module", "R"}, {"basis_size", fr.minimal_count}};
      return j;
    }
    try {
      const auto mc = mcm_certificate(in_, label_, audit_);
      const bool ok = mc.basis.size() == in_->dim() && !mc.det.is_zero() && mc.in_f1 && mc.in_f2 && mc.stable;
      Json j{{"status", pass_fail(ok)}, {"module", "F1 cap F2"}, {"basis_size", mc.basis.size()}};
      j["basis"] = lattice_json(mc.basis);
      j["determinant"] = poly_text(mc.det, *in_);
      j["scale"] = mc.scale;
      std::size_t products = 0;
      for (const auto& r : mc.stability) products += r.size();
      j["stability_products"] = products;
      j["r_generators"] = mc.r_tags;
      j["in_F1"] = mc.in_f1;
      j["in_F2"] = mc.in_f2;
      j["stable"] = mc.stable;
      j["trace"] = mc.trace;
      return j;
    } catch (const ValidationError& e) {
      return refusal(e.code(), e.what());
    } catch (const MCMError& e) {
      return Json{{"status", "FAIL"}, {"error", e.what()}};
    }
  }

  Json claims_section() const {
    if (label_.kind == CaseKind::NotCM_GradeTwoOpen)
      return refusal(ErrorCode::OpenCase, "the claims concern the grade-three case only");
    if (label_.kind != CaseKind::NotCM_GradeThree)
      return not_applicable(std::string("the claims concern the grade-three case, not ") + label_.name());
    const auto rep = verify_theorem_claims(in_, label_, audit_);
    Json j{{"status", pass_fail(rep.claim1() && rep.claim2())}};
    j["claim1"] = Json{{"holds", rep.claim1()}, {"forward", rep.claim1_forward}, {"backward", rep.claim1_backward}};
    j["claim2"] = Json{{"holds", rep.claim2()}, {"forward", rep.claim2_forward}, {"backward", rep.claim2_backward}};
    j["colon_generators"] = rep.colon_generators;
    return j;
  }

  Json run(const std::string& cmd) const {
    if (cmd == "classify") return classify_section();
    if (cmd == "closure") return closure_section();
    if (cmd == "conductor") return conductor_section();
    if (cmd == "resolution") return resolution_section();
    if (cmd == "mcm") return mcm_section();
    if (cmd == "claims") return claims_section();
    throw ConfigError("unknown command '" + cmd + "'");
  }

 private:
  InstancePtr in_;
  CaseLabel label_;
  Audit* audit_;
};

inline bool section_ok(const Json& s) {
  const auto st = s.at("status").get<std::string>();
  return st == "PASS" || st == "REFUSED" || st == "NOT_APPLICABLE";
}

}  // namespace detail

inline RunResult run(const JobConfig& cfg, const RunOptions& opts = {}) {
  using Clock = std::chrono::steady_clock;
  RunResult out;
  Json& rep = out.report;
  rep["config"] = Json{{"p", cfg.p}, {"vars", cfg.vars}, {"f", cfg.f}, {"g", cfg.g}};
  if (opts.seed) rep["config"]["seed"] = *opts.seed;

  std::vector<std::string> cmds;
  InstancePtr in;
  try {
    cmds = resolve_commands(cfg.commands);
    IntPoly f, g;
    try {
      f = parse_poly(cfg.f, cfg.vars);
      g = parse_poly(cfg.g, cfg.vars);
    } catch (const ParseError& e) {
      throw ValidationError(ErrorCode::ParseFailure, e.what());
    }
    in = validate(cfg.p, cfg.vars, f, g);
  } catch (const ValidationError& e) {
    rep["error"] = Json{{"code", code_name(e.code())}, {"message", e.what()}};
    out.exit_code = 2;
    return out;
  }

  rep["instance"] = Json{{"h1", poly_text(in->h1, *in)}, {"h2", poly_text(in->h2, *in)}, {"a", poly_text(in->a, *in)},
                         {"b", poly_text(in->b, *in)}};
  const CaseLabel label = classify(*in);
  Audit audit;
  const detail::Job job(in, label, &audit);
  Json checks;
  bool all_ok = true;
  for (const auto& c : cmds) {
    const auto t0 = Clock::now();
    Json sec;
    try {
      sec = job.run(c);
    } catch (const ValidationError& e) {
      sec = detail::refusal(e.code(), e.what());
    } catch (const std::exception& e) {
      sec = Json{{"status", "ERROR"}, {"error", e.what()}};
    }
    if (opts.timings) sec["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    all_ok = all_ok && detail::section_ok(sec);
    checks[c] = std::move(sec);
  }
  rep["checks"] = std::move(checks);

  Json engine{{"membership_decisions", audit.size()}};
  auto oracle_at = cfg.oracle;
  // "all" includes the oracle cross-check at its default depth and degree
  if (!oracle_at && std::find(cfg.commands.begin(), cfg.commands.end(), "all") != cfg.commands.end())
    oracle_at = std::make_pair(3u, static_cast<unsigned>(4 * in->p));
  if (oracle_at) {
    const auto t0 = Clock::now();
    TruncationOracle oracle(in->p, oracle_at->first, oracle_at->second);
    std::size_t contradictions = 0, refuted = 0;
    Json witnesses = Json::array();
    for (const auto& d : audit.decisions()) {
      if (oracle.decide(d) != OracleVerdict::No) continue;
      if (d.member) {
        ++contradictions;
        witnesses.push_back(d.label);
      } else {
        ++refuted;
      }
    }
    Json o{{"status", detail::pass_fail(contradictions == 0)}, {"k", oracle_at->first}, {"N", oracle_at->second}};
    o["decisions"] = audit.size();
    o["contradictions"] = contradictions;
    o["non_members_refuted"] = refuted;
    o["witnesses"] = witnesses;
    if (opts.timings) o["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    all_ok = all_ok && contradictions == 0;
    engine["oracle"] = std::move(o);
  }
  rep["engine"] = std::move(engine);
  rep["result"] = all_ok ? "PASS" : "FAIL";
  out.exit_code = all_ok ? 0 : 1;
  return out;
}

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_object() && !(j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())); }

inline void write_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (it.key() == "coeffs") continue;  // already shown as text
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      write_text(os, v, indent + 1);
    } else if (v.is_array() && !is_scalar(v)) {
      os << pad << it.key() << ":\n";
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_object()) {
          os << pad << "  - [" << k << "]\n";
          write_text(os, v[k], indent + 2);
        } else {
          os << pad << "  - " << v[k].dump() << "\n";
        }
      }
    } else if (v.is_string()) {
      os << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      os << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace detail

/// Indented "key: value" records in the report's field order.
inline std::string render_text(const Json& report) {
  std::ostringstream os;
  detail::write_text(os, report, 0);
  return os.str();
}

}  // namespace mcmv::cli
