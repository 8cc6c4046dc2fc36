#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mcmv/report.hpp"
#include "support.hpp"

using namespace mcmv;
using namespace mcmv::cli;
using testing_support::P;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JobConfig with(JobConfig c, std::vector<std::string> cmds) {
  c.commands = std::move(cmds);
  return c;
}

KElem kelem_from_json(const InstancePtr& in, const Json& j) {
  std::vector<IntPoly> c(in->dim(), IntPoly(in->n));
  for (const auto& t : j.at("coeffs"))
    c[t.at("w").get<unsigned>() + in->p * t.at("u").get<unsigned>()] = parse_poly(t.at("c").get<std::string>(), in->vars);
  return KElem(in, j.at("k").get<unsigned>(), c);
}

// Every polynomial string reachable from j re-renders to itself.
void check_poly_strings(const Json& j, const std::vector<std::string>& vars, std::size_t& count) {
  static const std::set<std::string> poly_keys{"c", "num", "den", "h1", "h2", "a", "b", "z", "e", "determinant"};
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (poly_keys.count(it.key()) && it.value().is_string()) {
        const auto s = it.value().get<std::string>();
        EXPECT_EQ(to_string(parse_poly(s, vars), vars), s);
        ++count;
      } else {
        check_poly_strings(it.value(), vars, count);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) check_poly_strings(e, vars, count);
  }
}

}  // namespace

TEST(Config, ExamplesAreByteExact) {
  EXPECT_EQ(render_config(example_config(1)), "p = 3\nvars = [\"X\", \"Y\"]\nf = \"-5*X^3+9\"\ng = \"-2*Y^3+9\"\n");
  EXPECT_EQ(render_config(example_config(2)), "p = 3\nvars = [\"X\", \"Y\"]\nf = \"-2*X^6+9\"\ng = \"4*X^3*Y^3+9\"\n");
  EXPECT_EQ(slurp(MCMV_SOURCE_DIR "/samples/example1.cfg"), render_config(example_config(1)));
  EXPECT_EQ(slurp(MCMV_SOURCE_DIR "/samples/example2.cfg"), render_config(example_config(2)));
  EXPECT_THROW(example_config(3), ConfigError);
}

TEST(Config, ParseRoundTrip) {
  JobConfig c = example_config(1);
  c.commands = {"classify", "mcm"};
  c.oracle = {{3, 12}};
  const auto back = parse_config(render_config(c));
  EXPECT_EQ(back.p, 3u);
  EXPECT_EQ(back.vars, c.vars);
  EXPECT_EQ(back.f, c.f);
  EXPECT_EQ(back.g, c.g);
  EXPECT_EQ(back.commands, c.commands);
  ASSERT_TRUE(back.oracle.has_value());
  EXPECT_EQ(*back.oracle, std::make_pair(3u, 12u));
  EXPECT_EQ(render_config(back), render_config(c));
}

TEST(Config, CommentsAndCommandString) {
  const auto c = parse_config("# job\np = 5\n\nvars = [\"X\",\"Y\"]  # names\nf = \"X^5+5\"\ng = \"Y^5+5\"\ncommands = \"classify closure\"\n");
  EXPECT_EQ(c.p, 5u);
  EXPECT_EQ(c.commands, (std::vector<std::string>{"classify", "closure"}));
}

TEST(Config, Errors) {
  const std::string base = "p = 3\nvars = [\"X\", \"Y\"]\nf = \"X^3+3\"\ng = \"Y^3+3\"\n";
  EXPECT_NO_THROW(parse_config(base));
  EXPECT_THROW(parse_config("p = 3\n"), ConfigError);
  EXPECT_THROW(parse_config(base + "q = 1\n"), ConfigError);
  EXPECT_THROW(parse_config(base + "p = 5\n"), ConfigError);
  EXPECT_THROW(parse_config(base + "commands = [\"frobnicate\"]\n"), ConfigError);
  EXPECT_THROW(parse_config(base + "oracle = [3]\n"), ConfigError);
  EXPECT_THROW(parse_config("p = \"3\"\nvars = [\"X\"]\nf = \"X\"\ng = \"X\"\n"), ConfigError);
  EXPECT_THROW(parse_config("p = 3\nvars = [\"X\", \"Y\"\nf = \"X\"\ng = \"X\"\n"), ConfigError);
  EXPECT_THROW(parse_config("p = 3\nvars = [\"X\", \"Y\"]\nf = \"X\ng = \"X\"\n"), ConfigError);
  try {
    parse_config(base + "q = 1\n");
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadConfig);
  }
  EXPECT_EQ(parse_oracle_spec("3,12"), std::make_pair(3u, 12u));
  EXPECT_THROW(parse_oracle_spec("3"), ConfigError);
  EXPECT_THROW(parse_oracle_spec("3,x"), ConfigError);
  EXPECT_THROW(parse_oracle_spec("0,4"), ConfigError);
}

TEST(Config, CommandOrder) {
  EXPECT_EQ(resolve_commands({}), (std::vector<std::string>{"classify", "closure", "resolution"}));
  EXPECT_EQ(resolve_commands({"claims", "closure"}), (std::vector<std::string>{"classify", "closure", "claims"}));
  EXPECT_EQ(resolve_commands({"all"}).size(), 6u);
}

TEST(Run, ExampleOneAll) {
  const auto res = run(with(example_config(1), {"all"}));
  const auto& r = res.report;
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(r["result"], "PASS");
  EXPECT_EQ(r["checks"]["classify"]["case"], "NotCM_GradeThree");
  EXPECT_EQ(r["checks"]["classify"]["i_star"], 1);
  EXPECT_EQ(r["checks"]["resolution"]["nu"], 10);
  EXPECT_EQ(r["checks"]["resolution"]["pd"], 1);
  EXPECT_EQ(r["checks"]["mcm"]["basis_size"], 9);
  EXPECT_EQ(r["checks"]["mcm"]["stability_products"], 90);
  EXPECT_EQ(r["checks"]["claims"]["status"], "PASS");
  EXPECT_EQ(r["engine"]["oracle"]["contradictions"], 0);
  EXPECT_EQ(r["engine"]["oracle"]["N"], 12);
  for (const auto& [name, sec] : r["checks"].items()) EXPECT_EQ(sec["status"], "PASS") << name;
}

TEST(Run, ExampleTwoRefusesMCM) {
  const auto res = run(with(example_config(2), {"mcm", "resolution"}));
  const auto& r = res.report;
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(r["checks"]["classify"]["case"], "NotCM_GradeTwoOpen");
  EXPECT_EQ(r["checks"]["mcm"]["status"], "REFUSED");
  EXPECT_EQ(r["checks"]["mcm"]["code"], "OPEN_CASE");
  EXPECT_EQ(r["checks"]["resolution"]["nu"], 10);
  EXPECT_EQ(r["checks"]["resolution"]["pd"], 1);
}

TEST(Run, ValidationErrors) {
  JobConfig c = example_config(1);
  c.f = "X^2+1";
  auto res = run(c);
  EXPECT_EQ(res.exit_code, 2);
  EXPECT_EQ(res.report["error"]["code"], "NOT_IN_SP");
  EXPECT_FALSE(res.report.contains("checks"));

  c.f = "X^3+";
  res = run(c);
  EXPECT_EQ(res.report["error"]["code"], "PARSE_ERROR");

  c = example_config(1);
  c.p = 4;
  EXPECT_EQ(run(c).report["error"]["code"], "BAD_PRIME");
}

TEST(Run, CohenMacaulayBranches) {
  JobConfig c = example_config(1);
  c.commands = {"all"};
  c.f = "X^3+9";
  c.g = "Y^3+9";
  auto res = run(c);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.report["checks"]["classify"]["case"], "CM_NotNormal_Both");
  EXPECT_EQ(res.report["checks"]["closure"]["rank"], 9);
  EXPECT_EQ(res.report["checks"]["conductor"]["status"], "NOT_APPLICABLE");
  EXPECT_EQ(res.report["checks"]["resolution"]["pd"], 0);
  EXPECT_EQ(res.report["checks"]["claims"]["status"], "NOT_APPLICABLE");
  EXPECT_EQ(res.report["checks"]["mcm"]["module"], "R");
}

TEST(Run, Deterministic) {
  const auto a = run(with(example_config(1), {"all"})).report.dump();
  const auto b = run(with(example_config(1), {"all"})).report.dump();
  EXPECT_EQ(a, b);
  RunOptions opts;
  opts.timings = true;
  const auto t = run(example_config(1), opts).report;
  EXPECT_TRUE(t["checks"]["closure"].contains("seconds"));
}

TEST(Report, PolynomialsRoundTrip) {
  const auto cfg = with(example_config(1), {"all"});
  const auto r = run(cfg).report;
  std::size_t count = 0;
  check_poly_strings(r, cfg.vars, count);
  EXPECT_GT(count, 100u);

  // the rendered generators are exactly the engine's values
  const auto in = testing_support::example1();
  const auto label = classify(*in);
  const auto gs = closure_gens(in, label);
  const auto& gens = r["checks"]["closure"]["generators"];
  ASSERT_EQ(gens.size(), gs.gens.size());
  for (std::size_t i = 0; i < gs.gens.size(); ++i) {
    EXPECT_EQ(kelem_from_json(in, gens[i]), gs.gens[i]);
    EXPECT_EQ(gens[i]["tag"], gs.gens.tags()[i]);
    EXPECT_EQ(gens[i]["text"], render(gs.gens[i]));
  }
  const auto mc = mcm_certificate(in, label);
  const auto& basis = r["checks"]["mcm"]["basis"];
  ASSERT_EQ(basis.size(), mc.basis.size());
  for (std::size_t i = 0; i < mc.basis.size(); ++i) EXPECT_EQ(kelem_from_json(in, basis[i]), mc.basis[i]);
  EXPECT_EQ(parse_poly(r["checks"]["mcm"]["determinant"].get<std::string>(), cfg.vars), mc.det);

  const auto rc = resolution(in, label);
  const auto& psi = r["checks"]["resolution"]["psi"];
  ASSERT_EQ(psi.size(), rc.psi.size());
  for (std::size_t i = 0; i < rc.psi.size(); ++i) {
    EXPECT_EQ(parse_poly(psi[i]["num"].get<std::string>(), cfg.vars), rc.psi[i].num);
    EXPECT_EQ(parse_poly(psi[i]["den"].get<std::string>(), cfg.vars), rc.psi[i].den);
  }
  EXPECT_EQ(parse_poly(r["instance"]["a"].get<std::string>(), cfg.vars), P("-2*X^3+3"));
}

TEST(Report, TextForm) {
  const auto text = render_text(run(example_config(2)).report);
  EXPECT_NE(text.find("case: NotCM_GradeTwoOpen"), std::string::npos);
  EXPECT_NE(text.find("result: PASS"), std::string::npos);
  EXPECT_EQ(text.find("coeffs"), std::string::npos);
}
