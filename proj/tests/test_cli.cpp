#include "dhymlab/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace dhymlab;
using cli::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "dhymlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Parsers, Rationals) {
  EXPECT_EQ(cli::parse_rationals("2, -1/3,4", "x"), (std::vector<Rational>{2, Rational(-1, 3), 4}));
  EXPECT_THROW(cli::parse_rationals("2,x", "x"), cli::UsageError);
  EXPECT_THROW(cli::parse_rationals("1/0", "x"), cli::UsageError);
  EXPECT_THROW(cli::parse_integers("1/2", "x"), cli::UsageError);
  EXPECT_EQ(cli::parse_parabolic("2"), std::vector<std::size_t>{1});
  EXPECT_TRUE(cli::parse_parabolic("").empty());
  EXPECT_THROW(cli::parse_parabolic("0"), cli::UsageError);
}

TEST(Parsers, PhaseTargets) {
  EXPECT_EQ(cli::parse_phase_target("pi"), ExactPhase::pi());
  EXPECT_EQ(cli::parse_phase_target("0"), ExactPhase::zero());
  EXPECT_EQ(cli::parse_phase_target("1:0:-3"), ExactPhase(1, {0, -1}));
  EXPECT_THROW(cli::parse_phase_target("pi/5"), cli::UsageError);
  EXPECT_THROW(cli::parse_phase_target("0:0:0"), cli::UsageError);
  EXPECT_THROW(cli::parse_phase_target("1/2:1:0"), cli::UsageError);
}

TEST(Cli, Roots) {
  auto r = run({"roots", "--type", "G", "--rank", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["tool"], "dhymlab");
  EXPECT_EQ(j["command"], "roots");
  EXPECT_EQ(j["results"]["positive_roots"].size(), 6u);
}

TEST(Cli, Flag) {
  auto r = run({"flag", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["results"]["dim_c"], 3);
  EXPECT_EQ(j["results"]["delta_P"], Json::array({"2", "2"}));
  auto p = run({"flag", "--parabolic", "1,2"});
  EXPECT_EQ(p.code, 0);
  EXPECT_TRUE(contains(p.out, "point"));
}

TEST(Cli, PhaseOfZeroClass) {
  auto r = run({"phase", "--omega", "2,2", "--xi", "0,0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ph = r.json()["results"]["phase"];
  EXPECT_EQ(ph["winding"], 0);
  EXPECT_EQ(ph["ray"]["re"], "1");
  EXPECT_EQ(ph["ray"]["im"], "0");
}

TEST(Cli, PhaseAcceptsNegativeValues) {
  auto r = run({"phase", "--omega", "2,2", "--xi=-1,2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["results"]["contraction"], "3/4");
}

TEST(Cli, Charge) {
  auto r = run({"charge", "--omega", "2,2", "--line", "0,0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["results"]["central_charge"]["re"], "0");
  EXPECT_EQ(j["results"]["central_charge"]["im"], "-8");
}

TEST(Cli, Classify) {
  auto r = run({"classify", "--omega", "2,2", "--sum", "2,6;3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "type: TypeIII"));
  EXPECT_TRUE(contains(r.out, "stability: Unstable"));
  EXPECT_TRUE(contains(r.out, "slope = 90"));
  EXPECT_TRUE(contains(r.out, "Theta_hat = pi"));
  auto j = run({"classify", "--omega", "2,2", "--sum", "2,-1;3,-2", "--json"}).json();
  EXPECT_EQ(j["results"]["type"], "TypeII");
  EXPECT_EQ(j["results"]["slope"], "12");
}

TEST(Cli, EnumeratePhaseTarget) {
  auto r = run({"enumerate", "--omega", "2,2", "--ltarget", "pi", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["results"]["count"], 6);
  EXPECT_EQ(j["results"]["bundles"][1], Json::array({2, 6}));
}

TEST(Cli, EnumerateContraction) {
  auto r = run({"enumerate", "--dm", "3/4", "--bound", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["results"]["count"], 10);
}

TEST(Cli, BigcellCheck) {
  auto r = run({"bigcell-check", "--s", "2,6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["passed"], true);
  EXPECT_NEAR(j["results"]["numeric"][2].get<double>(), 3.0, 1e-4);
  EXPECT_TRUE(contains(run({"bigcell-check"}).out, "RESULT: PASS"));
  EXPECT_EQ(run({"bigcell-check", "--step", "0"}).code, cli::kUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"phase", "--omega", "0,2", "--xi", "1,1"}).code, cli::kUsage);
  EXPECT_EQ(run({"phase", "--omega", "2,2", "--xi", "1,a"}).code, cli::kUsage);
  EXPECT_EQ(run({"phase", "--xi", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"roots", "--type", "E", "--rank", "5"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate", "--ltarget", "pi/5"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate", "--dm", "0", "--ltarget", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate", "--dm", "0", "--bound", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"bigcell-check", "--s", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--sum", ";"}).code, cli::kUsage);
  auto e = run({"phase", "--omega", "-1,2", "--xi", "1,1"});
  EXPECT_EQ(e.code, cli::kUsage);
  EXPECT_FALSE(e.err.empty());
}

TEST(Cli, Deterministic) {
  auto a = run({"reproduce-paper", "--json"});
  auto b = run({"reproduce-paper", "--json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST(Cli, ReproducePaperReport) {
  auto r = run({"reproduce-paper"});
  EXPECT_TRUE(contains(r.out, "Vol = 8"));
  EXPECT_TRUE(contains(r.out, "E3: TypeIII"));
  EXPECT_TRUE(contains(r.out, "Theta_hat = pi"));
  // The literal equivalence "Im(Z_E conj Z_F) = 0 iff phases agree mod 2 pi"
  // is false for antiparallel charges; every other claim must hold.
  auto j = run({"reproduce-paper", "--json"}).json();
  std::vector<std::string> failed;
  for (const auto& c : j["results"]["claims"])
    if (!c["passed"].get<bool>()) failed.push_back(c["id"].get<std::string>());
  EXPECT_EQ(failed, std::vector<std::string>{"8"});
  EXPECT_EQ(r.code, cli::kAssertion);
  EXPECT_TRUE(contains(r.out, "RESULT: FAIL"));
}
