#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "shascope/cli.hpp"

using namespace shascope;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExceptionalSet) {
  CliRun r = run({"exceptional", "--curve", "-5316979,-4724275762"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"exceptional_set\":[2,3,5,7,13,23]"), std::string::npos);
  EXPECT_EQ(r.doc()["smallest_applicable"], 11);
}

TEST(Cli, LargeIntegersAreStrings) {
  CliRun r = run({"exceptional", "--curve", "0,1692602,0,-530052723915,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = r.doc();
  EXPECT_EQ(d["exceptional_set"].back(), 8420798017L);
  EXPECT_EQ(d["smallest_applicable"], 41);
  CliRun inv = run({"invariants", "--curve", "0,1692602,0,-530052723915,0"});
  EXPECT_EQ(inv.doc()["invariants"]["delta"], "22409547184983924741173483181203078400");
}

TEST(Cli, FfGroup) {
  CliRun r = run({"ffgroup", "--p", "7", "--ell", "5", "--curve", "-5316979,-4724275762"});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = r.doc();
  EXPECT_EQ(d["order"], 10);
  EXPECT_TRUE(d["ell_primary"]["cyclic"].get<bool>());
  EXPECT_EQ(d["ell_primary"]["points_by_order"][1].dump(),
            R"([{"x":1,"y":3},{"x":1,"y":4},{"x":5,"y":3},{"x":5,"y":4}])");
}

TEST(Cli, Divpoly) {
  CliRun r = run({"divpoly", "--n", "1", "--symbolic"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["poly"], "1");
  CliRun c = run({"divpoly", "--n", "3", "--curve", "1,1"});
  EXPECT_EQ(c.doc()["poly"], "3*X^4 + 6*X^2 + 12*X - 1");
  EXPECT_EQ(run({"divpoly", "--n", "3"}).code, kExitUsage);
}

TEST(Cli, LongModelCurve) {
  CliRun r = run({"invariants", "--curve", "1,-1,0,-332311,-73733731"});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = r.doc();
  EXPECT_EQ(d["short_model"]["A"], -430675299);
  EXPECT_EQ(d["minimal_model"]["B"], -4724275762L);
  EXPECT_EQ(d["u"], 3);
  EXPECT_EQ(d["minimal_delta_prime_factorization"]["text"], "2^15 * 23^10");
}

TEST(Cli, ExitCodes) {
  CliRun bad_flag = run({"torsion", "--curve", "0,1", "--bogus"});
  EXPECT_EQ(bad_flag.code, kExitUsage);
  EXPECT_TRUE(bad_flag.out.empty());
  EXPECT_NE(bad_flag.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"torsion", "--curve", "1,2,3"}).code, kExitUsage);

  CliRun singular = run({"torsion", "--curve", "0,0"});
  EXPECT_EQ(singular.code, kExitDomain);
  EXPECT_EQ(singular.doc()["error"]["kind"], "domain");
  EXPECT_EQ(run({"reduce", "--p", "4", "--curve", "1,1"}).code, kExitDomain);
  EXPECT_EQ(run({"ffgroup", "--p", "23", "--curve", "-5316979,-4724275762"}).code, kExitDomain);
  EXPECT_EQ(run({"ffgroup", "--p", "1000003", "--curve", "1,1"}).code, kExitBudget);
  EXPECT_EQ(run({"divpoly", "--n", "60", "--curve", "1,1"}).code, kExitBudget);
  EXPECT_EQ(run({"torsion", "--curve", "1.5,2"}).code, kExitDomain);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"exceptional", "--curve", "-5316979,-4724275762", "--verbose"},
           {"lift", "--p", "7", "--ell", "5", "--curve", "4,4"},
           {"bad-primes", "--curve", "0,1692602,0,-530052723915,0"}}) {
    CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run({"torsion", "--curve", "0,1"}).doc()["structure"], "Z/6Z");
  EXPECT_EQ(run({"reduce", "--p", "23", "--curve", "-5316979,-4724275762"}).doc()["kind"], "additive");
  EXPECT_EQ(run({"bad-primes", "--curve", "-1,0"}).doc()["reports"].size(), 1u);
  json ct = run({"cor-traces", "--ell", "5", "--n", "1", "--curve", "4,4"}).doc();
  EXPECT_TRUE(ct["cor6"].get<bool>());
  json at = run({"alpha-trace", "--ell", "5", "--n", "2", "--step8", "--curve", "1,1"}).doc();
  EXPECT_TRUE(at["step8_equals_direct"].get<bool>());
  json lf = run({"lift", "--p", "7", "--ell", "5", "--curve", "-5316979,-4724275762"}).doc();
  EXPECT_EQ(lf["bezout"]["a"], 3);
  EXPECT_EQ(lf["y_squared"], 9);
}
