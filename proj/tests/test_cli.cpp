#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "isowork/cli.hpp"
#include "isowork/scenario.hpp"

using namespace isowork;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "isowork");
  std::vector<const char*> argv;
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ISOWORK_TEST_DATA) + "/" + name; }

void expect_envelope(const json& doc, const char* command) {
  EXPECT_EQ(doc.at("schema_version"), kJsonSchemaVersion);
  EXPECT_EQ(doc.at("command"), command);
  EXPECT_TRUE(doc.contains("inputs_echo"));
  EXPECT_TRUE(doc.contains("results"));
}

}  // namespace

TEST(CliClassify, CollinearScenario) {
  const Invocation r = run({"classify", data("collinear.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("case: case_i\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("force isotropy residual: 0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("curve isotropy residual: 0\n"), std::string::npos) << r.out;
}

TEST(CliClassify, NonIsotropicForceReportsResidual) {
  const Invocation r = run({"classify", data("not_isotropic.json"), "--json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  expect_envelope(doc, "classify");
  EXPECT_EQ(doc["results"]["isotropic"], false);
  EXPECT_NEAR(doc["results"]["force_residual"].get<double>(), 3.0 / 3.0, 1e-12);
  EXPECT_EQ(doc["results"]["force_classification"]["space_like"], 64);

  const Invocation text = run({"classify", data("not_isotropic.json")});
  EXPECT_NE(text.out.find("NotIsotropic"), std::string::npos);
  EXPECT_EQ(run({"work", data("not_isotropic.json")}).code, kExitInputError);
}

TEST(CliClassify, MalformedExpressionNamesFieldAndOffset) {
  const Invocation r = run({"classify", data("malformed.json")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("force.P"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("offset 4"), std::string::npos) << r.err;
}

TEST(CliClassify, GeneralCaseTag) {
  const Invocation r = run({"classify", data("case_iv.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["results"]["case"], "case_iv");
}

TEST(CliWork, CaseIV) {
  const Invocation r = run({"work", data("case_iv.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("work: 0.166666666667\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("method: case_iv\n"), std::string::npos) << r.out;
}

TEST(CliWork, Collinear) {
  const Invocation r = run({"work", data("collinear.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  expect_envelope(doc, "work");
  EXPECT_EQ(doc["results"]["work"], 0.0);
  EXPECT_EQ(doc["results"]["method"], "case_i");
}

TEST(CliWork, CaseIII) {
  const Invocation r = run({"work", data("case_iii.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["results"]["work"].get<double>(), 0.5, 1e-15);
  EXPECT_EQ(doc["results"]["method"], "case_iii");
}

TEST(CliWork, CompletedScenario) {
  const Invocation r = run({"work", data("completed.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["results"]["method"], "case_iv");
  EXPECT_EQ(doc["inputs_echo"]["tol"], 1e-11);
}

TEST(CliWork, FlagsOverrideFile) {
  const Invocation r = run({"work", data("case_iv.json"), "--beta", "2", "--tol", "1e-9", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["results"]["work"].get<double>(), 2.0 / 6.0, 1e-12);
  EXPECT_EQ(doc["inputs_echo"]["curve"]["beta"], 2.0);
  EXPECT_EQ(doc["inputs_echo"]["tol"], 1e-9);
  EXPECT_EQ(run({"work", data("case_iv.json"), "--alpha", "3"}).code, kExitInputError);
}

TEST(CliWork, EchoRoundTrips) {
  const Invocation r = run({"work", data("completed.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const json echo = json::parse(r.out)["inputs_echo"];
  const Scenario sc = scenario_from_json(echo);
  EXPECT_EQ(scenario_to_json(sc), echo);
  EXPECT_EQ(sc, load_scenario(data("completed.json")));
}

TEST(CliWork, CrossCheckFailureExitsThree) {
  const Invocation r = run({"work", data("cross_check.json")});
  EXPECT_EQ(r.code, kExitCrossCheck) << r.out << r.err;
}

TEST(CliWork, MissingFile) {
  EXPECT_EQ(run({"work", data("absent.json")}).code, kExitInputError);
  EXPECT_EQ(run({"work"}).code, kExitInputError);
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"bogus"}).code, kExitInputError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliPlane, DoubleRoot) {
  const Invocation r = run({"plane", "--phi", "1.9106332362490186"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("case: B\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("y = 1.41421356237 x"), std::string::npos) << r.out;
}

TEST(CliPlane, CrossWork) {
  const Invocation r = run({"plane", "--phi", "1.0471975511965976", "--p", "1", "--source", "c2", "--target", "c1",
                     "--alpha", "0", "--beta", "1", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  expect_envelope(doc, "plane");
  EXPECT_EQ(doc["results"]["case"], "C");
  EXPECT_NEAR(doc["results"]["work"].get<double>(), 10.0, 1e-11);
}

TEST(CliPlane, NoIsotropicDirections) {
  const Invocation r = run({"plane", "--phi", "2.0106192982974678"});  // 0.64 pi
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("no isotropic directions"), std::string::npos) << r.out;
}

TEST(CliPlane, RightAngleLines) {
  const Invocation r = run({"plane", "--phi", "1.5707963267948966", "--p", "x + 2*y", "--source", "c1", "--target",
                     "c2", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(json::parse(r.out)["results"]["work"].get<double>(), 0.5, 1e-15);
  const Invocation other = run({"plane", "--phi", "1.5707963267948966", "--p", "x + 2*y", "--source", "c2", "--target",
                         "c1", "--json"});
  EXPECT_NEAR(json::parse(other.out)["results"]["work"].get<double>(), 1.0, 1e-15);
}

TEST(CliPlane, InputErrors) {
  EXPECT_EQ(run({"plane", "--phi", "2.2"}).code, kExitInputError);
  EXPECT_EQ(run({"plane", "--phi", "0"}).code, kExitInputError);
  EXPECT_EQ(run({"plane", "--phi", "1", "--p", "z"}).code, kExitInputError);
  EXPECT_EQ(run({"plane", "--phi", "1", "--source", "c3", "--target", "c1"}).code, kExitInputError);
  EXPECT_EQ(run({"plane", "--phi", "1", "--source", "c1"}).code, kExitInputError);
}

TEST(CliTable1, EightRows) {
  const Invocation r = run({"table1", "--p", "1", "--alpha", "0", "--beta", "1", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  expect_envelope(doc, "table1");
  const json& rows = doc["results"]["rows"];
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_TRUE(rows[0]["work"].is_null());
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(rows[i]["work"], 0.0);
  }
  for (int i = 4; i <= 7; ++i) {
    EXPECT_TRUE(rows[i]["work"].is_number());
    EXPECT_NE(rows[i]["work"].get<double>(), 0.0);
  }

  const Invocation text = run({"table1"});
  EXPECT_NE(text.out.find("no is. curves"), std::string::npos);
}

TEST(CliVerify, JsonSummary) {
  const Invocation r = run({"verify", "--json"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const json doc = json::parse(r.out);
  expect_envelope(doc, "verify");
  EXPECT_EQ(doc["results"]["failed"], 0);
  EXPECT_LT(doc["results"]["seconds"].get<double>(), 15.0);
}
