#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "report.hpp"

namespace tgembed::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args, int expected_code = kExitOk) {
  args.insert(args.end(), {"--format", "json"});
  const Outcome o = invoke(args);
  EXPECT_EQ(o.code, expected_code) << o.out << o.err;
  return Json::parse(o.out);
}

TEST(Cli, VerifyBazReportsOffendingPair) {
  const Json j = invoke_json({"verify-baz", "--q", "5,1,1,3,21"});
  const Json& r = j["results"][0];
  EXPECT_FALSE(r["free"].get<bool>());
  bool found = false;
  for (const auto& v : r["offending_pairs"]) found |= v["pairs"] == "q1+q2, q4+q5" && v["gcd"] == 6;
  EXPECT_TRUE(found);
  EXPECT_EQ(j["status"], "ok");
}

TEST(Cli, Table1Csv) {
  const Outcome o = invoke({"table1", "--format", "csv"});
  EXPECT_EQ(o.code, kExitOk);
  const auto lines = std::count(o.out.begin(), o.out.end(), '\n');
  EXPECT_EQ(lines, 10);  // header plus nine rows
  EXPECT_EQ(o.out.rfind("a,b,q_formula,window_lo,window_hi", 0), 0u) << o.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"verify-esch", "--a", "1,0,0", "--b", "1,1,0"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"verify-esch", "--a", "1,0", "--b", "1,0"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"verify-baz", "--q", "1,1,x,1,1"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"no-such-command"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"window", "--a", "1,1,1", "--b", "4,4,-5"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"dual", "--a", "2,0,0", "--b", "15,-2,-11", "--c", "0"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"lemma2", "--a", "1022117,0,0", "--b", "1022119,-1,-1", "--factor-bound", "10",
                    "--factor-digits", "3"})
                .code,
            kExitLimitReached);
}

TEST(Cli, ErrorsCarryReasonInJson) {
  const Json j = invoke_json({"verify-esch", "--a", "1,0,0", "--b", "1,1,0"}, kExitInvalidInput);
  EXPECT_EQ(j["error"]["reason"], "validation_error");
  EXPECT_EQ(j["error"]["exit_code"], kExitInvalidInput);
  const Json k = invoke_json({"lemma2", "--a", "1022117,0,0", "--b", "1022119,-1,-1", "--factor-bound", "10",
                              "--factor-digits", "3"},
                             kExitLimitReached);
  EXPECT_EQ(k["error"]["reason"], "factorization_incomplete");
}

TEST(Cli, LargeIntegersRoundTripAsStrings) {
  const Json j = invoke_json({"lemma2", "--a", "2,0,0", "--b", "15,-2,-11", "--mu-max", "3"});
  const Integer c1("4089800");
  bool saw_string = false;
  for (const auto& r : j["results"]) {
    const Integer c = integer_from_json(r["c"]);
    const unsigned long mu = r["mu"].get<unsigned long>();
    const int sign = r["sign"].get<int>();
    EXPECT_EQ(c, sign * pow(Integer(2), mu - 1) * pow(c1, mu));
    EXPECT_TRUE(r["nonsingular"].get<bool>());
    saw_string |= r["c"].is_string();
    EXPECT_EQ(integer_to_json(c), r["c"]);
  }
  EXPECT_TRUE(saw_string);
}

TEST(Cli, IntegerJsonBoundary) {
  const Integer safe("9007199254740991");
  EXPECT_TRUE(integer_to_json(safe).is_number_integer());
  EXPECT_TRUE(integer_to_json(-safe).is_number_integer());
  EXPECT_TRUE(integer_to_json(safe + 1).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(safe + 1)), safe + 1);
  EXPECT_THROW(integer_from_json(Json(1.5)), ValidationError);
}

TEST(Cli, TextAndJsonAgree) {
  const std::vector<std::string> args{"embed", "--a", "2,0,0", "--b", "15,-2,-11", "--c", "5"};
  const Json j = invoke_json(args);
  const Outcome text = invoke(args);
  EXPECT_EQ(j["results"][0]["h6"], 2579);
  EXPECT_NE(text.out.find("h6: 2579"), std::string::npos) << text.out;
  EXPECT_NE(text.out.find("q: (15,11,11,-7,11)"), std::string::npos) << text.out;
}

TEST(Cli, WindowNoteForCohomogeneityOne) {
  const Json j = invoke_json({"window", "--a", "3,1,1", "--b", "5,0,0"});
  EXPECT_EQ(j["discrepancy_notes"].size(), 1u);
  EXPECT_EQ(j["results"].size(), 1u);
}

TEST(Cli, SubmanifoldsDedupCount) {
  const Json j = invoke_json({"submanifolds", "--q", "1,1,1,1,1"});
  EXPECT_EQ(j["results"].size(), 10u);
  EXPECT_EQ(j["summary"]["distinct_count"], 1);
}

}  // namespace
}  // namespace tgembed::cli
