#include "cli.hpp"

#include <gtest/gtest.h>

#include "json.hpp"

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = gcdens::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Ap) {
  auto r = run({"ap", "--curve", "0,0,0,1,1", "--prime", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "p=5 ap=-3 cardinality=9 method=CharSum anomalous=0\n");
  auto big = run({"ap", "--curve", "0,0,1,-1,0", "--prime", "1000003"});
  EXPECT_EQ(big.code, 0);
  EXPECT_NE(big.out.find("method=BSGS"), std::string::npos);
}

TEST(Cli, ApRejectsBadPrimes) {
  EXPECT_EQ(run({"ap", "--curve", "0,0,1,-1,0", "--prime", "37"}).code, 1);
  EXPECT_EQ(run({"ap", "--curve", "0,0,1,-1,0", "--prime", "39"}).code, 1);
  EXPECT_EQ(run({"ap", "--curve", "0,0,0,0,0", "--prime", "5"}).code, 1);
}

TEST(Cli, VerifyEntangleAcceptsNegativeDiscriminant) {
  auto r = run({"verify-entangle", "--disc", "-3", "--set", "2,3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("5/24 = 5/24 PASS"), std::string::npos) << r.out;
  auto big = run({"verify-entangle", "--disc=-15", "--set", "2,3,5"});
  EXPECT_EQ(big.code, 0) << big.err;
  EXPECT_NE(big.out.find("599/2304 = 599/2304 PASS"), std::string::npos) << big.out;
}

TEST(Cli, VerifyEntangleRejectsNonFundamental) {
  auto r = run({"verify-entangle", "--disc", "-12", "--set", "2,3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("InvalidInput"), std::string::npos);
}

TEST(Cli, VerifyGl2) {
  auto r = run({"verify-gl2", "--ell", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run({"verify-gl2", "--ell", "17"}).code, 1);
}

TEST(Cli, ConjectureJson) {
  auto r = run({"conjecture", "--curve", "0,0,1,-1,0", "--limit", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("fundamental_discriminant").get<long long>(), 37);
  EXPECT_EQ(j.at("correction_num").get<long long>(), 49174);
  EXPECT_EQ(j.at("correction_den").get<long long>(), 49211);
  EXPECT_TRUE(j.at("serre_assumed").get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"ap", "--curve", "0,0,1,-1,0"}).code, 1);
  EXPECT_EQ(run({"constant", "--limit", "ten"}).code, 1);
  EXPECT_EQ(run({"constant", "--limit", "50"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
