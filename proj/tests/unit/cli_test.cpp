#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace shiftfact::cli {
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

TEST(Eval, DocumentedExamples) {
  EXPECT_EQ(invoke({"eval", "--z", "1", "--s", "1", "--n", "4"}).out, "24\n");
  EXPECT_EQ(invoke({"eval", "--z", "3", "--s", "1", "--n", "0"}).out, "1\n");
  EXPECT_EQ(invoke({"eval", "--z", "3", "--s", "1", "--q", "-1"}).out, "0.5\n");
}

TEST(Eval, ExactPath) {
  EXPECT_EQ(invoke({"eval", "--z", "3", "--s", "1", "--q", "-1", "--exact"}).out, "1/2\n");
  EXPECT_EQ(invoke({"eval", "--z", "1/2", "--s", "1/3", "--n", "3", "--exact"}).out, "35/72\n");
  EXPECT_EQ(invoke({"eval", "--z", "0.5", "--s", "1", "--n", "3", "--exact"}).code, kExitUsage);
}

TEST(Eval, ComplexIndex) {
  const auto r = invoke({"eval", "--z", "3", "--s", "1", "--t", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "2520\n");
}

TEST(Eval, PoleExitsWithViolation) {
  const auto r = invoke({"eval", "--z", "2", "--s", "1", "--q", "-2"});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_NE(r.err.find("vanishes"), std::string::npos);
}

TEST(Eval, UsageErrors) {
  EXPECT_EQ(invoke({"eval", "--z", "1", "--s", "1", "--n", "2", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--z", "1+", "--s", "1", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--z", "1", "--s", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--z", "1", "--s", "1", "--n", "2", "--q", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
}

TEST(Eval, UnknownFlagPrintsUsage) {
  const auto r = invoke({"eval", "--nope"});
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Eval, JsonAndCsv) {
  EXPECT_EQ(invoke({"eval", "--z", "1", "--s", "1", "--n", "4", "--format", "json"}).out,
            R"({"z":"1","s":"1","index":"4","exact":false,"value":"24"})"
            "\n");
  EXPECT_EQ(invoke({"eval", "--z", "1", "--s", "1", "--n", "4", "--format", "csv"}).out,
            "z,s,index,exact,value\n1,1,4,false,24\n");
}

TEST(Det, DocumentedExamples) {
  const auto a = invoke({"det", "--kind", "SShifted", "--s", "1", "--nodes", "0,1,2"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_NE(a.out.find("closed_form: 2\n"), std::string::npos);
  EXPECT_NE(a.out.find("oracle:      2\n"), std::string::npos);
  const auto b = invoke({"det", "--kind", "GammaShift", "--nodes", "1,2,3"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_NE(b.out.find("closed_form: 4\n"), std::string::npos);
  EXPECT_NE(b.out.find("oracle:      4\n"), std::string::npos);
}

TEST(Det, SpecFileAndMalformedJson) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "shiftfact_cli_test_good.json";
  const auto bad = dir / "shiftfact_cli_test_bad.json";
  std::ofstream(good) << R"({"schema":1,"kind":"SShifted","s":1,"nodes":[0,1,2]})";
  std::ofstream(bad) << R"({"schema":1,"kind":)";
  EXPECT_EQ(invoke({"det", "--spec", good.string(), "--exact", "--format", "csv"}).out,
            "kind,n,closed_form,oracle,residual\nSShifted,3,2,2,0\n");
  EXPECT_EQ(invoke({"det", "--spec", bad.string()}).code, kExitUsage);
  EXPECT_EQ(invoke({"det", "--spec", (dir / "shiftfact_no_such_file.json").string()}).code, kExitUsage);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(Det, ModesAndThreshold) {
  const auto closed = invoke({"det", "--kind", "InvGamma", "--nodes", "1,2", "--closed-only"});
  EXPECT_NE(closed.out.find("closed_form: -0.5\n"), std::string::npos);
  EXPECT_NE(closed.out.find("oracle:      -\n"), std::string::npos);
  EXPECT_EQ(invoke({"det", "--kind", "InvGamma", "--nodes", "1,2", "--oracle-only", "--closed-only"}).code,
            kExitUsage);
  // A negative threshold can never be met.
  EXPECT_EQ(invoke({"det", "--kind", "SShifted", "--s", "0.3", "--nodes", "0.1,1.7,2.2", "--threshold", "-1"}).code,
            kExitViolation);
}

TEST(Det, PoleExitsWithViolation) {
  EXPECT_EQ(invoke({"det", "--kind", "GammaShift", "--nodes", "0,1"}).code, kExitViolation);
}

TEST(Sum, Methods) {
  EXPECT_EQ(invoke({"sum", "--a", "1", "--r", "1", "--s", "1", "--p", "2", "--n", "3", "--exact"}).out,
            "direct: 20\nrecurrence: 20\nclosed: 20\n");
  EXPECT_EQ(invoke({"sum", "--a", "1", "--r", "1", "--s", "-1", "--p", "4", "--n", "3", "--method", "closed"}).out,
            "closed: 0\n");
  EXPECT_EQ(invoke({"sum", "--a", "1", "--r", "2", "--s", "1", "--p", "2", "--n", "3", "--method", "closed"}).code,
            kExitViolation);
}

TEST(Rmt, IntegerMomentTable) {
  const auto r = invoke({"rmt", "--ensemble", "hermite", "--n", "2", "--q", "0", "--q", "2", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("ensemble,params,n,point,parity,value,oracle,residual\nhermite,,2,q=0,+,", 0), 0u)
      << r.out;
}

TEST(Rmt, ParameterCountIsChecked) {
  EXPECT_EQ(invoke({"rmt", "--ensemble", "jacobi", "--param", "1", "--n", "2", "--s", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"rmt", "--ensemble", "laguerre", "--param", "-2", "--n", "2", "--s", "1"}).code,
            kExitViolation);
}

TEST(Selftest, DeterministicUnderSeed) {
  const auto a = invoke({"selftest", "--suite", "apsum", "--trials", "50", "--seed", "7"});
  const auto b = invoke({"selftest", "--suite", "apsum", "--trials", "50", "--seed", "7"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("PASS"), std::string::npos);
}

TEST(Selftest, JsonReport) {
  const auto r = invoke({"selftest", "--suite", "apsum", "--trials", "5", "--seed", "3", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_EQ(invoke({"selftest", "--suite", "nosuch"}).code, kExitUsage);
}

TEST(Selftest, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "shiftfact_cli_test_report.csv";
  const auto r = invoke({"selftest", "--suite", "apsum", "--trials", "5", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("suite,check,", 0), 0u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace shiftfact::cli
