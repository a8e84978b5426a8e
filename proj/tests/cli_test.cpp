#include <gtest/gtest.h>

#include <json.hpp>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "khow/cli.hpp"

using namespace khow;

namespace {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation kh(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fx(const char* name) { return fixture_path(name); }

}  // namespace

TEST(Cli, CheckExampleOne) {
  const Invocation r = kh({"check", fx("ex1.lts"), "Kh(p,q)"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "TRUTH SET: s1 s2 s3 s4 s5 s6 s7 s8\nGLOBAL-TRUE\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, CheckLocalFormula) {
  const Invocation r = kh({"check", fx("ex1.lts"), "p"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "TRUTH SET: s2 s3\n");
}

TEST(Cli, CheckAtState) {
  const Invocation r = kh({"check", fx("ex1.lts"), "p", "--at", "s2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "TRUTH SET: s2 s3\nTRUE AT: s2\n");
  EXPECT_EQ(kh({"check", fx("ex1.lts"), "p", "--at", "s9"}).status, 2);
}

TEST(Cli, CheckExampleTwo) {
  for (const char* m : {"ex2-left.lts", "ex2-right.lts"}) {
    const Invocation r = kh({"check", fx(m), "Kh(p,q)"});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "TRUTH SET: (none)\nGLOBAL-FALSE\n");
  }
}

TEST(Cli, Plan) {
  Invocation r = kh({"plan", fx("ex1.lts"), "p", "q"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "PLAN: r u\n");
  r = kh({"plan", fx("ex2-right.lts"), "p", "q"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "NO PLAN\n");
  r = kh({"plan", fx("ex1.lts"), "q", "q"});
  EXPECT_EQ(r.out, "PLAN: (epsilon)\n");
}

TEST(Cli, VerifyPlan) {
  Invocation r = kh({"verify-plan", fx("ex1.lts"), "p", "q", "r", "u"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "OK\n");
  r = kh({"verify-plan", fx("ex1.lts"), "p", "q", "r", "r"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "FAIL: endpoint s5 (reached from s3 by r r) is not a goal state\n");
  r = kh({"verify-plan", fx("ex2-left.lts"), "p", "q", "a", "b"});
  EXPECT_EQ(r.out, "FAIL: step 2 (b): state s3 has no b-successor (reachable from s1)\n");
  r = kh({"verify-plan", fx("ex1.lts"), "q", "q"});
  EXPECT_EQ(r.out, "OK\n");
  EXPECT_EQ(kh({"verify-plan", fx("ex1.lts"), "p", "q", "fly"}).status, 2);
}

TEST(Cli, Prove) {
  Invocation r = kh({"prove", fx("proofs/TRI.proof")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "ACCEPTED\n");
  r = kh({"prove", fx("proofs/replacement.proof")});
  EXPECT_EQ(r.out, "ACCEPTED\n");
}

TEST(Cli, ProveRejected) {
  const std::string path = testing::TempDir() + "bad.proof";
  std::ofstream(path) << "1. p -> q ; taut\n";
  const Invocation r = kh({"prove", path});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "REJECTED line 1: not a propositional tautology\n");
}

TEST(Cli, Countermodel) {
  Invocation r = kh({"countermodel", "Kh(p,q) & Kh(p,r) -> Kh(p, q & r)", "--max-states", "4", "--max-actions", "2",
              "--letters", "p,q,r", "--exhaustive"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("FALSIFIED AT: "), std::string::npos);
  // The printed model is itself a valid model file.
  const std::string model_text = r.out.substr(0, r.out.find("FALSIFIED AT: "));
  EXPECT_NO_THROW(parse_model(model_text));

  r = kh({"countermodel", "U p -> p", "--max-states", "3", "--letters", "p", "--seed", "4", "--count", "200"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "NONE FOUND\n");
}

TEST(Cli, Audit) {
  const Invocation r = kh({"audit", "--models", "20", "--seed", "3", "--max-states", "3", "--letters", "p,q"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("VIOLATIONS: 0\n"), std::string::npos);
}

TEST(Cli, Json) {
  Invocation r = kh({"--json", "plan", fx("ex1.lts"), "p", "q"});
  EXPECT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "plan");
  EXPECT_EQ(j["found"], true);
  EXPECT_EQ(j["plan"], nlohmann::json({"r", "u"}));

  r = kh({"check", fx("ex1.lts"), "Kh(p,q)", "--json"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["global"], true);
  EXPECT_EQ(j["truth_set"].size(), 8u);

  r = kh({"--json", "verify-plan", fx("ex2-left.lts"), "p", "q", "a", "b"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failure"], "stuck");
  EXPECT_EQ(j["step"], 2);
  EXPECT_EQ(j["state"], "s3");
}

TEST(Cli, Errors) {
  Invocation r = kh({"check", "/no/such/file.lts", "p"});
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);

  r = kh({"check", fx("ex1.lts"), "p &"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("offset 4"), std::string::npos);

  EXPECT_EQ(kh({}).status, 2);
  EXPECT_EQ(kh({"frobnicate"}).status, 2);
  EXPECT_EQ(kh({"plan", fx("ex1.lts")}).status, 2);
  EXPECT_EQ(kh({"countermodel", "p", "--max-states", "x"}).status, 2);
  EXPECT_EQ(kh({"countermodel", "p", "--exhaustive", "--max-states", "9"}).status, 2);
  EXPECT_EQ(kh({"countermodel", "p", "--exhaustive", "--seed", "1"}).status, 2);
}

TEST(Cli, ModelErrorsCarryLine) {
  const std::string path = testing::TempDir() + "bad.lts";
  std::ofstream(path) << "state a []\ntrans a x b\n";
  const Invocation r = kh({"check", path, "p"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, Help) {
  const Invocation r = kh({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("countermodel"), std::string::npos);
}

TEST(Cli, OutputIsStable) {
  const std::vector<std::string> args{"countermodel", "Kh(p, q) -> Kh(q, p)", "--letters", "p,q", "--seed", "11"};
  EXPECT_EQ(kh(args).out, kh(args).out);
}
