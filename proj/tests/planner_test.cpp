#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "khow/error.hpp"
#include "khow/planner.hpp"
#include "oracle.hpp"

using namespace khow;

namespace {

StateSet named(const Model& m, std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return states_named(m, v);
}

Plan plan(std::initializer_list<const char*> actions) { return Plan{{actions.begin(), actions.end()}}; }

}  // namespace

TEST(VerifyPlan, ExampleOne) {
  const Model m = fixture_model("ex1.lts");
  const StateSet p = m.letter_extension("p");
  const StateSet q = m.letter_extension("q");
  EXPECT_TRUE(verify_plan(m, p, q, plan({"r", "u"})).ok());

  const PlanCheck rr = verify_plan(m, p, q, plan({"r", "r"}));
  EXPECT_EQ(rr.failure, PlanCheck::Failure::BadEndpoint);
  EXPECT_EQ(m.state_name(*rr.state), "s5");
  EXPECT_EQ(m.state_name(*rr.start), "s3");

  const PlanCheck u = verify_plan(m, p, q, plan({"u"}));
  EXPECT_EQ(u.failure, PlanCheck::Failure::BadEndpoint);
  EXPECT_EQ(m.state_name(*u.state), "s6");
  EXPECT_EQ(m.state_name(*u.start), "s2");
}

TEST(VerifyPlan, ExampleTwoLeftGetsStuck) {
  const Model m = fixture_model("ex2-left.lts");
  const PlanCheck c = verify_plan(m, named(m, {"s1"}), named(m, {"s4"}), plan({"a", "b"}));
  EXPECT_EQ(c.failure, PlanCheck::Failure::Stuck);
  EXPECT_EQ(c.step, 2u);
  EXPECT_EQ(m.state_name(*c.state), "s3");
  EXPECT_EQ(c.reason, "step 2 (b): state s3 has no b-successor (reachable from s1)");
}

TEST(VerifyPlan, EmptyPlanAndEmptyStarts) {
  const Model m = fixture_model("ex1.lts");
  EXPECT_TRUE(verify_plan(m, m.no_states(), m.no_states(), plan({"r", "r", "r"})).ok());
  EXPECT_TRUE(verify_plan(m, named(m, {"s4"}), m.letter_extension("q"), Plan{}).ok());
  EXPECT_FALSE(verify_plan(m, named(m, {"s1"}), m.letter_extension("q"), Plan{}).ok());
}

TEST(VerifyPlan, UnknownActionThrows) {
  const Model m = fixture_model("ex1.lts");
  EXPECT_THROW(verify_plan(m, m.all_states(), m.all_states(), plan({"jump"})), ModelError);
}

TEST(FindPlan, ExampleOneWitnessIsShortest) {
  const Model m = fixture_model("ex1.lts");
  const StateSet p = m.letter_extension("p");
  const StateSet q = m.letter_extension("q");
  const PlanResult r = find_plan(m, p, q);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(*r.witness, plan({"r", "u"}));
  // No plan of length <= 1 works.
  EXPECT_FALSE(oracle::least_plan_literal(m, p, q, 1).has_value());
  EXPECT_EQ(oracle::least_plan_literal(m, p, q, 2), *r.witness);
}

TEST(FindPlan, ExampleTwoRightHasNone) {
  const Model m = fixture_model("ex2-right.lts");
  const PlanResult r = find_plan(m, named(m, {"s1", "s2"}), named(m, {"s5", "s6"}));
  EXPECT_FALSE(r.found);
  EXPECT_FALSE(r.witness.has_value());
  // Either cause alone is curable.
  EXPECT_EQ(*find_plan(m, named(m, {"s1"}), named(m, {"s5", "s6"})).witness, plan({"a", "b"}));
  EXPECT_EQ(*find_plan(m, named(m, {"s2"}), named(m, {"s5", "s6"})).witness, plan({"b", "a"}));
}

TEST(FindPlan, EmptyStartsGiveEpsilon) {
  const Model m = fixture_model("ex2-left.lts");
  const PlanResult r = find_plan(m, m.no_states(), m.no_states());
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.witness->empty());
  EXPECT_EQ(to_string(*r.witness), "(epsilon)");
}

TEST(FindPlan, StartsInsideGoalsGiveEpsilon) {
  const Model m = fixture_model("ex1.lts");
  EXPECT_TRUE(find_plan(m, named(m, {"s4"}), m.letter_extension("q")).witness->empty());
}

TEST(FindPlan, Deterministic) {
  const Model m = fixture_model("ex1.lts");
  const PlanResult a = find_plan(m, named(m, {"s1"}), named(m, {"s7"}));
  const PlanResult b = find_plan(m, named(m, {"s1"}), named(m, {"s7"}));
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(to_string(*a.witness), "r r u");
}

TEST(FindPlan, TieBreakFollowsDeclarationOrder) {
  // Both a and b reach the goal in one step; a is declared first.
  const Model m = parse_model("state s [p]\nstate t [q]\naction a\naction b\ntrans s b t\ntrans s a t\n");
  EXPECT_EQ(*find_plan(m, m.letter_extension("p"), m.letter_extension("q")).witness, plan({"a"}));
  const Model n = parse_model("state s [p]\nstate t [q]\naction b\naction a\ntrans s b t\ntrans s a t\n");
  EXPECT_EQ(*find_plan(n, n.letter_extension("p"), n.letter_extension("q")).witness, plan({"b"}));
}

TEST(FindPlan, LongChainNeedsFullLength) {
  // A single counter that must be advanced n times.
  std::string text;
  const int n = 30;
  for (int i = 0; i <= n; ++i) text += "state c" + std::to_string(i) + (i == n ? " [q]\n" : " []\n");
  for (int i = 0; i < n; ++i) text += "trans c" + std::to_string(i) + " inc c" + std::to_string(i + 1) + "\n";
  const Model m = parse_model(text);
  const PlanResult r = find_plan(m, named(m, {"c0"}), m.letter_extension("q"));
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.witness->size(), static_cast<std::size_t>(n));
}

TEST(FindPlan, SynchronisingPlanFromEveryState) {
  // The classic reset-word example: 'a' rotates, 'b' merges state 0 into 1.
  const int n = 4;
  std::string text;
  for (int i = 0; i < n; ++i) text += "state c" + std::to_string(i) + (i == 0 ? " [q]\n" : " []\n");
  for (int i = 0; i < n; ++i) {
    text += "trans c" + std::to_string(i) + " a c" + std::to_string((i + 1) % n) + "\n";
    text += "trans c" + std::to_string(i) + " b c" + std::to_string(i == 0 ? 1 : i) + "\n";
  }
  const Model m = parse_model(text);
  const PlanResult r = find_plan(m, m.all_states(), m.letter_extension("q"));
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(verify_plan(m, m.all_states(), m.letter_extension("q"), *r.witness).ok());
  EXPECT_EQ(oracle::least_plan(m, m.all_states(), m.letter_extension("q")), *r.witness);
  EXPECT_GE(r.witness->size(), 9u);  // a reset word needs (n-1)^2 letters
}
