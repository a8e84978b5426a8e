// Seeded randomized properties. Failures print the seed-dependent case.

#include <gtest/gtest.h>

#include "khow/modelsearch.hpp"
#include "khow/planner.hpp"
#include "khow/proof.hpp"
#include "khow/semantics.hpp"
#include "khow/syntax.hpp"
#include "oracle.hpp"

using namespace khow;

namespace {

const std::vector<std::string> kLetters{"p", "q", "r", "s"};

std::vector<Model> models(std::size_t n, std::uint64_t seed, std::size_t states = 4) {
  GenConfig c;
  c.max_states = states;
  c.max_actions = 2;
  c.letters = {"p", "q", "r"};
  c.seed = seed;
  return generate(c, n);
}

}  // namespace

TEST(Property, PrintParseRoundTrip) {
  oracle::FormulaGen gen(1, kLetters);
  for (int i = 0; i < 3000; ++i) {
    const Formula f = gen(6);
    const std::string text = print_formula(f);
    ASSERT_EQ(parse_formula(text), f) << text;
  }
}

TEST(Property, NormalizeIsIdempotentAndCore) {
  oracle::FormulaGen gen(2, kLetters);
  for (int i = 0; i < 3000; ++i) {
    const Formula f = gen(6);
    const Formula n = normalize(f);
    ASSERT_TRUE(is_normal(n)) << print_formula(f);
    ASSERT_EQ(normalize(n), n) << print_formula(f);
  }
}

TEST(Property, SubstituteIdentityAndComposition) {
  oracle::FormulaGen gen(3, kLetters);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen(5);
    ASSERT_EQ(substitute(f, "p", Formula::atom("p")), f);
    // Replacing p by a formula without p, then q, equals the simultaneous map.
    const Formula a = gen(3);
    const Formula b = gen(3);
    if (letters(a).contains("q") || letters(b).contains("p") || letters(a).contains("p")) continue;
    std::map<std::string, Formula, std::less<>> both{{"p", a}, {"q", b}};
    ASSERT_EQ(substitute(substitute(f, "p", a), "q", b), substitute_all(f, both)) << print_formula(f);
  }
}

TEST(Property, PostImageMonotoneAndApplicableDistributes) {
  std::mt19937_64 rng(4);
  for (const auto& m : models(200, 4)) {
    for (std::size_t a = 0; a < m.action_count(); ++a) {
      const auto act = static_cast<ActionId>(a);
      const StateSet x = oracle::random_subset(m, rng);
      const StateSet y = oracle::random_subset(m, rng);
      ASSERT_TRUE(post_image(m, x & y, act).is_subset_of(post_image(m, x, act)));
      ASSERT_EQ(post_image(m, x | y, act), post_image(m, x, act) | post_image(m, y, act));
      ASSERT_EQ(applicable(m, x | y, act), applicable(m, x, act) && applicable(m, y, act));
    }
  }
}

TEST(Property, PlannerMatchesOracle) {
  std::mt19937_64 rng(5);
  for (const auto& m : models(300, 5)) {
    for (int k = 0; k < 4; ++k) {
      const StateSet starts = oracle::random_subset(m, rng);
      const StateSet goals = oracle::random_subset(m, rng);
      const PlanResult r = find_plan(m, starts, goals);
      const auto want = oracle::least_plan(m, starts, goals);
      ASSERT_EQ(r.found, want.has_value()) << print_model(m);
      if (r.found) {
        ASSERT_TRUE(verify_plan(m, starts, goals, *r.witness).ok());
        ASSERT_EQ(*r.witness, *want) << print_model(m);
      }
    }
  }
}

TEST(Property, OracleAgreesWithLiteralEnumerationOnTinyModels) {
  // With at most 2 states every plan up to 2^|S| can be listed outright.
  std::mt19937_64 rng(6);
  for (const auto& m : models(300, 6, 2)) {
    for (int k = 0; k < 4; ++k) {
      const StateSet starts = oracle::random_subset(m, rng);
      const StateSet goals = oracle::random_subset(m, rng);
      ASSERT_EQ(oracle::least_plan(m, starts, goals),
                oracle::least_plan_literal(m, starts, goals, std::size_t{1} << m.state_count()));
    }
  }
}

TEST(Property, PlanComposition) {
  // A plan from X to Y followed by one from Y to Z works from X to Z.
  std::mt19937_64 rng(7);
  for (const auto& m : models(300, 7)) {
    const StateSet x = oracle::random_subset(m, rng);
    const StateSet y = oracle::random_subset(m, rng);
    const StateSet z = oracle::random_subset(m, rng);
    const PlanResult xy = find_plan(m, x, y);
    const PlanResult yz = find_plan(m, y, z);
    if (!xy.found || !yz.found) continue;
    Plan joined = *xy.witness;
    joined.actions.insert(joined.actions.end(), yz.witness->actions.begin(), yz.witness->actions.end());
    ASSERT_TRUE(verify_plan(m, x, z, joined).ok());
    ASSERT_TRUE(find_plan(m, x, z).found);
  }
}

TEST(Property, ExtensionMatchesPointwiseOracle) {
  oracle::FormulaGen gen(8, {"p", "q", "r"});
  for (const auto& m : models(150, 8)) {
    oracle::Semantics sem(m);
    for (int k = 0; k < 4; ++k) {
      const Formula f = gen(4);
      ASSERT_EQ(ext(m, f), sem.truth_set(f)) << print_formula(f) << "\n" << print_model(m);
    }
  }
}

TEST(Property, UniversalModalityAgrees) {
  oracle::FormulaGen gen(9, {"p", "q"});
  for (const auto& m : models(200, 9)) {
    const Formula f = gen(3);
    const StateSet u = ext(m, Formula::universal(f));
    ASSERT_TRUE(u.empty() || u.is_full());
    ASSERT_EQ(u.is_full(), check_U(m, f));
    ASSERT_EQ(check_U(m, f), ext(m, f).is_full());
  }
}

TEST(Property, KhPlusExcludesTrivialPlans) {
  oracle::FormulaGen gen(10, {"p", "q"});
  for (const auto& m : models(200, 10)) {
    const Formula a = gen.boolean(2);
    const Formula b = gen.boolean(2);
    const bool plus = ext(m, Formula::knows_how_plus(a, b)).is_full();
    const StateSet ea = ext(m, a);
    const StateSet eb = ext(m, b);
    ASSERT_EQ(plus, find_plan(m, ea, eb).found && !ea.is_subset_of(eb));
    if (plus) ASSERT_FALSE(find_plan(m, ea, eb).witness->empty());
  }
}

TEST(Property, AxiomInstancesSurviveSequentialSub) {
  // Instantiating a schema at once equals instantiating it one letter at a
  // time when the replacements avoid the schema letters.
  oracle::FormulaGen gen(11, {"a", "b", "c"});
  for (const auto& name : axiom_names()) {
    for (int k = 0; k < 50; ++k) {
      const Formula schema = *axiom_schema(name);
      Binding binding;
      Formula stepwise = schema;
      for (const auto& l : letters(schema)) {
        const Formula r = gen(3);
        binding.emplace(l, r);
        stepwise = substitute(stepwise, l, r);
      }
      ASSERT_EQ(substitute_all(schema, binding), stepwise);
    }
  }
}

TEST(Property, AxiomInstancesAreValid) {
  // Soundness bridge: random instances of each axiom hold everywhere.
  oracle::FormulaGen gen(12, {"p", "q"});
  for (const auto& m : models(60, 12, 3)) {
    for (const auto& name : axiom_names()) {
      const Formula schema = *axiom_schema(name);
      Binding binding;
      for (const auto& l : letters(schema)) binding.emplace(l, gen(2));
      const Formula inst = substitute_all(schema, binding);
      ASSERT_TRUE(ext(m, inst).is_full()) << name << ": " << print_formula(inst) << "\n" << print_model(m);
    }
  }
}

TEST(Property, TautologiesAreValid) {
  oracle::FormulaGen gen(13, {"p", "q"});
  const auto ms = models(40, 13, 3);
  int found = 0;
  for (int k = 0; k < 3000 && found < 200; ++k) {
    const Formula f = gen(4);
    if (!is_tautology(f)) continue;
    ++found;
    for (const auto& m : ms) ASSERT_TRUE(ext(m, f).is_full()) << print_formula(f);
  }
  EXPECT_GT(found, 20);
}
