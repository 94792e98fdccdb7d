#include <gtest/gtest.h>

#include "succinct/evaluate.hpp"
#include "succinct/fo_generators.hpp"
#include "succinct/formula_io.hpp"
#include "succinct/random.hpp"

using namespace succinct;

TEST(Word, FromText) {
  auto w = word_from_text("lrr");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w.at(1), Letter::L);
  EXPECT_EQ(w.at(3), Letter::R);
  EXPECT_EQ(w.str(), "lrr");
  EXPECT_THROW(word_from_text(""), WordError);
  EXPECT_THROW(word_from_text("lxr"), WordError);
}

TEST(Word, AllWordsAndShortlex) {
  auto ws = all_words(2);
  ASSERT_EQ(ws.size(), 4u);
  EXPECT_EQ(ws[0].str(), "ll");
  EXPECT_EQ(ws[3].str(), "rr");
  EXPECT_TRUE(shortlex_less(word_from_text("r"), word_from_text("ll")));
  EXPECT_TRUE(shortlex_less(word_from_text("lr"), word_from_text("rl")));
  EXPECT_FALSE(shortlex_less(word_from_text("lr"), word_from_text("lr")));
  EXPECT_EQ(word_from_text("lr").concat(word_from_text("rl")).str(), "lrrl");
}

TEST(Word, InterpretationValidation) {
  Interpretation ok{word_from_text("lr"), {PositionSet{1}}, {2}};
  EXPECT_NO_THROW(ok.validate());
  Interpretation bad_point{word_from_text("lr"), {}, {3}};
  EXPECT_THROW(bad_point.validate(), DomainError);
  Interpretation bad_set{word_from_text("lr"), {PositionSet{3}}, {}};
  EXPECT_THROW(bad_set.validate(), DomainError);
}

TEST(Evaluate, Examples) {
  auto x = fo_var("x");
  Assignment env;
  env.bind(x, 1);
  EXPECT_TRUE(evaluate(word_from_text("lr"), parse("(letter-l x)"), env));
  auto psi0 = fo::build_fo(fo::Family::Psi, 0);
  EXPECT_TRUE(evaluate(word_from_text("lr"), psi0));
  EXPECT_FALSE(evaluate(word_from_text("rl"), psi0));
  EXPECT_FALSE(evaluate(word_from_text("lrlr"), psi0));
}

TEST(Evaluate, SecondOrder) {
  // Even length: there is a set containing the first position, alternating, and not the last.
  auto even = parse(
      "(exists2 X (and (forall1 x (or (exists1 y (lt y x)) (in x X)))"
      " (and (forall1 x (or (exists1 y (lt x y)) (not (in x X))))"
      " (forall1 x (forall1 y (or (not (and (lt x y) (not (exists1 z (and (lt x z) (lt z y))))))"
      " (or (and (in x X) (not (in y X))) (and (in y X) (not (in x X))))))))))",
      ParseMode::Sentence);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& w : all_words(n)) EXPECT_EQ(evaluate(w, even), n % 2 == 0) << w.str();
}

TEST(Evaluate, InterpretationContext) {
  auto f = parse("(and (in x X) (letter-r y))");
  std::vector<Var> ctx{so_var("X"), fo_var("x"), fo_var("y")};
  Interpretation I{word_from_text("lr"), {PositionSet{1}}, {1, 2}};
  EXPECT_TRUE(evaluate(I, f, ctx));
  Interpretation J{word_from_text("lr"), {PositionSet{2}}, {1, 2}};
  EXPECT_FALSE(evaluate(J, f, ctx));
  Interpretation short_I{word_from_text("lr"), {}, {1, 2}};
  EXPECT_THROW(evaluate(short_I, f, ctx), ContextError);
}

TEST(Evaluate, UnboundVariable) {
  EXPECT_THROW(evaluate(word_from_text("lr"), parse("(letter-l x)")), UnboundVariableError);
}

TEST(Evaluate, NodeBudget) {
  EvalOptions opts;
  opts.node_budget = 10;
  auto f = fo::build_fo(fo::Family::Psi, 1);
  EXPECT_THROW(evaluate(word_from_text("llrr"), f, {}, opts), BudgetExceeded);
}

TEST(Evaluate, MemoAgreesWithPlainRecursion) {
  RandomFormulas gen(2024, {10, 3, true});
  EvalOptions plain;
  plain.memoize = false;
  for (int t = 0; t < 200; ++t) {
    auto f = gen.sentence();
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& w : all_words(n)) ASSERT_EQ(evaluate(w, f), evaluate(w, f, {}, plain)) << print(f) << " " << w;
  }
  auto psi1 = fo::build_fo(fo::Family::Psi, 1);
  for (const auto& w : all_words(4)) EXPECT_EQ(evaluate(w, psi1), evaluate(w, psi1, {}, plain)) << w;
}
