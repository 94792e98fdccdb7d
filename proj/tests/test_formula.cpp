#include <gtest/gtest.h>

#include "succinct/fo_generators.hpp"
#include "succinct/formula_io.hpp"
#include "succinct/mso_generators.hpp"

using namespace succinct;

namespace {

struct Measured {
  const char* text;
  std::uint64_t size;
  std::uint32_t qr;
};

// Hand-computed sizes and ranks.
const Measured kTable[] = {
    {"(letter-l x)", 1, 0},
    {"(exists1 x (letter-l x))", 2, 1},
    {"(and (letter-l x) (letter-r y))", 3, 0},
    {"(lt x y)", 1, 0},
    {"(exists1 x (forall1 y (lt x y)))", 3, 2},
    {"(and (exists1 x (letter-l x)) (exists1 y (letter-r y)))", 5, 1},
    {"(not (not true))", 3, 0},
    {"(exists2 X (forall1 x (in x X)))", 3, 2},
    {"(or false (not (eq x y)))", 4, 0},
    {"(forall2 X (exists1 x (and (in x X) (not (exists1 y (and (in y X) (lt y x)))))))", 9, 3},
};

}  // namespace

TEST(Formula, SizeAndRankTable) {
  for (const auto& m : kTable) {
    auto f = parse(m.text);
    EXPECT_EQ(size(f), m.size) << m.text;
    EXPECT_EQ(quantifier_rank(f), m.qr) << m.text;
  }
}

TEST(Formula, FirstOrderMembership) {
  EXPECT_TRUE(is_first_order(parse("(exists1 x (letter-l x))")));
  EXPECT_FALSE(is_first_order(parse("(exists2 X (exists1 x (in x X)))")));
  EXPECT_TRUE(is_first_order(parse("true")));
}

TEST(Formula, ParseExamples) {
  auto f = parse("(exists1 x (letter-l x))");
  EXPECT_EQ(f.kind(), Kind::Exists1);
  EXPECT_EQ(f.binder().name(), "x");
  EXPECT_EQ(f.child().kind(), Kind::LetterL);
  auto g = parse("(and (lt x y) (eq x y))");
  EXPECT_EQ(g.kind(), Kind::And);
  EXPECT_EQ(g.lhs().kind(), Kind::Lt);
  EXPECT_EQ(g.rhs().kind(), Kind::Eq);
  EXPECT_EQ(g.free_variables().size(), 2u);
}

TEST(Formula, PrintIsInverseOfParse) {
  for (const auto& m : kTable) EXPECT_EQ(print(parse(m.text)), m.text);
  EXPECT_EQ(print(parse("  ( and(lt x y)\n (eq x y) ) ")), "(and (lt x y) (eq x y))");
}

TEST(Formula, SyntaxErrorsCarryPositions) {
  try {
    parse("(exists1 x");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_THROW(parse("(frob x)"), SyntaxError);
  EXPECT_THROW(parse("(lt x y) extra"), SyntaxError);
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("(lt x"), SyntaxError);
}

TEST(Formula, SortErrors) {
  EXPECT_THROW(parse("(in X x)"), SortError);
  EXPECT_THROW(parse("(exists1 X (in X X))"), SortError);
  EXPECT_THROW(parse("(exists2 x (letter-l x))"), SortError);
  EXPECT_THROW(parse("(letter-l X)"), SortError);
}

TEST(Formula, SentenceModeRejectsFreeVariables) {
  EXPECT_THROW(parse("(letter-l x)", ParseMode::Sentence), UnboundVariableError);
  EXPECT_NO_THROW(parse("(exists1 x (letter-l x))", ParseMode::Sentence));
}

TEST(Formula, FreeVariablesAndSentences) {
  auto f = parse("(exists1 x (and (lt x y) (in x X)))");
  ASSERT_EQ(f.free_variables().size(), 2u);
  EXPECT_TRUE(f.has_free(so_var("X")));
  EXPECT_TRUE(f.has_free(fo_var("y")));
  EXPECT_FALSE(f.has_free(fo_var("x")));
  EXPECT_FALSE(f.is_sentence());
}

TEST(Formula, SubstituteLetterAtoms) {
  auto P1 = so_var("P1"), P2 = so_var("P2");
  auto f = substitute_letter_atoms(parse("(letter-l x)"), P1, P2);
  EXPECT_EQ(print(f), "(in x P1)");
  EXPECT_EQ(print(substitute_letter_atoms(parse("(letter-r x)"), P1, P2)), "(in x P2)");
  EXPECT_EQ(print(substitute_letter_atoms(parse("(lt x y)"), P1, P2)), "(lt x y)");
  EXPECT_THROW(substitute_letter_atoms(parse("(exists2 P1 (exists1 x (letter-l x)))"), P1, P2), CaptureError);
  EXPECT_THROW(substitute_letter_atoms(parse("(letter-l x)"), fo_var("p"), P2), SortError);
}

TEST(Formula, SubstitutionPreservesMeasuresOnGenerators) {
  auto P1 = so_var("P1"), P2 = so_var("P2");
  for (std::size_t i = 0; i <= 10; ++i) {
    for (auto f : {fo::build_fo(fo::Family::Psi, i), mso::build_mso(mso::Family::Phi, i)}) {
      auto g = substitute_letter_atoms(f, P1, P2);
      EXPECT_EQ(size(g), size(f)) << i;
      EXPECT_EQ(quantifier_rank(g), quantifier_rank(f)) << i;
    }
    EXPECT_EQ(size(mso::build_mso(mso::Family::PhiPrimed, i)), size(mso::build_mso(mso::Family::Phi, i)));
  }
}

TEST(Formula, DerivedFormsDesugarToFixedShapes) {
  using namespace fml;
  auto x = fo_var("x"), y = fo_var("y"), z = fo_var("z");
  EXPECT_EQ(print(implies(L(x), R(x))), "(or (not (letter-l x)) (letter-r x))");
  EXPECT_EQ(print(le(x, y)), "(or (lt x y) (eq x y))");
  EXPECT_EQ(print(neq(x, y)), "(not (eq x y))");
  EXPECT_EQ(size(iff(L(x), R(x))), 9u);
  EXPECT_EQ(print(successor(x, y, z)), "(and (lt x y) (not (exists1 z (and (lt x z) (lt z y)))))");
}

TEST(Formula, RoundTripOnGeneratorsUpToTen) {
  for (std::size_t i = 0; i <= 10; ++i) {
    for (auto fam : fo::kFamilies) {
      if ((fam == fo::Family::Add && i == 0) || (fam == fo::Family::Core && i > 0)) continue;
      auto f = fo::build_fo(fam, i);
      if (size(f) > 2'000'000) continue;
      EXPECT_TRUE(parse(print(f)) == f) << fo::family_name(fam) << " " << i;
    }
    for (auto fam : mso::kFamilies) {
      if (fam == mso::Family::Add && i == 0) continue;
      auto f = mso::build_mso(fam, i);
      EXPECT_TRUE(parse(print(f)) == f) << mso::family_name(fam) << " " << i;
    }
  }
}

TEST(Formula, SharedRepresentationIsSmall) {
  auto f = fo::build_fo(fo::Family::Psi, 10);
  EXPECT_EQ(size(f), 517405u);
  EXPECT_LT(dag_node_count(f), 20000u);
}
