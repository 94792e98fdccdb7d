#include <gtest/gtest.h>

#include "succinct/fo_generators.hpp"
#include "succinct/properties.hpp"

using namespace succinct;

TEST(Properties, ConcatenationPreservesTypes) {
  auto r = check_concatenation(17, 100);
  EXPECT_EQ(r.cases, 100u);
  EXPECT_TRUE(r.ok()) << r.first_violation;
}

TEST(Properties, ModelLengthsBoundedByTypeCount) {
  TypeTable t;
  auto n = count_types(Logic::FO, 2, t);
  ASSERT_EQ(n, 96u);
  auto r = check_length_bounds(2718, 200, 2, n);
  EXPECT_EQ(r.cases, 200u);
  EXPECT_TRUE(r.ok()) << r.first_violation;
}

TEST(Properties, NumbersAreOrdered) {
  RandomFormulas gen(31, {12, 3, true});
  for (int batch = 0; batch < 20; ++batch) {
    std::vector<Formula> fs;
    for (int k = 0; k < 10; ++k) fs.push_back(gen.sentence());
    if (batch % 5 == 0) fs.push_back(fo::build_fo(fo::Family::Psi, batch / 5 % 3));
    EXPECT_TRUE(numbers_ordered(fragment_numbers(fs)));
  }
}

TEST(Properties, ExhaustiveDifferential) {
  auto r = check_differential(small_sentences(5, true), 5);
  EXPECT_GT(r.cases, 0u);
  EXPECT_TRUE(r.ok()) << r.first_violation;
}

TEST(Properties, SmallSentenceCorpus) {
  EXPECT_EQ(small_sentences(1).size(), 2u);
  EXPECT_EQ(small_sentences(2).size(), 20u);
  EXPECT_EQ(small_sentences(4).size(), 616u);
  EXPECT_EQ(small_sentences(4, true).size(), 680u);
  for (const auto& f : small_sentences(4, true)) EXPECT_TRUE(f.is_sentence());
}

TEST(Properties, RandomCorpusIsReproducible) {
  RandomFormulas a(5), b(5);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(print(a.sentence()), print(b.sentence()));
  RandomFormulas c(5, {12, 2, false});
  for (int k = 0; k < 50; ++k) {
    auto f = c.sentence();
    EXPECT_LE(size(f), 12u);
    EXPECT_LE(quantifier_rank(f), 2u);
    EXPECT_TRUE(f.is_sentence());
    EXPECT_TRUE(is_first_order(f));
  }
}
