#include <gtest/gtest.h>

#include "succinct/bounds.hpp"
#include "succinct/compile.hpp"
#include "succinct/constants.hpp"
#include "succinct/crosscheck.hpp"
#include "succinct/formula_io.hpp"
#include "succinct/mso_generators.hpp"

using namespace succinct;
using mso::Family;

namespace {
Word W(const char* s) { return word_from_text(s); }

PositionSet positions(std::initializer_list<std::size_t> ps) {
  PositionSet s;
  for (auto p : ps) s.insert(p);
  return s;
}
}  // namespace

TEST(MsoGenerators, BaseCases) {
  EXPECT_EQ(print(mso::build_mso(Family::Sim, 0)), "true");
  EXPECT_EQ(size(mso::build_mso(Family::Set, 0)), 15u);
  for (std::size_t i = 1; i <= 10; ++i) EXPECT_EQ(size(mso::build_mso(Family::Set, i)), 18u) << i;
  EXPECT_THROW(mso::build_mso(Family::Add, 0), DomainError);
  EXPECT_EQ(mso::level_var(3).name(), "D3");
  EXPECT_FALSE(mso::level_var(0).first_order());
}

TEST(MsoGenerators, LevelsHasFourConjunctGroups) {
  auto f = mso::build_mso(Family::Levels, 1);
  EXPECT_EQ(size(f), 164u);
  ASSERT_EQ(f.kind(), Kind::And);
  // ∀x(some ∧ exclusive ∧ ∀x̄ nested) ∧ ∀x1(opens ∧ closes)
  auto left = f.lhs(), right = f.rhs();
  ASSERT_EQ(left.kind(), Kind::Forall1);
  ASSERT_EQ(right.kind(), Kind::Forall1);
  auto body = left.child();
  ASSERT_EQ(body.kind(), Kind::And);
  ASSERT_EQ(body.rhs().kind(), Kind::And);
  EXPECT_EQ(body.rhs().rhs().kind(), Kind::Forall1);
  EXPECT_EQ(right.child().kind(), Kind::And);
  std::vector<std::string> free;
  for (Var v : f.free_variables()) free.push_back(v.name());
  EXPECT_EQ(free, (std::vector<std::string>{"D0", "D1"}));
}

TEST(MsoGenerators, FrozenSizes) {
  const std::uint64_t psi[] = {245, 533, 1243, 2343, 3833};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(size(mso::build_mso(Family::Psi, i)), psi[i]) << i;
  EXPECT_EQ(size(mso::build_mso(Family::Psi, 50)), 493963u);
  EXPECT_EQ(quantifier_rank(mso::build_mso(Family::Psi, 0)), 10u);
  EXPECT_EQ(size(mso::build_mso(Family::Phi, 2)), 592u);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_LT(psi[i - 1], psi[i]);
}

TEST(MsoGenerators, GrowthIsQuadratic) {
  auto s20 = static_cast<double>(size(mso::build_mso(Family::Psi, 20)));
  auto s40 = static_cast<double>(size(mso::build_mso(Family::Psi, 40)));
  EXPECT_LE(s40 / 1600, s20 / 400 * 1.1);
  std::uint64_t best = 3;
  for (std::uint64_t i = 3; i <= 50; ++i) {
    auto s = size(mso::build_mso(Family::Psi, i));
    auto b = size(mso::build_mso(Family::Psi, best));
    if (u128{s} * best * best > u128{b} * i * i) best = i;
    EXPECT_LE(static_cast<double>(s), kMsoConstant.value() * i * i + 1e-6) << i;
  }
  EXPECT_EQ(best, kMsoConstant.level);
  EXPECT_EQ(size(mso::build_mso(Family::Psi, best)), kMsoConstant.size);
}

TEST(MsoGenerators, PrimedPhiKeepsSize) {
  for (std::size_t i = 0; i <= 10; ++i)
    EXPECT_EQ(size(mso::build_mso(Family::PhiPrimed, i)), size(mso::build_mso(Family::Phi, i))) << i;
}

TEST(MsoGenerators, SizeTable) {
  auto rows = mso::size_table_mso(2);
  EXPECT_EQ(rows.size(), 8u + 8u + 8u);
  for (const auto& r : rows) EXPECT_EQ(size(mso::build_mso(mso::parse_family(r.name), r.i)), r.size);
}

TEST(MsoGenerators, LevelZeroPartition) {
  mso::Builder b;
  Assignment env;
  env.bind(mso::level_var(0), positions({1, 2}));
  env.bind(fo::pair("x"), {1, 2});
  EXPECT_TRUE(evaluate(W("lr"), Formula::land(b.levels(0), b.set(0, fo::pair("x"))), env));
}

TEST(MsoGenerators, LevelTwoPartition) {
  mso::Builder b;
  auto levels = b.levels(2);
  Assignment good;
  good.bind(mso::level_var(2), positions({1, 8}));
  good.bind(mso::level_var(1), positions({2, 5, 6, 7}));
  good.bind(mso::level_var(0), positions({3, 4}));
  EXPECT_TRUE(evaluate(W("lllrrlrr"), levels, good));
  Assignment bad;
  bad.bind(mso::level_var(2), positions({1, 8}));
  bad.bind(mso::level_var(1), positions({2, 5, 6}));
  bad.bind(mso::level_var(0), positions({3, 4, 7}));
  EXPECT_FALSE(evaluate(W("lllrrlrr"), levels, bad));
}

TEST(MsoGenerators, PsiDefinesTheEncoding) {
  for (std::size_t i = 0; i <= 2; ++i) {
    auto d = compile(mso::build_mso(Family::Psi, i));
    auto w = is_singleton(d);
    ASSERT_TRUE(w) << i;
    EXPECT_EQ(*w, encode_mso(i)) << i;
  }
}

TEST(MsoGenerators, SpecializedEvaluatorOnEncodings) {
  for (std::size_t i = 0; i <= 2; ++i)
    for (const auto& w : enumerate_encodings(i)) EXPECT_EQ(mso::evaluate_psi(w, i), w == encode_mso(i)) << w;
  EXPECT_TRUE(mso::evaluate_psi(W("lllrrlrr"), 2));
  EXPECT_FALSE(mso::evaluate_psi(W("llrllrrr"), 2));
}

TEST(MsoGenerators, SpecializedEvaluatorMatchesGenericEvaluation) {
  auto psi0 = mso::build_mso(Family::Psi, 0);
  mso::PsiEvaluator fast(0);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& w : all_words(n)) EXPECT_EQ(fast.psi(w), evaluate(w, psi0)) << w;
  auto psi1 = mso::build_mso(Family::Psi, 1);
  mso::PsiEvaluator fast1(1);
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& w : all_words(n)) EXPECT_EQ(fast1.psi(w), evaluate(w, psi1)) << w;
}

TEST(MsoGenerators, LevelLabelingsIncludeParentMinusOne) {
  auto labelings = mso::level_labelings(W("lllrrlrr"), 2);
  ASSERT_FALSE(labelings.empty());
  auto lv = levels_of(W("lllrrlrr"));
  bool found = false;
  for (const auto& lab : labelings) {
    bool same = true;
    for (std::size_t p = 1; p <= 8; ++p) same = same && lab[lv.at(p)].contains(p);
    found = found || same;
  }
  EXPECT_TRUE(found);
}

TEST(MsoGenerators, Crosschecks) {
  for (std::size_t i = 0; i <= 2; ++i) {
    auto r = crosscheck_mso(i);
    EXPECT_TRUE(r.ok()) << i << " " << to_json(r).dump();
    EXPECT_GT(r.checks, 0u);
  }
}
