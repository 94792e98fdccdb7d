#include <gtest/gtest.h>

#include "succinct/bounds.hpp"
#include "succinct/compile.hpp"
#include "succinct/constants.hpp"
#include "succinct/crosscheck.hpp"
#include "succinct/fo_generators.hpp"
#include "succinct/formula_io.hpp"

using namespace succinct;
using fo::Family;

namespace {

u128 power(std::uint64_t base, int degree) {
  u128 p = 1;
  for (int k = 0; k < degree; ++k) p *= base;
  return p;
}

/// The level in [3, 50] maximizing size(f_i) / i^degree, compared exactly.
std::pair<std::uint64_t, std::uint64_t> argmax_ratio(const std::function<Formula(std::size_t)>& make, int degree) {
  std::uint64_t best_i = 0, best_size = 0;
  for (std::uint64_t i = kConstantMinLevel; i <= kConstantMaxLevel; ++i) {
    auto s = size(make(i));
    if (best_i == 0 || u128{s} * power(best_i, degree) > u128{best_size} * power(i, degree)) {
      best_i = i;
      best_size = s;
    }
  }
  return {best_i, best_size};
}

}  // namespace

TEST(FoGenerators, BaseCases) {
  EXPECT_EQ(print(fo::build_fo(Family::Sim, 0)), "true");
  EXPECT_EQ(print(fo::build_fo(Family::Prec, 0)), "false");
  EXPECT_EQ(size(fo::build_fo(Family::Set, 0)), 11u);
  EXPECT_EQ(print(fo::build_fo(Family::Set, 0)),
            "(and (letter-l x1) (and (letter-r x2) (and (lt x1 x2) (not (exists1 sz (and (lt x1 sz) (lt sz x2)))))))");
  EXPECT_THROW(fo::build_fo(Family::Add, 0), DomainError);
  EXPECT_EQ(fo::parse_family("psi_no_order"), Family::PsiNoOrder);
  EXPECT_THROW(fo::parse_family("nope"), DomainError);
}

TEST(FoGenerators, FrozenSizeTable) {
  struct Row {
    std::size_t i;
    Family f;
    std::uint64_t size;
    std::uint32_t qr;
  };
  const Row rows[] = {
      {0, Family::Core, 37, 4},    {0, Family::Set, 11, 1},      {0, Family::Elem, 28, 3},
      {0, Family::Sim, 1, 0},      {0, Family::Psi, 22, 4},      {1, Family::Set, 47, 5},
      {1, Family::Sim, 148, 7},    {1, Family::Prec, 139, 9},    {1, Family::Add, 225, 9},
      {1, Family::Psi, 193, 10},   {1, Family::PsiNoOrder, 144, 8}, {2, Family::Vlevel, 1262, 17},
      {2, Family::Psi, 1273, 20},  {2, Family::PsiNoOrder, 874, 20}, {3, Family::Psi, 4571, 24},
      {4, Family::Psi, 12469, 28}, {10, Family::Psi, 517405, 52},
  };
  for (const auto& r : rows) {
    auto f = fo::build_fo(r.f, r.i);
    EXPECT_EQ(size(f), r.size) << fo::family_name(r.f) << " " << r.i;
    EXPECT_EQ(quantifier_rank(f), r.qr) << fo::family_name(r.f) << " " << r.i;
  }
  EXPECT_EQ(size(fo::build_fo(Family::Psi, 50)), 1161438961u);
  EXPECT_EQ(size(fo::build_fo(Family::PsiNoOrder, 50)), 13297666u);
}

TEST(FoGenerators, SizeTableListsEveryFamily) {
  auto rows = fo::size_table_fo(2);
  // Every family at i = 0 but add; every family at i > 0 but core.
  EXPECT_EQ(rows.size(), 9u + 9u + 9u);
  EXPECT_EQ(rows.front().i, 0u);
  for (const auto& r : rows) EXPECT_EQ(size(fo::build_fo(fo::parse_family(r.name), r.i)), r.size);
}

TEST(FoGenerators, GrowthIsQuintic) {
  auto s20 = static_cast<double>(size(fo::build_fo(Family::Psi, 20)));
  auto s40 = static_cast<double>(size(fo::build_fo(Family::Psi, 40)));
  EXPECT_LE(s40 / std::pow(40.0, 5), s20 / std::pow(20.0, 5) * 1.1);
  auto n20 = static_cast<double>(size(fo::build_fo(Family::PsiNoOrder, 20)));
  auto n40 = static_cast<double>(size(fo::build_fo(Family::PsiNoOrder, 40)));
  EXPECT_LE(n40 / std::pow(40.0, 3), n20 / std::pow(20.0, 3) * 1.1);
}

TEST(FoGenerators, CommittedConstantsAreTheMaxima) {
  auto [i, s] = argmax_ratio([](std::size_t i) { return fo::build_fo(Family::Psi, i); }, 5);
  EXPECT_EQ(i, kFoConstant.level);
  EXPECT_EQ(s, kFoConstant.size);
  auto [j, t] = argmax_ratio([](std::size_t i) { return fo::build_fo(Family::PsiNoOrder, i); }, 3);
  EXPECT_EQ(j, kFoNoOrderConstant.level);
  EXPECT_EQ(t, kFoNoOrderConstant.size);
  for (std::size_t k = 3; k <= 50; ++k) {
    EXPECT_LE(static_cast<double>(size(fo::build_fo(Family::Psi, k))), kFoConstant.value() * std::pow(k, 5) + 1e-6);
    EXPECT_LE(static_cast<double>(size(fo::build_fo(Family::PsiNoOrder, k))),
              kFoNoOrderConstant.value() * std::pow(k, 3) + 1e-6);
  }
}

TEST(FoGenerators, QuantifierRankIsLinear) {
  EXPECT_EQ(quantifier_rank(fo::build_fo(Family::Psi, 1)), 10u);
  for (std::size_t i = 2; i <= 20; ++i) EXPECT_EQ(quantifier_rank(fo::build_fo(Family::Psi, i)), 4 * i + 12);
}

TEST(FoGenerators, PsiDefinesTheEncoding) {
  for (std::size_t i = 0; i <= 2; ++i) {
    auto d = compile(fo::build_fo(Family::Psi, i));
    auto w = is_singleton(d);
    ASSERT_TRUE(w) << i;
    EXPECT_EQ(*w, encode_fo(i)) << i;
  }
}

TEST(FoGenerators, PsiOnEncodingsByEvaluation) {
  for (std::size_t i = 0; i <= 2; ++i) {
    auto f = fo::build_fo(Family::Psi, i);
    for (const auto& w : enumerate_encodings(i)) EXPECT_EQ(evaluate(w, f), w == encode_fo(i)) << w;
  }
}

TEST(FoGenerators, NoOrderVariantHasTheEncodingAsShortestModel) {
  for (std::size_t i = 0; i <= 2; ++i) {
    auto f = fo::build_fo(Family::PsiNoOrder, i);
    auto d = compile(f);
    auto r = analyze(d);
    EXPECT_EQ(r.mu, encode_fo(i).size()) << i;
    EXPECT_EQ(r.finiteness, i == 0) << i;
    for (const auto& w : enumerate_encodings(i)) EXPECT_TRUE(accepts(d, w)) << w;
  }
  // Duplicated elements still satisfy it.
  EXPECT_TRUE(accepts(compile(fo::build_fo(Family::PsiNoOrder, 1)), word_from_text("llrlrr")));
}

TEST(FoGenerators, SpotChecksOnLevelTwo) {
  fo::Builder b;
  auto w = word_from_text("llrllrrr");
  auto x = fo::pair("x"), y = fo::pair("y");
  Assignment env;
  env.bind(x, {2, 3}).bind(y, {4, 7});  // ∅ and {∅}
  EXPECT_TRUE(evaluate(w, b.prec(2, x, y), env));
  EXPECT_FALSE(evaluate(w, b.prec(2, y, x), env));
  Assignment member;
  member.bind(x, {4, 7}).bind(y, {1, 8});
  EXPECT_TRUE(evaluate(w, b.elem(1, x, y), member));
  Assignment same;
  same.bind(x, {2, 3}).bind(y, {5, 6});
  EXPECT_TRUE(evaluate(w, b.sim(1, x, y), same));
}

TEST(FoGenerators, Crosschecks) {
  for (std::size_t i = 0; i <= 2; ++i) {
    auto r = crosscheck_fo(i);
    EXPECT_TRUE(r.ok()) << i << " " << to_json(r).dump();
    EXPECT_GT(r.checks, 0u);
  }
  EXPECT_THROW(crosscheck_fo(4), DomainError);
}

TEST(FoGenerators, MemoizedBuilderSharesSubformulas) {
  fo::Builder b;
  auto x = fo::pair("x");
  auto a = b.set(3, x);
  auto c = b.set(3, x);
  EXPECT_EQ(a.node(), c.node());
  EXPECT_GT(b.memo_size(), 0u);
}
