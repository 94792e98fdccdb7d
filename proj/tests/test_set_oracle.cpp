#include <gtest/gtest.h>

#include "succinct/set_oracle.hpp"

using namespace succinct;

namespace {
const HFSet kEmpty{};
const HFSet kOne = HFSet::of({kEmpty});
const HFSet kTwo = HFSet::of({kEmpty, kOne});
const HFSet kSingletonOne = HFSet::of({kOne});
Word W(const char* s) { return word_from_text(s); }
}  // namespace

TEST(HFSet, CanonicalForm) {
  EXPECT_EQ(HFSet::of({kOne, kEmpty, kOne}), kTwo);
  EXPECT_TRUE(kTwo.contains(kEmpty));
  EXPECT_FALSE(kOne.contains(kOne));
  EXPECT_EQ(kEmpty.rank(), 0u);
  EXPECT_EQ(kOne.rank(), 1u);
  EXPECT_EQ(kSingletonOne.rank(), 2u);
  EXPECT_EQ(kTwo.braces(), "{{}{{}}}");
  EXPECT_EQ(insert(kOne, kOne), kTwo);
}

TEST(SetOracle, Levels) {
  EXPECT_EQ(v_level(0), kEmpty);
  EXPECT_EQ(v_level(1), kOne);
  EXPECT_EQ(v_level(2), kTwo);
  EXPECT_EQ(v_level(3).elements().size(), 4u);
  EXPECT_EQ(v_level(4).elements().size(), 16u);
  EXPECT_THROW(v_level(5), DomainError);
}

TEST(SetOracle, Order) {
  EXPECT_TRUE(prec(2, kEmpty, kOne));
  EXPECT_FALSE(prec(2, kOne, kEmpty));
  EXPECT_TRUE(prec(3, kOne, kSingletonOne));
  EXPECT_FALSE(prec(3, kTwo, kTwo));
  // ≺ is a strict linear order on V_3.
  const auto& v3 = v_level(3).elements();
  for (std::size_t a = 0; a < v3.size(); ++a)
    for (std::size_t b = 0; b < v3.size(); ++b)
      EXPECT_EQ(prec(3, v3[a], v3[b]) + prec(3, v3[b], v3[a]) + (a == b), 1);
}

TEST(SetOracle, FirstOrderEncodings) {
  EXPECT_EQ(encode_fo(0), W("lr"));
  EXPECT_EQ(encode_fo(1), W("llrr"));
  EXPECT_EQ(encode_fo(2), W("llrllrrr"));
  const std::uint64_t lengths[] = {2, 4, 8, 22, 194};
  for (std::size_t i = 0; i <= 4; ++i) {
    EXPECT_EQ(encode_fo(i).size(), lengths[i]) << i;
    EXPECT_EQ(encoding_length(i), lengths[i]) << i;
    EXPECT_EQ(decode(encode_fo(i)), v_level(i));
  }
}

TEST(SetOracle, SecondOrderEncodings) {
  EXPECT_EQ(encode_mso(0), W("lr"));
  EXPECT_EQ(encode_mso(1), W("llrr"));
  EXPECT_EQ(encode_mso(2), W("lllrrlrr"));
  EXPECT_NE(encode_mso(2), encode_fo(2));
  for (std::size_t i = 0; i <= 4; ++i) {
    EXPECT_EQ(decode(encode_mso(i)), v_level(i));
    EXPECT_EQ(encode_mso(i).size(), encoding_length(i));
  }
}

TEST(SetOracle, EnumerateEncodings) {
  EXPECT_EQ(enumerate_encodings(0), std::vector<Word>{W("lr")});
  EXPECT_EQ(enumerate_encodings(1), std::vector<Word>{W("llrr")});
  auto two = enumerate_encodings(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NE(std::find(two.begin(), two.end(), W("llrllrrr")), two.end());
  EXPECT_NE(std::find(two.begin(), two.end(), W("lllrrlrr")), two.end());
  EXPECT_THROW(enumerate_encodings(3), DomainError);
}

TEST(SetOracle, DecodeAndErrors) {
  EXPECT_EQ(decode(W("llrlrr")), kOne);  // duplicates collapse
  EXPECT_THROW(decode(W("lrlr")), WordError);
  EXPECT_THROW(decode(W("llr")), WordError);
  EXPECT_THROW(decode(W("rl")), WordError);
  try {
    decode(W("lrr"));
    FAIL();
  } catch (const WordError& e) {
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos);
  }
}

TEST(SetOracle, BraceSpans) {
  auto p = parse_braces(W("lllrrlrr"));
  ASSERT_EQ(p.spans.size(), 4u);
  EXPECT_EQ(p.span(0), std::make_pair(std::size_t{1}, std::size_t{8}));
  EXPECT_EQ(p.span(1), std::make_pair(std::size_t{2}, std::size_t{5}));
  EXPECT_EQ(p.span(2), std::make_pair(std::size_t{3}, std::size_t{4}));
  EXPECT_EQ(p.spans[2].parent, 1);
  EXPECT_EQ(p.root().children.size(), 2u);
}

TEST(SetOracle, LevelsOf) {
  auto lr = levels_of(W("lr"));
  EXPECT_EQ(lr.at(1), 0u);
  EXPECT_EQ(lr.at(2), 0u);
  auto l1 = levels_of(W("llrr"));
  EXPECT_EQ(l1.at(1), 1u);
  EXPECT_EQ(l1.at(2), 0u);
  auto l2 = levels_of(W("lllrrlrr"));
  const std::size_t expected[] = {2, 1, 0, 0, 1, 1, 1, 2};
  for (std::size_t p = 1; p <= 8; ++p) EXPECT_EQ(l2.at(p), expected[p - 1]) << p;
}
