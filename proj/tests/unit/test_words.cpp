#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "qstar/cubes.hpp"
#include "qstar/error.hpp"
#include "qstar/words.hpp"

using namespace qstar;

namespace {

ThreeWord word(std::vector<WordColumn> columns) { return ThreeWord{std::move(columns)}; }

const ThreeWord kPalabra = word({{0, 3, 3}, {1, 2, 2}, {1, 2, 3}});
const CubicalMatrix kPalabraGamma = parse_cubical_matrix("0,0,0;0,0,0;0,0,1|0,0,0;0,1,1;0,0,0");

}  // namespace

TEST(RowType, Examples) {
  const auto omega = word({{0, 1, 2}, {0, 2, 2}, {1, 3, 3}});
  EXPECT_EQ(row_type(omega, 1), (std::vector<Count>{1}));
  EXPECT_EQ(row_type(omega, 2), (std::vector<Count>{1, 1, 1}));
  EXPECT_EQ(row_type(omega, 3), (std::vector<Count>{0, 2, 1}));
  EXPECT_TRUE(row_type(ThreeWord{}, 2).empty());
  EXPECT_EQ(row_type(kPalabra, 2), (std::vector<Count>{0, 2, 1}));
  EXPECT_EQ(row_type(kPalabra, 3), (std::vector<Count>{0, 1, 2}));
  EXPECT_TRUE(row_type(word({{0, 1, 1}}), 1).empty());
  EXPECT_THROW(row_type(kPalabra, 4), InputError);
}

TEST(ValidateWord, Conditions) {
  EXPECT_FALSE(validate_word(kPalabra));
  const auto s_down = validate_word(word({{1, 2, 2}, {0, 3, 3}}));
  ASSERT_TRUE(s_down);
  EXPECT_EQ(s_down->condition, "1");
  EXPECT_EQ(s_down->column, 1u);
  const auto j_down = validate_word(word({{0, 2, 3}, {0, 2, 2}}));
  ASSERT_TRUE(j_down);
  EXPECT_EQ(j_down->condition, "4");
  EXPECT_EQ(validate_word(word({{0, 3, 2}, {0, 2, 2}}))->condition, "3");
  EXPECT_EQ(validate_word(word({{0, 0, 2}}))->condition, "2");
}

TEST(ValidateWord, LiteralReadingOfCondition4) {
  // j may drop across an s boundary; only the literal reading objects.
  const auto across = word({{0, 2, 3}, {1, 2, 2}});
  EXPECT_FALSE(validate_word(across, SortRule::Lexicographic));
  const auto literal = validate_word(across, SortRule::Literal);
  ASSERT_TRUE(literal);
  EXPECT_EQ(literal->condition, "4");
}

TEST(InA, Conditions) {
  EXPECT_FALSE(in_a(kPalabra, {2, 1}, {1, 2}, 3, 2));
  const auto weight = in_a(kPalabra, {2, 1}, {1, 2}, 3, 1);
  ASSERT_TRUE(weight);
  EXPECT_EQ(weight->condition, "iii");
  EXPECT_EQ(in_a(word({{1, 1, 2}}), {1}, {1}, 1, 1)->condition, "ii");
  EXPECT_EQ(in_a(word({{0, 1, 1}}), {1}, {1}, 1, 0)->condition, "i");
  EXPECT_EQ(in_a(kPalabra, {2, 1}, {1, 2}, 2, 2)->condition, "size");
  EXPECT_EQ(in_a(kPalabra, {1, 2}, {1, 2}, 3, 2)->condition, "iv");
}

TEST(Codec, PalabraBothDirections) {
  EXPECT_EQ(encode(kPalabraGamma), kPalabra);
  EXPECT_EQ(decode(kPalabra), kPalabraGamma);
  EXPECT_EQ(to_string(kPalabra), "(0,3,3);(1,2,2);(1,2,3)");
  EXPECT_EQ(parse_word("(0,3,3);(1,2,2);(1,2,3)"), kPalabra);
  EXPECT_EQ(parse_word("0,1,1\n3,2,2\n3,2,3"), kPalabra);
}

TEST(Codec, EdgeCases) {
  EXPECT_TRUE(encode(CubicalMatrix(2, 2)).empty());
  EXPECT_TRUE(decode(ThreeWord{}).is_zero());
  EXPECT_EQ(encode(parse_cubical_matrix("0,2;0,0")), word({{0, 1, 2}, {0, 1, 2}}));
  EXPECT_THROW(decode(word({{0, 1, 1}})), InputError);
  EXPECT_THROW(decode(word({{1, 2, 2}, {0, 2, 2}})), InputError);
  EXPECT_THROW(parse_word("(0,3,3);(1,2"), ParseError);
}

TEST(Codec, DecodeWithShape) {
  const auto g = decode(word({{0, 2, 2}}), std::pair<std::size_t, std::size_t>{2, 3});
  EXPECT_EQ(g.a(), 2u);
  EXPECT_EQ(g.b(), 3u);
  EXPECT_EQ(g.at(0, 1, 1), 1u);
  EXPECT_THROW(decode(kPalabra, std::pair<std::size_t, std::size_t>{1, 1}), InputError);
}

TEST(WordStats, Examples) {
  const auto stats = word_stats(kPalabra);
  EXPECT_EQ(stats.size, 3u);
  EXPECT_EQ(stats.support, 1u);
  EXPECT_EQ(stats.weight, 2u);
  EXPECT_EQ(stats.alpha, (MultiIndex{2, 1}));
  EXPECT_EQ(stats.beta, (MultiIndex{1, 2}));
  const auto empty = word_stats(ThreeWord{});
  EXPECT_EQ(empty.size, 0u);
  EXPECT_TRUE(empty.alpha.empty());
}

TEST(Bijection, ExhaustiveOnSmallParameters) {
  const std::vector<MultiIndex> idx = {{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (const auto& alpha : idx)
    for (const auto& beta : idx)
      for (std::uint64_t n = 1; n <= 4; ++n) {
        if (alpha.weight() > n || beta.weight() > n) continue;
        for (std::uint64_t m = 0; m <= 3; ++m) {
          const auto gammas = enumerate_q(alpha, beta, n, m);
          std::set<ThreeWord> images;
          for (const auto& g : gammas) {
            const auto w = encode(g);
            EXPECT_FALSE(validate_word(w));
            EXPECT_FALSE(in_a(w, alpha, beta, n, m)) << to_string(w);
            EXPECT_EQ(decode(w, std::pair{alpha.size(), beta.size()}), g);
            const auto stats = word_stats(w, std::pair{alpha.size(), beta.size()});
            EXPECT_EQ(stats.size, g.size());
            EXPECT_EQ(stats.support, support_level(g));
            EXPECT_EQ(stats.weight, g.weight());
            EXPECT_EQ(stats.alpha, alpha);
            EXPECT_EQ(stats.beta, beta);
            images.insert(w);
          }
          EXPECT_EQ(images.size(), gammas.size());
          const auto words = enumerate_a(alpha, beta, n, m);
          EXPECT_EQ(std::set<ThreeWord>(words.begin(), words.end()), images);
          for (const auto& w : words) EXPECT_EQ(encode(decode(w, std::pair{alpha.size(), beta.size()})), w);
        }
      }
}

TEST(EnumerateA, Examples) {
  EXPECT_EQ(enumerate_a({1, 1}, {2, 1}, 4, 1).size(), 10u);
  EXPECT_EQ(enumerate_a({1}, {1}, 1, 0), std::vector<ThreeWord>{word({{0, 2, 2}})});
  const auto words = enumerate_a({2, 1}, {1, 2}, 3, 2);
  EXPECT_NE(std::find(words.begin(), words.end(), kPalabra), words.end());
  EXPECT_EQ(enumerate_a({2, 1}, {1, 2}, 3, 2, {4}), words);
}
