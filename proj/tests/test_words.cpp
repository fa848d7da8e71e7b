#include <random>

#include <gtest/gtest.h>

#include "artin/words.hpp"

using namespace artin;

namespace {

  // Reduction by repeatedly deleting the leftmost cancelling pair.
  Word reduce_by_rescanning(Word w) {
    std::vector<GenSym> v(w.begin(), w.end());
    bool                changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].is_inverse_of(v[i + 1])) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return Word(std::move(v));
  }

  Word random_word(std::mt19937_64& rng, std::size_t max_len) {
    static char const* names[] = {"a", "b", "c"};
    std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, 2);
    std::uniform_int_distribution<int>         sign(0, 1);
    std::vector<GenSym>                        out;
    for (std::size_t i = len(rng); i > 0; --i) {
      out.emplace_back(names[pick(rng)], sign(rng) ? 1 : -1);
    }
    return Word(std::move(out));
  }

}  // namespace

TEST(Words, ParseUppercaseAndSuffixInverse) {
  EXPECT_EQ(parse_word("abAB"), parse_word("a b a^-1 b^-1"));
  EXPECT_EQ(parse_word("(ab)^2"), parse_word("abab"));
  EXPECT_EQ(parse_word("(ab)^-1"), parse_word("BA"));
  EXPECT_TRUE(parse_word("1").empty());
  EXPECT_TRUE(parse_word("").empty());
}

TEST(Words, LongNamesUseBraces) {
  Word w = parse_word("{alpha}x^3{delta}^-1");
  ASSERT_EQ(w.size(), 5u);
  EXPECT_EQ(w[0].name(), "alpha");
  EXPECT_EQ(w[4].sign, -1);
  EXPECT_EQ(to_string(w), "{alpha}xxx{delta}^-1");
  EXPECT_EQ(parse_word(to_string(w)), w);
}

TEST(Words, IndexedNamesArePlain) {
  Word w = parse_word("s1 s2^-1 x_3");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0].name(), "s1");
  EXPECT_EQ(w[2].name(), "x_3");
  EXPECT_EQ(to_string(w), "s1s2^-1x_3");
}

TEST(Words, MalformedInputIsRejected) {
  EXPECT_THROW(parse_word("a^"), input_error);
  EXPECT_THROW(parse_word("(ab"), input_error);
  EXPECT_THROW(parse_word("a)"), input_error);
  EXPECT_THROW(parse_word("{}"), input_error);
  EXPECT_THROW(parse_word("a#"), input_error);
}

TEST(Words, EmptyWordPrintsAsOne) {
  EXPECT_EQ(to_string(Word{}), "1");
}

TEST(Words, FreeReductionMatchesRescanning) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, 20);
    Word r = free_reduce(w);
    EXPECT_EQ(r, reduce_by_rescanning(w)) << to_string(w);
    EXPECT_TRUE(is_freely_reduced(r));
    EXPECT_TRUE(free_reduce(w * w.inverse()).empty());
  }
}

TEST(Words, CyclicReduction) {
  EXPECT_EQ(cyclically_reduce(parse_word("abcA")), parse_word("bc"));
  EXPECT_EQ(cyclically_reduce(parse_word("aA")), Word{});
  EXPECT_EQ(cyclically_reduce(parse_word("ab")), parse_word("ab"));
}

TEST(Words, RotationAndDegree) {
  Word w = parse_word("abc");
  EXPECT_EQ(rotate(w, 1), parse_word("bca"));
  EXPECT_EQ(rotate(w, 3), w);
  EXPECT_EQ(degree(parse_word("abCC")), 0);
  EXPECT_EQ(degree(parse_word("aab")), 3);
  EXPECT_EQ(exponent_sum(parse_word("abAAb"), Symbol("a")), -1);
}

TEST(Words, AlternatingProduct) {
  GenSym a("a"), b("b");
  EXPECT_EQ(alternating_product(a, b, 3), parse_word("aba"));
  EXPECT_EQ(alternating_product(b, a, 4), parse_word("baba"));
  EXPECT_EQ(alternating_product(a, b, 1), parse_word("a"));
  EXPECT_THROW(alternating_product(a, b, 0), input_error);
  EXPECT_THROW(alternating_product(a, a, 2), input_error);
}

TEST(Words, PowersAndInverse) {
  Word w = parse_word("ab");
  EXPECT_EQ(w.pow(0), Word{});
  EXPECT_EQ(w.pow(-2), parse_word("BABA"));
  EXPECT_EQ(w.inverse().inverse(), w);
}

TEST(Words, SymbolsCompareByName) {
  EXPECT_LT(Symbol("alpha"), Symbol("b"));
  EXPECT_EQ(Symbol("q"), Symbol("q"));
  EXPECT_LT(GenSym("a", 1), GenSym("a", -1));
}
