#include <gtest/gtest.h>

#include "hbd/generators.hpp"
#include "oracles/oracles.hpp"

using namespace hbd;

TEST(Mechanical, ConvergentOfInverseGoldenSquare) {
  const RationalSlope s(13, 34);
  EXPECT_EQ(lower_mechanical(s, 6), "001001");
  // Same depth: 0 f and 1 f read off the lower and upper sequences.
  const auto f = oracle::fibonacci_word(20);
  EXPECT_EQ(lower_mechanical(s, 21), "0" + f);
  EXPECT_EQ(upper_mechanical(s, 21), "1" + f);
}

TEST(Mechanical, DegenerateSlopes) {
  EXPECT_EQ(lower_mechanical(RationalSlope(0, 1), 5), "00000");
  EXPECT_EQ(upper_mechanical(RationalSlope(0, 1), 3), "000");
  EXPECT_EQ(lower_mechanical(RationalSlope(1, 1), 4), "1111");
}

TEST(Mechanical, InterceptAndValidation) {
  // alpha = 1/2, beta = 1/2: floor((n+1)/2 + 1/2) - floor(n/2 + 1/2)
  EXPECT_EQ(lower_mechanical(RationalSlope(1, 2, 1, 2), 6), "101010");
  EXPECT_THROW(RationalSlope(3, 2), Error);
  EXPECT_THROW(RationalSlope(1, 0), Error);
}

TEST(Directive, ParseAndPrint) {
  const auto d = DirectiveSpec::parse("1,[1]");
  EXPECT_EQ(d.terms, std::vector<int>({1, 1}));
  EXPECT_EQ(d.periodic_tail, 1u);
  EXPECT_EQ(d.to_string(), "1,[1]");
  EXPECT_EQ(d.term(100), 1);
  EXPECT_EQ(DirectiveSpec::parse("[2,3]").term(5), 2);
  EXPECT_THROW(DirectiveSpec::parse("1,-2"), Error);
  EXPECT_THROW(DirectiveSpec::parse("-1"), Error);
  EXPECT_THROW(DirectiveSpec::parse("1,x"), Error);
  EXPECT_THROW(DirectiveSpec::parse("1,[1"), Error);
}

TEST(StandardSequence, Examples) {
  EXPECT_EQ(standard_sequence(DirectiveSpec({1, 1, 1, 1}), 4), "01001010");
  EXPECT_EQ(standard_sequence(DirectiveSpec({0, 3, 1, 1}), 4), "111011110");
  EXPECT_EQ(standard_sequence(DirectiveSpec({1}), 1), "01");
  EXPECT_EQ(standard_sequence(DirectiveSpec({1}), 0), "0");
  EXPECT_EQ(standard_sequence(DirectiveSpec({1}), -1), "1");
}

TEST(StandardSequence, ExhaustedDirective) {
  try {
    standard_sequence(DirectiveSpec({1, 1}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("directive exhausted"), std::string::npos);
  }
}

TEST(StandardSequence, PrefixChain) {
  for (const auto& d : {DirectiveSpec({1}, 1), DirectiveSpec({0, 3, 1, 1, 1, 15, 2, 72}),
                        DirectiveSpec({2, 1, 3}, 2)}) {
    const int top = d.unbounded() ? 12 : 7;
    for (int k = 1; k < top; ++k) {
      const auto sk = standard_sequence(d, k);
      const auto next = standard_sequence(d, k + 1);
      EXPECT_EQ(next.compare(0, sk.size(), sk), 0) << d.to_string() << " k=" << k;
    }
  }
}

TEST(LeftSpecialPrefix, Examples) {
  EXPECT_EQ(left_special_prefix(DirectiveSpec({1}, 1), 18), "010010100100101001");
  EXPECT_EQ(left_special_prefix(DirectiveSpec({0, 3, 1, 1, 1, 15, 2, 72}), 23), "11101111011101111011110");
  const DirectiveSpec d({2, 1, 1, 3}, 2);
  EXPECT_EQ(left_special_prefix(d, standard_sequence(d, 2).size()), standard_sequence(d, 2));
}

TEST(LeftSpecialPrefix, MatchesIndependentOracles) {
  EXPECT_EQ(left_special_prefix(DirectiveSpec({1}, 1), 5000), oracle::fibonacci_word(5000));
  EXPECT_EQ(left_special_prefix(DirectiveSpec({0, 3, 1, 1, 1, 15, 2, 72}), 32763),
            oracle::pi_over_4_word(32763));
}

TEST(LeftSpecialPrefix, PrefixStable) {
  const DirectiveSpec longer({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  EXPECT_EQ(left_special_prefix(longer, 100), left_special_prefix(DirectiveSpec({1}, 1), 100));
}

TEST(ContinuedFraction, InverseGoldenSquare) {
  // [0; 2, (1)] with period covering only the 1s
  const std::vector<int> a{0, 2, 1};
  const auto d = directive_from_continued_fraction(a, 1);
  EXPECT_EQ(d.term(1), 1);
  EXPECT_EQ(d.term(7), 1);
  EXPECT_EQ(left_special_prefix(d, 300), oracle::fibonacci_word(300));
}

TEST(ContinuedFraction, PiOverFour) {
  const std::vector<int> a{0, 1, 3, 1, 1, 1, 15, 2, 72};
  EXPECT_EQ(directive_from_continued_fraction(a), DirectiveSpec({0, 3, 1, 1, 1, 15, 2, 72}));
}

TEST(ContinuedFraction, FullPeriodUnrolls) {
  // sqrt2 - 1 = [0; (2)]: d = 1, 2, 2, ...
  const std::vector<int> a{0, 2};
  const auto d = directive_from_continued_fraction(a, 1);
  EXPECT_EQ(d.term(1), 1);
  for (std::size_t i = 2; i < 10; ++i) EXPECT_EQ(d.term(i), 2);
}

TEST(Substitution, FixedPoints) {
  EXPECT_EQ(fixed_point_prefix(Substitution::morse(), '0', 16), "0110100110010110");
  EXPECT_EQ(fixed_point_prefix(Substitution::fibonacci(), '0', 12), "010010100100");
  EXPECT_EQ(fixed_point_prefix(Substitution::morse(), '0', 4096), oracle::morse_word(4096));
  const Substitution identity(Alphabet("ab"), {{'a', "a"}, {'b', "b"}});
  EXPECT_EQ(fixed_point_prefix(identity, 'a', 7), "aaaaaaa");
}

TEST(Substitution, NotProlongable) {
  try {
    fixed_point_prefix(Substitution::morse(), '1', 5);
    SUCCEED();
  } catch (...) {
    FAIL() << "1 -> 10 is prolongable";
  }
  const Substitution s(Alphabet::binary(), {{'0', "10"}, {'1', "01"}});
  try {
    fixed_point_prefix(s, '0', 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not prolongable"), std::string::npos);
  }
}

TEST(Substitution, InvariantUnderOneMoreRound) {
  const auto sub = Substitution::morse();
  const auto p = fixed_point_prefix(sub, '0', 1000);
  EXPECT_EQ(sub.apply(p).substr(0, p.size()), p);
  const auto fib = Substitution::fibonacci();
  const auto q = fixed_point_prefix(fib, '0', 1000);
  EXPECT_EQ(fib.apply(q).substr(0, q.size()), q);
}

TEST(Substitution, Primitivity) {
  EXPECT_TRUE(Substitution::morse().is_primitive());
  EXPECT_TRUE(Substitution::fibonacci().is_primitive());
  EXPECT_FALSE(Substitution(Alphabet("ab"), {{'a', "aa"}, {'b', "bb"}}).is_primitive());
  // Chacon-like: a -> aab, b -> b never puts a into the image of b.
  EXPECT_FALSE(Substitution(Alphabet("ab"), {{'a', "aab"}, {'b', "b"}}).is_primitive());
  EXPECT_TRUE(Substitution(Alphabet("abc"), {{'a', "b"}, {'b', "c"}, {'c', "ab"}}).is_primitive());
}

TEST(Substitution, ParseAndValidate) {
  const auto s = Substitution::parse("0:01,1:10");
  EXPECT_EQ(s.to_string(), "0:01,1:10");
  EXPECT_EQ(s.apply("01"), "0110");
  EXPECT_THROW(Substitution::parse("0:,1:1"), Error);
  EXPECT_THROW(Substitution::parse("0:02,1:1"), Error);
  EXPECT_THROW(Substitution::parse("01:1"), Error);
  EXPECT_THROW(Substitution::parse("0:1,0:0"), Error);
}
