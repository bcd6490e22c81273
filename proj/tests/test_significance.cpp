#include <gtest/gtest.h>

#include "hbd/kernels.hpp"
#include "hbd/morse.hpp"
#include "hbd/significance.hpp"
#include "oracles/oracles.hpp"

using namespace hbd;

namespace {

const std::string& fib_text() {
  static const auto t = oracle::fibonacci_word(4096);
  return t;
}
const std::string& pi4_text() {
  static const auto t = oracle::pi_over_4_word(8192);
  return t;
}
const std::string& morse_text() {
  static const auto t = oracle::morse_word(1 << 14);
  return t;
}

LanguageTable certified(const std::string& text, std::size_t max_len, ComplexityFunction p) {
  return certify(scan_language(text, max_len), p);
}

std::uint64_t sturm(std::size_t n) { return n + 1; }

const LanguageTable& fib() {
  static const auto t = certified(fib_text(), 48, sturm);
  return t;
}
const LanguageTable& pi4() {
  static const auto t = certified(pi4_text(), 48, sturm);
  return t;
}
const LanguageTable& morse_t() {
  static const auto t = certified(morse_text(), 40, morse::complexity);
  return t;
}

}  // namespace

TEST(FollowerHorizon, Examples) {
  try {
    follower_horizon(fib(), "11", 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("block not in language"), std::string::npos);
  }
  EXPECT_EQ(follower_horizon(morse_t(), "0", 1).followers, (std::vector<Block>{"0", "1"}));
  EXPECT_EQ(follower_horizon(fib(), "", 1).followers, (std::vector<Block>{"0", "1"}));
  EXPECT_EQ(follower_horizon(fib(), "", 0).followers, std::vector<Block>{""});
  try {
    follower_horizon(fib(), "0", 48);
    FAIL();
  } catch (const std::out_of_range& e) {
    EXPECT_NE(std::string(e.what()).find("horizon exceeds table"), std::string::npos);
  }
}

TEST(FollowerHorizon, MatchesTextContinuations) {
  for (const Block w : {"0", "01", "0100", "10010", "001001"}) {
    const auto got = follower_horizon(fib(), w, 7).followers;
    const auto brute = oracle::continuations(fib_text(), w, 7);
    EXPECT_EQ(got, std::vector<Block>(brute.begin(), brute.end())) << w;
  }
}

TEST(IsSignificant, Examples) {
  EXPECT_FALSE(is_significant(fib(), "010", 10).significant());
  const auto v = is_significant(fib(), "1010", 10);
  EXPECT_TRUE(v.significant());
  EXPECT_TRUE(fib().contains(v.block.substr(1) + v.witness));
  EXPECT_FALSE(fib().contains(v.block + v.witness));
  EXPECT_EQ(v.witness, *oracle::witness(fib_text(), "1010", 10));

  const auto m011 = is_significant(morse_t(), "011", 20);
  EXPECT_FALSE(m011.significant());
  EXPECT_EQ(m011.horizon, 20u);
  EXPECT_TRUE(is_significant(morse_t(), "010", 20).significant());

  const auto one = is_significant(fib(), "1", 5);
  EXPECT_TRUE(one.significant());
  EXPECT_TRUE(one.witness.empty());
  EXPECT_THROW(is_significant(fib(), "", 5), Error);
  EXPECT_THROW(is_significant(fib(), "11", 5), Error);
}

TEST(IsSignificant, WitnessesMatchBruteForceOnAllShortBlocks) {
  struct Case {
    const LanguageTable* table;
    const std::string* text;
  };
  for (const auto& c : {Case{&fib(), &fib_text()}, Case{&morse_t(), &morse_text()}}) {
    for (std::size_t k = 1; k <= 10; ++k) {
      for (const auto& w : c.table->blocks(k)) {
        const std::size_t h = default_horizon(k);
        const auto v = is_significant(*c.table, w, h);
        const auto brute = oracle::witness(*c.text, w, h);
        ASSERT_EQ(v.significant(), brute.has_value()) << w;
        if (brute) EXPECT_EQ(v.witness, *brute) << w;
      }
    }
  }
}

TEST(Sig, Examples) {
  EXPECT_EQ(sig(fib(), "01", 10), "1");
  EXPECT_EQ(sig(morse_t(), "10100", 20), "0100");
  EXPECT_EQ(sig(morse_t(), "00101", 20), "0101");
  EXPECT_THROW(sig(fib(), "", 5), Error);
}

TEST(Sig, AlwaysEndsWithLastLetterAndMatchesOracle) {
  for (std::size_t k = 1; k <= 9; ++k) {
    for (const auto& w : morse_t().blocks(k)) {
      const auto s = sig(morse_t(), w, 24);
      EXPECT_EQ(s.back(), w.back());
      EXPECT_EQ(s, oracle::sig(morse_text(), w, 24)) << w;
    }
  }
}

TEST(SturmianSignificantBlocks, Examples) {
  const auto l = oracle::fibonacci_word(40);
  EXPECT_EQ(sturmian_significant_blocks(l, 3), (std::vector<Block>{"001", "101"}));
  EXPECT_EQ(sturmian_significant_blocks(oracle::pi_over_4_word(40), 4), (std::vector<Block>{"0111", "1111"}));
  EXPECT_EQ(sturmian_significant_blocks("", 1), (std::vector<Block>{"0", "1"}));
  EXPECT_THROW(sturmian_significant_blocks("01", 5), Error);
}

TEST(SturmianSignificantBlocks, AgreeWithGenericOracle) {
  // H = 2n + 8 for blocks of length n <= 13.
  for (const auto* pair : {&fib(), &pi4()}) {
    const auto l = pair == &fib() ? oracle::fibonacci_word(20) : oracle::pi_over_4_word(20);
    for (std::size_t n = 1; n <= 13; ++n) {
      std::vector<Block> oracle_sig;
      for (const auto& w : pair->blocks(n))
        if (is_significant(*pair, w, default_horizon(n)).significant()) oracle_sig.push_back(w);
      auto closed = sturmian_significant_blocks(l, n);
      std::sort(closed.begin(), closed.end());
      EXPECT_EQ(oracle_sig, closed) << "n=" << n;
    }
  }
}

TEST(SturmianSig, FastPathMatchesGeneric) {
  const auto l = oracle::fibonacci_word(40);
  for (std::size_t k = 1; k <= 12; ++k)
    for (const auto& w : fib().blocks(k)) EXPECT_EQ(sturmian_sig(l, fib(), w, 30), sig(fib(), w, 30)) << w;
}

TEST(MorseIsSignificant, Examples) {
  EXPECT_TRUE(morse_is_significant(morse_t(), "1101"));
  EXPECT_TRUE(morse_is_significant(morse_t(), "0011"));
  EXPECT_FALSE(morse_is_significant(morse_t(), "011"));
  EXPECT_TRUE(morse_is_significant(morse_t(), "00110"));
  EXPECT_TRUE(morse_is_significant(morse_t(), "1"));
  EXPECT_TRUE(morse_is_significant(morse_t(), "11001"));
  EXPECT_FALSE(morse_is_significant(morse_t(), "11010"));
  EXPECT_THROW(morse_is_significant(morse_t(), "000"), Error);
}

TEST(MorseIsSignificant, AgreesWithGenericOracleUpToTen) {
  for (std::size_t k = 1; k <= 10; ++k)
    for (const auto& w : morse_t().blocks(k))
      EXPECT_EQ(morse_is_significant(morse_t(), w), is_significant(morse_t(), w, default_horizon(k)).significant())
          << w;
}

TEST(Consecsig, DroppingLastLetterKeepsSignificance) {
  for (const auto* t : {&fib(), &morse_t()}) {
    for (std::size_t k = 2; k <= 14; ++k)
      for (const auto& w : t->blocks(k))
        if (is_significant(*t, w, 24).significant())
          EXPECT_TRUE(is_significant(*t, std::string_view(w).substr(0, k - 1), 24).significant()) << w;
  }
}

TEST(Leftextend, SignificantTailsExtendBothWays) {
  for (const auto* t : {&fib(), &pi4(), &morse_t()}) {
    for (std::size_t k = 2; k <= 14; ++k)
      for (const auto& w : t->blocks(k))
        if (is_significant(*t, w, 24).significant())
          EXPECT_EQ(left_extensions(*t, std::string_view(w).substr(1)), "01") << w;
  }
}

TEST(Siglem, Composition) {
  for (const auto* t : {&fib(), &morse_t()}) {
    const SignificanceMap m(*t, 13, 26);
    for (std::size_t k = 1; k <= 12; ++k)
      for (const auto& w : t->blocks(k))
        for (char c : {'0', '1'}) {
          const Block wc = w + c;
          if (!t->contains(wc)) continue;
          EXPECT_EQ(m.sig(m.sig(w) + c), m.sig(wc)) << wc;
        }
  }
}

TEST(SignificanceMap, MatchesDirectCalls) {
  const SignificanceMap m(morse_t(), 8, 20);
  for (std::size_t k = 1; k <= 8; ++k) {
    for (const auto& w : morse_t().blocks(k)) {
      EXPECT_EQ(m.verdict(w), is_significant(morse_t(), w, 20));
      EXPECT_EQ(m.sig(w), sig(morse_t(), w, 20));
    }
  }
  EXPECT_THROW(m.verdict("000"), Error);
  EXPECT_THROW(SignificanceMap(morse_t(), 30, 20), std::out_of_range);
}

TEST(SignificantDepths, ConstantSequence) {
  const std::string zeros(200, '0');
  const auto t = scan_language(zeros, 60);
  EXPECT_EQ(significant_depths(t, zeros, 100, 20, 16), std::vector<std::size_t>{1});
}

TEST(SignificantDepths, FibonacciMatchesLeftSpecialPrefixes) {
  const auto& text = fib_text();
  const auto l = oracle::fibonacci_word(64);
  for (std::size_t p : {30u, 200u, 1001u, 2500u}) {
    const auto depths = significant_depths(fib(), text, p, 24, 24);
    std::vector<std::size_t> expected{1};
    for (std::size_t n = 2; n <= 24; ++n)
      if (text.compare(p + 2 - n, n - 1, l, 0, n - 1) == 0) expected.push_back(n);
    EXPECT_EQ(depths, expected) << "p=" << p;
  }
}

TEST(SignificantDepths, RangeErrors) {
  EXPECT_THROW(significant_depths(fib(), fib_text(), 5, 10, 5), std::out_of_range);
  EXPECT_THROW(significant_depths(fib(), fib_text(), 5000, 10, 5), std::out_of_range);
  EXPECT_THROW(significant_depths(fib(), fib_text(), 100, 40, 20), std::out_of_range);
}

TEST(Kernels, SerialAndParallelAgree) {
  const auto& text = morse_text();
  EXPECT_EQ(kernels::serial::collect_factors(text, 30), kernels::omp::collect_factors(text, 30));
  std::vector<Block> candidates;
  for (std::size_t k = 1; k <= 12; ++k)
    for (const auto& w : morse_t().blocks(k)) candidates.push_back(w);
  EXPECT_EQ(kernels::serial::classify(morse_t(), candidates, 24), kernels::omp::classify(morse_t(), candidates, 24));
}

TEST(Kernels, ParallelClassifyPropagatesErrors) {
  const std::vector<Block> bad{"0", "000"};
  EXPECT_THROW(kernels::omp::classify(morse_t(), bad, 5), Error);
}
