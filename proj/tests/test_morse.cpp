#include <gtest/gtest.h>

#include "hbd/core.hpp"
#include "hbd/generators.hpp"
#include "hbd/morse.hpp"
#include "oracles/oracles.hpp"

using namespace hbd;

namespace {

const std::string& omega() {
  static const auto t = oracle::morse_word(1 << 16);
  return t;
}

}  // namespace

TEST(MorseComplexity, SpotValues) {
  EXPECT_EQ(morse::complexity(1), 2u);
  EXPECT_EQ(morse::complexity(2), 4u);
  EXPECT_EQ(morse::complexity(3), 6u);
  EXPECT_EQ(morse::complexity(4), 10u);
  EXPECT_EQ(morse::complexity(5), 12u);
  EXPECT_EQ(morse::complexity(8), 22u);
}

TEST(MorseComplexity, MatchesFactorCounts) {
  const std::vector<std::uint64_t> counted{2, 4, 6, 10, 12, 16, 20, 22, 24, 28, 32, 36, 40, 42, 44, 46};
  for (std::size_t n = 1; n <= counted.size(); ++n) EXPECT_EQ(morse::complexity(n), counted[n - 1]) << n;
  for (std::size_t n = 17; n <= 70; ++n) EXPECT_EQ(morse::complexity(n), oracle::factors(omega(), n).size()) << n;
}

TEST(MorseLanguage, MembershipMatchesPrefix) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < n; ++i) w.push_back((bits >> i) & 1 ? '1' : '0');
      ASSERT_EQ(morse::in_language(w), oracle::occurs(omega(), w)) << w;
    }
  }
  EXPECT_FALSE(morse::in_language("0a"));
}

TEST(Dual, Letters) {
  EXPECT_EQ(morse::dual('0'), '1');
  EXPECT_EQ(morse::dual('1'), '0');
  EXPECT_THROW(morse::dual('2'), Error);
}

TEST(OneCuttings, Examples) {
  const auto a = morse::one_cuttings("1001100");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].to_string(), "10|01|10|0");
  EXPECT_EQ(a[0].ancestor, "1010");

  const auto b = morse::one_cuttings("00110100");
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].to_string(), "0|01|10|10|0");
  EXPECT_EQ(b[0].ancestor, "10110");
  EXPECT_EQ(b[0].leading, '0');
  EXPECT_EQ(b[0].trailing, '0');

  const auto c = morse::one_cuttings("010");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].offset, 0u);
  EXPECT_EQ(c[1].offset, 1u);
  EXPECT_EQ(c[0].to_string(), "01|0");
  EXPECT_EQ(c[1].to_string(), "0|10");
}

TEST(OneCuttings, AmbiguousBlocks) {
  for (const Block w : {"010", "101", "0101", "1010"}) EXPECT_EQ(morse::one_cuttings(w).size(), 2u) << w;
}

TEST(OneCuttings, RejectsBlocksOutsideLanguage) {
  EXPECT_THROW(morse::one_cuttings("01010"), Error);
  EXPECT_THROW(morse::one_cuttings("000"), Error);
  EXPECT_THROW(morse::one_cuttings(""), Error);
}

TEST(OneCuttings, UniqueFromLengthFiveAndMatchOccurrenceParity) {
  for (std::size_t n = 5; n <= 12; ++n) {
    for (const auto& w : oracle::factors(omega(), n)) {
      const auto cuts = morse::one_cuttings(w);
      ASSERT_EQ(cuts.size(), 1u) << w;
      const auto parities = oracle::morse_occurrence_parities(omega(), w);
      ASSERT_EQ(parities.size(), 1u) << w;
      EXPECT_EQ(cuts[0].offset, *parities.begin()) << w;
      EXPECT_EQ(cuts[0].ancestor, *oracle::morse_ancestor(omega(), w, cuts[0].offset)) << w;
    }
  }
}

TEST(OneCuttings, ReassemblyAndSubstitutionImage) {
  const auto zeta = Substitution::morse();
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& w : oracle::factors(omega(), n)) {
      for (const auto& c : morse::one_cuttings(w)) {
        EXPECT_EQ(c.reassemble(), w);
        EXPECT_EQ(zeta.apply(c.ancestor).substr(c.offset, w.size()), w);
        for (const auto& b : c.one_blocks) EXPECT_TRUE(b == "01" || b == "10");
      }
    }
  }
}

TEST(OneCuttings, LeadingDanglingLetterFixesLeftExtension) {
  // A unique cutting with a dagger right after the first letter fixes the
  // letter that can precede the block.
  for (std::size_t n = 2; n <= 12; ++n) {
    for (const auto& w : oracle::factors(omega(), n)) {
      const auto cuts = morse::one_cuttings(w);
      if (cuts.size() != 1 || !cuts[0].leading) continue;
      std::set<char> before;
      for (char a : {'0', '1'})
        if (oracle::occurs(omega(), std::string(1, a) + w)) before.insert(a);
      EXPECT_EQ(before, std::set<char>{morse::dual(w[0])}) << w;
    }
  }
}

TEST(OneCuttings, UniqueAncestorsStayInLanguage) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& w : oracle::factors(omega(), n)) {
      const auto cuts = morse::one_cuttings(w);
      bool some = false;
      for (const auto& c : cuts) some = some || oracle::occurs(omega(), c.ancestor);
      EXPECT_TRUE(some) << w;
      if (cuts.size() == 1) EXPECT_TRUE(oracle::occurs(omega(), cuts[0].ancestor)) << w;
    }
  }
}

TEST(AncestorChain, Examples) {
  const auto a = morse::ancestor_chain("00110100");
  EXPECT_EQ(a.chain, (std::vector<Block>{"10110", "001"}));
  EXPECT_TRUE(a.branch_ancestors.empty());

  const auto b = morse::ancestor_chain("1001100");
  EXPECT_EQ(b.chain, std::vector<Block>{"1010"});
  EXPECT_EQ(b.branch_ancestors.size(), 2u);

  const auto c = morse::ancestor_chain("0110");
  EXPECT_EQ(c.chain, std::vector<Block>{"01"});

  const auto d = morse::ancestor_chain("010");
  EXPECT_TRUE(d.chain.empty());
  EXPECT_EQ(d.branch_ancestors, (std::vector<Block>{"00", "11"}));
}

TEST(AncestorChain, StopsAtShortOrAmbiguousBlocks) {
  for (std::size_t n = 5; n <= 14; ++n) {
    for (const auto& w : oracle::factors(omega(), n)) {
      const auto ch = morse::ancestor_chain(w);
      ASSERT_FALSE(ch.chain.empty()) << w;
      const auto& last = ch.chain.back();
      EXPECT_TRUE(last.size() < 4 || last == "0101" || last == "1010") << w;
      for (const auto& s : ch.chain) EXPECT_TRUE(oracle::occurs(omega(), s)) << w << " -> " << s;
    }
  }
}

TEST(Recognizability, IndexThree) {
  EXPECT_TRUE(morse::recognizability_index_check(3, 1 << 14).recognizable);
  EXPECT_TRUE(morse::recognizability_index_check(10, 1 << 14).recognizable);
  const auto k2 = morse::recognizability_index_check(2, 1 << 14);
  EXPECT_FALSE(k2.recognizable);
  ASSERT_TRUE(k2.counterexample.has_value());
  const auto [n, m] = *k2.counterexample;
  const auto& u = omega();
  EXPECT_EQ(n % 2, 0u);
  EXPECT_EQ(m % 2, 1u);
  EXPECT_EQ(u.substr(n, 3), u.substr(m, 3));
  EXPECT_THROW(morse::recognizability_index_check(3, 10), Error);
}
