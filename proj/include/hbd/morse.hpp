#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbd/core.hpp"

namespace hbd::morse {

/// Complexity of the Morse subshift: p(1) = 2, p(2) = 4 and for
/// n = 2^r + q + 1 (0 < q <= 2^r): 3·2^r + 4q if q <= 2^(r-1), else 4·2^r + 2q.
std::uint64_t complexity(std::size_t n);

Letter dual(Letter a);

/// Membership in the Morse language by recursive desubstitution.
bool in_language(std::string_view w);

/// Decomposition of a block into 1-blocks (01, 10) with optional dangling
/// letters at either end. `offset` is 1 when the first letter dangles.
struct OneCutting {
  std::optional<Letter> leading;   // last letter of a cut-off 1-block
  std::vector<Block> one_blocks;
  std::optional<Letter> trailing;  // first letter of a cut-off 1-block
  Block ancestor;
  std::size_t offset = 0;

  Block reassemble() const;
  /// Daggers rendered as '|', e.g. "0|01|10|10|0".
  std::string to_string() const;
  bool operator==(const OneCutting&) const = default;
};

/// All valid 1-cuttings, offset 0 first. Throws for blocks outside the
/// language.
std::vector<OneCutting> one_cuttings(std::string_view w);

struct AncestorChain {
  std::vector<Block> chain;
  /// Set when desubstitution stopped at a block with two cuttings; holds the
  /// two candidate ancestors.
  std::vector<Block> branch_ancestors;
};

/// Successive ancestors S_1, S_2, ... until |S| < 4 or S is 0101 / 1010.
AncestorChain ancestor_chain(std::string_view w);

struct RecognizabilityResult {
  std::size_t lookahead = 0;
  std::size_t sample_len = 0;
  bool recognizable = false;
  /// (n, m): n is a cutting bar, m is not, and the (K+1)-blocks agree.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// Checks on the first `sample_len` letters of the Morse sequence whether a
/// lookahead of K letters identifies the order-1 cutting bars.
RecognizabilityResult recognizability_index_check(std::size_t lookahead, std::size_t sample_len);

}  // namespace hbd::morse
