#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "hbd/core.hpp"

namespace hbd {

/// Followers of `base` truncated at a finite horizon: every H-block v with
/// base·v in the language.
struct FollowerSet {
  Block base;
  std::size_t horizon = 0;
  std::vector<Block> followers;
};

/// A witness v proves significance of w = a·t: t·v is in the language but
/// a·t·v is not. Absence of a witness is only ever "not significant up to H".
struct SignificanceVerdict {
  enum class Kind { Witnessed, NotSignificantUpTo };

  Block block;
  Kind kind = Kind::NotSignificantUpTo;
  Block witness;
  std::size_t horizon = 0;

  bool significant() const { return kind == Kind::Witnessed; }
  bool operator==(const SignificanceVerdict&) const = default;
};

FollowerSet follower_horizon(const LanguageTable& table, std::string_view w, std::size_t horizon);

/// Witness search, shortest first then lexicographic. Length-1 blocks in the
/// language are significant with an empty witness.
SignificanceVerdict is_significant(const LanguageTable& table, std::string_view w,
                                   std::size_t horizon);

/// Longest suffix of w judged significant at `horizon`.
Block sig(const LanguageTable& table, std::string_view w, std::size_t horizon);

/// Default horizon for a block of length n.
inline std::size_t default_horizon(std::size_t n) { return 2 * n + 8; }

/// {0·L_{n-1}, 1·L_{n-1}} (or {0,1} when n = 1), sorted.
std::vector<Block> sturmian_significant_blocks(std::string_view l_prefix, std::size_t n);

/// Sig through the Sturmian characterization: longest suffix x·L_k of w,
/// falling back to the generic oracle when no such suffix of length >= 2 exists.
Block sturmian_sig(std::string_view l_prefix, const LanguageTable& table, std::string_view w,
                   std::size_t horizon);

/// Significance via both left extensions of the tail. Valid on Morse tables.
bool morse_is_significant(const LanguageTable& table, std::string_view w);

/// Depths N <= n_max such that the length-N block of `sequence` ending at
/// index p (inclusive) is witnessed significant at `horizon`. Ascending.
std::vector<std::size_t> significant_depths(const LanguageTable& table, std::string_view sequence,
                                            std::size_t p, std::size_t n_max, std::size_t horizon);

/// Precomputed verdicts for every block of length <= max_block_len.
class SignificanceMap {
 public:
  SignificanceMap(const LanguageTable& table, std::size_t max_block_len, std::size_t horizon);

  std::size_t horizon() const { return horizon_; }
  std::size_t max_block_len() const { return max_block_len_; }
  bool significant(std::string_view w) const;
  const SignificanceVerdict& verdict(std::string_view w) const;
  /// Longest significant suffix of w (|w| <= max_block_len).
  Block sig(std::string_view w) const;
  std::vector<Block> significant_blocks(std::size_t k) const;

 private:
  std::size_t max_block_len_;
  std::size_t horizon_;
  std::map<Block, SignificanceVerdict, std::less<>> verdicts_;
};

}  // namespace hbd
