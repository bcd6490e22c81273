#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbd/core.hpp"

namespace hbd {

/// Directive sequence (d_1, d_2, ...) of a standard sequence. The last
/// `periodic_tail` terms repeat forever, so 1/tau^2 is {terms = {1}, tail = 1}.
struct DirectiveSpec {
  std::vector<int> terms;
  std::size_t periodic_tail = 0;

  /// Validates d_1 >= 0, d_i > 0 for i > 1, at least one term, tail <= size.
  DirectiveSpec(std::vector<int> terms, std::size_t periodic_tail = 0);

  bool unbounded() const { return periodic_tail > 0; }
  /// d_i for i >= 1; throws "directive exhausted" past a finite directive.
  int term(std::size_t i) const;
  std::size_t available_terms() const;

  /// "0,3,1,1" or "1,[1]" (bracketed terms form the periodic tail).
  static DirectiveSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const DirectiveSpec&) const = default;
};

/// [0; a_1, a_2, ...] with the last `periodic_tail` partial quotients
/// repeating, mapped to d_1 = a_1 - 1, d_i = a_i.
DirectiveSpec directive_from_continued_fraction(std::span<const int> partial_quotients,
                                                std::size_t periodic_tail = 0);

struct RationalSlope {
  std::int64_t alpha_num = 0;
  std::int64_t alpha_den = 1;
  std::int64_t beta_num = 0;
  std::int64_t beta_den = 1;

  RationalSlope(std::int64_t alpha_num, std::int64_t alpha_den, std::int64_t beta_num = 0,
                std::int64_t beta_den = 1);
};

Block lower_mechanical(const RationalSlope& slope, std::size_t n);
Block upper_mechanical(const RationalSlope& slope, std::size_t n);

/// s_k of the recursion s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{d_k} s_{k-2}.
Block standard_sequence(const DirectiveSpec& spec, int k);

/// First m letters of the left special sequence l = lim s_k.
Block left_special_prefix(const DirectiveSpec& spec, std::size_t m);

class Substitution {
 public:
  Substitution(Alphabet alphabet, std::map<Letter, Block> images);

  /// Morse: 0 -> 01, 1 -> 10.
  static Substitution morse();
  /// Fibonacci: 0 -> 01, 1 -> 0.
  static Substitution fibonacci();
  /// "0:01,1:10"; the alphabet is the image keys in order of appearance.
  static Substitution parse(std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  const Block& image(Letter a) const;
  Block apply(std::string_view w) const;
  bool is_primitive() const;
  std::string to_string() const;

 private:
  Alphabet alphabet_;
  std::map<Letter, Block> images_;
};

/// First m letters of lim sub^n(seed). Requires image(seed) to start with seed.
Block fixed_point_prefix(const Substitution& sub, Letter seed, std::size_t m);

}  // namespace hbd
