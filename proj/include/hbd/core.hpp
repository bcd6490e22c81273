#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hbd {

using Letter = char;

/// A finite word over an alphabet. Letters are stored as characters.
using Block = std::string;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by certify() when a scanned table does not match the expected
/// complexity function.
class CertificationError : public Error {
 public:
  CertificationError(std::size_t length, std::uint64_t observed, std::uint64_t expected);

  std::size_t length() const { return length_; }
  std::uint64_t observed() const { return observed_; }
  std::uint64_t expected() const { return expected_; }

 private:
  std::size_t length_;
  std::uint64_t observed_;
  std::uint64_t expected_;
};

class Alphabet {
 public:
  /// Letters in canonical order. Throws on empty input or duplicates.
  explicit Alphabet(std::string letters);

  static Alphabet binary() { return Alphabet("01"); }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool contains(Letter a) const;
  bool admits(std::string_view block) const;
  std::size_t index_of(Letter a) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string letters_;
};

enum class Certification { Heuristic, Certified };

/// All blocks of each length 1..max_len of a subshift language, as scanned
/// from a finite prefix. Blocks of each length are kept sorted.
class LanguageTable {
 public:
  LanguageTable(Alphabet alphabet, std::vector<std::vector<Block>> blocks_by_len,
                std::size_t source_prefix_len, Certification certification);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t max_len() const { return blocks_.size(); }
  std::size_t source_prefix_len() const { return source_prefix_len_; }
  Certification certification() const { return certification_; }
  bool certified() const { return certification_ == Certification::Certified; }

  /// Sorted k-blocks, 1 <= k <= max_len.
  std::span<const Block> blocks(std::size_t k) const;
  std::size_t count(std::size_t k) const { return blocks(k).size(); }

  /// Membership; the empty block is always present. Blocks longer than
  /// max_len raise a range error.
  bool contains(std::string_view w) const;

  /// The sorted k-blocks starting with `prefix` (|prefix| <= k).
  std::span<const Block> with_prefix(std::string_view prefix, std::size_t k) const;

  LanguageTable with_certification(Certification c) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<Block>> blocks_;
  std::size_t source_prefix_len_;
  Certification certification_;
};

/// Distinct factors of `prefix` of every length <= max_len. Heuristic.
LanguageTable scan_language(std::string_view prefix, std::size_t max_len,
                            const Alphabet& alphabet = Alphabet::binary());

using ComplexityFunction = std::function<std::uint64_t(std::size_t)>;

/// Promotes a table to Certified when every count matches `expected`.
LanguageTable certify(const LanguageTable& table, const ComplexityFunction& expected);

/// Factor-closure and right-extension-closure violations (empty when clean).
std::vector<std::string> closure_violations(const LanguageTable& table);

/// Letters a (in alphabet order) with a·w in the language.
std::string left_extensions(const LanguageTable& table, std::string_view w);
std::string right_extensions(const LanguageTable& table, std::string_view w);

std::vector<Block> left_special_blocks(const LanguageTable& table, std::size_t n);
std::vector<Block> right_special_blocks(const LanguageTable& table, std::size_t n);

bool is_balanced(const LanguageTable& table, std::size_t n);

/// True when w contains a factor B·B·b with b the first letter of B.
bool has_BBb(std::string_view w);

std::size_t count_letter(std::string_view w, Letter a);
Block reversed(std::string_view w);

/// Shortlex order: by length, then lexicographically.
struct ShortLex {
  bool operator()(std::string_view a, std::string_view b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

}  // namespace hbd
