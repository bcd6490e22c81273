#include "hbd/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hbd/kernels.hpp"

namespace hbd {

CertificationError::CertificationError(std::size_t length, std::uint64_t observed,
                                       std::uint64_t expected)
    : Error("certification failed at length " + std::to_string(length) + ": observed " +
            std::to_string(observed) + " blocks, expected " + std::to_string(expected) +
            " (prefix too short?)"),
      length_(length),
      observed_(observed),
      expected_(expected) {}

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("alphabet must be nonempty");
  std::string sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("alphabet has duplicate letters: " + letters_);
  }
}

bool Alphabet::contains(Letter a) const { return letters_.find(a) != std::string::npos; }

bool Alphabet::admits(std::string_view block) const {
  return std::all_of(block.begin(), block.end(), [this](Letter a) { return contains(a); });
}

std::size_t Alphabet::index_of(Letter a) const {
  auto pos = letters_.find(a);
  if (pos == std::string::npos) throw Error(std::string("letter not in alphabet: ") + a);
  return pos;
}

LanguageTable::LanguageTable(Alphabet alphabet, std::vector<std::vector<Block>> blocks_by_len,
                             std::size_t source_prefix_len, Certification certification)
    : alphabet_(std::move(alphabet)),
      blocks_(std::move(blocks_by_len)),
      source_prefix_len_(source_prefix_len),
      certification_(certification) {
  for (std::size_t k = 1; k <= blocks_.size(); ++k) {
    auto& level = blocks_[k - 1];
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (const auto& b : level) {
      if (b.size() != k) throw Error("block '" + b + "' stored at length " + std::to_string(k));
      if (!alphabet_.admits(b)) throw Error("block '" + b + "' uses letters outside the alphabet");
    }
  }
}

std::span<const Block> LanguageTable::blocks(std::size_t k) const {
  if (k == 0 || k > blocks_.size()) {
    throw std::out_of_range("block length " + std::to_string(k) + " outside table range 1.." +
                            std::to_string(blocks_.size()));
  }
  return blocks_[k - 1];
}

bool LanguageTable::contains(std::string_view w) const {
  if (w.empty()) return true;
  auto level = blocks(w.size());
  return std::binary_search(level.begin(), level.end(), w, std::less<>{});
}

std::span<const Block> LanguageTable::with_prefix(std::string_view prefix, std::size_t k) const {
  auto level = blocks(k);
  if (prefix.size() > k) return {};
  auto lo = std::lower_bound(level.begin(), level.end(), prefix, std::less<>{});
  auto hi = lo;
  while (hi != level.end() && std::string_view(*hi).substr(0, prefix.size()) == prefix) ++hi;
  return {lo, hi};
}

LanguageTable LanguageTable::with_certification(Certification c) const {
  LanguageTable copy = *this;
  copy.certification_ = c;
  return copy;
}

LanguageTable scan_language(std::string_view prefix, std::size_t max_len,
                            const Alphabet& alphabet) {
  if (max_len == 0) throw Error("max_len must be at least 1");
  if (prefix.size() < max_len) {
    throw Error("insufficient prefix: length " + std::to_string(prefix.size()) +
                " < max_len " + std::to_string(max_len));
  }
  if (!alphabet.admits(prefix)) throw Error("prefix uses letters outside the alphabet");
  return LanguageTable(alphabet, kernels::omp::collect_factors(prefix, max_len), prefix.size(),
                       Certification::Heuristic);
}

LanguageTable certify(const LanguageTable& table, const ComplexityFunction& expected) {
  for (std::size_t k = 1; k <= table.max_len(); ++k) {
    const std::uint64_t want = expected(k);
    if (table.count(k) != want) throw CertificationError(k, table.count(k), want);
  }
  return table.with_certification(Certification::Certified);
}

std::vector<std::string> closure_violations(const LanguageTable& table) {
  std::vector<std::string> out;
  for (std::size_t k = 2; k <= table.max_len(); ++k) {
    for (const auto& b : table.blocks(k)) {
      std::string_view v(b);
      if (!table.contains(v.substr(0, k - 1)) || !table.contains(v.substr(1))) {
        out.push_back("factor closure: '" + b + "' has a missing subblock");
      }
    }
  }
  for (std::size_t k = 1; k < table.max_len(); ++k) {
    for (const auto& b : table.blocks(k)) {
      if (table.with_prefix(b, k + 1).empty()) {
        out.push_back("right extension: '" + b + "' has no stored right extension");
      }
    }
  }
  return out;
}

namespace {

void require_present(const LanguageTable& table, std::string_view w) {
  if (w.size() + 1 > table.max_len()) {
    throw std::out_of_range("block of length " + std::to_string(w.size()) +
                            " cannot be extended inside a table of max_len " +
                            std::to_string(table.max_len()));
  }
  if (!table.contains(w)) throw Error("block not in language: '" + std::string(w) + "'");
}

}  // namespace

std::string left_extensions(const LanguageTable& table, std::string_view w) {
  require_present(table, w);
  std::string out;
  Block probe;
  for (Letter a : table.alphabet().letters()) {
    probe.assign(1, a);
    probe.append(w);
    if (table.contains(probe)) out.push_back(a);
  }
  return out;
}

std::string right_extensions(const LanguageTable& table, std::string_view w) {
  require_present(table, w);
  std::string out;
  Block probe(w);
  probe.push_back('\0');
  for (Letter a : table.alphabet().letters()) {
    probe.back() = a;
    if (table.contains(probe)) out.push_back(a);
  }
  return out;
}

namespace {

void require_extendable_length(const LanguageTable& table, std::size_t n) {
  if (n == 0 || n + 1 > table.max_len()) {
    throw std::out_of_range("length " + std::to_string(n) + " out of range 1.." +
                            std::to_string(table.max_len() - 1));
  }
}

}  // namespace

std::vector<Block> left_special_blocks(const LanguageTable& table, std::size_t n) {
  require_extendable_length(table, n);
  std::vector<Block> out;
  for (const auto& b : table.blocks(n)) {
    if (left_extensions(table, b).size() >= 2) out.push_back(b);
  }
  return out;
}

std::vector<Block> right_special_blocks(const LanguageTable& table, std::size_t n) {
  require_extendable_length(table, n);
  std::vector<Block> out;
  for (const auto& b : table.blocks(n)) {
    if (right_extensions(table, b).size() >= 2) out.push_back(b);
  }
  return out;
}

bool is_balanced(const LanguageTable& table, std::size_t n) {
  auto level = table.blocks(n);
  if (level.empty()) return true;
  auto [lo, hi] = std::minmax_element(level.begin(), level.end(), [](const Block& a, const Block& b) {
    return count_letter(a, '1') < count_letter(b, '1');
  });
  return count_letter(*hi, '1') - count_letter(*lo, '1') <= 1;
}

bool has_BBb(std::string_view w) {
  // BBb occupies 2|B| + 1 letters starting at i; it equals a run where
  // w[j] == w[j + |B|] for the 2|B| + 1 - |B| = |B| + 1 positions j.
  const std::size_t n = w.size();
  for (std::size_t len = 1; 2 * len + 1 <= n; ++len) {
    std::size_t run = 0;
    for (std::size_t j = 0; j + len < n; ++j) {
      run = (w[j] == w[j + len]) ? run + 1 : 0;
      if (run >= len + 1) return true;
    }
  }
  return false;
}

std::size_t count_letter(std::string_view w, Letter a) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

Block reversed(std::string_view w) { return Block(w.rbegin(), w.rend()); }

}  // namespace hbd
