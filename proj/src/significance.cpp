#include "hbd/significance.hpp"

#include <algorithm>

#include "hbd/kernels.hpp"

namespace hbd {

namespace {

void require_capacity(const LanguageTable& table, std::size_t block_len, std::size_t horizon) {
  if (block_len + horizon > table.max_len()) {
    throw std::out_of_range("horizon exceeds table: |w| + H = " +
                            std::to_string(block_len + horizon) + " > max_len " +
                            std::to_string(table.max_len()));
  }
}

void require_member(const LanguageTable& table, std::string_view w) {
  if (!table.contains(w)) throw Error("block not in language: '" + std::string(w) + "'");
}

}  // namespace

FollowerSet follower_horizon(const LanguageTable& table, std::string_view w, std::size_t horizon) {
  require_capacity(table, w.size(), horizon);
  require_member(table, w);
  FollowerSet out{Block(w), horizon, {}};
  if (horizon == 0) {
    out.followers.emplace_back();
    return out;
  }
  for (const auto& b : table.with_prefix(w, w.size() + horizon)) {
    out.followers.push_back(b.substr(w.size()));
  }
  return out;
}

SignificanceVerdict is_significant(const LanguageTable& table, std::string_view w,
                                   std::size_t horizon) {
  if (w.empty()) throw Error("significance is defined for nonempty blocks");
  require_capacity(table, w.size(), horizon);
  require_member(table, w);
  SignificanceVerdict verdict{Block(w), SignificanceVerdict::Kind::NotSignificantUpTo, {}, horizon};
  if (w.size() == 1) {
    verdict.kind = SignificanceVerdict::Kind::Witnessed;
    return verdict;
  }
  const std::string_view tail = w.substr(1);
  Block probe;
  for (std::size_t k = 1; k <= horizon; ++k) {
    for (const auto& tv : table.with_prefix(tail, tail.size() + k)) {
      probe.assign(1, w.front());
      probe += tv;
      if (!table.contains(probe)) {
        verdict.kind = SignificanceVerdict::Kind::Witnessed;
        verdict.witness = tv.substr(tail.size());
        return verdict;
      }
    }
  }
  return verdict;
}

Block sig(const LanguageTable& table, std::string_view w, std::size_t horizon) {
  if (w.empty()) throw Error("sig of the empty block");
  require_capacity(table, w.size(), horizon);
  require_member(table, w);
  for (std::size_t len = w.size(); len >= 2; --len) {
    auto suffix = w.substr(w.size() - len);
    if (is_significant(table, suffix, horizon).significant()) return Block(suffix);
  }
  return Block(w.substr(w.size() - 1));
}

std::vector<Block> sturmian_significant_blocks(std::string_view l_prefix, std::size_t n) {
  if (n == 0) throw Error("significant blocks have length >= 1");
  if (n == 1) return {"0", "1"};
  if (l_prefix.size() < n - 1) {
    throw Error("left special prefix too short: need " + std::to_string(n - 1) + " letters");
  }
  const Block l(l_prefix.substr(0, n - 1));
  return {"0" + l, "1" + l};
}

Block sturmian_sig(std::string_view l_prefix, const LanguageTable& table, std::string_view w,
                   std::size_t horizon) {
  if (w.empty()) throw Error("sig of the empty block");
  if (l_prefix.size() + 1 < w.size()) return sig(table, w, horizon);
  for (std::size_t len = w.size(); len >= 2; --len) {
    auto suffix = w.substr(w.size() - len);
    if (suffix.substr(1) == l_prefix.substr(0, len - 1)) return Block(suffix);
  }
  return sig(table, w, horizon);
}

bool morse_is_significant(const LanguageTable& table, std::string_view w) {
  if (w.empty()) throw Error("significance is defined for nonempty blocks");
  if (w.size() + 1 > table.max_len()) {
    throw std::out_of_range("block longer than max_len - 1");
  }
  require_member(table, w);
  if (w.size() == 1) return true;
  Block probe(w);
  probe[0] = '0';
  const bool with0 = table.contains(probe);
  probe[0] = '1';
  return with0 && table.contains(probe);
}

std::vector<std::size_t> significant_depths(const LanguageTable& table, std::string_view sequence,
                                            std::size_t p, std::size_t n_max, std::size_t horizon) {
  if (n_max == 0) throw Error("n_max must be >= 1");
  if (p >= sequence.size()) throw std::out_of_range("position beyond the sequence");
  if (p + 1 < n_max) throw std::out_of_range("position too close to the start for n_max");
  require_capacity(table, n_max, horizon);
  std::vector<std::size_t> depths;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (is_significant(table, sequence.substr(p + 1 - n, n), horizon).significant()) {
      depths.push_back(n);
    }
  }
  return depths;
}

SignificanceMap::SignificanceMap(const LanguageTable& table, std::size_t max_block_len,
                                 std::size_t horizon)
    : max_block_len_(max_block_len), horizon_(horizon) {
  require_capacity(table, max_block_len, horizon);
  std::vector<Block> candidates;
  for (std::size_t k = 1; k <= max_block_len; ++k) {
    auto level = table.blocks(k);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }
  for (auto& v : kernels::omp::classify(table, candidates, horizon)) {
    auto key = v.block;
    verdicts_.emplace(std::move(key), std::move(v));
  }
}

const SignificanceVerdict& SignificanceMap::verdict(std::string_view w) const {
  auto it = verdicts_.find(w);
  if (it == verdicts_.end()) {
    throw Error("block not classified (absent from language or too long): '" + std::string(w) + "'");
  }
  return it->second;
}

bool SignificanceMap::significant(std::string_view w) const { return verdict(w).significant(); }

Block SignificanceMap::sig(std::string_view w) const {
  if (w.empty()) throw Error("sig of the empty block");
  for (std::size_t len = w.size(); len >= 2; --len) {
    auto suffix = w.substr(w.size() - len);
    if (significant(suffix)) return Block(suffix);
  }
  return Block(w.substr(w.size() - 1));
}

std::vector<Block> SignificanceMap::significant_blocks(std::size_t k) const {
  std::vector<Block> out;
  for (const auto& [block, v] : verdicts_) {
    if (block.size() == k && v.significant()) out.push_back(block);
  }
  return out;
}

}  // namespace hbd
