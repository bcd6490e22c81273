#include "hbd/morse.hpp"

#include <bit>
#include <map>

#include "hbd/generators.hpp"

namespace hbd::morse {

std::uint64_t complexity(std::size_t n) {
  if (n == 0) return 1;
  if (n == 1) return 2;
  if (n == 2) return 4;
  const std::uint64_t m = n - 1;  // m = 2^r + q, 0 < q <= 2^r
  const int r = std::bit_width(m - 1) - 1;
  const std::uint64_t pow = std::uint64_t{1} << r;
  const std::uint64_t q = m - pow;
  return 2 * q <= pow ? 3 * pow + 4 * q : 4 * pow + 2 * q;
}

Letter dual(Letter a) {
  if (a == '0') return '1';
  if (a == '1') return '0';
  throw Error(std::string("dual of non-binary letter ") + a);
}

namespace {

// Cutting with daggers before positions offset, offset+2, ...; nullopt when an
// interior pair is not a 1-block.
std::optional<OneCutting> cut_at(std::string_view w, std::size_t offset) {
  OneCutting c;
  c.offset = offset;
  std::size_t i = 0;
  if (offset == 1) {
    c.leading = w[0];
    c.ancestor.push_back(dual(w[0]));
    i = 1;
  }
  for (; i + 1 < w.size(); i += 2) {
    if (w[i] == w[i + 1]) return std::nullopt;
    c.one_blocks.push_back(Block(w.substr(i, 2)));
    c.ancestor.push_back(w[i]);
  }
  if (i < w.size()) {
    c.trailing = w[i];
    c.ancestor.push_back(w[i]);
  }
  return c;
}

std::vector<OneCutting> pair_valid_cuttings(std::string_view w) {
  std::vector<OneCutting> out;
  for (std::size_t offset : {0u, 1u}) {
    if (offset == 1 && w.empty()) break;
    if (auto c = cut_at(w, offset)) out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace

bool in_language(std::string_view w) {
  if (!Alphabet::binary().admits(w)) return false;
  if (w.size() <= 2) return true;
  for (const auto& c : pair_valid_cuttings(w)) {
    if (in_language(c.ancestor)) return true;
  }
  return false;
}

Block OneCutting::reassemble() const {
  Block out;
  if (leading) out.push_back(*leading);
  for (const auto& b : one_blocks) out += b;
  if (trailing) out.push_back(*trailing);
  return out;
}

std::string OneCutting::to_string() const {
  std::string out;
  auto piece = [&](std::string_view s) {
    if (!out.empty()) out.push_back('|');
    out += s;
  };
  if (leading) piece(std::string(1, *leading));
  for (const auto& b : one_blocks) piece(b);
  if (trailing) piece(std::string(1, *trailing));
  return out;
}

std::vector<OneCutting> one_cuttings(std::string_view w) {
  if (w.empty()) throw Error("1-cuttings of the empty block");
  if (!in_language(w)) throw Error("block not in the Morse language: '" + std::string(w) + "'");
  return pair_valid_cuttings(w);
}

AncestorChain ancestor_chain(std::string_view w) {
  AncestorChain out;
  auto branch = [&](const std::vector<OneCutting>& cuts) {
    for (const auto& c : cuts) out.branch_ancestors.push_back(c.ancestor);
  };
  auto cuts = one_cuttings(w);
  if (cuts.size() != 1) {
    branch(cuts);
    return out;
  }
  Block current = cuts.front().ancestor;
  out.chain.push_back(current);
  while (current.size() >= 4) {
    cuts = one_cuttings(current);
    if (cuts.size() != 1) {  // only 0101 and 1010 at this length
      branch(cuts);
      break;
    }
    current = cuts.front().ancestor;
    out.chain.push_back(current);
  }
  return out;
}

RecognizabilityResult recognizability_index_check(std::size_t lookahead, std::size_t sample_len) {
  if (sample_len < 64 || sample_len < 4 * (lookahead + 1)) {
    throw Error("insufficient sample: " + std::to_string(sample_len) + " letters for lookahead " +
                std::to_string(lookahead));
  }
  const Block u = fixed_point_prefix(Substitution::morse(), '0', sample_len);
  const std::size_t width = lookahead + 1;
  // Order-1 cutting bars of a length-2 substitution are the even positions.
  std::map<std::string_view, std::size_t> at_bars;
  for (std::size_t n = 0; n + width <= u.size(); n += 2) {
    at_bars.emplace(std::string_view(u).substr(n, width), n);
  }
  RecognizabilityResult result{lookahead, sample_len, true, std::nullopt};
  for (std::size_t m = 1; m + width <= u.size(); m += 2) {
    auto it = at_bars.find(std::string_view(u).substr(m, width));
    if (it != at_bars.end()) {
      result.recognizable = false;
      result.counterexample = {it->second, m};
      break;
    }
  }
  return result;
}

}  // namespace hbd::morse
