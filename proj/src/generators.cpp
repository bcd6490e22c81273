#include "hbd/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hbd {

DirectiveSpec::DirectiveSpec(std::vector<int> t, std::size_t tail)
    : terms(std::move(t)), periodic_tail(tail) {
  if (terms.empty()) throw Error("directive needs at least one term");
  if (periodic_tail > terms.size()) throw Error("periodic tail longer than directive");
  if (terms[0] < 0) throw Error("directive term d_1 must be >= 0");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= 0) throw Error("directive term d_" + std::to_string(i + 1) + " must be > 0");
  }
  // A repeating d_1 = 0 would put a zero after position 1.
  if (periodic_tail == terms.size() && terms[0] == 0) {
    throw Error("periodic tail cannot repeat d_1 = 0");
  }
}

std::size_t DirectiveSpec::available_terms() const {
  return unbounded() ? static_cast<std::size_t>(-1) : terms.size();
}

int DirectiveSpec::term(std::size_t i) const {
  if (i == 0) throw Error("directive terms are indexed from 1");
  if (i <= terms.size()) return terms[i - 1];
  if (!unbounded()) {
    throw Error("directive exhausted: term " + std::to_string(i) + " requested, " +
                std::to_string(terms.size()) + " supplied");
  }
  const std::size_t start = terms.size() - periodic_tail;
  return terms[start + (i - 1 - start) % periodic_tail];
}

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

DirectiveSpec DirectiveSpec::parse(std::string_view text) {
  std::vector<int> terms;
  std::size_t tail = 0;
  std::string_view head = text;
  std::string_view periodic;
  if (auto open = text.find('['); open != std::string_view::npos) {
    auto close = text.find(']', open);
    if (close == std::string_view::npos || close + 1 != text.size()) {
      throw Error("malformed directive '" + std::string(text) + "': periodic tail must end it");
    }
    head = text.substr(0, open);
    periodic = text.substr(open + 1, close - open - 1);
  }
  while (!head.empty() && (head.back() == ',' || head.back() == ' ')) head.remove_suffix(1);
  if (!head.empty()) {
    for (auto part : split(head, ',')) terms.push_back(parse_int(part));
  }
  if (!periodic.empty()) {
    for (auto part : split(periodic, ',')) {
      terms.push_back(parse_int(part));
      ++tail;
    }
  }
  return DirectiveSpec(std::move(terms), tail);
}

std::string DirectiveSpec::to_string() const {
  std::ostringstream os;
  const std::size_t start = terms.size() - periodic_tail;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) os << ',';
    if (unbounded() && i == start) os << '[';
    os << terms[i];
  }
  if (unbounded()) os << ']';
  return os.str();
}

DirectiveSpec directive_from_continued_fraction(std::span<const int> a, std::size_t periodic_tail) {
  // [0; a_1, a_2, ...]: a_0 must be 0 for a slope in (0, 1).
  if (a.size() < 2 || a[0] != 0) throw Error("continued fraction must be [0; a_1, ...]");
  if (periodic_tail > a.size() - 1) throw Error("periodic tail longer than partial quotients");
  std::vector<int> d(a.begin() + 1, a.end());
  if (d[0] < 1) throw Error("a_1 must be >= 1");
  if (periodic_tail == d.size()) {
    // a_1 is shifted by one, so the period is unrolled once: (a_2..a_k, a_1).
    d.push_back(d[0]);
    d[0] -= 1;
    return DirectiveSpec(std::move(d), periodic_tail);
  }
  d[0] -= 1;
  return DirectiveSpec(std::move(d), periodic_tail);
}

RationalSlope::RationalSlope(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd)
    : alpha_num(an), alpha_den(ad), beta_num(bn), beta_den(bd) {
  if (ad <= 0 || bd <= 0) throw Error("slope denominators must be positive");
  if (an < 0 || an > ad || bn < 0 || bn > bd) throw Error("slope and intercept must lie in [0, 1]");
}

namespace {

__extension__ using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

// alpha * n + beta as a single fraction num / den.
std::pair<i128, i128> line_at(const RationalSlope& s, std::size_t n) {
  const i128 den = i128(s.alpha_den) * s.beta_den;
  const i128 num = i128(s.alpha_num) * s.beta_den * i128(n) + i128(s.beta_num) * s.alpha_den;
  return {num, den};
}

template <typename Round>
Block mechanical(const RationalSlope& s, std::size_t n, Round round) {
  Block out;
  out.reserve(n);
  auto [num0, den] = line_at(s, 0);
  i128 prev = round(num0, den);
  for (std::size_t i = 0; i < n; ++i) {
    auto [num, d] = line_at(s, i + 1);
    const i128 cur = round(num, d);
    out.push_back(cur - prev == 0 ? '0' : '1');
    prev = cur;
  }
  return out;
}

}  // namespace

Block lower_mechanical(const RationalSlope& slope, std::size_t n) {
  return mechanical(slope, n, floor_div);
}

Block upper_mechanical(const RationalSlope& slope, std::size_t n) {
  return mechanical(slope, n, ceil_div);
}

Block standard_sequence(const DirectiveSpec& spec, int k) {
  if (k < -1) throw Error("standard sequence index must be >= -1");
  if (k == -1) return "1";
  Block older = "1";
  Block previous = "0";
  for (int i = 1; i <= k; ++i) {
    const int d = spec.term(static_cast<std::size_t>(i));
    Block next;
    next.reserve(previous.size() * static_cast<std::size_t>(d) + older.size());
    for (int r = 0; r < d; ++r) next += previous;
    next += older;
    older = std::move(previous);
    previous = std::move(next);
  }
  return previous;
}

Block left_special_prefix(const DirectiveSpec& spec, std::size_t m) {
  // s_k is a prefix of l for k >= 1; grow until long enough.
  Block older = "1";
  Block previous = "0";
  for (std::size_t i = 1;; ++i) {
    const int d = spec.term(i);
    Block next;
    for (int r = 0; r < d; ++r) next += previous;
    next += older;
    older = std::move(previous);
    previous = std::move(next);
    if (previous.size() >= m) return previous.substr(0, m);
  }
}

Substitution::Substitution(Alphabet alphabet, std::map<Letter, Block> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  for (Letter a : alphabet_.letters()) {
    auto it = images_.find(a);
    if (it == images_.end()) throw Error(std::string("no image for letter ") + a);
    if (it->second.empty()) throw Error(std::string("empty image for letter ") + a);
    if (!alphabet_.admits(it->second)) {
      throw Error(std::string("image of ") + a + " uses letters outside the alphabet");
    }
  }
  if (images_.size() != alphabet_.size()) throw Error("images given for letters outside the alphabet");
}

Substitution Substitution::morse() { return Substitution(Alphabet::binary(), {{'0', "01"}, {'1', "10"}}); }

Substitution Substitution::fibonacci() {
  return Substitution(Alphabet::binary(), {{'0', "01"}, {'1', "0"}});
}

Substitution Substitution::parse(std::string_view text) {
  std::string letters;
  std::map<Letter, Block> images;
  for (auto part : split(text, ',')) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    auto colon = part.find(':');
    if (colon != 1) throw Error("malformed image '" + std::string(part) + "', expected a:word");
    const Letter a = part[0];
    if (images.count(a)) throw Error(std::string("duplicate image for letter ") + a);
    letters.push_back(a);
    images[a] = Block(part.substr(2));
  }
  return Substitution(Alphabet(letters), std::move(images));
}

const Block& Substitution::image(Letter a) const {
  auto it = images_.find(a);
  if (it == images_.end()) throw Error(std::string("letter not in alphabet: ") + a);
  return it->second;
}

Block Substitution::apply(std::string_view w) const {
  Block out;
  for (Letter a : w) out += image(a);
  return out;
}

bool Substitution::is_primitive() const {
  const std::size_t d = alphabet_.size();
  // reach[i][j]: letter j occurs in sub^k(letter i).
  std::vector<std::vector<bool>> step(d, std::vector<bool>(d, false));
  std::size_t max_image = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& img = image(alphabet_.letters()[i]);
    max_image = std::max(max_image, img.size());
    for (Letter b : img) step[i][alphabet_.index_of(b)] = true;
  }
  const std::size_t bound = std::max(d * max_image, (d - 1) * (d - 1) + 1);
  auto reach = step;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool all = true;
    for (const auto& row : reach) all = all && std::all_of(row.begin(), row.end(), [](bool b) { return b; });
    if (all) return true;
    std::vector<std::vector<bool>> next(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t m = 0; m < d; ++m)
        if (reach[i][m])
          for (std::size_t j = 0; j < d; ++j) next[i][j] = next[i][j] || step[m][j];
    reach = std::move(next);
  }
  return false;
}

std::string Substitution::to_string() const {
  std::string out;
  for (Letter a : alphabet_.letters()) {
    if (!out.empty()) out += ',';
    out += a;
    out += ':';
    out += image(a);
  }
  return out;
}

Block fixed_point_prefix(const Substitution& sub, Letter seed, std::size_t m) {
  if (m == 0) throw Error("prefix length must be >= 1");
  const Block& first = sub.image(seed);
  if (first.front() != seed) {
    throw Error(std::string("not prolongable: image of ") + seed + " does not start with " + seed);
  }
  if (first.size() == 1) return Block(m, seed);  // seed^infinity is fixed
  Block w(1, seed);
  while (w.size() < m) w = sub.apply(w);
  w.resize(m);
  return w;
}

}  // namespace hbd
