#include "hbd/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "hbd/significance.hpp"

namespace hbd {

std::string Provenance::name() const {
  switch (kind) {
    case ProvenanceKind::Generic:
      return "generic";
    case ProvenanceKind::SturmianClosedForm:
      return "sturmian-closed-form";
    case ProvenanceKind::MorseRule:
      return "morse-rule";
  }
  return "unknown";
}

Provenance Provenance::parse(std::string_view name, std::size_t horizon) {
  if (name == "generic") return {ProvenanceKind::Generic, horizon};
  if (name == "sturmian-closed-form") return {ProvenanceKind::SturmianClosedForm, 0};
  if (name == "morse-rule") return {ProvenanceKind::MorseRule, 0};
  throw Error("unknown provenance '" + std::string(name) + "'");
}

namespace {

bool arrow_less(const Arrow& a, const Arrow& b) {
  ShortLex lt;
  if (a.from != b.from) return lt(a.from, b.from);
  return lt(a.to, b.to);
}

}  // namespace

HBDiagram::HBDiagram(std::size_t depth_bound, Provenance provenance, std::vector<Block> vertices,
                     std::vector<Arrow> arrows)
    : depth_(depth_bound),
      provenance_(provenance),
      vertices_(std::move(vertices)),
      arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end(), ShortLex{});
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (const auto& v : vertices_) {
    if (v.empty() || v.size() > depth_) {
      throw Error("vertex '" + v + "' outside depth bound " + std::to_string(depth_));
    }
  }
  std::sort(arrows_.begin(), arrows_.end(), arrow_less);
  arrows_.erase(std::unique(arrows_.begin(), arrows_.end(),
                            [](const Arrow& a, const Arrow& b) { return a.from == b.from && a.to == b.to; }),
                arrows_.end());
  for (const auto& a : arrows_) {
    if (!has_vertex(a.from)) throw Error("arrow leaves non-vertex '" + a.from + "'");
    if (a.to.empty() || a.letter != a.to.back()) {
      throw Error("arrow " + a.from + " -> " + a.to + " has inconsistent letter");
    }
    if (a.frontier != (a.to.size() > depth_)) {
      throw Error("arrow " + a.from + " -> " + a.to + " has wrong frontier flag");
    }
    if (!a.frontier && !has_vertex(a.to)) throw Error("arrow enters non-vertex '" + a.to + "'");
  }
}

std::vector<Block> HBDiagram::frontier() const {
  std::vector<Block> out;
  for (const auto& a : arrows_)
    if (a.frontier) out.push_back(a.to);
  std::sort(out.begin(), out.end(), ShortLex{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool HBDiagram::has_vertex(std::string_view v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v, ShortLex{});
}

std::span<const Arrow> HBDiagram::out_arrows(std::string_view v) const {
  ShortLex lt;
  auto lo = std::lower_bound(arrows_.begin(), arrows_.end(), v,
                             [&](const Arrow& a, std::string_view key) { return lt(a.from, key); });
  auto hi = std::upper_bound(lo, arrows_.end(), v,
                             [&](std::string_view key, const Arrow& a) { return lt(key, a.from); });
  return {lo, hi};
}

std::vector<Block> HBDiagram::vertices_of_length(std::size_t k) const {
  std::vector<Block> out;
  for (const auto& v : vertices_)
    if (v.size() == k) out.push_back(v);
  return out;
}

HBDiagram build_generic(const LanguageTable& table, std::size_t depth, std::size_t horizon) {
  if (depth == 0) throw Error("depth bound must be >= 1");
  if (depth + 1 + horizon > table.max_len()) {
    throw std::out_of_range("table capacity: depth + 1 + horizon = " +
                            std::to_string(depth + 1 + horizon) + " > max_len " +
                            std::to_string(table.max_len()));
  }
  const SignificanceMap significance(table, depth + 1, horizon);
  std::vector<Block> vertices;
  for (std::size_t k = 1; k <= depth; ++k) {
    for (auto& b : significance.significant_blocks(k)) vertices.push_back(std::move(b));
  }
  std::vector<Arrow> arrows;
  for (const auto& a : vertices) {
    for (Letter c : table.alphabet().letters()) {
      Block ac = a + c;
      if (!table.contains(ac)) continue;
      Block target = significance.sig(ac);
      const bool frontier = target.size() > depth;
      arrows.push_back({a, std::move(target), c, frontier});
    }
  }
  return HBDiagram(depth, {ProvenanceKind::Generic, horizon}, std::move(vertices), std::move(arrows));
}

HBDiagram build_sturmian(std::string_view l, std::size_t depth) {
  if (depth == 0) throw Error("depth bound must be >= 1");
  if (l.size() < depth) {
    throw Error("left special prefix too short: need " + std::to_string(depth) + " letters, have " +
                std::to_string(l.size()));
  }
  if (!Alphabet::binary().admits(l)) throw Error("left special prefix must be binary");
  auto L = [&](std::size_t n) { return Block(l.substr(0, n)); };
  const Letter l1 = l[0];
  const Letter other = l1 == '0' ? '1' : '0';

  std::vector<Block> vertices{"0", "1"};
  for (std::size_t n = 1; n + 1 <= depth; ++n) {
    vertices.push_back("0" + L(n));
    vertices.push_back("1" + L(n));
  }

  std::vector<Arrow> arrows;
  // Spines x·L_n -> x·L_{n+1}; from the letters these are 0 -> 0l_1, 1 -> 1l_1.
  for (const auto& v : vertices) {
    Block to = v + l[v.size() - 1];
    const bool frontier = to.size() > depth;
    arrows.push_back({v, to, to.back(), frontier});
  }

  // Cross arrows leave the right special vertices. The length-1 one is l_1,
  // crossing to the other letter; each later one x·L_n crosses to w·L_{m+1}
  // when its first letter differs from the previous right special w·L_m, and
  // otherwise shares the previous cross target.
  Block previous_rs(1, l1);
  Block previous_target(1, other);
  arrows.push_back({previous_rs, previous_target, other, false});
  for (std::size_t k = 2; k <= depth; ++k) {
    Block candidate = reversed(l.substr(0, k));
    if (std::string_view(candidate).substr(1) != l.substr(0, k - 1)) continue;
    Block target = candidate.front() != previous_rs.front()
                       ? previous_rs + l[previous_rs.size() - 1]
                       : previous_target;
    arrows.push_back({candidate, target, target.back(), false});
    previous_rs = std::move(candidate);
    previous_target = std::move(target);
  }
  return HBDiagram(depth, {ProvenanceKind::SturmianClosedForm, 0}, std::move(vertices),
                   std::move(arrows));
}

HBDiagram build_morse(const LanguageTable& table, std::size_t depth) {
  if (depth == 0) throw Error("depth bound must be >= 1");
  if (!table.certified()) throw Error("build_morse needs a certified Morse table");
  if (depth + 2 > table.max_len()) {
    throw std::out_of_range("table capacity: depth + 2 > max_len " + std::to_string(table.max_len()));
  }
  auto morse_sig = [&](std::string_view w) {
    for (std::size_t len = w.size(); len >= 2; --len) {
      auto suffix = w.substr(w.size() - len);
      if (morse_is_significant(table, suffix)) return Block(suffix);
    }
    return Block(w.substr(w.size() - 1));
  };
  std::vector<Block> vertices;
  for (std::size_t k = 1; k <= depth; ++k) {
    for (const auto& b : table.blocks(k))
      if (morse_is_significant(table, b)) vertices.push_back(b);
  }
  std::vector<Arrow> arrows;
  for (const auto& a : vertices) {
    for (Letter c : table.alphabet().letters()) {
      Block ac = a + c;
      if (!table.contains(ac)) continue;
      Block target = morse_sig(ac);
      const bool frontier = target.size() > depth;
      arrows.push_back({a, std::move(target), c, frontier});
    }
  }
  return HBDiagram(depth, {ProvenanceKind::MorseRule, 0}, std::move(vertices), std::move(arrows));
}

std::string DiagramDiff::report() const {
  if (equal()) return "diagrams agree";
  std::ostringstream os;
  auto list = [&](const char* title, const std::vector<Block>& xs) {
    if (xs.empty()) return;
    os << title << ':';
    for (const auto& x : xs) os << ' ' << x;
    os << '\n';
  };
  auto list_arrows = [&](const char* title, const std::vector<Arrow>& xs) {
    if (xs.empty()) return;
    os << title << ':';
    for (const auto& a : xs) os << ' ' << a.from << "->" << a.to;
    os << '\n';
  };
  list("vertices only in first", only_in_first);
  list("vertices only in second", only_in_second);
  list_arrows("arrows only in first", arrows_only_in_first);
  list_arrows("arrows only in second", arrows_only_in_second);
  return os.str();
}

DiagramDiff diagram_equal(const HBDiagram& a, const HBDiagram& b, std::size_t up_to_len) {
  auto vertex_set = [&](const HBDiagram& d) {
    std::set<Block, ShortLex> out;
    for (const auto& v : d.vertices())
      if (v.size() <= up_to_len) out.insert(v);
    return out;
  };
  using Key = std::tuple<Block, Block, Letter>;
  auto arrow_set = [&](const HBDiagram& d) {
    std::set<Key> out;
    for (const auto& e : d.arrows())
      if (e.from.size() <= up_to_len && e.to.size() <= up_to_len) out.insert({e.from, e.to, e.letter});
    return out;
  };
  const auto va = vertex_set(a), vb = vertex_set(b);
  const auto ea = arrow_set(a), eb = arrow_set(b);
  DiagramDiff diff;
  std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(),
                      std::back_inserter(diff.only_in_first), ShortLex{});
  std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(),
                      std::back_inserter(diff.only_in_second), ShortLex{});
  for (const auto& k : ea)
    if (!eb.count(k)) diff.arrows_only_in_first.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), false});
  for (const auto& k : eb)
    if (!ea.count(k)) diff.arrows_only_in_second.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), false});
  return diff;
}

}  // namespace hbd
