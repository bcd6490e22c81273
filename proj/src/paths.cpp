#include "hbd/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hbd {

Block project(const DiagramPath& path) {
  Block out;
  out.reserve(path.vertices.size());
  for (const auto& v : path.vertices) {
    if (v.empty()) throw Error("path contains an empty vertex");
    out.push_back(v.back());
  }
  return out;
}

namespace {

// Walks the layers of rooted paths up to position n-1 and refuses when a
// frontier arrow (or a dead end) could be used by a path with n vertices.
void check_safe_depth(const HBDiagram& d, std::size_t n) {
  std::set<Block, ShortLex> layer;
  for (const auto& v : d.vertices_of_length(1)) layer.insert(v);
  for (std::size_t step = 1; step < n; ++step) {
    std::set<Block, ShortLex> next;
    for (const auto& v : layer) {
      auto out = d.out_arrows(v);
      if (out.empty()) {
        throw Error("depth bound too small for requested n: vertex '" + v + "' has no out-arrows");
      }
      for (const auto& a : out) {
        if (a.frontier) {
          throw Error("depth bound too small for requested n = " + std::to_string(n) +
                      ": frontier arrow " + a.from + " -> " + a.to + " reachable");
        }
        next.insert(a.to);
      }
    }
    layer = std::move(next);
  }
}

}  // namespace

std::uint64_t count_rooted_paths(const HBDiagram& d, std::size_t n) {
  if (n == 0) throw Error("paths have at least one vertex");
  check_safe_depth(d, n);
  std::map<Block, std::uint64_t, ShortLex> layer;
  for (const auto& v : d.vertices_of_length(1)) layer[v] = 1;
  for (std::size_t step = 1; step < n; ++step) {
    std::map<Block, std::uint64_t, ShortLex> next;
    for (const auto& [v, count] : layer)
      for (const auto& a : d.out_arrows(v)) next[a.to] += count;
    layer = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [v, count] : layer) total += count;
  return total;
}

std::vector<DiagramPath> rooted_paths(const HBDiagram& d, std::size_t n) {
  if (n == 0) throw Error("paths have at least one vertex");
  check_safe_depth(d, n);
  std::vector<DiagramPath> done;
  std::vector<DiagramPath> frontier;
  for (const auto& v : d.vertices_of_length(1)) frontier.push_back({{v}});
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<DiagramPath> next;
    for (const auto& p : frontier) {
      for (const auto& a : d.out_arrows(p.vertices.back())) {
        DiagramPath q = p;
        q.vertices.push_back(a.to);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

std::string BijectionReport::report() const {
  std::ostringstream os;
  os << "n=" << n << " paths=" << path_count << " language=" << language_count;
  auto list = [&](const char* title, const std::vector<Block>& xs) {
    if (xs.empty()) return;
    os << ' ' << title << '=';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  };
  list("collisions", collisions);
  list("missing", missing);
  list("extra", extra);
  return os.str();
}

BijectionReport verify_bijection(const HBDiagram& d, const LanguageTable& table, std::size_t n) {
  BijectionReport r;
  r.n = n;
  const auto paths = rooted_paths(d, n);
  r.path_count = paths.size();
  std::map<Block, std::size_t> hits;
  for (const auto& p : paths) ++hits[project(p)];
  const auto language = table.blocks(n);
  r.language_count = language.size();
  for (const auto& [block, count] : hits) {
    if (count > 1) r.collisions.push_back(block);
    if (!std::binary_search(language.begin(), language.end(), block)) r.extra.push_back(block);
  }
  for (const auto& block : language)
    if (!hits.count(block)) r.missing.push_back(block);
  return r;
}

Block unique_double_extension(const HBDiagram& d, std::size_t n) {
  if (n < 2) throw Error("unique_double_extension needs n >= 2");
  std::vector<Block> found;
  for (const auto& p : rooted_paths(d, n - 1)) {
    if (d.out_degree(p.vertices.back()) == 2) found.push_back(project(p));
  }
  if (found.size() != 1) {
    throw Error("expected exactly one doubly extendable rooted path of length " +
                std::to_string(n - 1) + ", found " + std::to_string(found.size()));
  }
  return found.front();
}

}  // namespace hbd
