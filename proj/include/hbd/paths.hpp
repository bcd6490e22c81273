#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hbd/core.hpp"
#include "hbd/diagram.hpp"

namespace hbd {

/// A path on a diagram; its length is the number of vertices.
struct DiagramPath {
  std::vector<Block> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const DiagramPath&) const = default;
  auto operator<=>(const DiagramPath&) const = default;
};

/// Last letter of each vertex.
Block project(const DiagramPath& path);

/// Number of paths with n vertices starting at a length-1 vertex. Throws when
/// a frontier arrow is reachable within n-1 steps.
std::uint64_t count_rooted_paths(const HBDiagram& d, std::size_t n);

/// All rooted paths with n vertices, ordered lexicographically on labels.
std::vector<DiagramPath> rooted_paths(const HBDiagram& d, std::size_t n);

struct BijectionReport {
  std::size_t n = 0;
  std::size_t path_count = 0;
  std::size_t language_count = 0;
  std::vector<Block> collisions;  // projections hit by more than one path
  std::vector<Block> missing;     // language blocks with no path
  std::vector<Block> extra;       // projections outside the language

  bool ok() const { return collisions.empty() && missing.empty() && extra.empty(); }
  std::string report() const;
};

BijectionReport verify_bijection(const HBDiagram& d, const LanguageTable& table, std::size_t n);

/// Projection of the unique rooted path with n-1 vertices whose end vertex has
/// two out-arrows. Throws when zero or several such paths exist.
Block unique_double_extension(const HBDiagram& d, std::size_t n);

}  // namespace hbd
