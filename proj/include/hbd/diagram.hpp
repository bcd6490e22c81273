#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbd/core.hpp"

namespace hbd {

enum class ProvenanceKind { Generic, SturmianClosedForm, MorseRule };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Generic;
  std::size_t horizon = 0;  // meaningful for Generic only

  std::string name() const;
  static Provenance parse(std::string_view name, std::size_t horizon);
  bool operator==(const Provenance&) const = default;
};

/// from -> to, emitting the last letter of `to`. A frontier arrow points at a
/// significant block longer than the diagram's depth bound.
struct Arrow {
  Block from;
  Block to;
  Letter letter = '0';
  bool frontier = false;

  bool operator==(const Arrow&) const = default;
};

/// Truncated HB diagram: vertices are significant blocks of length <= depth.
class HBDiagram {
 public:
  HBDiagram(std::size_t depth_bound, Provenance provenance, std::vector<Block> vertices,
            std::vector<Arrow> arrows);

  std::size_t depth_bound() const { return depth_; }
  const Provenance& provenance() const { return provenance_; }
  /// Shortlex-sorted.
  const std::vector<Block>& vertices() const { return vertices_; }
  /// Sorted by (from, to) in shortlex order.
  const std::vector<Arrow>& arrows() const { return arrows_; }
  /// Targets of frontier arrows, shortlex-sorted.
  std::vector<Block> frontier() const;

  bool has_vertex(std::string_view v) const;
  std::span<const Arrow> out_arrows(std::string_view v) const;
  std::size_t out_degree(std::string_view v) const { return out_arrows(v).size(); }
  std::vector<Block> vertices_of_length(std::size_t k) const;

  bool operator==(const HBDiagram&) const = default;

 private:
  std::size_t depth_;
  Provenance provenance_;
  std::vector<Block> vertices_;
  std::vector<Arrow> arrows_;
};

/// Vertices witnessed significant at `horizon`; arrows a -> sig(a·c).
/// Requires depth + 1 + horizon <= table.max_len().
HBDiagram build_generic(const LanguageTable& table, std::size_t depth, std::size_t horizon);

/// Closed-form Sturmian diagram from the left special sequence.
HBDiagram build_sturmian(std::string_view l_prefix, std::size_t depth);

/// Morse diagram: vertices and sig through the two-left-extension rule.
HBDiagram build_morse(const LanguageTable& table, std::size_t depth);

struct DiagramDiff {
  std::vector<Block> only_in_first;
  std::vector<Block> only_in_second;
  std::vector<Arrow> arrows_only_in_first;
  std::vector<Arrow> arrows_only_in_second;

  bool equal() const {
    return only_in_first.empty() && only_in_second.empty() && arrows_only_in_first.empty() &&
           arrows_only_in_second.empty();
  }
  std::string report() const;
};

/// Compares vertices and arrows among vertices of length <= up_to_len.
/// Frontier flags are ignored.
DiagramDiff diagram_equal(const HBDiagram& a, const HBDiagram& b, std::size_t up_to_len);

}  // namespace hbd
