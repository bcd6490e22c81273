#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>

#include "hbd/core.hpp"
#include "hbd/generators.hpp"

namespace hbd {

enum class SystemKind { Fibonacci, Sturmian, Morse, Substitution };

std::string system_kind_name(SystemKind kind);
SystemKind parse_system_kind(std::string_view name);

// A subshift given by its generating one-sided sequence.
struct SystemSpec {
  SystemKind kind = SystemKind::Fibonacci;
  std::optional<DirectiveSpec> directive;     // Sturmian only
  std::optional<Substitution> substitution;   // Substitution only
  Letter seed = '0';

  static SystemSpec fibonacci();
  static SystemSpec morse();
  static SystemSpec sturmian(DirectiveSpec directive);
  static SystemSpec from_substitution(Substitution sub, Letter seed);

  bool sturmian_family() const { return kind == SystemKind::Fibonacci || kind == SystemKind::Sturmian; }
  const Alphabet& alphabet() const;
  // Directive actually used: Fibonacci is d = (1, 1, 1, ...).
  DirectiveSpec effective_directive() const;
  std::string describe() const;
};

// First m letters of the generating sequence. For Sturmian systems this is the
// left special sequence l, which has the same language as the system.
Block generate(const SystemSpec& spec, std::size_t m);

// Left special sequence prefix; Sturmian systems only.
Block left_special_sequence(const SystemSpec& spec, std::size_t m);

// Closed-form complexity when known (n + 1 for Sturmian, Morse formula).
std::optional<ComplexityFunction> known_complexity(const SystemSpec& spec);

struct TableRequest {
  std::size_t max_len = 1;
  std::size_t scan_len = 0;   // 0 selects the default
  bool grow = true;           // double the prefix until certified or stable
  std::size_t scan_cap = std::size_t{1} << 24;
};

inline std::size_t default_scan_len(std::size_t max_len) {
  return std::max<std::size_t>(4096, 64 * max_len);
}

// Certified when a complexity function is known; otherwise a heuristic table
// whose counts survived one doubling of the prefix.
LanguageTable build_table(const SystemSpec& spec, const TableRequest& request);

}  // namespace hbd
