#include "hbd/systems.hpp"

#include "hbd/morse.hpp"

namespace hbd {

std::string system_kind_name(SystemKind kind) {
  switch (kind) {
    case SystemKind::Fibonacci:
      return "fibonacci";
    case SystemKind::Sturmian:
      return "sturmian";
    case SystemKind::Morse:
      return "morse";
    case SystemKind::Substitution:
      return "substitution";
  }
  return "unknown";
}

SystemKind parse_system_kind(std::string_view name) {
  if (name == "fibonacci") return SystemKind::Fibonacci;
  if (name == "sturmian") return SystemKind::Sturmian;
  if (name == "morse") return SystemKind::Morse;
  if (name == "substitution") return SystemKind::Substitution;
  throw Error("unknown system '" + std::string(name) + "'");
}

SystemSpec SystemSpec::fibonacci() { return {SystemKind::Fibonacci, std::nullopt, std::nullopt, '0'}; }

SystemSpec SystemSpec::morse() { return {SystemKind::Morse, std::nullopt, std::nullopt, '0'}; }

SystemSpec SystemSpec::sturmian(DirectiveSpec directive) {
  return {SystemKind::Sturmian, std::move(directive), std::nullopt, '0'};
}

SystemSpec SystemSpec::from_substitution(Substitution sub, Letter seed) {
  if (!sub.alphabet().contains(seed)) throw Error(std::string("seed not in alphabet: ") + seed);
  return {SystemKind::Substitution, std::nullopt, std::move(sub), seed};
}

const Alphabet& SystemSpec::alphabet() const {
  static const Alphabet binary = Alphabet::binary();
  if (kind == SystemKind::Substitution) return substitution->alphabet();
  return binary;
}

DirectiveSpec SystemSpec::effective_directive() const {
  if (kind == SystemKind::Fibonacci) return DirectiveSpec({1}, 1);
  if (kind == SystemKind::Sturmian) {
    if (!directive) throw Error("sturmian system needs a directive");
    return *directive;
  }
  throw Error(system_kind_name(kind) + " system has no directive");
}

std::string SystemSpec::describe() const {
  switch (kind) {
    case SystemKind::Sturmian:
      return "sturmian directive=" + effective_directive().to_string();
    case SystemKind::Substitution:
      return "substitution images=" + substitution->to_string() + " seed=" + std::string(1, seed);
    default:
      return system_kind_name(kind);
  }
}

Block generate(const SystemSpec& spec, std::size_t m) {
  switch (spec.kind) {
    case SystemKind::Fibonacci:
    case SystemKind::Sturmian:
      return left_special_prefix(spec.effective_directive(), m);
    case SystemKind::Morse:
      return fixed_point_prefix(Substitution::morse(), '0', m);
    case SystemKind::Substitution:
      return fixed_point_prefix(*spec.substitution, spec.seed, m);
  }
  throw Error("unknown system");
}

Block left_special_sequence(const SystemSpec& spec, std::size_t m) {
  if (!spec.sturmian_family()) throw Error("left special sequence requested for a non-Sturmian system");
  return left_special_prefix(spec.effective_directive(), m);
}

std::optional<ComplexityFunction> known_complexity(const SystemSpec& spec) {
  if (spec.sturmian_family()) return ComplexityFunction([](std::size_t n) -> std::uint64_t { return n + 1; });
  if (spec.kind == SystemKind::Morse) return ComplexityFunction(morse::complexity);
  return std::nullopt;
}

namespace {

bool same_counts(const LanguageTable& a, const LanguageTable& b) {
  for (std::size_t k = 1; k <= a.max_len(); ++k)
    if (a.count(k) != b.count(k)) return false;
  return true;
}

}  // namespace

LanguageTable build_table(const SystemSpec& spec, const TableRequest& request) {
  if (request.max_len == 0) throw Error("max_len must be >= 1");
  std::size_t m = request.scan_len ? request.scan_len : default_scan_len(request.max_len);
  const auto expected = known_complexity(spec);
  if (expected) {
    while (true) {
      auto table = scan_language(generate(spec, m), request.max_len, spec.alphabet());
      try {
        return certify(table, *expected);
      } catch (const CertificationError&) {
        if (!request.grow || 2 * m > request.scan_cap) throw;
      }
      m *= 2;
    }
  }
  auto table = scan_language(generate(spec, m), request.max_len, spec.alphabet());
  while (true) {
    if (!request.grow) return table;
    if (2 * m > request.scan_cap) throw Error("language scan did not stabilise below the prefix cap");
    auto doubled = scan_language(generate(spec, 2 * m), request.max_len, spec.alphabet());
    if (same_counts(table, doubled)) return table;
    table = std::move(doubled);
    m *= 2;
  }
}

}  // namespace hbd
