#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbd/diagram.hpp"
#include "hbd/systems.hpp"

namespace hbd::cli {

enum class Format { Dot, Json, Report };

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsage = 2 };

// Thrown for invalid configurations; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct JobConfig {
  SystemSpec system = SystemSpec::fibonacci();
  std::optional<std::size_t> depth;      // N
  std::optional<std::size_t> horizon;    // H, default 2(N+1)+8
  std::optional<std::size_t> scan_len;   // M, default max(4096, 64 * max_len)
  Format format = Format::Report;
  std::string out;                       // empty: stdout
  std::string builder = "generic";       // generic | closed-form | morse-rule
  std::optional<std::size_t> n;
  std::string block;
  std::size_t len = 64;

  std::size_t resolved_depth() const { return depth.value_or(8); }
  std::size_t resolved_horizon() const;
  std::size_t max_len() const { return resolved_depth() + 1 + resolved_horizon(); }
  std::size_t resolved_scan_len() const { return scan_len.value_or(default_scan_len(max_len())); }
  // Field-level checks: N >= 1, H >= 1, M >= N + H.
  void validate() const;
};

Format parse_format(std::string_view name);

// Reproducibility stamp carried by every artifact.
struct RunMeta {
  std::string system;
  std::size_t depth = 0;
  std::size_t horizon = 0;
  std::size_t scan_len = 0;
  std::string provenance;
};

std::string to_dot(const HBDiagram& d, const RunMeta& meta);
nlohmann::ordered_json to_json(const HBDiagram& d, const RunMeta& meta);
HBDiagram diagram_from_json(const nlohmann::json& j);
std::string to_report(const HBDiagram& d, const RunMeta& meta);

// Entry point shared by the executable and the tests; args exclude argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbd::cli
