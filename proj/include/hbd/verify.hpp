#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hbd/core.hpp"
#include "hbd/diagram.hpp"
#include "hbd/significance.hpp"
#include "hbd/systems.hpp"

namespace hbd {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first offenders when failing
};

// Each check examines every case it can reach and records at most a handful
// of offenders.
CheckResult check_closure(const LanguageTable& table);
CheckResult check_consecsig(const SignificanceMap& map);
CheckResult check_siglem(const LanguageTable& table, const SignificanceMap& map, std::size_t max_len);
CheckResult check_leftextend(const LanguageTable& table, const SignificanceMap& map);
CheckResult check_arrow_soundness(const HBDiagram& d, const LanguageTable& table, const SignificanceMap& map);
CheckResult check_iteratedsig(const HBDiagram& d, const SignificanceMap& map, std::size_t max_path_len);
CheckResult check_distinctpath(const HBDiagram& d, const LanguageTable& table, std::size_t max_n);
CheckResult check_pathprop(const HBDiagram& d, const LanguageTable& table, std::size_t max_n);
CheckResult check_path_complexity(const HBDiagram& d, const ComplexityFunction& p, std::size_t max_n);

CheckResult check_sturmian_special_blocks(const LanguageTable& table, std::string_view l);
CheckResult check_balance(const LanguageTable& table);
CheckResult check_sturmian_significance(const SignificanceMap& map, std::string_view l);
CheckResult check_sturmian_diagram(const HBDiagram& generic, std::string_view l);
CheckResult check_double_extension(const HBDiagram& d, const LanguageTable& table, std::size_t max_n);

CheckResult check_no_bbb(const LanguageTable& table);
CheckResult check_morse_significance(const LanguageTable& table, const SignificanceMap& map);
CheckResult check_morse_diagram(const HBDiagram& generic, const LanguageTable& table);
CheckResult check_morse_cuttings(const LanguageTable& table, std::size_t max_len);
CheckResult check_recognizability(std::size_t sample_len);

// Largest n <= cap for which rooted length-n paths avoid the frontier.
std::size_t safe_path_length(const HBDiagram& d, std::size_t cap);

struct SuiteOptions {
  std::size_t siglem_len = 12;
  std::size_t path_len = 10;
  std::size_t bijection_len = 12;
};

// Runs every check that applies to the system. The diagram must be the
// generic one built from `table` at the map's horizon.
std::vector<CheckResult> run_property_suite(const SystemSpec& spec, const LanguageTable& table,
                                            const HBDiagram& generic, const SignificanceMap& map,
                                            const SuiteOptions& options = {});

}  // namespace hbd
