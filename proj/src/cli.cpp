#include "hbd/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "hbd/paths.hpp"
#include "hbd/significance.hpp"
#include "hbd/verify.hpp"

namespace hbd::cli {

using nlohmann::ordered_json;

std::size_t JobConfig::resolved_horizon() const {
  return horizon.value_or(default_horizon(resolved_depth() + 1));
}

void JobConfig::validate() const {
  if (resolved_depth() < 1) throw UsageError("depth: must be >= 1");
  if (resolved_horizon() < 1) throw UsageError("horizon: must be >= 1");
  if (resolved_scan_len() < resolved_depth() + resolved_horizon()) {
    throw UsageError("scan-len: must be >= depth + horizon = " +
                     std::to_string(resolved_depth() + resolved_horizon()));
  }
  if (system.kind == SystemKind::Sturmian && !system.directive) {
    throw UsageError("directive: required for --system sturmian");
  }
  if (system.kind == SystemKind::Substitution && !system.substitution) {
    throw UsageError("images: required for --system substitution");
  }
}

Format parse_format(std::string_view name) {
  if (name == "dot") return Format::Dot;
  if (name == "json") return Format::Json;
  if (name == "report") return Format::Report;
  throw UsageError("format: unknown value '" + std::string(name) + "' (dot, json, report)");
}

namespace {

std::string header(const RunMeta& m) {
  std::ostringstream os;
  os << "system=" << m.system << " depth=" << m.depth << " horizon=" << m.horizon
     << " scan_len=" << m.scan_len << " provenance=" << m.provenance;
  return os.str();
}

ordered_json meta_json(const RunMeta& m) {
  ordered_json j;
  j["system"] = m.system;
  j["depth"] = m.depth;
  j["horizon"] = m.horizon;
  j["scan_len"] = m.scan_len;
  j["provenance"] = m.provenance;
  return j;
}

std::string dot_id(std::string_view v) { return "\"" + std::string(v) + "\""; }

}  // namespace

std::string to_dot(const HBDiagram& d, const RunMeta& meta) {
  std::ostringstream os;
  os << "// " << header(meta) << "\n";
  os << "digraph HB {\n  node [shape=box];\n";
  for (std::size_t k = 1; k <= d.depth_bound(); ++k) {
    const auto level = d.vertices_of_length(k);
    if (level.empty()) continue;
    os << "  { rank=same;";
    for (const auto& v : level) os << ' ' << dot_id(v) << ';';
    os << " }\n";
  }
  for (const auto& f : d.frontier()) os << "  " << dot_id(f) << " [style=dashed];\n";
  for (const auto& a : d.arrows()) {
    os << "  " << dot_id(a.from) << " -> " << dot_id(a.to) << " [label=\"" << a.letter << '"';
    if (a.frontier) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

ordered_json to_json(const HBDiagram& d, const RunMeta& meta) {
  ordered_json j = meta_json(meta);
  j["vertices"] = d.vertices();
  ordered_json arrows = ordered_json::array();
  for (const auto& a : d.arrows()) {
    arrows.push_back({{"from", a.from}, {"to", a.to}, {"letter", std::string(1, a.letter)}});
  }
  j["arrows"] = std::move(arrows);
  j["frontier"] = d.frontier();
  return j;
}

HBDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    const auto depth = j.at("depth").get<std::size_t>();
    const auto provenance =
        Provenance::parse(j.at("provenance").get<std::string>(), j.at("horizon").get<std::size_t>());
    auto vertices = j.at("vertices").get<std::vector<Block>>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      const auto letter = a.at("letter").get<std::string>();
      if (letter.size() != 1) throw Error("arrow letter must be a single symbol");
      Block to = a.at("to").get<Block>();
      const bool frontier = to.size() > depth;
      arrows.push_back({a.at("from").get<Block>(), std::move(to), letter[0], frontier});
    }
    return HBDiagram(depth, provenance, std::move(vertices), std::move(arrows));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed diagram json: ") + e.what());
  }
}

std::string to_report(const HBDiagram& d, const RunMeta& meta) {
  std::ostringstream os;
  os << "# " << header(meta) << "\n";
  os << "vertices " << d.vertices().size() << "\n";
  for (std::size_t k = 1; k <= d.depth_bound(); ++k) {
    const auto level = d.vertices_of_length(k);
    os << "  " << k << ":";
    for (const auto& v : level) os << ' ' << v;
    os << "\n";
  }
  os << "arrows " << d.arrows().size() << "\n";
  for (const auto& a : d.arrows()) {
    os << "  " << a.from << " -> " << a.to << " (" << a.letter << ")" << (a.frontier ? " frontier" : "")
       << "\n";
  }
  return os.str();
}

namespace {

struct Emitter {
  const JobConfig& cfg;
  std::ostream& out;

  void operator()(const std::string& text) const {
    if (cfg.out.empty()) {
      out << text;
      return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("out: cannot open '" + cfg.out + "' for writing");
    file << text;
  }
};

void require_format(const JobConfig& cfg, std::initializer_list<Format> allowed, const char* command) {
  for (Format f : allowed)
    if (cfg.format == f) return;
  throw UsageError(std::string("format: not supported by ") + command);
}

LanguageTable table_for(const JobConfig& cfg, std::size_t max_len) {
  TableRequest request;
  request.max_len = max_len;
  request.scan_len = cfg.resolved_scan_len();
  request.grow = !cfg.scan_len.has_value();
  return build_table(cfg.system, request);
}

RunMeta meta_for(const JobConfig& cfg, const LanguageTable& table, std::string provenance) {
  return {cfg.system.describe(), cfg.resolved_depth(), cfg.resolved_horizon(), table.source_prefix_len(),
          std::move(provenance)};
}

std::string table_provenance(const LanguageTable& table) {
  return table.certified() ? "certified" : "heuristic";
}

HBDiagram build_with(const JobConfig& cfg, const LanguageTable& table) {
  const std::size_t n = cfg.resolved_depth();
  if (cfg.builder == "generic") return build_generic(table, n, cfg.resolved_horizon());
  if (cfg.builder == "closed-form") {
    if (!cfg.system.sturmian_family()) throw UsageError("builder: closed-form needs a Sturmian system");
    return build_sturmian(left_special_sequence(cfg.system, n), n);
  }
  if (cfg.builder == "morse-rule") {
    if (cfg.system.kind != SystemKind::Morse) throw UsageError("builder: morse-rule needs --system morse");
    return build_morse(table, n);
  }
  throw UsageError("builder: unknown value '" + cfg.builder + "' (generic, closed-form, morse-rule)");
}

std::string join_blocks(const std::vector<Block>& xs) {
  if (xs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out;
}

int cmd_gen(const JobConfig& cfg, const Emitter& emit) {
  require_format(cfg, {Format::Report, Format::Json}, "gen");
  if (cfg.len == 0) throw UsageError("len: must be >= 1");
  const Block seq = generate(cfg.system, cfg.len);
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["system"] = cfg.system.describe();
    j["len"] = cfg.len;
    j["sequence"] = seq;
    emit(j.dump(2) + "\n");
  } else {
    emit(seq + "\n");
  }
  return kOk;
}

int cmd_lang(const JobConfig& cfg, const Emitter& emit) {
  require_format(cfg, {Format::Report, Format::Json}, "lang");
  const std::size_t top = cfg.n.value_or(cfg.resolved_depth());
  if (top == 0) throw UsageError("n: must be >= 1");
  const auto table = table_for(cfg, std::max(cfg.max_len(), top + 1));
  const auto expected = known_complexity(cfg.system);
  const auto meta = meta_for(cfg, table, table_provenance(table));
  ordered_json rows = ordered_json::array();
  std::ostringstream os;
  os << "# " << header(meta) << "\n";
  os << "n\tblocks\texpected\tleft_special\tright_special\n";
  for (std::size_t k = 1; k <= top; ++k) {
    const auto left = left_special_blocks(table, k);
    const auto right = right_special_blocks(table, k);
    const std::string want = expected ? std::to_string((*expected)(k)) : "-";
    os << k << '\t' << table.count(k) << '\t' << want << '\t' << join_blocks(left) << '\t'
       << join_blocks(right) << "\n";
    ordered_json row;
    row["n"] = k;
    row["blocks"] = table.count(k);
    row["expected"] = expected ? ordered_json((*expected)(k)) : ordered_json(nullptr);
    row["left_special"] = left;
    row["right_special"] = right;
    rows.push_back(std::move(row));
  }
  if (cfg.format == Format::Json) {
    auto j = meta_json(meta);
    j["complexity"] = std::move(rows);
    emit(j.dump(2) + "\n");
  } else {
    emit(os.str());
  }
  return kOk;
}

int cmd_sig(const JobConfig& cfg, const Emitter& emit) {
  require_format(cfg, {Format::Report, Format::Json}, "sig");
  if (cfg.block.empty()) throw UsageError("block: required for sig");
  if (!cfg.system.alphabet().admits(cfg.block)) throw UsageError("block: letters outside the alphabet");
  const std::size_t h = cfg.resolved_horizon();
  const auto table = table_for(cfg, std::max(cfg.max_len(), cfg.block.size() + h));
  const auto meta = meta_for(cfg, table, "generic");
  if (!table.contains(cfg.block)) throw UsageError("block: '" + cfg.block + "' is not in the language");
  const auto verdict = is_significant(table, cfg.block, h);
  const Block s = sig(table, cfg.block, h);
  if (cfg.format == Format::Json) {
    auto j = meta_json(meta);
    j["block"] = cfg.block;
    j["significant"] = verdict.significant();
    j["witness"] = verdict.significant() ? ordered_json(verdict.witness) : ordered_json(nullptr);
    j["sig"] = s;
    emit(j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# " << header(meta) << "\n";
    os << "block=" << cfg.block << " significant="
       << (verdict.significant() ? "yes" : "not-up-to-H=" + std::to_string(h));
    if (verdict.significant()) os << " witness=" << (verdict.witness.empty() ? "-" : verdict.witness);
    os << " sig=" << s << "\n";
    emit(os.str());
  }
  return kOk;
}

int cmd_diagram(const JobConfig& cfg, const Emitter& emit) {
  const auto table = table_for(cfg, cfg.max_len());
  const auto d = build_with(cfg, table);
  const auto meta = meta_for(cfg, table, d.provenance().name());
  switch (cfg.format) {
    case Format::Dot:
      emit(to_dot(d, meta));
      break;
    case Format::Json:
      emit(to_json(d, meta).dump(2) + "\n");
      break;
    case Format::Report:
      emit(to_report(d, meta));
      break;
  }
  return kOk;
}

int cmd_paths(const JobConfig& cfg, const Emitter& emit) {
  require_format(cfg, {Format::Report, Format::Json}, "paths");
  const std::size_t n = *cfg.n;
  const auto table = table_for(cfg, std::max(cfg.max_len(), n));
  const auto d = build_with(cfg, table);
  const auto meta = meta_for(cfg, table, d.provenance().name());
  std::uint64_t count = 0;
  try {
    count = count_rooted_paths(d, n);
  } catch (const Error& e) {
    throw UsageError(std::string("n: ") + e.what());
  }
  const auto bijection = verify_bijection(d, table, n);
  const auto expected = known_complexity(cfg.system);
  const bool matches = !expected || (*expected)(n) == count;
  if (cfg.format == Format::Json) {
    auto j = meta_json(meta);
    j["n"] = n;
    j["paths"] = count;
    j["expected"] = expected ? ordered_json((*expected)(n)) : ordered_json(nullptr);
    j["language"] = bijection.language_count;
    j["bijection"] = bijection.ok();
    emit(j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# " << header(meta) << "\n";
    os << "n=" << n << " paths=" << count << " expected=" << (expected ? std::to_string((*expected)(n)) : "-")
       << " language=" << bijection.language_count << " bijection=" << (bijection.ok() ? "ok" : "FAIL")
       << "\n";
    if (!bijection.ok()) os << bijection.report() << "\n";
    emit(os.str());
  }
  return matches && bijection.ok() ? kOk : kPropertyFailure;
}

int cmd_verify(const JobConfig& cfg, const Emitter& emit) {
  require_format(cfg, {Format::Report, Format::Json}, "verify");
  const std::size_t depth = cfg.resolved_depth();
  const std::size_t h = cfg.resolved_horizon();
  const auto table = table_for(cfg, std::max(cfg.max_len(), std::size_t{13}));
  const SignificanceMap map(table, depth + 1, h);
  const auto d = build_generic(table, depth, h);
  const auto results = run_property_suite(cfg.system, table, d, map);
  const auto meta = meta_for(cfg, table, d.provenance().name());
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  if (cfg.format == Format::Json) {
    auto j = meta_json(meta);
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    }
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    j["total"] = results.size();
    emit(j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# " << header(meta) << "\n";
    for (const auto& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases;
      if (!r.detail.empty()) os << " : " << r.detail;
      os << "\n";
    }
    os << passed << "/" << results.size() << " checks passed\n";
    emit(os.str());
  }
  return passed == results.size() ? kOk : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hofbauer-Buzzi diagrams for Sturmian and substitution subshifts", "hbd"};
  app.set_config("--config", "", "key=value file with any of the long options below");
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::string system = "fibonacci", directive, images, seed = "0", format = "report", builder = "generic";
  std::size_t depth = 0, horizon = 0, scan_len = 0, n = 0, len = 64;
  JobConfig cfg;

  app.add_option("--system", system, "fibonacci | sturmian | morse | substitution")->capture_default_str();
  app.add_option("--directive", directive, "directive d1,d2,...; a bracketed tail repeats, e.g. 1,[1]");
  app.add_option("--images", images, "substitution images, e.g. 0:01,1:10");
  app.add_option("--seed", seed, "seed letter of the substitution fixed point")->capture_default_str();
  auto* depth_opt = app.add_option("--depth", depth, "depth bound N (default 8; paths: n)");
  auto* horizon_opt = app.add_option("--horizon", horizon, "follower horizon H (default 2(N+1)+8)");
  auto* scan_opt = app.add_option("--scan-len", scan_len, "scanned prefix length M (default max(4096, 64(N+1+H)))");
  app.add_option("--format", format, "dot | json | report")->capture_default_str();
  app.add_option("--out", cfg.out, "write the artifact to FILE instead of stdout");
  app.add_option("--builder", builder, "generic | closed-form | morse-rule")->capture_default_str();
  auto* n_opt = app.add_option("--n", n, "block or path length");
  app.add_option("--block", cfg.block, "block for sig");
  app.add_option("--len", len, "sequence length for gen")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "print a prefix of the generating sequence");
  auto* lang = app.add_subcommand("lang", "complexity table of the scanned language");
  auto* sig_cmd = app.add_subcommand("sig", "significance verdict and sig of --block");
  auto* diagram = app.add_subcommand("diagram", "build the HB diagram");
  auto* paths = app.add_subcommand("paths", "count rooted paths of length --n");
  auto* verify = app.add_subcommand("verify", "run the property suite");

  std::vector<const char*> argv{"hbd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.format = parse_format(format);
    cfg.builder = builder;
    cfg.len = len;
    if (depth_opt->count()) cfg.depth = depth;
    if (horizon_opt->count()) cfg.horizon = horizon;
    if (scan_opt->count()) cfg.scan_len = scan_len;
    if (n_opt->count()) cfg.n = n;
    try {
      switch (parse_system_kind(system)) {
        case SystemKind::Fibonacci:
          cfg.system = SystemSpec::fibonacci();
          break;
        case SystemKind::Morse:
          cfg.system = SystemSpec::morse();
          break;
        case SystemKind::Sturmian:
          if (directive.empty()) throw UsageError("directive: required for --system sturmian");
          cfg.system = SystemSpec::sturmian(DirectiveSpec::parse(directive));
          break;
        case SystemKind::Substitution:
          if (images.empty()) throw UsageError("images: required for --system substitution");
          if (seed.size() != 1) throw UsageError("seed: must be a single letter");
          cfg.system = SystemSpec::from_substitution(Substitution::parse(images), seed[0]);
          break;
      }
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(std::string("system: ") + e.what());
    }
    if (paths->parsed()) {
      if (!cfg.n) throw UsageError("n: required for paths");
      if (*cfg.n == 0) throw UsageError("n: must be >= 1");
      if (!cfg.depth) cfg.depth = *cfg.n;
    }
    cfg.validate();

    const Emitter emit{cfg, out};
    if (gen->parsed()) return cmd_gen(cfg, emit);
    if (lang->parsed()) return cmd_lang(cfg, emit);
    if (sig_cmd->parsed()) return cmd_sig(cfg, emit);
    if (diagram->parsed()) return cmd_diagram(cfg, emit);
    if (paths->parsed()) return cmd_paths(cfg, emit);
    if (verify->parsed()) return cmd_verify(cfg, emit);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hbd::cli
