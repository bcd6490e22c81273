#include "hbd/verify.hpp"

#include <algorithm>
#include <sstream>

#include "hbd/morse.hpp"
#include "hbd/paths.hpp"

namespace hbd {

namespace {

constexpr std::size_t kMaxOffenders = 5;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }
  void pass() { ++result_.cases; }
  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    result_.passed = false;
    if (shown_++ < kMaxOffenders) {
      if (!result_.detail.empty()) result_.detail += "; ";
      result_.detail += what;
    }
  }
  CheckResult done() {
    if (shown_ > kMaxOffenders) {
      result_.detail += "; +" + std::to_string(shown_ - kMaxOffenders) + " more";
    }
    return result_;
  }

 private:
  CheckResult result_;
  std::size_t shown_ = 0;
};

// Runs `body`, turning a thrown error into a failed case.
template <typename F>
void guarded(Recorder& r, const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.fail(label + ": " + e.what());
  }
}

std::vector<Block> sorted_copy(std::vector<Block> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::string join(const std::vector<Block>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + "}";
}

}  // namespace

CheckResult check_closure(const LanguageTable& table) {
  Recorder r("closure");
  for (const auto& v : closure_violations(table)) r.fail(v);
  for (std::size_t k = 1; k <= table.max_len(); ++k) r.pass();
  return r.done();
}

CheckResult check_consecsig(const SignificanceMap& map) {
  Recorder r("consecsig");
  for (std::size_t k = 2; k <= map.max_block_len(); ++k) {
    for (const auto& w : map.significant_blocks(k)) {
      const std::string_view head = std::string_view(w).substr(0, k - 1);
      r.expect(map.significant(head), w + " significant but " + std::string(head) + " is not");
    }
  }
  return r.done();
}

CheckResult check_siglem(const LanguageTable& table, const SignificanceMap& map, std::size_t max_len) {
  Recorder r("siglem");
  const std::size_t limit = std::min(max_len, map.max_block_len() - 1);
  for (std::size_t k = 1; k <= limit; ++k) {
    for (const auto& w : table.blocks(k)) {
      const Block s = map.sig(w);
      for (Letter c : table.alphabet().letters()) {
        const Block wc = w + c;
        if (!table.contains(wc)) continue;
        const Block lhs = map.sig(s + c);
        const Block rhs = map.sig(wc);
        r.expect(lhs == rhs, "sig(sig(" + w + ")" + c + ")=" + lhs + " but sig(" + wc + ")=" + rhs);
      }
    }
  }
  return r.done();
}

CheckResult check_leftextend(const LanguageTable& table, const SignificanceMap& map) {
  Recorder r("leftextend");
  for (std::size_t k = 2; k <= map.max_block_len(); ++k) {
    for (const auto& w : map.significant_blocks(k)) {
      const std::string_view tail = std::string_view(w).substr(1);
      guarded(r, w, [&] {
        r.expect(left_extensions(table, tail).size() >= 2,
                 "tail of significant " + w + " has a single left extension");
      });
    }
  }
  return r.done();
}

CheckResult check_arrow_soundness(const HBDiagram& d, const LanguageTable& table,
                                  const SignificanceMap& map) {
  Recorder r("arrow-soundness");
  for (const auto& a : d.arrows()) {
    const Block ac = a.from + a.letter;
    guarded(r, a.from + "->" + a.to, [&] {
      if (!table.contains(ac)) {
        r.fail(ac + " not in language");
        return;
      }
      const Block expected = map.sig(ac);
      r.expect(expected == a.to, a.from + "->" + a.to + " but sig(" + ac + ")=" + expected);
    });
  }
  return r.done();
}

std::size_t safe_path_length(const HBDiagram& d, std::size_t cap) {
  std::size_t n = 0;
  for (std::size_t k = 1; k <= cap; ++k) {
    try {
      count_rooted_paths(d, k);
    } catch (const Error&) {
      break;
    }
    n = k;
  }
  return n;
}

CheckResult check_iteratedsig(const HBDiagram& d, const SignificanceMap& map, std::size_t max_path_len) {
  Recorder r("iteratedsig");
  const std::size_t n = safe_path_length(d, std::min(max_path_len, map.max_block_len()));
  if (n == 0) {
    r.fail("no safe path length");
    return r.done();
  }
  // Every shorter rooted path is a prefix of a length-n one.
  for (const auto& path : rooted_paths(d, n)) {
    const Block word = project(path);
    for (std::size_t i = 0; i < n; ++i) {
      const Block s = map.sig(std::string_view(word).substr(0, i + 1));
      r.expect(s == path.vertices[i],
               "vertex " + path.vertices[i] + " vs sig(" + word.substr(0, i + 1) + ")=" + s);
    }
  }
  return r.done();
}

CheckResult check_distinctpath(const HBDiagram& d, const LanguageTable& table, std::size_t max_n) {
  Recorder r("distinctpath");
  const std::size_t n_max = safe_path_length(d, std::min(max_n, table.max_len()));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto rep = verify_bijection(d, table, n);
    r.expect(rep.collisions.empty(), "n=" + std::to_string(n) + " collisions " + join(rep.collisions));
  }
  if (n_max == 0) r.fail("no safe path length");
  return r.done();
}

CheckResult check_pathprop(const HBDiagram& d, const LanguageTable& table, std::size_t max_n) {
  Recorder r("pathprop");
  const std::size_t n_max = safe_path_length(d, std::min(max_n, table.max_len()));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto rep = verify_bijection(d, table, n);
    r.expect(rep.missing.empty() && rep.extra.empty(),
             "n=" + std::to_string(n) + " missing " + join(rep.missing) + " extra " + join(rep.extra));
  }
  if (n_max == 0) r.fail("no safe path length");
  return r.done();
}

CheckResult check_path_complexity(const HBDiagram& d, const ComplexityFunction& p, std::size_t max_n) {
  Recorder r("path-complexity");
  const std::size_t n_max = safe_path_length(d, max_n);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto got = count_rooted_paths(d, n);
    r.expect(got == p(n), "n=" + std::to_string(n) + " paths " + std::to_string(got) + " expected " +
                              std::to_string(p(n)));
  }
  if (n_max == 0) r.fail("no safe path length");
  return r.done();
}

CheckResult check_sturmian_special_blocks(const LanguageTable& table, std::string_view l) {
  Recorder r("special-blocks");
  const std::size_t top = std::min(table.max_len() - 1, l.size());
  for (std::size_t n = 1; n <= top; ++n) {
    const auto left = left_special_blocks(table, n);
    const auto right = right_special_blocks(table, n);
    const std::string tag = "n=" + std::to_string(n);
    if (left.size() != 1 || right.size() != 1) {
      r.fail(tag + " left " + join(left) + " right " + join(right));
      continue;
    }
    r.expect(left[0] == l.substr(0, n), tag + " left special " + left[0] + " is not a prefix of l");
    r.expect(reversed(left[0]) == right[0], tag + " right special " + right[0] + " is not reversed " + left[0]);
  }
  return r.done();
}

CheckResult check_balance(const LanguageTable& table) {
  Recorder r("balance");
  for (std::size_t n = 1; n <= table.max_len(); ++n) {
    r.expect(is_balanced(table, n), "unbalanced at n=" + std::to_string(n));
  }
  return r.done();
}

CheckResult check_sturmian_significance(const SignificanceMap& map, std::string_view l) {
  Recorder r("sturmian-significance");
  const std::size_t top = std::min(map.max_block_len(), l.size() + 1);
  for (std::size_t n = 1; n <= top; ++n) {
    const auto oracle = sorted_copy(map.significant_blocks(n));
    const auto closed = sorted_copy(sturmian_significant_blocks(l, n));
    r.expect(oracle == closed, "n=" + std::to_string(n) + " oracle " + join(oracle) + " closed form " + join(closed));
  }
  return r.done();
}

CheckResult check_sturmian_diagram(const HBDiagram& generic, std::string_view l) {
  Recorder r("sturmian-diagram");
  guarded(r, "build", [&] {
    const auto closed = build_sturmian(l, generic.depth_bound());
    const auto diff = diagram_equal(generic, closed, generic.depth_bound());
    r.expect(diff.equal(), diff.report());
  });
  return r.done();
}

CheckResult check_double_extension(const HBDiagram& d, const LanguageTable& table, std::size_t max_n) {
  Recorder r("double-extension");
  const std::size_t n_max = safe_path_length(d, std::min(max_n, table.max_len()));
  for (std::size_t n = 2; n <= n_max; ++n) {
    guarded(r, "n=" + std::to_string(n), [&] {
      const Block found = unique_double_extension(d, n);
      const auto right = right_special_blocks(table, n - 1);
      r.expect(right.size() == 1 && right[0] == found,
               "n=" + std::to_string(n) + " path " + found + " right special " + join(right));
    });
  }
  return r.done();
}

CheckResult check_no_bbb(const LanguageTable& table) {
  Recorder r("no-BBb");
  for (std::size_t k = 1; k <= table.max_len(); ++k)
    for (const auto& w : table.blocks(k)) r.expect(!has_BBb(w), w + " contains BBb");
  return r.done();
}

CheckResult check_morse_significance(const LanguageTable& table, const SignificanceMap& map) {
  Recorder r("morse-significance");
  const std::size_t top = std::min(map.max_block_len(), table.max_len() - 1);
  for (std::size_t k = 1; k <= top; ++k) {
    for (const auto& w : table.blocks(k)) {
      const bool rule = morse_is_significant(table, w);
      r.expect(rule == map.significant(w), w + ": rule " + (rule ? "yes" : "no") + ", oracle " +
                                               (map.significant(w) ? "yes" : "no"));
    }
  }
  return r.done();
}

CheckResult check_morse_diagram(const HBDiagram& generic, const LanguageTable& table) {
  Recorder r("morse-diagram");
  guarded(r, "build", [&] {
    const auto rule = build_morse(table, generic.depth_bound());
    const auto diff = diagram_equal(generic, rule, generic.depth_bound());
    r.expect(diff.equal(), diff.report());
  });
  return r.done();
}

CheckResult check_morse_cuttings(const LanguageTable& table, std::size_t max_len) {
  Recorder r("morse-cuttings");
  const auto zeta = Substitution::morse();
  const std::size_t top = std::min(max_len, table.max_len());
  for (std::size_t k = 1; k <= top; ++k) {
    for (const auto& w : table.blocks(k)) {
      guarded(r, w, [&] {
        const auto cuts = morse::one_cuttings(w);
        const bool forced = k >= 5 || w.find("00") != Block::npos || w.find("11") != Block::npos;
        r.expect(cuts.size() == (forced ? 1u : 2u), w + " has " + std::to_string(cuts.size()) + " cuttings");
        bool some_ancestor_in_language = false;
        for (const auto& c : cuts) {
          r.expect(c.reassemble() == w, c.to_string() + " does not reassemble " + w);
          const Block image = zeta.apply(c.ancestor);
          r.expect(image.compare(c.offset, w.size(), w) == 0,
                   "zeta(" + c.ancestor + ") misses " + w + " at offset " + std::to_string(c.offset));
          some_ancestor_in_language = some_ancestor_in_language || morse::in_language(c.ancestor);
        }
        r.expect(some_ancestor_in_language, w + " has no ancestor in the language");
        if (cuts.size() == 1) {
          const auto& c = cuts.front();
          r.expect(morse::in_language(c.ancestor), "ancestor " + c.ancestor + " of " + w + " not in language");
          if (c.leading && k + 1 <= table.max_len()) {
            const auto left = left_extensions(table, w);
            r.expect(left == std::string(1, morse::dual(w[0])),
                     w + " cut after its first letter but extends left by {" + left + "}");
          }
        }
      });
    }
  }
  return r.done();
}

CheckResult check_recognizability(std::size_t sample_len) {
  Recorder r("recognizability");
  guarded(r, "scan", [&] {
    const auto k3 = morse::recognizability_index_check(3, sample_len);
    r.expect(k3.recognizable, "K=3 not recognizable");
    const auto k2 = morse::recognizability_index_check(2, sample_len);
    r.expect(!k2.recognizable && k2.counterexample.has_value(), "K=2 has no counterexample");
  });
  return r.done();
}

std::vector<CheckResult> run_property_suite(const SystemSpec& spec, const LanguageTable& table,
                                            const HBDiagram& generic, const SignificanceMap& map,
                                            const SuiteOptions& options) {
  std::vector<CheckResult> out;
  out.push_back(check_closure(table));
  out.push_back(check_consecsig(map));
  out.push_back(check_siglem(table, map, options.siglem_len));
  out.push_back(check_leftextend(table, map));
  out.push_back(check_arrow_soundness(generic, table, map));
  out.push_back(check_iteratedsig(generic, map, options.path_len));
  out.push_back(check_distinctpath(generic, table, options.bijection_len));
  out.push_back(check_pathprop(generic, table, options.bijection_len));
  if (auto p = known_complexity(spec)) {
    out.push_back(check_path_complexity(generic, *p, options.bijection_len));
  }
  if (spec.sturmian_family()) {
    const Block l = left_special_sequence(spec, table.max_len());
    out.push_back(check_sturmian_special_blocks(table, l));
    out.push_back(check_balance(table));
    out.push_back(check_sturmian_significance(map, l));
    out.push_back(check_sturmian_diagram(generic, l));
    out.push_back(check_double_extension(generic, table, options.bijection_len));
  }
  if (spec.kind == SystemKind::Morse) {
    out.push_back(check_no_bbb(table));
    out.push_back(check_morse_significance(table, map));
    out.push_back(check_morse_diagram(generic, table));
    out.push_back(check_morse_cuttings(table, options.siglem_len));
    out.push_back(check_recognizability(std::size_t{1} << 14));
  }
  return out;
}

}  // namespace hbd
