// addrep: decide and count first-order statements about k-automatic
// sequences; compile formulas to automata, extract and minimize linear
// representations, prove series identities, and analyse closed forms.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "addrep/session.hpp"

namespace {

constexpr const char* kVersion = "addrep 0.1.0";

// --def NAME=PATH / --load NAME=PATH bindings.
void apply_bindings(addrep::Session& session, const std::vector<std::string>& defs,
                    const std::vector<std::string>& loads) {
  for (const std::string& d : defs) {
    auto eq = d.find('=');
    if (eq == std::string::npos) throw addrep::CliError("--def expects NAME=PATH");
    std::ostringstream sink;
    addrep::cmd_def(session, sink, d.substr(0, eq), d.substr(eq + 1), false);
  }
  for (const std::string& l : loads) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw addrep::CliError("--load expects NAME=PATH");
    std::string name = l.substr(0, eq), path = l.substr(eq + 1);
    addrep::RationalSeries& series = session.resolve_rep(path);
    session.reps[name] = series;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decision and counting engine for k-automatic sequences"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  addrep::Session session;
  std::vector<std::string> defs, loads;
  app.add_flag("--json", session.json, "machine-readable output");
  app.add_option("--out", session.out_dir, "output directory for artifacts")->capture_default_str();
  app.add_option("--def", defs, "bind a DFAO from a Walnut file (NAME=PATH)");
  app.add_option("--load", loads, "bind a representation from a file (NAME=PATH)");

  std::string name, path, formula, index_var, rep_a, rep_b, pattern, root, oracle, save, dot, seq,
      target, expect;
  std::uint64_t from = 0, to = 0;
  int digit = 0, t_max = 40, pad = 0;
  bool force = false, minimize = false;

  auto* c_def = app.add_subcommand("def", "bind a DFAO from a Walnut-format file");
  c_def->add_option("name", name)->required();
  c_def->add_option("path", path)->required();
  c_def->add_flag("--force", force, "allow replacing built-ins");
  c_def->add_option("--save", save, "re-emit the parsed automaton");

  auto* c_eval = app.add_subcommand("eval", "compile a formula; decide it when it is a sentence");
  c_eval->add_option("formula", formula)->required();
  c_eval->add_option("--dot", dot, "write the automaton as DOT");
  c_eval->add_option("--save", save, "write the automaton in text form");

  auto* c_count = app.add_subcommand("count", "extract a linear representation for a counting formula");
  c_count->add_option("name", name)->required();
  c_count->add_option("var", index_var)->required();
  c_count->add_option("formula", formula)->required();
  c_count->add_flag("--minimize", minimize, "store the canonical minimal form");
  c_count->add_option("--save", save, "output file (default OUT/NAME.lr)");

  auto* c_values = app.add_subcommand("values", "print exact series values over a range");
  c_values->add_option("rep", rep_a)->required();
  c_values->add_option("--from", from)->capture_default_str();
  c_values->add_option("--to", to)->required();
  c_values->add_option("--oracle", oracle, "compare against a brute-force oracle (R2:A, r:5, ...)");
  c_values->add_option("--pad", pad, "also evaluate with j extra leading zeros");

  auto* c_compare = app.add_subcommand("compare", "decide equality of two series");
  c_compare->add_option("repA", rep_a)->required();
  c_compare->add_option("repB", rep_b)->required();

  auto* c_minpoly = app.add_subcommand("minpoly", "minimal polynomial of gamma(digit)");
  c_minpoly->add_option("rep", rep_a)->required();
  c_minpoly->add_option("digit", digit)->required();

  auto* c_closed = app.add_subcommand("closedform", "fit an exact closed form along a digit pattern");
  c_closed->add_option("rep", rep_a)->required();
  c_closed->add_option("pattern", pattern)->required();

  auto* c_dom = app.add_subcommand("dominant", "ratio analysis of repA - repB along a pattern");
  c_dom->add_option("repA", rep_a)->required();
  c_dom->add_option("repB", rep_b)->required();
  c_dom->add_option("pattern", pattern)->required();
  c_dom->add_option("root", root)->required();
  c_dom->add_option("tmax", t_max)->capture_default_str();
  c_dom->add_option("--expect", expect, "compare the stabilized coefficient to this rational");

  auto* c_scan = app.add_subcommand("scan-monotone", "report all n in range with f(n) >= f(n+1)");
  c_scan->add_option("rep", rep_a)->required();
  c_scan->add_option("from", from)->required();
  c_scan->add_option("to", to)->required();

  auto* c_dot = app.add_subcommand("export-dot", "write a DFAO or compiled formula as GraphViz DOT");
  c_dot->add_option("--seq", seq, "sequence name or Walnut file");
  c_dot->add_option("--formula", formula, "formula text");
  c_dot->add_option("out", path)->required();

  auto* c_rep = app.add_subcommand("reproduce", "run a scripted pipeline (dombi, chen-wang, theorem5, r5, conjecture8)");
  c_rep->add_option("target", target)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    apply_bindings(session, defs, loads);
    if (c_def->parsed()) return addrep::cmd_def(session, std::cout, name, path, force, save);
    if (c_eval->parsed()) return addrep::cmd_eval(session, std::cout, formula, dot, save);
    if (c_count->parsed())
      return addrep::cmd_count(session, std::cout, name, index_var, formula, minimize, save);
    if (c_values->parsed()) return addrep::cmd_values(session, std::cout, rep_a, from, to, oracle, pad);
    if (c_compare->parsed()) return addrep::cmd_compare(session, std::cout, rep_a, rep_b);
    if (c_minpoly->parsed()) return addrep::cmd_minpoly(session, std::cout, rep_a, digit);
    if (c_closed->parsed()) return addrep::cmd_closedform(session, std::cout, rep_a, pattern);
    if (c_dom->parsed())
      return addrep::cmd_dominant(session, std::cout, rep_a, rep_b, pattern, root, t_max, expect);
    if (c_scan->parsed()) return addrep::cmd_scan_monotone(session, std::cout, rep_a, from, to);
    if (c_dot->parsed()) return addrep::cmd_export_dot(session, std::cout, seq, formula, path);
    if (c_rep->parsed()) return addrep::cmd_reproduce(session, std::cout, target);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
