#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "addrep/compiler.hpp"
#include "addrep/linrep.hpp"

namespace addrep {

/// Named bindings for one CLI invocation. Built-ins T and TT are present from
/// the start; user DFAOs and representations arrive via `def`, `--def`,
/// `--load`, or as direct file paths. Nothing persists across processes
/// except explicitly saved files.
struct Session {
  SequenceBinding seqs = SequenceBinding::builtins();
  std::map<std::string, RationalSeries> reps;
  std::string out_dir = ".";
  bool json = false;

  /// Built-in names may only be replaced with force.
  void bind_sequence(const std::string& name, const Dfao& m, bool force);
  /// Name lookup, falling back to reading the argument as a file path.
  const Dfao& resolve_sequence(const std::string& name_or_path);
  RationalSeries& resolve_rep(const std::string& name_or_path);

  static bool is_builtin(const std::string& name) { return name == "T" || name == "TT"; }
};

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_def(Session& s, std::ostream& out, const std::string& name, const std::string& path,
            bool force, const std::string& save_path = "");

int cmd_eval(Session& s, std::ostream& out, const std::string& formula_text,
             const std::string& dot_path = "", const std::string& save_path = "");

int cmd_count(Session& s, std::ostream& out, const std::string& name,
              const std::string& index_var, const std::string& formula_text, bool minimize,
              const std::string& save_path = "");

int cmd_values(Session& s, std::ostream& out, const std::string& rep, std::uint64_t from,
               std::uint64_t to, const std::string& oracle_spec = "", int pad = 0);

int cmd_compare(Session& s, std::ostream& out, const std::string& rep_a, const std::string& rep_b);

int cmd_minpoly(Session& s, std::ostream& out, const std::string& rep, int digit);

int cmd_closedform(Session& s, std::ostream& out, const std::string& rep,
                   const std::string& pattern);

int cmd_dominant(Session& s, std::ostream& out, const std::string& rep_a,
                 const std::string& rep_b, const std::string& pattern, const std::string& root,
                 int t_max, const std::string& expect_coefficient = "");

int cmd_scan_monotone(Session& s, std::ostream& out, const std::string& rep, std::uint64_t from,
                      std::uint64_t to);

int cmd_export_dot(Session& s, std::ostream& out, const std::string& seq_name,
                   const std::string& formula_text, const std::string& out_path);

/// Scripted reproduction pipelines for the paper's sections; prints one line
/// per checkpoint and an overall PASS/FAIL.
/// Targets: dombi, chen-wang, theorem5, r5, conjecture8.
int cmd_reproduce(Session& s, std::ostream& out, const std::string& target);

}  // namespace addrep
