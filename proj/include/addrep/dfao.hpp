#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace addrep {

/// Deterministic finite automaton with per-state output.  Computes a
/// k-automatic sequence from the msd-first base-k digits of n.
struct Dfao {
  int base = 2;
  int initial = 0;
  std::vector<int> outputs;             // per state
  std::vector<std::vector<int>> next;   // [state][digit], total

  int state_count() const { return static_cast<int>(outputs.size()); }

  /// Runs the automaton on the canonical representation of n and returns the
  /// output of the final state. Invariant under extra leading zeros whenever
  /// next[initial][0] == initial.
  int value(std::uint64_t n) const;
};

struct DfaoParseError : std::runtime_error {
  int line;
  DfaoParseError(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

/// Parses the Walnut text format: header `msd_k`, then per state a block
/// `state output` followed by k lines `digit -> target`, blank-line separated.
/// The first block is the initial state. Unreachable states are dropped by a
/// normalization pass (order-preserving renumbering).
Dfao parse_dfao(const std::string& text);

/// Emits Walnut format; parse_dfao followed by to_walnut round-trips the
/// section-5 TT file byte-identically modulo trailing whitespace.
std::string to_walnut(const Dfao& m);

/// GraphViz DOT with state labels "name/output".
std::string to_dot(const Dfao& m);

}  // namespace addrep
