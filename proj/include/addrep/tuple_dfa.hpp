#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace addrep {

/// Transition target for the implicit non-accepting sink. Every automaton is
/// semantically complete: a -1 entry means "go dead and reject".  Canonical
/// (minimized) automata materialize only live states, so the state counts and
/// extraction ranks match the paper's Walnut outputs.
inline constexpr std::int32_t kDeadState = -1;

/// Complete DFA over a d-track alphabet; each letter is a d-tuple of base-k
/// digits, indexed lexicographically.  Accepts exactly the zero-padded
/// synchronized encodings of the variable tuples in its relation.
struct TupleDfa {
  int base = 2;
  std::vector<std::string> tracks;  // sorted variable names
  int initial = 0;
  std::vector<std::vector<std::int32_t>> next;  // [state][letter], -1 = dead
  std::vector<bool> accepting;

  int state_count() const { return static_cast<int>(accepting.size()); }
  int track_count() const { return static_cast<int>(tracks.size()); }
  int letters() const;

  bool operator==(const TupleDfa&) const = default;
};

/// NFA over the same letter scheme; the intermediate result of projection.
struct TupleNfa {
  int base = 2;
  std::vector<std::string> tracks;
  std::vector<std::int32_t> initials;
  std::vector<std::vector<std::vector<std::int32_t>>> next;  // [state][letter] -> sorted targets
  std::vector<bool> accepting;

  int state_count() const { return static_cast<int>(accepting.size()); }
  int letters() const;
};

enum class Connective { And, Or, Implies, Iff };

/// Product over the sorted union of the two track lists (each side is
/// cylindrified over its missing tracks). Complete, reachable-trimmed.
/// Throws std::invalid_argument on base mismatch.
TupleDfa product(const TupleDfa& a, const TupleDfa& b, Connective op);

/// Complement; returns the canonical minimized form of the inverted
/// automaton (padding normalization is the identity under the padded-encoding
/// language convention).
TupleDfa complement(const TupleDfa& a);

/// Deletes one track; a word is accepted iff some equal-length digit word on
/// the deleted track makes the original accept.
TupleNfa project(const TupleDfa& a, const std::string& var);

/// Subset construction. Re-establishes padding closure by zero-closing the
/// initial state set first (a word stays accepted when all-zero letters are
/// prepended, and conversely).
TupleDfa determinize(const TupleNfa& a);

/// Unique minimal automaton, states numbered by BFS discovery order with
/// letters ascending; the dead sink is left implicit unless it is initial.
TupleDfa minimize_dfa(const TupleDfa& a);

/// Membership for a value map covering all tracks (extra entries ignored).
/// Throws std::invalid_argument when a track is missing from the map.
bool accepts(const TupleDfa& a, const std::map<std::string, std::uint64_t>& values);

/// Runs the automaton on an explicit letter word.
bool accepts_word(const TupleDfa& a, const std::vector<int>& letters);
bool accepts_word(const TupleNfa& a, const std::vector<int>& letters);

/// GraphViz DOT export.
std::string to_dot(const TupleDfa& a);

/// Text round-trip for --save/--load.
std::string serialize(const TupleDfa& a);
TupleDfa parse_tuple_dfa(const std::string& text);

}  // namespace addrep
