#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "addrep/dfao.hpp"
#include "addrep/formula.hpp"
#include "addrep/tuple_dfa.hpp"

namespace addrep {

struct CompileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named sequence environment. All bound DFAOs must share one base.
struct SequenceBinding {
  std::map<std::string, Dfao> seqs;

  /// `T` (Thue-Morse) and `TT` (the twisted Thue-Morse DFAO of Figure 1).
  static SequenceBinding builtins();
  int base() const;
};

/// Compiles a formula to the minimal, complete, padding-closed automaton over
/// its sorted free variables.  Constants become recognizers on fresh tracks,
/// n-ary sums go through fresh existential auxiliaries, quantifiers compile
/// to project -> determinize -> minimize (ForAll via ~E~), and every
/// intermediate step is minimized.
TupleDfa compile(const Formula& f, const SequenceBinding& env);
TupleDfa compile(const std::string& formula_text, const SequenceBinding& env);

/// Truth value of a sentence. Throws CompileError when free variables remain.
bool decide(const Formula& f, const SequenceBinding& env);
bool decide(const std::string& formula_text, const SequenceBinding& env);

}  // namespace addrep
