#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "addrep/relations.hpp"

namespace addrep {

enum class FormulaKind { Atom, SeqAtom, Not, And, Or, Implies, Iff, Exists, ForAll };

/// Linear atom `term rel term`; each side is a sum of variables and a folded
/// non-negative constant.
struct LinearAtom {
  std::vector<std::string> lhs_vars;
  std::uint64_t lhs_const = 0;
  std::vector<std::string> rhs_vars;
  std::uint64_t rhs_const = 0;
  Rel rel = Rel::Eq;
};

/// `name[var] = @value`
struct SeqAtom {
  std::string name;
  std::string var;
  int value = 0;
};

/// First-order formula AST over (N, +, sequence lookups). Value-semantic tree.
struct Formula {
  FormulaKind kind = FormulaKind::Atom;
  LinearAtom atom;                  // Atom
  SeqAtom seq;                      // SeqAtom
  std::vector<std::string> bound;   // Exists / ForAll
  std::vector<Formula> children;    // connectives and quantifier bodies
};

struct FormulaParseError : std::runtime_error {
  std::size_t position;
  FormulaParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Parses the grammar
///   var = [a-z][a-z0-9]* ; term = (var | nat) ('+' (var | nat))*
///   atom = term rel term | name '[' var ']' '=' '@' nat ; rel in {=, !=, <, <=, >, >=}
///   formula = atom | '~'f | f'&'f | f'|'f | f'=>'f | f'<=>'f
///           | 'E' varlist ':' f | 'A' varlist ':' f | '(' f ')'
/// with precedence ~ > & > | > => > <=> and quantifier bodies extending right
/// as far as possible.
Formula parse_formula(const std::string& text);

/// Free variables, sorted.
std::vector<std::string> free_variables(const Formula& f);

/// Renames bound variables apart (fresh internal names); after this no
/// variable is bound twice and no free name is shadowed.
Formula rename_bound(const Formula& f);

}  // namespace addrep
