#include <doctest.h>

#include <map>

#include "addrep/compiler.hpp"
#include "addrep/oracles.hpp"
#include "test_util.hpp"

using namespace addrep;
using test::builtins;

namespace {

// Direct evaluation with integer arithmetic and the sequence oracles;
// independent of the automaton pipeline. Quantifier-free formulas only.
bool direct_eval(const Formula& f, const std::map<std::string, std::uint64_t>& env) {
  auto term = [&](const std::vector<std::string>& vars, std::uint64_t c) {
    std::uint64_t sum = c;
    for (const auto& v : vars) sum += env.at(v);
    return sum;
  };
  switch (f.kind) {
    case FormulaKind::Atom: {
      std::uint64_t l = term(f.atom.lhs_vars, f.atom.lhs_const);
      std::uint64_t r = term(f.atom.rhs_vars, f.atom.rhs_const);
      switch (f.atom.rel) {
        case Rel::Eq: return l == r;
        case Rel::Ne: return l != r;
        case Rel::Lt: return l < r;
        case Rel::Le: return l <= r;
        case Rel::Gt: return l > r;
        case Rel::Ge: return l >= r;
      }
      return false;
    }
    case FormulaKind::SeqAtom: {
      std::uint64_t n = env.at(f.seq.var);
      int value = f.seq.name == "T" ? oracles::thue_morse(n) : oracles::twisted_tm(n);
      return value == f.seq.value;
    }
    case FormulaKind::Not: return !direct_eval(f.children[0], env);
    case FormulaKind::And: return direct_eval(f.children[0], env) && direct_eval(f.children[1], env);
    case FormulaKind::Or: return direct_eval(f.children[0], env) || direct_eval(f.children[1], env);
    case FormulaKind::Implies:
      return !direct_eval(f.children[0], env) || direct_eval(f.children[1], env);
    case FormulaKind::Iff:
      return direct_eval(f.children[0], env) == direct_eval(f.children[1], env);
    default: FAIL("quantifiers not supported by the direct evaluator");
  }
  return false;
}

}  // namespace

TEST_CASE("compile x=x gives the universal one-state automaton") {
  TupleDfa a = compile("x=x", builtins());
  CHECK(a.tracks == std::vector<std::string>{"x"});
  CHECK(a.state_count() == 1);
  CHECK(a.accepting[0]);
}

TEST_CASE("compile of the dombi formula") {
  TupleDfa a = compile("n=x+y & x<y & T[x]=@0 & T[y]=@0", builtins());
  CHECK(a.tracks == std::vector<std::string>{"n", "x", "y"});
  CHECK(a.state_count() == 12);
  CHECK(accepts(a, {{"n", 9}, {"x", 3}, {"y", 6}}));
  CHECK_FALSE(accepts(a, {{"n", 9}, {"x", 4}, {"y", 5}}));
}

TEST_CASE("compile errors") {
  CHECK_THROWS_WITH_AS(compile("Q[x]=@0", builtins()), doctest::Contains("unbound sequence"),
                       CompileError);
  CHECK_THROWS_AS(decide("n=x+y", builtins()), CompileError);
}

TEST_CASE("decide") {
  CHECK(decide("A x: E y: y=x+x", builtins()));
  CHECK_FALSE(decide("E x: x+1=x", builtins()));
  CHECK_FALSE(decide("E x: x<x", builtins()));
  // A set-level consequence of Dombi's theorem.
  CHECK(decide("A n: (E x,y: n=x+y & x<y & T[x]=@0 & T[y]=@0) => "
               "(E x,y: n=x+y & x<y & T[x]=@1 & T[y]=@1)",
               builtins()));
  SUBCASE("stable under double negation") {
    for (const char* s : {"A x: E y: y=x+x", "E x: x+1=x"})
      CHECK(decide(s, builtins()) == decide("~(~(" + std::string(s) + "))", builtins()));
  }
}

TEST_CASE("forall compiles as not-exists-not") {
  TupleDfa direct = compile("A y: y=x | ~y=x", builtins());
  TupleDfa rewritten = compile("~ E y: ~(y=x | ~y=x)", builtins());
  CHECK(direct == rewritten);

  TupleDfa direct2 = compile("A y: y<=x | x<y", builtins());
  TupleDfa rewritten2 = compile("~ E y: ~(y<=x | x<y)", builtins());
  CHECK(direct2 == rewritten2);
}

TEST_CASE("renaming bound variables leaves the automaton unchanged") {
  TupleDfa a = compile("E z: x=z+z & T[z]=@1", builtins());
  TupleDfa b = compile("E w: x=w+w & T[w]=@1", builtins());
  CHECK(a == b);
}

TEST_CASE("existential semantics against brute force") {
  TupleDfa a = compile("E z: x=z+z & T[z]=@1", builtins());
  for (std::uint64_t x = 0; x < 300; ++x) {
    bool expect = x % 2 == 0 && oracles::thue_morse(x / 2) == 1;
    REQUIRE(accepts(a, {{"x", x}}) == expect);
  }
}

TEST_CASE("compilation is sound on random assignments") {
  const char* fixtures[] = {
      "n=x+y & x<y & T[x]=@0 & T[y]=@0",
      "n+1=x+y & x<=y & TT[x]=@0 & TT[y]=@0",
      "x<y | x=y+z",
      "(T[x]=@1 => TT[y]=@0) <=> ~(x+y=z)",
  };
  for (const char* text : fixtures) {
    Formula f = parse_formula(text);
    TupleDfa a = compile(f, builtins());
    for (int i = 0; i < 1000; ++i) {
      std::map<std::string, std::uint64_t> env;
      for (const auto& v : free_variables(f)) env[v] = test::random_value((1 << 14) - 1);
      REQUIRE(accepts(a, env) == direct_eval(f, env));
    }
  }
}

TEST_CASE("atoms that constrain only part of their variables keep all tracks") {
  TupleDfa a = compile("x+y=x", builtins());  // equivalent to y=0
  CHECK(a.tracks == std::vector<std::string>{"x", "y"});
  CHECK(accepts(a, {{"x", 7}, {"y", 0}}));
  CHECK_FALSE(accepts(a, {{"x", 7}, {"y", 2}}));
}

TEST_CASE("repeated variables in sums") {
  TupleDfa a = compile("y=x+x+x", builtins());
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = test::random_value(4000);
    REQUIRE(accepts(a, {{"x", x}, {"y", 3 * x}}));
    REQUIRE_FALSE(accepts(a, {{"x", x}, {"y", 3 * x + 1}}));
  }
}
