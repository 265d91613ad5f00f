#include "addrep/compiler.hpp"

#include <algorithm>

#include "addrep/relations.hpp"

namespace addrep {

SequenceBinding SequenceBinding::builtins() {
  SequenceBinding env;
  Dfao t;  // Thue-Morse: parity of ones
  t.base = 2;
  t.outputs = {0, 1};
  t.next = {{0, 1}, {1, 0}};
  env.seqs["T"] = t;
  Dfao tt;  // twisted Thue-Morse, Figure 1
  tt.base = 2;
  tt.outputs = {1, 0, 1};
  tt.next = {{0, 1}, {2, 1}, {1, 2}};
  env.seqs["TT"] = tt;
  return env;
}

int SequenceBinding::base() const {
  int k = 0;
  for (const auto& [name, m] : seqs) {
    if (k == 0) k = m.base;
    if (m.base != k) throw CompileError("bound sequences use different bases");
  }
  return k == 0 ? 2 : k;
}

namespace {

struct CompileContext {
  const SequenceBinding* env;
  int base;
  int fresh = 0;

  std::string fresh_track(const char* tag) { return std::string("#") + tag + std::to_string(++fresh); }
};

TupleDfa quantify_away(TupleDfa a, const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (std::find(a.tracks.begin(), a.tracks.end(), v) == a.tracks.end()) continue;
    a = minimize_dfa(determinize(project(a, v)));
  }
  return a;
}

TupleDfa conjoin(std::vector<TupleDfa> autos) {
  TupleDfa acc = std::move(autos.front());
  for (std::size_t i = 1; i < autos.size(); ++i)
    acc = minimize_dfa(product(acc, autos[i], Connective::And));
  return acc;
}

// term rel term, each side a list of variables plus one folded constant.
// Constants become fresh constant-recognizer tracks; n-ary sums chain through
// fresh partial-sum tracks; everything fresh is existentially projected away.
TupleDfa compile_linear_atom(CompileContext& ctx, const LinearAtom& atom) {
  std::uint64_t lc = atom.lhs_const, rc = atom.rhs_const;
  std::uint64_t cancel = std::min(lc, rc);
  lc -= cancel;
  rc -= cancel;

  std::vector<TupleDfa> autos;
  std::vector<std::string> auxes;

  auto side_terms = [&](const std::vector<std::string>& vars, std::uint64_t c) {
    std::vector<std::string> terms = vars;
    if (c > 0 || terms.empty()) {
      std::string cv = ctx.fresh_track("c");
      autos.push_back(constant_dfa(ctx.base, cv, c));
      auxes.push_back(cv);
      terms.push_back(cv);
    }
    return terms;
  };
  auto chain_to = [&](const std::vector<std::string>& terms, const std::string& target) {
    std::string cur = terms[0];
    for (std::size_t i = 1; i + 1 < terms.size(); ++i) {
      std::string nxt = ctx.fresh_track("s");
      auxes.push_back(nxt);
      autos.push_back(adder_dfa(ctx.base, cur, terms[i], nxt));
      cur = nxt;
    }
    autos.push_back(adder_dfa(ctx.base, cur, terms.back(), target));
  };
  auto side_var = [&](const std::vector<std::string>& terms) {
    if (terms.size() == 1) return terms[0];
    std::string sv = ctx.fresh_track("s");
    auxes.push_back(sv);
    chain_to(terms, sv);
    return sv;
  };

  std::vector<std::string> lterms = side_terms(atom.lhs_vars, lc);
  std::vector<std::string> rterms = side_terms(atom.rhs_vars, rc);
  if (atom.rel == Rel::Eq && lterms.size() == 1 && rterms.size() > 1) {
    chain_to(rterms, lterms[0]);
  } else if (atom.rel == Rel::Eq && rterms.size() == 1 && lterms.size() > 1) {
    chain_to(lterms, rterms[0]);
  } else {
    std::string a = side_var(lterms);
    std::string b = side_var(rterms);
    autos.push_back(comparator_dfa(ctx.base, a, b, atom.rel));
  }
  return quantify_away(conjoin(std::move(autos)), auxes);
}

TupleDfa compile_node(CompileContext& ctx, const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Atom:
      return compile_linear_atom(ctx, f.atom);
    case FormulaKind::SeqAtom: {
      auto it = ctx.env->seqs.find(f.seq.name);
      if (it == ctx.env->seqs.end()) throw CompileError("unbound sequence '" + f.seq.name + "'");
      return minimize_dfa(seq_preimage_dfa(it->second, f.seq.var, f.seq.value));
    }
    case FormulaKind::Not:
      return complement(compile_node(ctx, f.children[0]));
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff: {
      Connective op = f.kind == FormulaKind::And       ? Connective::And
                      : f.kind == FormulaKind::Or      ? Connective::Or
                      : f.kind == FormulaKind::Implies ? Connective::Implies
                                                       : Connective::Iff;
      TupleDfa a = compile_node(ctx, f.children[0]);
      TupleDfa b = compile_node(ctx, f.children[1]);
      return minimize_dfa(product(a, b, op));
    }
    case FormulaKind::Exists:
      return quantify_away(compile_node(ctx, f.children[0]), f.bound);
    case FormulaKind::ForAll: {
      // A x: phi == ~ E x: ~ phi
      TupleDfa body = complement(compile_node(ctx, f.children[0]));
      return complement(quantify_away(std::move(body), f.bound));
    }
  }
  throw CompileError("unreachable formula kind");
}

}  // namespace

TupleDfa compile(const Formula& f, const SequenceBinding& env) {
  CompileContext ctx{&env, env.base(), 0};
  Formula renamed = rename_bound(f);
  std::vector<std::string> free = free_variables(renamed);
  TupleDfa a = compile_node(ctx, renamed);
  if (a.tracks != free) {
    // An atom like x+y=x constrains only some of its variables; pad the
    // automaton back up to the full free-variable track list.
    a = minimize_dfa(product(a, universal_dfa(a.base, free), Connective::And));
  }
  return a;
}

TupleDfa compile(const std::string& formula_text, const SequenceBinding& env) {
  return compile(parse_formula(formula_text), env);
}

bool decide(const Formula& f, const SequenceBinding& env) {
  std::vector<std::string> free = free_variables(f);
  if (!free.empty()) {
    std::string names;
    for (const auto& v : free) names += (names.empty() ? "" : ", ") + v;
    throw CompileError("not a sentence; free variables: " + names);
  }
  TupleDfa a = compile(f, env);
  return a.accepting[static_cast<std::size_t>(a.initial)];
}

bool decide(const std::string& formula_text, const SequenceBinding& env) {
  return decide(parse_formula(formula_text), env);
}

}  // namespace addrep
