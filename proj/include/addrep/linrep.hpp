#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "addrep/linalg.hpp"
#include "addrep/tuple_dfa.hpp"

namespace addrep {

/// Linear representation (u, gamma, v) of rank r over Q:
/// f(n) = u * gamma(d_1) * ... * gamma(d_l) * v for the msd-first base-k
/// digits of n. All entries exact rationals.
struct LinearRepresentation {
  int base = 2;
  QVector u;                   // row, length r
  std::vector<QMatrix> gamma;  // per digit, r x r
  QVector v;                   // column, length r

  int rank() const { return static_cast<int>(u.size()); }
  bool operator==(const LinearRepresentation&) const = default;
};

/// A representation together with the formula text it came from.
struct RationalSeries {
  LinearRepresentation rep;
  std::string provenance;
};

/// Counting extraction (states of `a` as basis, u = initial indicator,
/// v = accepting indicator, gamma(d)[p][q] = number of tuple letters with
/// index-track digit d moving p to q), followed by a leading-zero
/// normalization: u is replaced by u*gamma(0)^j for the least j <= rank such
/// that u*gamma(0)^(j+1) - u*gamma(0)^j annihilates the observability space.
/// When no such j exists (count not bounded in terms of the index variable,
/// e.g. a universal automaton over an extra free track) the raw u is kept and
/// the value depends on the representation length by design.
LinearRepresentation extract(const TupleDfa& a, const std::string& index_var);

Rational evaluate(const LinearRepresentation& rep, std::uint64_t n);
Rational evaluate_word(const LinearRepresentation& rep, const std::vector<int>& digits);

/// Values for n in [from, to], sharing digit-prefix products.
QVector evaluate_range(const LinearRepresentation& rep, std::uint64_t from, std::uint64_t to);

/// Schutzenberger minimization: forward worklist closure of span{u gamma(w)}
/// in length-lex word order, then the dual backward pass.
LinearRepresentation minimize_rep(const LinearRepresentation& rep);

/// Series-canonical minimal form: coordinates fixed by the length-lex-first
/// independent Hankel rows and columns, so equal series yield entrywise
/// identical triples.
LinearRepresentation canonical_form(const LinearRepresentation& rep);

/// Block direct sum computing n -> f1(n) - f2(n).
LinearRepresentation difference(const LinearRepresentation& a, const LinearRepresentation& b);

/// True iff the two series agree everywhere (difference minimizes to rank 0;
/// cross-checked against canonical_form equality).
bool series_equal(const LinearRepresentation& a, const LinearRepresentation& b);

/// Least n <= limit where the series differ, if any.
std::optional<std::uint64_t> first_difference(const LinearRepresentation& a,
                                              const LinearRepresentation& b,
                                              std::uint64_t limit);

/// Text format: `base k`, `rank r`, `u:` + r rationals, per digit
/// `gamma d:` + r rows, `v:` + r rationals; `#` starts a comment line.
std::string serialize(const LinearRepresentation& rep);
LinearRepresentation deserialize_rep(const std::string& text);

}  // namespace addrep
