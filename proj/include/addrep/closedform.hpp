#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addrep/linrep.hpp"
#include "addrep/polynomial.hpp"

namespace addrep {

/// Family of base-k words w_t = prefix digit^t suffix, t >= 0.
struct DigitPattern {
  std::vector<int> prefix;
  int repeated = 0;
  std::vector<int> suffix;
};

/// Parses "1 0^t 1" style text: whitespace-separated digit groups with
/// exactly one `d^t` marker. The prefix may not have a leading zero unless
/// empty. Throws std::invalid_argument on syntax or digit-range errors.
DigitPattern parse_pattern(const std::string& text, int base);
std::string pattern_str(const DigitPattern& pat);

/// u * gamma(prefix) * gamma(d)^t * gamma(suffix) * v by repeated
/// vector-matrix products.
Rational pattern_value(const LinearRepresentation& rep, const DigitPattern& pat, int t);

struct ClosedFormTerm {
  Rational coeff;
  Rational root;
  int t_degree = 0;  // power of t multiplying root^t
};

/// Exact closed form c_1 t^{j_1} r_1^t + ... valid for t >= threshold, with
/// the transient values listed explicitly below it. When the recurrence has
/// irrational nonzero roots only the recurrence polynomial is returned
/// (closed == false).
struct ClosedForm {
  bool closed = false;
  RationalPolynomial recurrence;       // Krylov annihilator of the pattern row
  std::vector<ClosedFormTerm> terms;   // empty unless closed
  std::vector<Rational> transients;    // values for t < threshold
  int threshold = 0;                   // multiplicity of the zero root

  Rational value_at(int t) const;
  std::string render() const;
};

ClosedForm fit_closed_form(const LinearRepresentation& rep, const DigitPattern& pat);

struct DominantAnalysis {
  Rational root;
  std::vector<Rational> values;   // pattern values for t = 0..t_max
  std::vector<Rational> ratios;   // value / root^t, exact
  bool stabilized = false;        // last five pairwise relative diffs < 1e-3
  int n0 = 0;                     // least index with all later sampled values > 0
  bool positive_tail = false;     // n0 <= t_max
  Rational coefficient;           // final ratio (dominant-coefficient estimate)
};

/// Exact ratio table for pattern values against root^t. root must be nonzero.
DominantAnalysis dominant_ratio(const LinearRepresentation& rep, const DigitPattern& pat,
                                const Rational& root, int t_max);

/// All n in [from, to] with f(n) >= f(n+1).
std::vector<std::uint64_t> monotonicity_scan(const LinearRepresentation& rep,
                                             std::uint64_t from, std::uint64_t to);

}  // namespace addrep
