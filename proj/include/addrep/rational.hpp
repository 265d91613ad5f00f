#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace addrep {

// All arithmetic in this project is exact; no floating point except for
// display rendering.
using Rational = mpq_class;
using Integer = mpz_class;

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// Parses "p", "-p" or "p/q" into a canonically reduced rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Renders canonically: integer as "p", otherwise "p/q" reduced.
std::string rational_str(const Rational& q);

/// Decimal rendering for reports ("%.6e"); display only, never compared.
std::string rational_decimal(const Rational& q);

}  // namespace addrep
