#pragma once

#include <string>
#include <utility>
#include <vector>

#include "addrep/linalg.hpp"

namespace addrep {

/// Dense exact-rational polynomial, lowest degree first, trimmed (leading
/// coefficient nonzero unless the zero polynomial).
struct RationalPolynomial {
  QVector coeffs;

  static RationalPolynomial zero() { return {}; }
  static RationalPolynomial constant(const Rational& c);
  /// X - root
  static RationalPolynomial linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  Rational eval(const Rational& x) const;
  void trim();

  bool operator==(const RationalPolynomial&) const = default;
};

RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_sub(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b);
/// Quotient and remainder; b nonzero.
std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                              const RationalPolynomial& b);
/// Monic gcd / lcm.
RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_lcm(const RationalPolynomial& a, const RationalPolynomial& b);

/// Human-readable form like "X^4 - X^3 - 4*X^2 + 4*X".
std::string poly_str(const RationalPolynomial& p);

/// Minimal monic annihilator of the row-Krylov sequence {row * m^i}.
RationalPolynomial krylov_row_annihilator(const QVector& row, const QMatrix& m);

/// Monic minimal polynomial: lcm of per-basis-vector Krylov annihilators
/// (with an early membership check so most basis vectors are skipped).
RationalPolynomial min_poly(const QMatrix& m);

/// Characteristic polynomial by the division-free Berkowitz algorithm.
RationalPolynomial char_poly(const QMatrix& m);

/// Whether p(m) is exactly the zero matrix.
bool annihilates(const RationalPolynomial& p, const QMatrix& m);

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), roots ascending
  RationalPolynomial remainder;                 // rational-root-free cofactor
};

/// All rational roots with multiplicities via rational-root-theorem
/// candidates and exact deflation. The expanded product of the root factors
/// times the remainder equals the input.
RationalRoots rational_roots(const RationalPolynomial& p);

}  // namespace addrep
