#include <doctest.h>

#include "addrep/closedform.hpp"
#include "addrep/compiler.hpp"
#include "addrep/oracles.hpp"
#include "test_util.hpp"

using namespace addrep;
using test::builtins;

namespace {

const LinearRepresentation& r2a_min() {
  static LinearRepresentation rep =
      canonical_form(extract(compile("n=x+y & x<y & T[x]=@0 & T[y]=@0", builtins()), "n"));
  return rep;
}

Rational oracle_r2a(std::uint64_t n) {
  return Rational(static_cast<unsigned long>(oracles::brute_R(2, oracles::AutoSet::A, n)));
}

}  // namespace

TEST_CASE("pattern parsing") {
  DigitPattern p = parse_pattern("1 0^t 1", 2);
  CHECK(p.prefix == std::vector<int>{1});
  CHECK(p.repeated == 0);
  CHECK(p.suffix == std::vector<int>{1});
  CHECK(pattern_str(p) == "1 0^t 1");

  DigitPattern q = parse_pattern("1^t", 2);
  CHECK(q.prefix.empty());
  CHECK(q.repeated == 1);
  CHECK(q.suffix.empty());

  DigitPattern r = parse_pattern("10 1^t 00", 2);
  CHECK(r.prefix == std::vector<int>{1, 0});
  CHECK(r.suffix == std::vector<int>{0, 0});

  CHECK_THROWS_AS(parse_pattern("1 1", 2), std::invalid_argument);        // no d^t
  CHECK_THROWS_AS(parse_pattern("1^t 0^t", 2), std::invalid_argument);    // two markers
  CHECK_THROWS_AS(parse_pattern("2^t", 2), std::invalid_argument);        // digit out of range
  CHECK_THROWS_AS(parse_pattern("01 0^t", 2), std::invalid_argument);     // leading zero prefix
}

TEST_CASE("pattern values") {
  DigitPattern ones = parse_pattern("1^t", 2);
  CHECK(pattern_value(r2a_min(), ones, 4) == 4);   // R2_A(15)
  CHECK(pattern_value(r2a_min(), ones, 3) == 0);   // R2_A(7)

  SUBCASE("t = 0 degenerates to plain evaluation of prefix+suffix") {
    DigitPattern p = parse_pattern("1 0^t 1", 2);
    CHECK(pattern_value(r2a_min(), p, 0) == evaluate(r2a_min(), 3));
  }
  SUBCASE("agrees with evaluate on the denoted family, t <= 10") {
    for (const char* spec : {"1^t", "1 0^t", "1 0^t 1"}) {
      DigitPattern p = parse_pattern(spec, 2);
      for (int t = 0; t <= 10; ++t) {
        std::vector<int> digits = p.prefix;
        digits.insert(digits.end(), static_cast<std::size_t>(t), p.repeated);
        digits.insert(digits.end(), p.suffix.begin(), p.suffix.end());
        std::uint64_t value = digits_value(2, digits);
        REQUIRE(pattern_value(r2a_min(), p, t) == evaluate(r2a_min(), value));
      }
    }
  }
}

TEST_CASE("closed form for R2_A(2^t - 1)") {
  ClosedForm cf = fit_closed_form(r2a_min(), parse_pattern("1^t", 2));
  REQUIRE(cf.closed);
  CHECK(cf.threshold == 1);

  SUBCASE("values match brute force for t = 1..10") {
    // 0, 1, 0, 4, 0, 16, ...
    for (int t = 1; t <= 10; ++t)
      REQUIRE(cf.value_at(t) == oracle_r2a((1ULL << t) - 1));
    CHECK(cf.value_at(2) == 1);
    CHECK(cf.value_at(4) == 4);
    CHECK(cf.value_at(6) == 16);
  }
  SUBCASE("the exact coefficients resolve the paper's constant discrepancy") {
    // (1/8) 2^t + (1/8) (-2)^t, not the paper's A=0, B=1/8, C=1/8.
    Rational two_coeff, minus_two_coeff, one_coeff;
    for (const ClosedFormTerm& term : cf.terms) {
      if (term.root == 2) two_coeff = term.coeff;
      if (term.root == -2) minus_two_coeff = term.coeff;
      if (term.root == 1) one_coeff = term.coeff;
    }
    CHECK(two_coeff == parse_rational("1/8"));
    CHECK(minus_two_coeff == parse_rational("1/8"));
    CHECK(one_coeff == 0);
  }
}

TEST_CASE("closed form for R2_A(2^t + 1)") {
  // Family 1 0^tau 1 denotes 2^{tau+1} + 1, so t in the paper is tau + 1.
  ClosedForm cf = fit_closed_form(r2a_min(), parse_pattern("1 0^t 1", 2));
  REQUIRE(cf.closed);
  for (int t = 1; t <= 10; ++t)
    REQUIRE(cf.value_at(t - 1) == oracle_r2a((1ULL << t) + 1));
  CHECK(cf.value_at(1) == 1);  // R2_A(5) = 1: only the pair (0, 5)
}

TEST_CASE("closed form of a constant series") {
  LinearRepresentation rep;
  rep.base = 2;
  rep.u = {Rational(1)};
  rep.v = {parse_rational("7/2")};
  rep.gamma = {{{Rational(1)}}, {{Rational(1)}}};
  ClosedForm cf = fit_closed_form(rep, parse_pattern("1^t", 2));
  REQUIRE(cf.closed);
  REQUIRE(cf.terms.size() == 1);
  CHECK(cf.terms[0].coeff == parse_rational("7/2"));
  CHECK(cf.terms[0].root == 1);
  CHECK(cf.terms[0].t_degree == 0);
}

TEST_CASE("irrational recurrences return the recurrence only") {
  LinearRepresentation rep;
  rep.base = 2;
  rep.u = {Rational(1), Rational(0)};
  rep.v = {Rational(1), Rational(0)};
  QMatrix m = {{Rational(0), Rational(1)}, {Rational(8), Rational(0)}};  // min poly X^2 - 8
  rep.gamma = {m, m};
  ClosedForm cf = fit_closed_form(rep, parse_pattern("0^t", 2));
  CHECK_FALSE(cf.closed);
  RationalPolynomial expect;
  expect.coeffs = {Rational(-8), Rational(0), Rational(1)};
  CHECK(cf.recurrence == expect);
  CHECK_THROWS_AS(cf.value_at(3), std::logic_error);
}

TEST_CASE("closed forms reproduce pattern values exactly for all t <= 30") {
  for (const char* spec : {"1^t", "1 0^t 1", "1 0^t"}) {
    DigitPattern pat = parse_pattern(spec, 2);
    ClosedForm cf = fit_closed_form(r2a_min(), pat);
    REQUIRE(cf.closed);
    for (int t = 0; t <= 30; ++t)
      REQUIRE(cf.value_at(t) == pattern_value(r2a_min(), pat, t));
  }
}

TEST_CASE("dominant ratio of the zero series") {
  LinearRepresentation zero = difference(r2a_min(), r2a_min());
  DominantAnalysis an = dominant_ratio(zero, parse_pattern("1 0^t", 2), Rational(16), 12);
  for (const Rational& r : an.ratios) CHECK(sgn(r) == 0);
  CHECK(an.stabilized);
  CHECK(an.coefficient == 0);
  CHECK_FALSE(an.positive_tail);
  CHECK_THROWS_AS(dominant_ratio(zero, parse_pattern("1 0^t", 2), Rational(0), 5),
                  std::invalid_argument);
}

TEST_CASE("dominant ratio stabilizes for a genuinely dominant root") {
  // R2_A(2^t - 1)/2^t -> 1/8 on even t is not stable, but R1-style full pair
  // counts grow like n; use the universal count 2^l instead: f(2^t) = 2^(t+1).
  TupleDfa a = compile("n=n & x=x", builtins());
  LinearRepresentation rep = extract(a, "n");
  DominantAnalysis an = dominant_ratio(rep, parse_pattern("1 0^t", 2), Rational(2), 20);
  CHECK(an.stabilized);
  CHECK(an.coefficient == 2);
  CHECK(an.positive_tail);
  CHECK(an.n0 == 0);
}

TEST_CASE("monotonicity scan") {
  SUBCASE("finds drops in R2_A") {
    std::vector<std::uint64_t> violations = monotonicity_scan(r2a_min(), 0, 20);
    CHECK(!violations.empty());
    // R2_A(3) = 1 > 0 = R2_A(4)
    CHECK(std::find(violations.begin(), violations.end(), 3) != violations.end());
  }
  SUBCASE("strictly increasing range is clean") {
    TupleDfa a = compile("n=n & x=x", builtins());
    LinearRepresentation doubling = extract(a, "n");  // 2^len(n), weakly increasing in n
    std::vector<std::uint64_t> violations = monotonicity_scan(doubling, 0, 64);
    CHECK(!violations.empty());  // constant on each length block
    bool has_1 = std::find(violations.begin(), violations.end(), 2) != violations.end();
    CHECK(has_1);  // f(2) = f(3) = 4
  }
  SUBCASE("empty range is rejected") {
    CHECK_THROWS_AS(monotonicity_scan(r2a_min(), 5, 4), std::invalid_argument);
  }
}
