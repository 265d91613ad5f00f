#include <doctest.h>

#include "addrep/compiler.hpp"
#include "addrep/digits.hpp"
#include "addrep/linrep.hpp"
#include "addrep/oracles.hpp"
#include "test_util.hpp"

using namespace addrep;
using test::builtins;

namespace {

const LinearRepresentation& r2a_rep() {
  static LinearRepresentation rep =
      extract(compile("n=x+y & x<y & T[x]=@0 & T[y]=@0", builtins()), "n");
  return rep;
}

const LinearRepresentation& r2b_rep() {
  static LinearRepresentation rep =
      extract(compile("n=x+y & x<y & T[x]=@1 & T[y]=@1", builtins()), "n");
  return rep;
}

const LinearRepresentation& r3cm_rep() {
  static LinearRepresentation rep =
      extract(compile("n+1=x+y & x<=y & TT[x]=@0 & TT[y]=@0", builtins()), "n");
  return rep;
}

const LinearRepresentation& r3dm_rep() {
  static LinearRepresentation rep =
      extract(compile("n+1=x+y & x<=y & TT[x]=@1 & TT[y]=@1", builtins()), "n");
  return rep;
}

Rational oracle_r2a(std::uint64_t n) {
  return Rational(static_cast<unsigned long>(oracles::brute_R(2, oracles::AutoSet::A, n)));
}

Rational oracle_r3c_shift(std::uint64_t n) {
  return Rational(static_cast<unsigned long>(oracles::brute_R(3, oracles::AutoSet::C, n + 1)));
}

}  // namespace

TEST_CASE("extraction ranks") {
  CHECK(r2a_rep().rank() == 12);
  CHECK(r2b_rep().rank() == 12);
  CHECK(r3cm_rep().rank() == 20);
  CHECK(r3dm_rep().rank() == 20);
  CHECK_THROWS_AS(extract(compile("x=x", builtins()), "q"), std::invalid_argument);
}

TEST_CASE("extraction of an unconstrained track counts every value") {
  // Universal automaton over (n, x): rank 1 and evaluation with an l-digit
  // representation counts all x < 2^l.
  TupleDfa a = compile("n=n & x=x", builtins());
  LinearRepresentation rep = extract(a, "n");
  CHECK(rep.rank() == 1);
  CHECK(rep.gamma[0][0][0] == 2);
  CHECK(rep.gamma[1][0][0] == 2);
  CHECK(evaluate_word(rep, {1, 0, 1}) == 8);
  CHECK(evaluate_word(rep, {0, 1, 0, 1}) == 16);
}

TEST_CASE("evaluate matches the examples and the oracle") {
  CHECK(evaluate(r2a_rep(), 9) == 2);
  CHECK(evaluate(r2a_rep(), 1) == 0);
  CHECK(evaluate(r2a_rep(), 0) == 0);
  QVector vals = evaluate_range(r2a_rep(), 0, 2000);
  for (std::uint64_t n = 0; n <= 2000; ++n)
    REQUIRE(vals[static_cast<std::size_t>(n)] == oracle_r2a(n));
  QVector vals3 = evaluate_range(r3cm_rep(), 0, 2000);
  for (std::uint64_t n = 0; n <= 2000; ++n)
    REQUIRE(vals3[static_cast<std::size_t>(n)] == oracle_r3c_shift(n));
}

TEST_CASE("leading-zero stability of extracted representations") {
  for (const LinearRepresentation* rep : {&r2a_rep(), &r3cm_rep(), &r3dm_rep()}) {
    for (std::uint64_t n : {0ULL, 1ULL, 7ULL, 9ULL, 31ULL, 100ULL, 1023ULL, 4096ULL}) {
      Rational base_value = evaluate(*rep, n);
      for (int j : {1, 2, 3}) {
        std::vector<int> digits(static_cast<std::size_t>(j), 0);
        std::vector<int> canon = canonical_digits(rep->base, n);
        digits.insert(digits.end(), canon.begin(), canon.end());
        REQUIRE(evaluate_word(*rep, digits) == base_value);
      }
    }
  }
}

TEST_CASE("schutzenberger minimization") {
  LinearRepresentation ma = minimize_rep(r2a_rep());
  CHECK(ma.rank() == 5);
  CHECK(minimize_rep(r2b_rep()).rank() == 5);
  CHECK(minimize_rep(r3cm_rep()).rank() == 10);
  CHECK(minimize_rep(r3dm_rep()).rank() == 10);

  SUBCASE("zero series minimizes to rank 0") {
    LinearRepresentation zero = difference(r2a_rep(), r2a_rep());
    CHECK(minimize_rep(zero).rank() == 0);
  }
  SUBCASE("preserves evaluation exactly up to 2000") {
    QVector min_vals = evaluate_range(ma, 0, 2000);
    for (std::uint64_t n = 0; n <= 2000; ++n)
      REQUIRE(min_vals[static_cast<std::size_t>(n)] == oracle_r2a(n));
  }
}

TEST_CASE("canonical forms") {
  LinearRepresentation ca = canonical_form(r2a_rep());
  LinearRepresentation cb = canonical_form(r2b_rep());
  CHECK(ca.rank() == 5);
  CHECK(ca == cb);
  CHECK(canonical_form(r3cm_rep()) == canonical_form(r3dm_rep()));

  SUBCASE("rank zero gives the empty triple") {
    LinearRepresentation zero = canonical_form(difference(r2a_rep(), r2a_rep()));
    CHECK(zero.rank() == 0);
    CHECK(zero.u.empty());
    CHECK(zero.v.empty());
  }
  SUBCASE("re-canonicalization is a fixpoint, and rank never grows") {
    CHECK(canonical_form(ca) == ca);
    CHECK(canonical_form(r2a_rep()).rank() <= r2a_rep().rank());
  }
  SUBCASE("canonical values still match the oracle up to 2000") {
    QVector vals = evaluate_range(ca, 0, 2000);
    for (std::uint64_t n = 0; n <= 2000; ++n)
      REQUIRE(vals[static_cast<std::size_t>(n)] == oracle_r2a(n));
  }
}

TEST_CASE("difference representation") {
  SUBCASE("of a representation with itself vanishes on 0..100") {
    LinearRepresentation zero = difference(r2a_rep(), r2a_rep());
    QVector vals = evaluate_range(zero, 0, 100);
    for (const Rational& v : vals) REQUIRE(sgn(v) == 0);
  }
  SUBCASE("of the dombi pair minimizes to rank 0") {
    CHECK(minimize_rep(difference(r2a_rep(), r2b_rep())).rank() == 0);
  }
  SUBCASE("of the unshifted chen-wang pair evaluates to -1 at n = 0") {
    LinearRepresentation rc = extract(compile("n=x+y & x<=y & TT[x]=@0 & TT[y]=@0", builtins()), "n");
    LinearRepresentation rd = extract(compile("n=x+y & x<=y & TT[x]=@1 & TT[y]=@1", builtins()), "n");
    CHECK(evaluate(difference(rc, rd), 0) == -1);
  }
  SUBCASE("base mismatch is rejected") {
    LinearRepresentation ternary;
    ternary.base = 3;
    ternary.u = {Rational(1)};
    ternary.v = {Rational(1)};
    ternary.gamma = {{{Rational(1)}}, {{Rational(1)}}, {{Rational(1)}}};
    CHECK_THROWS_AS(difference(r2a_rep(), ternary), std::invalid_argument);
  }
}

TEST_CASE("series equality") {
  CHECK(series_equal(r2a_rep(), r2b_rep()));
  CHECK(series_equal(r3cm_rep(), r3dm_rep()));
  CHECK_FALSE(series_equal(r2a_rep(), r3cm_rep()));
  CHECK(first_difference(r2a_rep(), r3cm_rep(), 100) == 3);

  SUBCASE("is an equivalence relation on the fixture set") {
    std::vector<const LinearRepresentation*> fixtures = {&r2a_rep(), &r2b_rep(), &r3cm_rep(),
                                                         &r3dm_rep()};
    for (auto* a : fixtures) CHECK(series_equal(*a, *a));  // reflexive
    for (auto* a : fixtures)
      for (auto* b : fixtures) CHECK(series_equal(*a, *b) == series_equal(*b, *a));  // symmetric
    for (auto* a : fixtures)
      for (auto* b : fixtures)
        for (auto* c : fixtures)  // transitive
          if (series_equal(*a, *b) && series_equal(*b, *c)) CHECK(series_equal(*a, *c));
  }
}

TEST_CASE("serialization") {
  SUBCASE("round-trips entrywise") {
    for (const LinearRepresentation* rep :
         {&r2a_rep(), &r3cm_rep()}) {
      CHECK(deserialize_rep(serialize(*rep)) == *rep);
    }
    LinearRepresentation canon = canonical_form(r2a_rep());
    CHECK(deserialize_rep(serialize(canon)) == canon);
  }
  SUBCASE("rationals parse and re-emit canonically reduced") {
    CHECK(rational_str(parse_rational("-1/3")) == "-1/3");
    CHECK(rational_str(parse_rational("2/4")) == "1/2");
    CHECK(rational_str(parse_rational("-6/3")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  }
  SUBCASE("malformed files are rejected") {
    CHECK_THROWS_AS(deserialize_rep("base 2\nrank 1\nu:\n1\n"), std::invalid_argument);
    CHECK_THROWS_AS(deserialize_rep("rank 1\n"), std::invalid_argument);
  }
}

TEST_CASE("the paper's rank-5 fixture") {
  LinearRepresentation fixture = deserialize_rep(test::read_fixture("r2a_rank5_paper.lr"));
  CHECK(fixture.rank() == 5);
  // The oracle is authoritative; a disagreement here would be a
  // paper-fixture deviation.
  QVector vals = evaluate_range(fixture, 0, 2000);
  for (std::uint64_t n = 0; n <= 2000; ++n)
    REQUIRE_MESSAGE(vals[static_cast<std::size_t>(n)] == oracle_r2a(n),
                    "paper fixture deviates from the brute-force oracle at n=" << n);
  CHECK(series_equal(fixture, r2a_rep()));
}

TEST_CASE("the paper's rank-10 fixture") {
  LinearRepresentation fixture = deserialize_rep(test::read_fixture("r3_rank10_paper.lr"));
  CHECK(fixture.rank() == 10);
  QVector vals = evaluate_range(fixture, 0, 2000);
  for (std::uint64_t n = 0; n <= 2000; ++n)
    REQUIRE_MESSAGE(vals[static_cast<std::size_t>(n)] == oracle_r3c_shift(n),
                    "paper fixture deviates from the brute-force oracle at n=" << n);
  CHECK(series_equal(fixture, r3cm_rep()));
}
