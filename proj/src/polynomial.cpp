#include "addrep/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace addrep {

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  RationalPolynomial p;
  if (sgn(c) != 0) p.coeffs = {c};
  return p;
}

RationalPolynomial RationalPolynomial::linear_root(const Rational& root) {
  RationalPolynomial p;
  p.coeffs = {-root, Rational(1)};
  return p;
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

void RationalPolynomial::trim() {
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out;
  out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  out.trim();
  return out;
}

RationalPolynomial poly_sub(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out;
  out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  out.trim();
  return out;
}

RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (sgn(a.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      if (sgn(b.coeffs[j]) != 0) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                              const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  RationalPolynomial rem = a;
  rem.trim();
  RationalPolynomial quot;
  if (rem.coeffs.size() >= b.coeffs.size())
    quot.coeffs.assign(rem.coeffs.size() - b.coeffs.size() + 1, Rational(0));
  while (!rem.is_zero() && rem.coeffs.size() >= b.coeffs.size()) {
    Rational f = rem.coeffs.back() / b.coeffs.back();
    std::size_t shift = rem.coeffs.size() - b.coeffs.size();
    quot.coeffs[shift] = f;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      if (sgn(b.coeffs[i]) != 0) rem.coeffs[shift + i] -= f * b.coeffs[i];
    rem.coeffs.pop_back();
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  x.trim();
  y.trim();
  while (!y.is_zero()) {
    RationalPolynomial r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) {
    Rational lead = x.coeffs.back();
    for (auto& c : x.coeffs) c /= lead;
  }
  return x;
}

RationalPolynomial poly_lcm(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial::zero();
  RationalPolynomial g = poly_gcd(a, b);
  RationalPolynomial q = poly_divmod(poly_mul(a, b), g).first;
  Rational lead = q.coeffs.back();
  for (auto& c : q.coeffs) c /= lead;
  return q;
}

std::string poly_str(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    const Rational& c = p.coeffs[i];
    if (sgn(c) == 0) continue;
    Rational abs = sgn(c) < 0 ? Rational(-c) : c;
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (abs == 1);
    if (i == 0) out << rational_str(abs);
    else {
      if (!unit) out << rational_str(abs) << "*";
      out << "X";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

RationalPolynomial krylov_row_annihilator(const QVector& row, const QMatrix& m) {
  if (is_zero_vector(row)) {
    RationalPolynomial one;
    one.coeffs = {Rational(1)};
    return one;
  }
  SpanSolver solver(static_cast<int>(row.size()));
  solver.add(row);
  QVector cur = row;
  while (true) {
    cur = vec_mat(cur, m);
    auto coords = solver.coords(cur);
    if (coords) {
      RationalPolynomial p;
      p.coeffs.reserve(coords->size() + 1);
      for (const Rational& c : *coords) p.coeffs.push_back(-c);
      p.coeffs.push_back(Rational(1));
      return p;
    }
    solver.add(cur);
  }
}

namespace {

// row * p(m) via Horner.
QVector row_poly_apply(const QVector& row, const QMatrix& m, const RationalPolynomial& p) {
  QVector acc(row.size(), Rational(0));
  if (p.is_zero()) return acc;
  for (std::size_t i = 0; i < row.size(); ++i) acc[i] = p.coeffs.back() * row[i];
  for (std::size_t c = p.coeffs.size() - 1; c-- > 0;) {
    acc = vec_mat(acc, m);
    if (sgn(p.coeffs[c]) != 0)
      for (std::size_t i = 0; i < row.size(); ++i) acc[i] += p.coeffs[c] * row[i];
  }
  return acc;
}

}  // namespace

RationalPolynomial min_poly(const QMatrix& m) {
  int n = static_cast<int>(m.size());
  RationalPolynomial lcm;
  for (int i = 0; i < n; ++i) {
    QVector e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    if (!lcm.is_zero() && is_zero_vector(row_poly_apply(e, m, lcm))) continue;
    RationalPolynomial p = krylov_row_annihilator(e, m);
    lcm = lcm.is_zero() ? p : poly_lcm(lcm, p);
  }
  if (lcm.is_zero()) lcm.coeffs = {Rational(1)};  // 0 x 0 matrix
  return lcm;
}

RationalPolynomial char_poly(const QMatrix& m) {
  // Berkowitz: division-free, exact. Coefficients built highest-degree first.
  int n = static_cast<int>(m.size());
  std::vector<Rational> c = {Rational(1)};
  for (int r = 1; r <= n; ++r) {
    // Toeplitz column: 1, -a_rr, -(R S), -(R M S), ... for the leading block.
    std::vector<Rational> t(static_cast<std::size_t>(r) + 1, Rational(0));
    t[0] = 1;
    t[1] = -m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(r - 1)];
    QVector s(static_cast<std::size_t>(r - 1));
    for (int i = 0; i < r - 1; ++i)
      s[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r - 1)];
    QVector rs = s;
    for (int i = 2; i <= r; ++i) {
      Rational dot(0);
      for (int j = 0; j < r - 1; ++j)
        if (sgn(m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)]) != 0 &&
            sgn(rs[static_cast<std::size_t>(j)]) != 0)
          dot += m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)] * rs[static_cast<std::size_t>(j)];
      t[static_cast<std::size_t>(i)] = -dot;
      if (i < r) {
        QVector nxt(static_cast<std::size_t>(r - 1), Rational(0));
        for (int a = 0; a < r - 1; ++a) {
          Rational acc(0);
          for (int b = 0; b < r - 1; ++b)
            if (sgn(m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) != 0 &&
                sgn(rs[static_cast<std::size_t>(b)]) != 0)
              acc += m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * rs[static_cast<std::size_t>(b)];
          nxt[static_cast<std::size_t>(a)] = acc;
        }
        rs = std::move(nxt);
      }
    }
    std::vector<Rational> nc(static_cast<std::size_t>(r) + 1, Rational(0));
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < r && j <= i; ++j)
        if (sgn(t[static_cast<std::size_t>(i - j)]) != 0 && sgn(c[static_cast<std::size_t>(j)]) != 0)
          nc[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i - j)] * c[static_cast<std::size_t>(j)];
    c = std::move(nc);
  }
  RationalPolynomial out;
  out.coeffs.assign(c.rbegin(), c.rend());
  out.trim();
  return out;
}

bool annihilates(const RationalPolynomial& p, const QMatrix& m) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    QVector e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    if (!is_zero_vector(row_poly_apply(e, m, p))) return false;
  }
  return true;
}

namespace {

std::vector<Integer> divisors_of(const Integer& value) {
  Integer v = abs(value);
  if (v == 0) throw std::logic_error("divisors of zero");
  std::vector<std::pair<Integer, int>> factors;
  Integer d = 2;
  while (d * d <= v) {
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
    if (factors.size() > 64) break;  // smooth inputs only; residue below
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<Integer> divs = {Integer(1)};
  for (const auto& [prime, exp] : factors) {
    std::size_t base_count = divs.size();
    Integer pw = 1;
    for (int e = 1; e <= exp; ++e) {
      pw *= prime;
      for (std::size_t i = 0; i < base_count; ++i) {
        divs.push_back(divs[i] * pw);
        if (divs.size() > 200000) throw std::domain_error("rational_roots: too many divisor candidates");
      }
    }
  }
  return divs;
}

}  // namespace

RationalRoots rational_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  RationalRoots out;
  RationalPolynomial q = p;
  q.trim();

  int zero_mult = 0;
  while (!q.coeffs.empty() && sgn(q.coeffs.front()) == 0) {
    q.coeffs.erase(q.coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);
  if (q.degree() < 1) {
    out.remainder = q;
    sort(out.roots.begin(), out.roots.end(),
         [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  // Primitive integer form for the rational root theorem.
  Integer den_lcm = 1;
  for (const Rational& c : q.coeffs) {
    Integer d = c.get_den();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  std::vector<Integer> ic;
  for (const Rational& c : q.coeffs) {
    Rational scaled = c * Rational(den_lcm);
    ic.push_back(scaled.get_num());
  }
  std::set<Rational> candidates;
  for (const Integer& pn : divisors_of(ic.front()))
    for (const Integer& pd : divisors_of(ic.back())) {
      Rational r(pn, pd);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(Rational(-r));
    }

  for (const Rational& cand : candidates) {
    int mult = 0;
    while (q.degree() >= 1 && sgn(q.eval(cand)) == 0) {
      auto [quot, rem] = poly_divmod(q, RationalPolynomial::linear_root(cand));
      if (!rem.is_zero()) throw std::logic_error("rational_roots: inexact deflation");
      q = std::move(quot);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(cand, mult);
  }
  sort(out.roots.begin(), out.roots.end(),
       [](const auto& a, const auto& b) { return a.first < b.first; });
  out.remainder = q;
  return out;
}

}  // namespace addrep
