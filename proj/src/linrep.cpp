#include "addrep/linrep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "addrep/digits.hpp"

namespace addrep {

namespace {

LinearRepresentation zero_rep(int base) {
  LinearRepresentation r;
  r.base = base;
  r.gamma.assign(static_cast<std::size_t>(base), QMatrix{});
  return r;
}

LinearRepresentation transpose_rep(const LinearRepresentation& rep) {
  LinearRepresentation out;
  out.base = rep.base;
  out.u = rep.v;
  out.v = rep.u;
  out.gamma.reserve(rep.gamma.size());
  for (const QMatrix& g : rep.gamma) out.gamma.push_back(mat_transpose(g));
  return out;
}

// Worklist closure of span{u gamma(w)} in length-lex word order, keeping
// first-seen independent vectors.
struct ForwardBasis {
  SpanSolver solver;
  std::vector<QVector> originals;
};

ForwardBasis forward_basis(const LinearRepresentation& rep) {
  ForwardBasis fb{SpanSolver(rep.rank()), {}};
  if (fb.solver.add(rep.u)) fb.originals.push_back(rep.u);
  for (std::size_t i = 0; i < fb.originals.size(); ++i) {
    for (int d = 0; d < rep.base; ++d) {
      QVector cand = vec_mat(fb.originals[i], rep.gamma[static_cast<std::size_t>(d)]);
      if (fb.solver.add(cand)) fb.originals.push_back(std::move(cand));
    }
  }
  return fb;
}

LinearRepresentation forward_reduce(const LinearRepresentation& rep) {
  ForwardBasis fb = forward_basis(rep);
  int r = static_cast<int>(fb.originals.size());
  if (r == 0) return zero_rep(rep.base);
  LinearRepresentation out;
  out.base = rep.base;
  for (int d = 0; d < rep.base; ++d) {
    QMatrix a(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      auto coords = fb.solver.coords(
          vec_mat(fb.originals[static_cast<std::size_t>(i)], rep.gamma[static_cast<std::size_t>(d)]));
      if (!coords) throw std::logic_error("forward space not invariant");
      a[static_cast<std::size_t>(i)] = std::move(*coords);
    }
    out.gamma.push_back(std::move(a));
  }
  auto uc = fb.solver.coords(rep.u);
  if (!uc) throw std::logic_error("u outside forward space");
  out.u = std::move(*uc);
  out.v.reserve(static_cast<std::size_t>(r));
  for (const QVector& b : fb.originals) {
    Rational acc(0);
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) acc += b[j] * rep.v[j];
    out.v.push_back(acc);
  }
  return out;
}

}  // namespace

LinearRepresentation extract(const TupleDfa& a, const std::string& index_var) {
  auto it = std::find(a.tracks.begin(), a.tracks.end(), index_var);
  if (it == a.tracks.end()) throw std::invalid_argument("extract: unknown track " + index_var);
  int vi = static_cast<int>(it - a.tracks.begin());
  int n = a.state_count();
  LinearRepresentation rep;
  rep.base = a.base;
  rep.u.assign(static_cast<std::size_t>(n), Rational(0));
  rep.u[static_cast<std::size_t>(a.initial)] = 1;
  rep.v.assign(static_cast<std::size_t>(n), Rational(0));
  for (int s = 0; s < n; ++s)
    if (a.accepting[static_cast<std::size_t>(s)]) rep.v[static_cast<std::size_t>(s)] = 1;
  rep.gamma.assign(static_cast<std::size_t>(a.base),
                   QMatrix(static_cast<std::size_t>(n), QVector(static_cast<std::size_t>(n), Rational(0))));
  int d = a.track_count();
  for (int s = 0; s < n; ++s) {
    for (int L = 0; L < a.letters(); ++L) {
      std::int32_t t = a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)];
      if (t == kDeadState) continue;
      int dig = letter_digit(a.base, d, L, vi);
      rep.gamma[static_cast<std::size_t>(dig)][static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] += 1;
    }
  }

  // Leading-zero normalization: slide u along gamma(0) until the value of
  // every word is unchanged by one more leading zero, i.e. until
  // u gamma(0)^{j+1} - u gamma(0)^j annihilates span{gamma(w) v}. Counts that
  // are not bounded in terms of the index variable never stabilize; those
  // keep the raw u and stay honestly length-sensitive.
  ForwardBasis observability = forward_basis(transpose_rep(rep));
  QVector u = rep.u;
  for (int j = 0; j <= rep.rank(); ++j) {
    QVector nxt = vec_mat(u, rep.gamma[0]);
    QVector diff(nxt.size());
    for (std::size_t i = 0; i < nxt.size(); ++i) diff[i] = nxt[i] - u[i];
    bool stable = true;
    for (const QVector& col : observability.originals) {
      Rational dot(0);
      for (std::size_t i = 0; i < diff.size(); ++i)
        if (sgn(diff[i]) != 0 && sgn(col[i]) != 0) dot += diff[i] * col[i];
      if (sgn(dot) != 0) {
        stable = false;
        break;
      }
    }
    if (stable) {
      rep.u = u;
      return rep;
    }
    u = std::move(nxt);
  }
  return rep;
}

Rational evaluate(const LinearRepresentation& rep, std::uint64_t n) {
  return evaluate_word(rep, canonical_digits(rep.base, n));
}

Rational evaluate_word(const LinearRepresentation& rep, const std::vector<int>& digits) {
  if (rep.rank() == 0) return Rational(0);
  QVector row = rep.u;
  for (int d : digits) row = vec_mat(row, rep.gamma[static_cast<std::size_t>(d)]);
  Rational acc(0);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (sgn(row[i]) != 0) acc += row[i] * rep.v[i];
  return acc;
}

namespace {

void range_walk(const LinearRepresentation& rep, const QVector& row, std::uint64_t value,
                int remaining, std::uint64_t from, std::uint64_t to, QVector& out) {
  if (remaining == 0) {
    if (value >= from && value <= to) {
      Rational acc(0);
      for (std::size_t i = 0; i < row.size(); ++i)
        if (sgn(row[i]) != 0) acc += row[i] * rep.v[i];
      out[static_cast<std::size_t>(value - from)] = acc;
    }
    return;
  }
  std::uint64_t k = static_cast<std::uint64_t>(rep.base);
  std::uint64_t span = 1;
  for (int i = 0; i < remaining; ++i) span *= k;
  std::uint64_t lo = value * span;
  std::uint64_t hi = lo + span - 1;
  if (hi < from || lo > to) return;
  for (int d = 0; d < rep.base; ++d)
    range_walk(rep, vec_mat(row, rep.gamma[static_cast<std::size_t>(d)]),
               value * k + static_cast<std::uint64_t>(d), remaining - 1, from, to, out);
}

}  // namespace

QVector evaluate_range(const LinearRepresentation& rep, std::uint64_t from, std::uint64_t to) {
  if (to < from) return {};
  QVector out(static_cast<std::size_t>(to - from + 1), Rational(0));
  if (rep.rank() == 0) return out;
  if (from == 0) out[0] = evaluate(rep, 0);
  int max_len = static_cast<int>(canonical_digits(rep.base, to).size());
  for (int len = 1; len <= max_len; ++len)
    for (int d0 = 1; d0 < rep.base; ++d0)
      range_walk(rep, vec_mat(rep.u, rep.gamma[static_cast<std::size_t>(d0)]),
                 static_cast<std::uint64_t>(d0), len - 1, from, to, out);
  return out;
}

LinearRepresentation minimize_rep(const LinearRepresentation& rep) {
  LinearRepresentation f = forward_reduce(rep);
  if (f.rank() == 0) return f;
  return transpose_rep(forward_reduce(transpose_rep(f)));
}

LinearRepresentation canonical_form(const LinearRepresentation& rep) {
  LinearRepresentation m = minimize_rep(rep);
  int r = m.rank();
  if (r == 0) return m;
  // Length-lex-first independent Hankel rows / columns of the series, read
  // off the minimal (hence faithful) representation.
  ForwardBasis fwd = forward_basis(m);
  ForwardBasis bwd = forward_basis(transpose_rep(m));
  QMatrix p(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) p[static_cast<std::size_t>(i)] = fwd.originals[static_cast<std::size_t>(i)];
  QMatrix s(static_cast<std::size_t>(r), QVector(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          bwd.originals[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  QMatrix ps = mat_mul(p, s);
  LinearRepresentation out;
  out.base = m.base;
  for (int d = 0; d < m.base; ++d)
    out.gamma.push_back(solve_linear(ps, mat_mul(mat_mul(p, m.gamma[static_cast<std::size_t>(d)]), s)));
  out.u = vec_mat(m.u, s);
  out.v = solve_linear(s, m.v);
  return out;
}

LinearRepresentation difference(const LinearRepresentation& a, const LinearRepresentation& b) {
  if (a.base != b.base) throw std::invalid_argument("difference: base mismatch");
  int n1 = a.rank(), n2 = b.rank();
  LinearRepresentation out;
  out.base = a.base;
  out.u = a.u;
  out.u.insert(out.u.end(), b.u.begin(), b.u.end());
  out.v = a.v;
  for (const Rational& x : b.v) out.v.push_back(-x);
  for (int d = 0; d < a.base; ++d) {
    QMatrix m(static_cast<std::size_t>(n1 + n2), QVector(static_cast<std::size_t>(n1 + n2), Rational(0)));
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n1; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            a.gamma[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n2; ++j)
        m[static_cast<std::size_t>(n1 + i)][static_cast<std::size_t>(n1 + j)] =
            b.gamma[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    out.gamma.push_back(std::move(m));
  }
  return out;
}

bool series_equal(const LinearRepresentation& a, const LinearRepresentation& b) {
  bool by_rank = minimize_rep(difference(a, b)).rank() == 0;
  bool by_canonical = canonical_form(a) == canonical_form(b);
  if (by_rank != by_canonical)
    throw std::logic_error("series_equal: difference-minimization and canonical forms disagree");
  return by_rank;
}

std::optional<std::uint64_t> first_difference(const LinearRepresentation& a,
                                              const LinearRepresentation& b,
                                              std::uint64_t limit) {
  QVector va = evaluate_range(a, 0, limit);
  QVector vb = evaluate_range(b, 0, limit);
  for (std::uint64_t n = 0; n <= limit; ++n)
    if (va[static_cast<std::size_t>(n)] != vb[static_cast<std::size_t>(n)]) return n;
  return std::nullopt;
}

std::string serialize(const LinearRepresentation& rep) {
  std::ostringstream out;
  out << "base " << rep.base << "\n";
  out << "rank " << rep.rank() << "\n";
  out << "u:\n";
  for (int i = 0; i < rep.rank(); ++i) out << (i ? " " : "") << rational_str(rep.u[static_cast<std::size_t>(i)]);
  out << "\n";
  for (int d = 0; d < rep.base; ++d) {
    out << "gamma " << d << ":\n";
    for (int i = 0; i < rep.rank(); ++i) {
      for (int j = 0; j < rep.rank(); ++j)
        out << (j ? " " : "")
            << rational_str(rep.gamma[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      out << "\n";
    }
  }
  out << "v:\n";
  for (int i = 0; i < rep.rank(); ++i) out << (i ? " " : "") << rational_str(rep.v[static_cast<std::size_t>(i)]);
  out << "\n";
  return out.str();
}

LinearRepresentation deserialize_rep(const std::string& text) {
  // Strip comment lines, then scan tokens.
  std::istringstream lines(text);
  std::string line, body;
  while (std::getline(lines, line)) {
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    body += line + "\n";
  }
  std::istringstream in(body);
  auto fail = [](const std::string& msg) -> std::string {
    throw std::invalid_argument("representation file: " + msg);
  };
  auto expect_word = [&](const std::string& w) {
    std::string tok;
    if (!(in >> tok) || tok != w) fail("expected '" + w + "'");
  };
  LinearRepresentation rep;
  int rank = 0;
  expect_word("base");
  if (!(in >> rep.base) || rep.base < 2) fail("bad base");
  expect_word("rank");
  if (!(in >> rank) || rank < 0) fail("bad rank");
  auto read_vec = [&](int n) {
    QVector v(static_cast<std::size_t>(n));
    std::string tok;
    for (int i = 0; i < n; ++i) {
      if (!(in >> tok)) fail("truncated vector");
      v[static_cast<std::size_t>(i)] = parse_rational(tok);
    }
    return v;
  };
  expect_word("u:");
  rep.u = read_vec(rank);
  for (int d = 0; d < rep.base; ++d) {
    expect_word("gamma");
    std::string label;
    if (!(in >> label) || label != std::to_string(d) + ":") fail("expected 'gamma " + std::to_string(d) + ":'");
    QMatrix m(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i)] = read_vec(rank);
    rep.gamma.push_back(std::move(m));
  }
  expect_word("v:");
  rep.v = read_vec(rank);
  std::string extra;
  if (in >> extra) fail("unexpected trailing content '" + extra + "'");
  return rep;
}

}  // namespace addrep
