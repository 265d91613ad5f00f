#include "addrep/linalg.hpp"

#include <cstdio>
#include <stdexcept>

namespace addrep {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid(text)) throw std::invalid_argument("malformed rational: " + text);
    return Rational(Integer(text));
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!valid(num) || !valid(den)) throw std::invalid_argument("malformed rational: " + text);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", q.get_d());
  return buf;
}

QVector vec_mat(const QVector& row, const QMatrix& m) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  QVector out(cols, Rational(0));
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (sgn(row[i]) == 0) continue;
    const QVector& mi = m[i];
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(mi[j]) != 0) out[j] += row[i] * mi[j];
  }
  return out;
}

QVector mat_vec(const QMatrix& m, const QVector& col) {
  QVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    const QVector& mi = m[i];
    Rational acc(0);
    for (std::size_t j = 0; j < col.size(); ++j)
      if (sgn(mi[j]) != 0 && sgn(col[j]) != 0) acc += mi[j] * col[j];
    out[i] = acc;
  }
  return out;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = vec_mat(a[i], b);
  return out;
}

QMatrix mat_transpose(const QMatrix& m) {
  std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  QMatrix out(cols, QVector(rows, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
  return out;
}

QMatrix identity_matrix(int n) {
  QMatrix out(static_cast<std::size_t>(n), QVector(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return out;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

SpanSolver::SpanSolver(int width) : width_(width) {}

bool SpanSolver::add(const QVector& v) {
  QVector r = v;
  QVector combo(rows_.size() + 1, Rational(0));
  combo.back() = 1;
  for (const Row& row : rows_) {
    const Rational& x = r[static_cast<std::size_t>(row.pivot)];
    if (sgn(x) == 0) continue;
    Rational f = x / row.reduced[static_cast<std::size_t>(row.pivot)];
    for (int j = row.pivot; j < width_; ++j)
      if (sgn(row.reduced[static_cast<std::size_t>(j)]) != 0)
        r[static_cast<std::size_t>(j)] -= f * row.reduced[static_cast<std::size_t>(j)];
    for (std::size_t j = 0; j < row.combo.size(); ++j)
      if (sgn(row.combo[j]) != 0) combo[j] -= f * row.combo[j];
  }
  int pivot = -1;
  for (int j = 0; j < width_; ++j)
    if (sgn(r[static_cast<std::size_t>(j)]) != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  for (Row& row : rows_) row.combo.push_back(Rational(0));
  // Back-substitute so existing rows stay reduced at the new pivot.
  for (Row& row : rows_) {
    const Rational& x = row.reduced[static_cast<std::size_t>(pivot)];
    if (sgn(x) == 0) continue;
    Rational f = x / r[static_cast<std::size_t>(pivot)];
    for (int j = 0; j < width_; ++j)
      if (sgn(r[static_cast<std::size_t>(j)]) != 0)
        row.reduced[static_cast<std::size_t>(j)] -= f * r[static_cast<std::size_t>(j)];
    for (std::size_t j = 0; j < combo.size(); ++j)
      if (sgn(combo[j]) != 0) row.combo[j] -= f * combo[j];
  }
  Row nr{std::move(r), std::move(combo), pivot};
  auto it = rows_.begin();
  while (it != rows_.end() && it->pivot < pivot) ++it;
  rows_.insert(it, std::move(nr));
  return true;
}

std::optional<QVector> SpanSolver::coords(const QVector& v) const {
  QVector r = v;
  QVector combo(rows_.size(), Rational(0));
  for (const Row& row : rows_) {
    const Rational& x = r[static_cast<std::size_t>(row.pivot)];
    if (sgn(x) == 0) continue;
    Rational f = x / row.reduced[static_cast<std::size_t>(row.pivot)];
    for (int j = row.pivot; j < width_; ++j)
      if (sgn(row.reduced[static_cast<std::size_t>(j)]) != 0)
        r[static_cast<std::size_t>(j)] -= f * row.reduced[static_cast<std::size_t>(j)];
    for (std::size_t j = 0; j < row.combo.size(); ++j)
      if (sgn(row.combo[j]) != 0) combo[j] -= f * row.combo[j];
  }
  if (!is_zero_vector(r)) return std::nullopt;
  for (auto& x : combo) x = -x;
  return combo;
}

bool SpanSolver::contains(const QVector& v) const {
  QVector r = v;
  for (const Row& row : rows_) {
    const Rational& x = r[static_cast<std::size_t>(row.pivot)];
    if (sgn(x) == 0) continue;
    Rational f = x / row.reduced[static_cast<std::size_t>(row.pivot)];
    for (int j = row.pivot; j < width_; ++j)
      if (sgn(row.reduced[static_cast<std::size_t>(j)]) != 0)
        r[static_cast<std::size_t>(j)] -= f * row.reduced[static_cast<std::size_t>(j)];
  }
  return is_zero_vector(r);
}

QMatrix solve_linear(const QMatrix& m, const QMatrix& b) {
  std::size_t n = m.size();
  std::size_t p = b.empty() ? 0 : b[0].size();
  QMatrix a(n, QVector(n + p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    for (std::size_t j = 0; j < p; ++j) a[i][n + j] = b[i][j];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw std::domain_error("solve_linear: singular matrix");
    std::swap(a[col], a[piv]);
    Rational pv = a[col][col];
    for (std::size_t j = col; j < n + p; ++j) a[col][j] /= pv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n + p; ++j)
        if (sgn(a[col][j]) != 0) a[r][j] -= f * a[col][j];
    }
  }
  QMatrix x(n, QVector(p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) x[i][j] = a[i][n + j];
  return x;
}

QVector solve_linear(const QMatrix& m, const QVector& b) {
  QMatrix bb(b.size(), QVector(1));
  for (std::size_t i = 0; i < b.size(); ++i) bb[i][0] = b[i];
  QMatrix x = solve_linear(m, bb);
  QVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = x[i][0];
  return out;
}

}  // namespace addrep
