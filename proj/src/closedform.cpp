#include "addrep/closedform.hpp"

#include <sstream>
#include <stdexcept>

namespace addrep {

DigitPattern parse_pattern(const std::string& text, int base) {
  DigitPattern pat;
  pat.repeated = -1;
  std::istringstream in(text);
  std::string tok;
  std::vector<int>* side = &pat.prefix;
  while (in >> tok) {
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      if (tok.substr(caret) != "^t" || caret != 1 || !std::isdigit(static_cast<unsigned char>(tok[0])))
        throw std::invalid_argument("pattern: expected a single digit before '^t' in '" + tok + "'");
      if (pat.repeated >= 0) throw std::invalid_argument("pattern: more than one 'd^t' group");
      pat.repeated = tok[0] - '0';
      if (pat.repeated >= base) throw std::invalid_argument("pattern: digit out of range for base");
      side = &pat.suffix;
      continue;
    }
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("pattern: bad digit group '" + tok + "'");
      int d = c - '0';
      if (d >= base) throw std::invalid_argument("pattern: digit out of range for base");
      side->push_back(d);
    }
  }
  if (pat.repeated < 0) throw std::invalid_argument("pattern: missing 'd^t' group");
  if (!pat.prefix.empty() && pat.prefix[0] == 0)
    throw std::invalid_argument("pattern: prefix has a leading zero");
  return pat;
}

std::string pattern_str(const DigitPattern& pat) {
  std::ostringstream out;
  for (int d : pat.prefix) out << d;
  if (!pat.prefix.empty()) out << " ";
  out << pat.repeated << "^t";
  if (!pat.suffix.empty()) {
    out << " ";
    for (int d : pat.suffix) out << d;
  }
  return out.str();
}

namespace {

Rational finish_pattern(const LinearRepresentation& rep, QVector row, const DigitPattern& pat) {
  for (int d : pat.suffix) row = vec_mat(row, rep.gamma[static_cast<std::size_t>(d)]);
  Rational acc(0);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (sgn(row[i]) != 0) acc += row[i] * rep.v[i];
  return acc;
}

QVector prefix_row(const LinearRepresentation& rep, const DigitPattern& pat) {
  QVector row = rep.u;
  for (int d : pat.prefix) row = vec_mat(row, rep.gamma[static_cast<std::size_t>(d)]);
  return row;
}

}  // namespace

Rational pattern_value(const LinearRepresentation& rep, const DigitPattern& pat, int t) {
  if (rep.rank() == 0) return Rational(0);
  QVector row = prefix_row(rep, pat);
  for (int i = 0; i < t; ++i) row = vec_mat(row, rep.gamma[static_cast<std::size_t>(pat.repeated)]);
  return finish_pattern(rep, std::move(row), pat);
}

Rational ClosedForm::value_at(int t) const {
  if (t < threshold) return transients[static_cast<std::size_t>(t)];
  if (!closed) throw std::logic_error("closed form unavailable (irrational roots); use the recurrence");
  Rational acc(0);
  for (const ClosedFormTerm& term : terms) {
    Rational pw(1);
    for (int i = 0; i < t; ++i) pw *= term.root;
    Rational tp(1);
    for (int i = 0; i < term.t_degree; ++i) tp *= t;
    acc += term.coeff * tp * pw;
  }
  return acc;
}

std::string ClosedForm::render() const {
  std::ostringstream out;
  if (!closed) {
    out << "recurrence " << poly_str(recurrence) << " (irrational roots; no rational closed form)";
    return out.str();
  }
  bool first = true;
  for (const ClosedFormTerm& term : terms) {
    if (!first) out << " + ";
    first = false;
    out << "(" << rational_str(term.coeff) << ")";
    if (term.t_degree == 1) out << "*t";
    if (term.t_degree > 1) out << "*t^" << term.t_degree;
    out << "*(" << rational_str(term.root) << ")^t";
  }
  if (first) out << "0";
  out << "  for t >= " << threshold;
  for (int t = 0; t < threshold; ++t)
    out << "; value(" << t << ") = " << rational_str(transients[static_cast<std::size_t>(t)]);
  return out.str();
}

ClosedForm fit_closed_form(const LinearRepresentation& rep, const DigitPattern& pat) {
  ClosedForm cf;
  if (rep.rank() == 0) {
    cf.closed = true;
    cf.recurrence.coeffs = {Rational(1)};
    return cf;
  }
  QVector w0 = prefix_row(rep, pat);
  cf.recurrence = krylov_row_annihilator(w0, rep.gamma[static_cast<std::size_t>(pat.repeated)]);
  RationalRoots roots = rational_roots(cf.recurrence);
  if (roots.remainder.degree() > 0) return cf;  // closed == false: recurrence only

  int t0 = 0;
  std::vector<std::pair<Rational, int>> nonzero;
  for (const auto& [root, mult] : roots.roots) {
    if (sgn(root) == 0) t0 = mult;
    else nonzero.emplace_back(root, mult);
  }
  cf.threshold = t0;
  for (int t = 0; t < t0; ++t) cf.transients.push_back(pattern_value(rep, pat, t));

  int unknowns = 0;
  for (const auto& [root, mult] : nonzero) unknowns += mult;
  cf.closed = true;
  if (unknowns == 0) return cf;  // pure transient

  // Generalized Vandermonde in the roots, sampled just past the transient.
  QMatrix a(static_cast<std::size_t>(unknowns), QVector(static_cast<std::size_t>(unknowns)));
  QVector b(static_cast<std::size_t>(unknowns));
  for (int s = 0; s < unknowns; ++s) {
    int t = t0 + s;
    int col = 0;
    for (const auto& [root, mult] : nonzero) {
      Rational pw(1);
      for (int i = 0; i < t; ++i) pw *= root;
      for (int j = 0; j < mult; ++j) {
        Rational tp(1);
        for (int i = 0; i < j; ++i) tp *= t;
        a[static_cast<std::size_t>(s)][static_cast<std::size_t>(col++)] = tp * pw;
      }
    }
    b[static_cast<std::size_t>(s)] = pattern_value(rep, pat, t);
  }
  QVector x = solve_linear(a, b);
  int col = 0;
  for (const auto& [root, mult] : nonzero)
    for (int j = 0; j < mult; ++j) cf.terms.push_back({x[static_cast<std::size_t>(col++)], root, j});

  // Verify on twice as many further samples; a failure means the recurrence
  // space was wrong, which is an internal error.
  for (int t = t0 + unknowns; t <= t0 + 3 * unknowns; ++t)
    if (cf.value_at(t) != pattern_value(rep, pat, t))
      throw std::logic_error("fit_closed_form: verification failed");
  return cf;
}

DominantAnalysis dominant_ratio(const LinearRepresentation& rep, const DigitPattern& pat,
                                const Rational& root, int t_max) {
  if (sgn(root) == 0) throw std::invalid_argument("dominant_ratio: root must be nonzero");
  DominantAnalysis out;
  out.root = root;
  QVector row = rep.rank() ? prefix_row(rep, pat) : QVector{};
  Rational pw(1);
  for (int t = 0; t <= t_max; ++t) {
    Rational val = rep.rank() ? finish_pattern(rep, row, pat) : Rational(0);
    out.values.push_back(val);
    out.ratios.push_back(val / pw);
    pw *= root;
    if (rep.rank() && t < t_max) row = vec_mat(row, rep.gamma[static_cast<std::size_t>(pat.repeated)]);
  }

  auto reldiff = [](const Rational& a, const Rational& b) {
    if (a == b) return Rational(0);
    Rational da = sgn(a) < 0 ? Rational(-a) : a;
    Rational db = sgn(b) < 0 ? Rational(-b) : b;
    Rational mx = da > db ? da : db;
    Rational d = a - b;
    if (sgn(d) < 0) d = -d;
    return Rational(d / mx);
  };
  out.stabilized = out.ratios.size() >= 5;
  if (out.stabilized) {
    std::size_t n = out.ratios.size();
    for (std::size_t i = n - 5; i < n && out.stabilized; ++i)
      for (std::size_t j = i + 1; j < n && out.stabilized; ++j)
        if (reldiff(out.ratios[i], out.ratios[j]) >= Rational(1, 1000)) out.stabilized = false;
  }

  int n0 = t_max + 1;
  for (int t = t_max; t >= 0; --t) {
    if (sgn(out.values[static_cast<std::size_t>(t)]) > 0) n0 = t;
    else break;
  }
  out.n0 = n0;
  out.positive_tail = n0 <= t_max;
  out.coefficient = out.ratios.empty() ? Rational(0) : out.ratios.back();
  return out;
}

std::vector<std::uint64_t> monotonicity_scan(const LinearRepresentation& rep, std::uint64_t from,
                                             std::uint64_t to) {
  if (from > to) throw std::invalid_argument("monotonicity_scan: empty range");
  QVector vals = evaluate_range(rep, from, to + 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = from; n <= to; ++n)
    if (vals[static_cast<std::size_t>(n - from)] >= vals[static_cast<std::size_t>(n - from + 1)])
      out.push_back(n);
  return out;
}

}  // namespace addrep
