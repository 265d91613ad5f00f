#include "addrep/relations.hpp"

#include <algorithm>
#include <stdexcept>

#include "addrep/digits.hpp"

namespace addrep {

TupleDfa linear_sum_dfa(int base, const std::map<std::string, int>& coeffs) {
  std::vector<std::string> tracks;
  std::vector<int> cvec;
  int pos_sum = 0, neg_sum = 0;
  for (const auto& [name, c] : coeffs) {
    if (c == 0) continue;
    tracks.push_back(name);
    cvec.push_back(c);
    if (c > 0) pos_sum += c;
    else neg_sum -= c;
  }
  // Deficits outside [1 - P, N - 1] (and nonzero ones when a side is empty)
  // cannot be repaired by any suffix; see header.
  int lo = std::min(0, 1 - pos_sum);
  int hi = std::max(0, neg_sum - 1);
  int nstates = hi - lo + 1;
  int nl = letter_count(base, static_cast<int>(tracks.size()));

  TupleDfa a;
  a.base = base;
  a.tracks = tracks;
  a.initial = -lo;  // deficit 0
  a.accepting.assign(static_cast<std::size_t>(nstates), false);
  a.accepting[static_cast<std::size_t>(-lo)] = true;
  a.next.assign(static_cast<std::size_t>(nstates), std::vector<std::int32_t>(static_cast<std::size_t>(nl), kDeadState));
  for (int d = lo; d <= hi; ++d) {
    for (int L = 0; L < nl; ++L) {
      long long nd = static_cast<long long>(base) * d;
      for (std::size_t p = 0; p < cvec.size(); ++p)
        nd += static_cast<long long>(cvec[p]) *
              letter_digit(base, static_cast<int>(tracks.size()), L, static_cast<int>(p));
      if (nd >= lo && nd <= hi)
        a.next[static_cast<std::size_t>(d - lo)][static_cast<std::size_t>(L)] =
            static_cast<std::int32_t>(nd - lo);
    }
  }
  return minimize_dfa(a);
}

TupleDfa adder_dfa(int base, const std::string& x, const std::string& y, const std::string& z) {
  std::map<std::string, int> coeffs;
  coeffs[x] += 1;
  coeffs[y] += 1;
  coeffs[z] -= 1;
  return linear_sum_dfa(base, coeffs);
}

TupleDfa comparator_dfa(int base, const std::string& x, const std::string& y, Rel rel) {
  if (x == y) {
    // Comparing a value with itself: universal or empty over the one track.
    bool holds = (rel == Rel::Eq || rel == Rel::Le || rel == Rel::Ge);
    TupleDfa a = universal_dfa(base, {x});
    if (!holds) a.accepting[0] = false;
    return minimize_dfa(a);
  }
  std::vector<std::string> tracks = {x, y};
  std::sort(tracks.begin(), tracks.end());
  int xi = tracks[0] == x ? 0 : 1;
  // 0 = undecided, 1 = x < y settled, 2 = x > y settled.
  bool acc[3];
  switch (rel) {
    case Rel::Eq: acc[0] = true; acc[1] = false; acc[2] = false; break;
    case Rel::Ne: acc[0] = false; acc[1] = true; acc[2] = true; break;
    case Rel::Lt: acc[0] = false; acc[1] = true; acc[2] = false; break;
    case Rel::Le: acc[0] = true; acc[1] = true; acc[2] = false; break;
    case Rel::Gt: acc[0] = false; acc[1] = false; acc[2] = true; break;
    case Rel::Ge: acc[0] = true; acc[1] = false; acc[2] = true; break;
  }
  int nl = base * base;
  TupleDfa a;
  a.base = base;
  a.tracks = tracks;
  a.initial = 0;
  a.accepting = {acc[0], acc[1], acc[2]};
  a.next.assign(3, std::vector<std::int32_t>(static_cast<std::size_t>(nl)));
  for (int L = 0; L < nl; ++L) {
    int dx = letter_digit(base, 2, L, xi);
    int dy = letter_digit(base, 2, L, 1 - xi);
    a.next[0][static_cast<std::size_t>(L)] = dx == dy ? 0 : (dx < dy ? 1 : 2);
    a.next[1][static_cast<std::size_t>(L)] = 1;
    a.next[2][static_cast<std::size_t>(L)] = 2;
  }
  return minimize_dfa(a);
}

TupleDfa constant_dfa(int base, const std::string& track, std::uint64_t c) {
  TupleDfa a;
  a.base = base;
  a.tracks = {track};
  a.initial = 0;
  if (c == 0) {
    a.accepting = {true};
    a.next = {std::vector<std::int32_t>(static_cast<std::size_t>(base), kDeadState)};
    a.next[0][0] = 0;
    return a;
  }
  std::vector<int> dig = canonical_digits(base, c);
  int m = static_cast<int>(dig.size());
  // state 0: leading zeros; state i in [1, m]: matched i digits.
  a.accepting.assign(static_cast<std::size_t>(m) + 1, false);
  a.accepting[static_cast<std::size_t>(m)] = true;
  a.next.assign(static_cast<std::size_t>(m) + 1,
                std::vector<std::int32_t>(static_cast<std::size_t>(base), kDeadState));
  a.next[0][0] = 0;
  a.next[0][static_cast<std::size_t>(dig[0])] = 1;
  for (int i = 1; i < m; ++i) a.next[static_cast<std::size_t>(i)][static_cast<std::size_t>(dig[i])] = i + 1;
  return minimize_dfa(a);
}

TupleDfa seq_preimage_dfa(const Dfao& seq, const std::string& track, int output_value) {
  int k = seq.base;
  int n0 = seq.state_count();
  // State 0 reads leading zeros; states 1..n0 mirror the DFAO. The empty word
  // and all-zero words denote 0, whose sequence value is output(next(init, 0)).
  TupleDfa a;
  a.base = k;
  a.tracks = {track};
  a.initial = 0;
  a.accepting.assign(static_cast<std::size_t>(n0) + 1, false);
  a.next.assign(static_cast<std::size_t>(n0) + 1, std::vector<std::int32_t>(static_cast<std::size_t>(k)));
  int zero_state = seq.next[static_cast<std::size_t>(seq.initial)][0];
  a.accepting[0] = (seq.outputs[static_cast<std::size_t>(zero_state)] == output_value);
  a.next[0][0] = 0;
  for (int d = 1; d < k; ++d)
    a.next[0][static_cast<std::size_t>(d)] =
        1 + seq.next[static_cast<std::size_t>(seq.initial)][static_cast<std::size_t>(d)];
  for (int q = 0; q < n0; ++q) {
    a.accepting[static_cast<std::size_t>(q) + 1] = (seq.outputs[static_cast<std::size_t>(q)] == output_value);
    for (int d = 0; d < k; ++d)
      a.next[static_cast<std::size_t>(q) + 1][static_cast<std::size_t>(d)] =
          1 + seq.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(d)];
  }
  return minimize_dfa(a);
}

TupleDfa universal_dfa(int base, const std::vector<std::string>& tracks) {
  std::vector<std::string> sorted = tracks;
  std::sort(sorted.begin(), sorted.end());
  TupleDfa a;
  a.base = base;
  a.tracks = sorted;
  a.initial = 0;
  a.accepting = {true};
  a.next = {std::vector<std::int32_t>(static_cast<std::size_t>(letter_count(base, static_cast<int>(sorted.size()))), 0)};
  return a;
}

}  // namespace addrep
