#include "addrep/oracles.hpp"

#include <stdexcept>

namespace addrep::oracles {

int thue_morse(std::uint64_t n) {
  // t(0) = 0; t(2n) = t(n); t(2n+1) = 1 - t(n), unrolled iteratively.
  int t = 0;
  while (n > 0) {
    if (n & 1) t = 1 - t;
    n >>= 1;
  }
  return t;
}

int twisted_tm(std::uint64_t n) {
  if (n == 0) return 1;
  if (n == 1) return 0;
  if ((n & 1) == 0) return 1 - twisted_tm(n >> 1);
  return twisted_tm(n >> 1);
}

bool in_set(AutoSet s, std::uint64_t n) {
  switch (s) {
    case AutoSet::A: return thue_morse(n) == 0;
    case AutoSet::B: return thue_morse(n) == 1;
    case AutoSet::C: return twisted_tm(n) == 0;
    case AutoSet::D: return twisted_tm(n) == 1;
  }
  return false;
}

std::uint64_t brute_R(int i, AutoSet s, std::uint64_t n) {
  if (i < 1 || i > 3) throw std::invalid_argument("brute_R: i must be 1, 2 or 3");
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x <= n; ++x) {
    std::uint64_t y = n - x;
    if (i == 2 && !(x < y)) continue;
    if (i == 3 && !(x <= y)) continue;
    if (in_set(s, x) && in_set(s, y)) ++count;
  }
  return count;
}

namespace {

std::uint64_t count_tuples(int j, int want, std::uint64_t n) {
  if (j == 1) return thue_morse(n) == want ? 1 : 0;
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x <= n; ++x)
    if (thue_morse(x) == want) total += count_tuples(j - 1, want, n - x);
  return total;
}

}  // namespace

std::uint64_t brute_rs(int j, char which, std::uint64_t n) {
  if (j < 2) throw std::invalid_argument("brute_rs: j must be at least 2");
  if (which != 'r' && which != 's') throw std::invalid_argument("brute_rs: which must be 'r' or 's'");
  // Feasibility guard: C(n+j-1, j-1) compositions.
  long double compositions = 1.0L;
  for (int i = 1; i < j; ++i)
    compositions = compositions * static_cast<long double>(n + static_cast<std::uint64_t>(i)) /
                   static_cast<long double>(i);
  if (compositions > 1e8L)
    throw std::domain_error("brute_rs: composition count exceeds 1e8; refusing enumeration");
  return count_tuples(j, which == 'r' ? 0 : 1, n);
}

}  // namespace addrep::oracles
