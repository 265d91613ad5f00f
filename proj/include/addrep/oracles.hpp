#pragma once

#include <cstdint>

namespace addrep::oracles {

// Independent brute-force ground truth. Deliberately free of any automaton
// or linear-algebra code so it can check the whole pipeline.

/// Thue-Morse t_n via the recurrence t_0 = 0, t_{2n} = t_n, t_{2n+1} = 1 - t_n.
int thue_morse(std::uint64_t n);

/// Twisted Thue-Morse t'_n: t'_0 = 1, t'_1 = 0, and for n >= 1
/// t'_{2n} = 1 - t'_n, t'_{2n+1} = t'_n.
int twisted_tm(std::uint64_t n);

/// A = {t_n = 0}, B = {t_n = 1}, C = {t'_n = 0}, D = {t'_n = 1}.
enum class AutoSet { A, B, C, D };
bool in_set(AutoSet s, std::uint64_t n);

/// R_i counts pairs from S x S with x + y = n: i=1 ordered, i=2 with x < y,
/// i=3 with x <= y.
std::uint64_t brute_R(int i, AutoSet s, std::uint64_t n);

/// r_j / s_j: ordered j-tuples summing to n with all t_x = 0 (r) or 1 (s).
/// Refuses when the composition count C(n+j-1, j-1) exceeds 1e8.
/// Throws std::domain_error on guard violation, std::invalid_argument on bad j/which.
std::uint64_t brute_rs(int j, char which, std::uint64_t n);

}  // namespace addrep::oracles
