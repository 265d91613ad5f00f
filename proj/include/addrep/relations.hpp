#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "addrep/dfao.hpp"
#include "addrep/tuple_dfa.hpp"

namespace addrep {

enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };

/// Recognizes sum_v coeffs[v] * v = 0 over the tracks with nonzero
/// coefficient (sorted).  Msd-first deficit automaton: after a prefix the
/// state is d = sum_v c_v * value_v(prefix), with transition
/// d' = k*d + sum_v c_v * digit_v.  A deficit outside [1 - P, N - 1]
/// (P = sum of positive coefficients, N = sum of |negative|) is unrecoverable
/// by any suffix: the suffixes can only contribute values in
/// [-N*(k^m - 1), P*(k^m - 1)], so |d| * k^m overshoots. Accepts at d = 0.
TupleDfa linear_sum_dfa(int base, const std::map<std::string, int>& coeffs);

/// x + y = z (the built-in addition relation; live deficits {0, -1}).
TupleDfa adder_dfa(int base, const std::string& x, const std::string& y, const std::string& z);

/// 3-state msd-first comparator (undecided / decided-true / decided-false).
TupleDfa comparator_dfa(int base, const std::string& x, const std::string& y, Rel rel);

/// Accepts exactly the zero-padded representations of the constant c.
TupleDfa constant_dfa(int base, const std::string& track, std::uint64_t c);

/// Accepts the representations of { n : seq(n) == output_value }. Handles
/// DFAOs whose initial state is not fixed by the zero digit.
TupleDfa seq_preimage_dfa(const Dfao& seq, const std::string& track, int output_value);

/// Accepts everything over the given (sorted) tracks.
TupleDfa universal_dfa(int base, const std::vector<std::string>& tracks);

}  // namespace addrep
