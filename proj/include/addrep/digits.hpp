#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace addrep {

/// Msd-first base-k digits of n. Canonical form of 0 is the single digit 0;
/// canonical form of n > 0 has no leading zero.
std::vector<int> canonical_digits(int base, std::uint64_t n);

/// Value of an msd-first digit word (leading zeros allowed, empty word = 0).
std::uint64_t digits_value(int base, const std::vector<int>& digits);

/// Number of tuple letters k^d.  Throws std::overflow_error when the
/// alphabet would not fit in an int table.
int letter_count(int base, int tracks);

/// Digit of track `pos` inside tuple letter `letter` (tracks msd in index order).
int letter_digit(int base, int tracks, int letter, int pos);

/// Letter index from per-track digits (lexicographic order on tuples).
int letter_of_digits(int base, const std::vector<int>& digits);

/// Encodes a value map as a synchronized msd-first letter word, zero-padded
/// to max canonical length plus `extra_zeros` leading all-zero letters.
std::vector<int> encode_tuple_word(int base, const std::vector<std::string>& tracks,
                                   const std::map<std::string, std::uint64_t>& values,
                                   int extra_zeros = 0);

}  // namespace addrep
