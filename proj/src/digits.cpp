#include "addrep/digits.hpp"

#include <algorithm>
#include <stdexcept>

#include "addrep/rational.hpp"

namespace addrep {

std::vector<int> canonical_digits(int base, std::uint64_t n) {
  if (n == 0) return {0};
  std::vector<int> out;
  while (n > 0) {
    out.push_back(static_cast<int>(n % static_cast<std::uint64_t>(base)));
    n /= static_cast<std::uint64_t>(base);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t digits_value(int base, const std::vector<int>& digits) {
  std::uint64_t v = 0;
  for (int d : digits) v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(d);
  return v;
}

int letter_count(int base, int tracks) {
  long long n = 1;
  for (int i = 0; i < tracks; ++i) {
    n *= base;
    if (n > (1 << 22)) throw std::overflow_error("tuple alphabet too large");
  }
  return static_cast<int>(n);
}

int letter_digit(int base, int tracks, int letter, int pos) {
  int div = 1;
  for (int i = tracks - 1; i > pos; --i) div *= base;
  return (letter / div) % base;
}

int letter_of_digits(int base, const std::vector<int>& digits) {
  int v = 0;
  for (int d : digits) v = v * base + d;
  return v;
}

std::vector<int> encode_tuple_word(int base, const std::vector<std::string>& tracks,
                                   const std::map<std::string, std::uint64_t>& values,
                                   int extra_zeros) {
  std::size_t len = tracks.empty() ? 0 : 1;
  std::map<std::string, std::vector<int>> digs;
  for (const auto& t : tracks) {
    auto it = values.find(t);
    if (it == values.end()) throw std::invalid_argument("missing variable: " + t);
    digs[t] = canonical_digits(base, it->second);
    len = std::max(len, digs[t].size());
  }
  len += static_cast<std::size_t>(extra_zeros);
  std::vector<int> word(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    int letter = 0;
    for (const auto& t : tracks) {
      const auto& d = digs[t];
      std::size_t pad = len - d.size();
      letter = letter * base + (i >= pad ? d[i - pad] : 0);
    }
    word[i] = letter;
  }
  return word;
}

}  // namespace addrep
