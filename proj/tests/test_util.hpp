#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "addrep/compiler.hpp"

namespace addrep::test {

inline std::string data_path(const std::string& name) {
  return std::string(ADDREP_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline const SequenceBinding& builtins() {
  static SequenceBinding env = SequenceBinding::builtins();
  return env;
}

// Deterministic RNG for property tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline std::uint64_t random_value(std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> dist(0, bound);
  return dist(rng());
}

}  // namespace addrep::test
