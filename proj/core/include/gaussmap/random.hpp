#pragma once

#include <cstdint>
#include <random>

#include "gaussmap/rational.hpp"

namespace gaussmap {

// std::uniform_int_distribution is implementation-defined, so bounded
// sampling is done here by rejection to keep seeded runs identical on every
// standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// num/den with num in [-max_num, max_num], den in [1, max_den].
  Rational rational(std::int64_t max_num, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gaussmap
