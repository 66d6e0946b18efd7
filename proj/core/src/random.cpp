#include "gaussmap/random.hpp"

#include <limits>

namespace gaussmap {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational SeededRng::rational(std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t num = uniform(-max_num, max_num);
  const std::int64_t den = uniform(1, max_den);
  return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

}  // namespace gaussmap
