#include "transportlab/core/random.hpp"

#include "transportlab/core/error.hpp"

namespace transportlab {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "empty range");
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % n + 1) % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % n;
  }
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  if (hi < lo) fail(ErrorKind::InvalidInput, "empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long>(rng());
  return static_cast<long>(static_cast<std::uint64_t>(lo) + uniform_below(rng, span));
}

}  // namespace transportlab
