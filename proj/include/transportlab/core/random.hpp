#pragma once

#include <cstdint>
#include <random>

namespace transportlab {

/// Uniform draws from mt19937_64 by rejection. Unlike the std
/// distributions, the sequence is the same on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);
long uniform_int(std::mt19937_64& rng, long lo, long hi);

}  // namespace transportlab
