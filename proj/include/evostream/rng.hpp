#pragma once

#include <cstdint>
#include <random>

namespace evostream {

// All randomness in the project flows through a single engine type so that a
// fixed seed replays bit-identically.
using Rng = std::mt19937_64;

// splitmix64 finaliser, used to spread structured seed inputs.
inline std::uint64_t split_mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent sub-stream seed from a base seed and up to two
/// structural coordinates (window index, ensemble index, ...). Sub-streams let
/// parallel and serial execution of independent units consume identical
/// randomness.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return split_mix64(split_mix64(base ^ split_mix64(a)) ^ split_mix64(~b));
}

}  // namespace evostream
