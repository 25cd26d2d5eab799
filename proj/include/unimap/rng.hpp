#pragma once

#include <cstdint>
#include <random>

namespace unimap {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to decorrelate (seed, stream) pairs.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent generator for sample `stream` of a run seeded with `seed`.
// Results depend only on (seed, stream), never on the worker that draws them.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL)));
}

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

}  // namespace unimap
