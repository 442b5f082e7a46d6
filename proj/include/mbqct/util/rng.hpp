#pragma once

#include <cstdint>
#include <random>

namespace mbqct::rng {

// SplitMix64 finalizer.  Used both to decorrelate raw seeds and to derive
// independent stream seeds from (master seed, tag...) tuples.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive(std::uint64_t seed) { return mix(seed); }

// derive(master, a, b, c) folds each tag in turn; any distinct tag tuple
// yields an effectively independent stream seed.
template <class... Tags>
std::uint64_t derive(std::uint64_t seed, std::uint64_t tag, Tags... rest) {
  return derive(mix(seed ^ mix(tag + 0x632be59bd9b4e019ULL)), rest...);
}

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine(mix(seed)); }

// Uniform double in [0, 1), 53 significant bits, identical on every platform.
inline double u01(Engine& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace mbqct::rng
