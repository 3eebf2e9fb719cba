#ifndef FFARANK_RANDOM_H_
#define FFARANK_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace ffarank {

// splitmix64 finalizer.
inline std::uint64_t MixBits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for an independent random stream keyed by (seed, key). Used so that
// per-match randomness does not depend on evaluation order.
inline std::uint64_t StreamSeed(std::uint64_t seed, std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return MixBits(seed ^ MixBits(h));
}

using Rng = std::mt19937_64;

}  // namespace ffarank

#endif  // FFARANK_RANDOM_H_
