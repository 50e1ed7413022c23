#pragma once

#include <bit>
#include <cstdint>

namespace ofip {

// SplitMix64 mixing step, used for seed derivation and input hashing.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

inline std::uint64_t double_bits(double d) { return std::bit_cast<std::uint64_t>(d); }

// Per-trial seed; depends only on (campaign seed, trial index) so trial
// evaluation order never affects the draws.
inline std::uint64_t trial_seed(std::uint64_t campaign_seed, std::uint64_t trial) {
  return splitmix64(splitmix64(campaign_seed) ^ splitmix64(trial * 0xd1342543de82ef95ULL + 1));
}

// Maps a 64-bit hash onto [0,1).
inline double unit_from_hash(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace ofip
