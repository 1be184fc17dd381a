#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace hcoop {

// SplitMix64 finalizer. Used both to derive well-separated seeds from a
// master seed and for stateless keyed draws.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

using RngStream = std::mt19937_64;

// One independent stream per (replicate, purpose). Streams whose keys differ
// anywhere start from unrelated internal states.
inline RngStream make_stream(std::uint64_t master, std::uint64_t key_a,
                             std::uint64_t key_b = 0) {
  return RngStream(mix64(mix64(master, key_a), key_b));
}

inline double to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform01(RngStream& rng) { return to_unit(rng()); }

// Stateless uniform draw addressed by key tuple: the same keys always yield
// the same value, independent of evaluation order.
inline double keyed_uniform(std::uint64_t seed, std::uint64_t k1,
                            std::uint64_t k2, std::uint64_t k3) {
  return to_unit(splitmix64(mix64(mix64(seed, k1), mix64(k2, k3))));
}

// Exponential waiting time; rate 0 means the event never fires.
inline double exp_draw(RngStream& rng, double rate) {
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return -std::log1p(-uniform01(rng)) / rate;
}

}  // namespace hcoop
