// rng.h
// Stateless stream derivation: every random decision in the toolkit draws from
// an engine seeded by hashing (master_seed, stream ids...). Resuming a run
// re-derives identical streams from the step counters, so no RNG state needs
// to be checkpointed.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mcasr {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d4a2c2f64866ddULL;
  return x ^ (x >> 31);
}

inline uint64_t hash_stream(uint64_t seed, std::initializer_list<uint64_t> ids) {
  uint64_t h = splitmix64(seed ^ 0x5851f42d4c957f2dULL);
  for (uint64_t id : ids) h = splitmix64(h ^ id);
  return h;
}

inline std::mt19937_64 make_rng(uint64_t seed, std::initializer_list<uint64_t> ids = {}) {
  return std::mt19937_64(hash_stream(seed, ids));
}

// Named purposes keep streams from colliding when they share step counters.
enum class RngUse : uint64_t {
  kInit = 1,
  kFlowChoice = 2,
  kChannelPick = 3,
  kDropout = 4,
  kSchedule = 5,
  kWavAugment = 6,
  kSpecAugment = 7,
  kShuffle = 8,
  kNoise = 9,
};

inline std::mt19937_64 make_rng(uint64_t seed, RngUse use,
                                uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) {
  return make_rng(seed, {static_cast<uint64_t>(use), a, b, c});
}

}  // namespace mcasr
