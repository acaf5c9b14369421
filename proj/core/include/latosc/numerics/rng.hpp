#pragma once

#include <cstdint>

namespace latosc::num {

// SplitMix64 (Steele, Lea & Flood 2014).  Counter-based: the state advances
// by a fixed odd increment and each output is a bijective mix of the state,
// so identical seeds give identical streams on every platform.
//
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//            ; z = (z ^ z>>27) * 0x94D049BB133111EB
//            ; z ^= z>>31
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Independent child stream.  Mixes the stream id through the generator
  // itself so derived seeds are decorrelated from each other and the parent.
  SplitMix64 derive(std::uint64_t stream) const {
    SplitMix64 g(state_ ^ (stream + 1) * 0xD1B54A32D192ED03ULL);
    return SplitMix64(g.next_u64());
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace latosc::num
