#pragma once

#include <cstdint>

namespace hsbm {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014). The update is a pure 64-bit integer finalizer,
// so every stream is bit-reproducible across platforms, and the same
// finalizer doubles as the seed-derivation hash for sub-streams.
inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t z) {
  return splitmix_finalize(z + kGoldenGamma);
}

// Derives the seed of an independent sub-stream from (seed, tag) with two
// finalizer rounds. Used for the label / edge / split / spectral streams of
// one trial and for per-trial seeds inside a sweep.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix64(seed ^ mix64(tag));
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGoldenGamma;
    return splitmix_finalize(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  unsigned __int128 next128() {
    const unsigned __int128 hi = next();
    return (hi << 64) | next();
  }

  unsigned __int128 below128(unsigned __int128 bound) {
    const unsigned __int128 threshold =
        (static_cast<unsigned __int128>(0) - bound) % bound;
    for (;;) {
      const unsigned __int128 r = next128();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Stream tags; each pipeline stage consumes its own stream so stages stay
// independent of each other's draw counts.
enum StreamTag : std::uint64_t {
  kLabelStream = 1,
  kEdgeStream = 2,
  kSplitStream = 3,
  kSpectralStream = 4,
};

inline SplitMix64 make_stream(std::uint64_t seed, StreamTag tag) {
  return SplitMix64(derive_seed(seed, static_cast<std::uint64_t>(tag)));
}

}  // namespace hsbm
