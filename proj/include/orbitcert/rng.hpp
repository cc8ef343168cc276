#pragma once

#include <cstdint>

namespace orbitcert {

// Counter-based splittable stream: every (seed, stream) pair yields an
// independent deterministic sequence, so restart i of a search can draw from
// stream i without sharing state. SplitMix64 core.
class SplitRng {
 public:
  SplitRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0, n), n > 0. Rejection-free modulo is fine here: n is tiny
  // compared to 2^64, bias is unobservable at desk scale.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace orbitcert
