#pragma once

#include <cstdint>

namespace sslab {

// xoshiro256++ seeded through splitmix64. Chosen over std::mt19937 because the
// byte-for-byte output sequence is pinned here, not by the standard library,
// so seeded runs reproduce bit-identically on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53-bit resolution.
  double next_double();
  // Standard normal via Box-Muller (two uniforms per pair, cached spare).
  double next_normal();

 private:
  std::uint64_t s_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sslab
