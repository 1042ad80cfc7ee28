#pragma once

#include <array>
#include <cstdint>

#include "merton/normal.hpp"

namespace merton::rng {

// Philox4x32-10 (Salmon et al., SC'11).  A pure function of (counter, key):
// the same inputs give the same 128-bit block on every platform, which is
// what makes path/step-keyed noise reproducible under any scheduling.

struct PhiloxKey {
  std::uint32_t k0, k1;
};

struct PhiloxCounter {
  std::uint32_t c0, c1, c2, c3;
};

namespace detail {

constexpr std::uint32_t kMultA = 0xD2511F53u;
constexpr std::uint32_t kMultB = 0xCD9E8D57u;
constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;

inline void philox_round(PhiloxCounter& c, const PhiloxKey& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMultA) * c.c0;
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMultB) * c.c2;
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  c = PhiloxCounter{hi1 ^ c.c1 ^ k.k0, lo1, hi0 ^ c.c3 ^ k.k1, lo0};
}

}  // namespace detail

inline std::array<std::uint32_t, 4> philox4x32(PhiloxCounter c, PhiloxKey k) {
  for (int round = 0; round < 10; ++round) {
    detail::philox_round(c, k);
    if (round < 9) {
      k.k0 += detail::kWeylA;
      k.k1 += detail::kWeylB;
    }
  }
  return {c.c0, c.c1, c.c2, c.c3};
}

namespace detail {

// Counter word c3 tags the stream family so other consumers of the same seed
// cannot collide with the noise stream.
constexpr std::uint32_t kNoiseTag = 0x4E4F4953u;

inline double uniform_open(std::uint64_t bits) {
  // 53 high bits, centered: strictly inside (0, 1).
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

/// Two standard-normal draws for steps (2*pair_index, 2*pair_index + 1) of
/// one path.  Pure function of (seed, path_index, pair_index).
inline std::array<double, 2> normal_pair(std::uint64_t seed, std::uint64_t path_index,
                                         std::uint32_t pair_index) {
  const PhiloxKey key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const PhiloxCounter ctr{static_cast<std::uint32_t>(path_index),
                          static_cast<std::uint32_t>(path_index >> 32), pair_index,
                          detail::kNoiseTag};
  const auto w = philox4x32(ctr, key);
  const std::uint64_t u0 = (static_cast<std::uint64_t>(w[1]) << 32) | w[0];
  const std::uint64_t u1 = (static_cast<std::uint64_t>(w[3]) << 32) | w[2];
  return {normal_inverse_cdf(detail::uniform_open(u0)),
          normal_inverse_cdf(detail::uniform_open(u1))};
}

inline double normal_draw(std::uint64_t seed, std::uint64_t path_index, std::uint32_t step) {
  return normal_pair(seed, path_index, step >> 1)[step & 1u];
}

}  // namespace merton::rng
