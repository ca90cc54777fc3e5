// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <random>

namespace smqc {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// xoshiro256+ for the per-photon hot loop, where mt19937_64 dominates the
/// cost of a read. Seeded from a parent generator; only the top 53 bits of
/// each output are used.
class PhotonRng {
 public:
  using result_type = std::uint64_t;
  explicit PhotonRng(Rng& parent) {
    for (auto& w : s_) w = parent();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() {
    const std::uint64_t out = s_[0] + s_[3];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return out;
  }
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t s_[4];
};

/// Stateless 64-bit mixer (splitmix64 finaliser). Child seeds are derived by
/// folding stream identifiers into a parent seed, so every emitter, read and
/// trial owns an independent, reproducible generator.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a,
                                    std::uint64_t b = 0) {
  return mix_seed(mix_seed(mix_seed(parent) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

// Stream tags for derive_seed so unrelated consumers never share a stream.
namespace stream {
inline constexpr std::uint64_t kForge = 0x464f524745ULL;
inline constexpr std::uint64_t kEmitter = 0x454d4954ULL;
inline constexpr std::uint64_t kDark = 0x4441524bULL;
inline constexpr std::uint64_t kBleach = 0x424c4541ULL;
inline constexpr std::uint64_t kTrial = 0x545249414cULL;
}  // namespace stream

}  // namespace smqc
