#pragma once

#include <cstdint>

#include "moip/common.hpp"

namespace moip {

// splitmix64 (Steele/Lea/Flood): a 64-bit LCG-class generator with a fully
// specified update, so streams are byte-reproducible across platforms.
// Streams are split per (seed, trial, stream_id) by folding each word
// through the finalizer, so parallel trial order cannot change any draw.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t stream_id);

  std::uint64_t next();

  // Unbiased integer in [0, bound) by rejection (Lemire's method).
  std::uint64_t below(std::uint64_t bound);
  long long uniform_int(long long lo, long long hi);
  Scalar uniform_real();  // [0, 1)

 private:
  std::uint64_t state_;
};

}  // namespace moip
