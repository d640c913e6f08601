#include "moip/rng.hpp"

namespace moip {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix(state_);
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t trial,
                              std::uint64_t stream_id) {
  std::uint64_t s = mix(seed + kGamma);
  s = mix(s ^ (trial + kGamma));
  s = mix(s ^ (stream_id + kGamma));
  return SplitMix64(s);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty range");
  // Lemire multiply-shift with rejection of the biased low region.
  const std::uint64_t threshold = (-bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    const unsigned __int128 m =
        static_cast<unsigned __int128>(r) * static_cast<unsigned __int128>(bound);
    if (static_cast<std::uint64_t>(m) >= threshold) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

long long SplitMix64::uniform_int(long long lo, long long hi) {
  if (lo > hi) throw PreconditionError("empty integer range");
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(below(width));
}

Scalar SplitMix64::uniform_real() {
  return static_cast<Scalar>(next() >> 11) * 0x1.0p-53;
}

}  // namespace moip
