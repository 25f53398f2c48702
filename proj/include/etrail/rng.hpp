#pragma once

#include <cstdint>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "etrail/errors.hpp"

namespace etrail {

using BigInt = boost::multiprecision::cpp_int;

// SplitMix64 step; used to stretch user seeds and derive independent streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic random stream: a mt19937_64 whose seed is remembered so that
// independent child streams can be derived (split) without sharing state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(stretch(seed)) {}

  // Child stream for a fixed purpose; children with distinct ids are
  // independent of each other and of further draws from the parent.
  Rng split(std::uint64_t streamId) const {
    std::uint64_t s = seed_ + 0x632be59bd9b4e019ULL;
    std::uint64_t mix = splitmix64(s) ^ (streamId * 0xff51afd7ed558ccdULL);
    return Rng(splitmix64(mix));
  }

  std::uint64_t nextU64() { return engine_(); }

  // Uniform integer in the closed range [lo, hi].
  std::int64_t uniformInt(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) fail(Errc::InvalidArgument, "uniformInt: empty range");
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  double uniformReal() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  // Uniform BigInt in [0, bound); exact via rejection sampling on the bit
  // length of bound-1.
  BigInt uniformBelow(const BigInt& bound) {
    if (bound <= 0) fail(Errc::InvalidArgument, "uniformBelow: bound must be positive");
    if (bound == 1) return 0;
    const BigInt top = bound - 1;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(top)) + 1;
    while (true) {
      BigInt x = 0;
      unsigned got = 0;
      while (got < bits) {
        x <<= 64;
        x |= BigInt(engine_());
        got += 64;
      }
      x >>= (got - bits);  // keep exactly `bits` random bits
      if (x < bound) return x;
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::mt19937_64 stretch(std::uint64_t seed) {
    std::uint64_t s = seed;
    std::seed_seq seq{splitmix64(s), splitmix64(s), splitmix64(s), splitmix64(s)};
    return std::mt19937_64(seq);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace etrail
