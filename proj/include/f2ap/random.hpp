// Copyright 2026 The f2ap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Counter-based random streams keyed by (seed, stream id, key).
//
// Every randomized routine draws from a stream derived from the run seed,
// a fixed id naming the routine, and the input it is working on (a point,
// a sequence digest, a recursion depth). Results therefore do not depend on
// call order or thread count. Integer and real draws avoid <random>
// distributions so output is identical across standard libraries.

#ifndef F2AP_RANDOM_HPP_
#define F2AP_RANDOM_HPP_

#include <cstdint>
#include <span>

namespace f2ap {

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

enum class StreamId : std::uint64_t {
  kGenerator = 1,
  kZTest = 2,
  kRhoEstimate = 3,
  kGTest = 4,
  kFindAHat = 5,
  kMuZero = 6,
  kGoldreichLevin = 7,
  kCoefficient = 8,
  kCertificate = 9,
  kTuples = 10,
  kShiftFilter = 11,
  kMonteCarlo = 12,
  kNoise = 13,
};

class Rng {
 public:
  Rng(std::uint64_t seed, StreamId stream, std::uint64_t key = 0)
      : state_(mix64(mix64(seed ^ 0x6a09e667f3bcc909ull) ^
                     mix64(static_cast<std::uint64_t>(stream) + 0x3c6ef372fe94f82bull) ^
                     (mix64(key + 0xa54ff53a5f1d36f1ull) + key))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Uniform in [0, bound), bound >= 1. Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform n-bit vector.
  std::uint64_t bits(int n) {
    return n >= 64 ? next() : next() & ((std::uint64_t{1} << n) - 1);
  }

  // Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

// Order-sensitive digest of a word sequence.
inline std::uint64_t digest(std::span<const std::uint64_t> words) {
  std::uint64_t h = 0x243f6a8885a308d3ull ^ words.size();
  for (std::uint64_t w : words) h = mix64(h ^ mix64(w + 0x13198a2e03707344ull));
  return h;
}

}  // namespace f2ap

#endif  // F2AP_RANDOM_HPP_
