// Copyright 2026 The immlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMMLAB_RANDOM_HPP
#define IMMLAB_RANDOM_HPP

#include <cstdint>
#include <span>
#include <utility>

namespace immlab {

/// splitmix64 step: z = (x += 0x9E3779B97F4A7C15);
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// return z ^ (z >> 31).
std::uint64_t splitmix64(std::uint64_t& x);

/// xorshift64* generator. The state is splitmix64(seed) (replaced by
/// 0x9E3779B97F4A7C15 if that is zero). Each draw does
///   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D;
/// Everything else is derived from next() as documented below, so ports to
/// other languages reproduce the same instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, bound): draws r until r >= (2^64 - bound) % bound, then
  /// returns r % bound. bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  /// next() >> 63.
  bool coin();

  /// Fisher-Yates from the back: for i = n-1 down to 1 swap v[i] with
  /// v[below(i + 1)].
  template <typename T>
  void shuffle(std::span<T> v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace immlab

#endif  // IMMLAB_RANDOM_HPP
