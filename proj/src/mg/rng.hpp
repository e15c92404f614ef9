/*
   Copyright 2026 The mahler-gauge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MG_RNG_HPP
#define MG_RNG_HPP

#include <cstdint>
#include <random>

namespace mg {

/* mt19937_64 with hand-rolled mappings.  std::uniform_int_distribution is
 * implementation-defined, which would break byte-identical reports across
 * toolchains; the raw engine output is standardized, so only the mapping
 * below needs to be ours. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /* Uniform on [lo, hi], modulo mapping (bias < 2^-50 at desk ranges). */
  long uniform(long lo, long hi) {
    if (hi <= lo) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /* Uniform double in [0, 1) with 53 random bits. */
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * unit(); }

  bool flip() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mg

#endif
