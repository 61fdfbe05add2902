// SPDX-License-Identifier: Apache-2.0
//
// polarmimo: polar-domain dictionary design and near-field channel estimation
// for elevated base stations
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef POLARMIMO_RNG_HPP
#define POLARMIMO_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace polarmimo {

/// xoshiro256++ generator with splitmix64 seeding.
///
/// std::uniform_real_distribution and friends are implementation-defined,
/// which breaks the byte-identical reproducibility contract. All variate
/// generation here is spelled out explicitly so a (seed, stream) pair
/// produces the same sequence on any platform. Sub-streams derived with
/// stream() are statistically independent, so Monte-Carlo trials can be
/// keyed by trial index and run in any order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) s = splitmix64(x);
  }

  /// Independent generator for a named sub-stream (e.g. a trial index).
  Rng stream(std::uint64_t id) const {
    // Golden-ratio mixing keeps nearby ids far apart in seed space.
    return Rng(seed_ ^ (0x9E3779B97F4A7C15ULL * (id + 1)));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (spare cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * M_PI * u2);
    has_spare_ = true;
    return mag * std::cos(2.0 * M_PI * u2);
  }

  /// Circularly-symmetric complex normal with E|z|^2 = variance.
  std::complex<double> cnormal(double variance = 1.0) {
    const double s = std::sqrt(0.5 * variance);
    return {s * normal(), s * normal()};
  }

  /// Fair coin: +1 or -1.
  double sign() { return (next() >> 63) ? 1.0 : -1.0; }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t seed_ = 0;
  std::uint64_t state_[4]{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace polarmimo

#endif  // POLARMIMO_RNG_HPP
