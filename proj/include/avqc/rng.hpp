// Copyright 2026 The avqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AVQC_RNG_HPP
#define AVQC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "avqc/matrix.hpp"

namespace avqc {

/// Splittable deterministic generator (splitmix64 core). All randomness in
/// the library flows through instances of this class so that a single seed
/// reproduces every report bit-for-bit on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent child stream; advancing the child never touches the parent.
  Rng split() { return Rng(next_u64() ^ 0xa02bdbf7bb3c0a7ULL); }

  double uniform() {  // [0,1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  cplx cgaussian() { return {gaussian(), gaussian()}; }

  /// Haar-random unit vector in C^d (normalized complex Gaussian).
  std::vector<cplx> unit_vector(std::size_t d) {
    std::vector<cplx> v(d);
    double nrm2 = 0.0;
    do {
      nrm2 = 0.0;
      for (auto& z : v) {
        z = cgaussian();
        nrm2 += std::norm(z);
      }
    } while (nrm2 <= 1e-300);
    const double inv = 1.0 / std::sqrt(nrm2);
    for (auto& z : v) z *= inv;
    return v;
  }

  /// Random point of the probability simplex over n outcomes.
  std::vector<double> simplex_point(std::size_t n) {
    std::vector<double> p(n);
    double s = 0.0;
    for (auto& x : p) {
      x = -std::log(std::max(uniform(), 1e-300));
      s += x;
    }
    for (auto& x : p) x /= s;
    return p;
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace avqc

#endif  // AVQC_RNG_HPP
