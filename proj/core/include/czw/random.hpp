// Copyright 2026 The czw Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace czw {

/// Seeded random source with platform-independent output.
///
/// The engine is std::mt19937_64, whose sequence the standard fixes. The
/// derived draws are computed here rather than through std:: distributions,
/// which differ between standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Seed for stream `index` derived from `base`.
  static std::uint64_t derive(std::uint64_t base, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Standard normal via Box-Muller (one draw per call, second discarded).
  double normal();
  /// Standard complex Gaussian, real and imaginary parts N(0, 1/2).
  std::complex<double> complex_normal();
  /// Uniform point on the complex unit circle.
  std::complex<double> unit_phase();

private:
  std::mt19937_64 engine_;
};

} // namespace czw
