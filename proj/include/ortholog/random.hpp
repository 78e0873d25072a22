/*
 * Copyright 2026 The Ortholog Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "ortholog/types.hpp"

#include <cstdint>
#include <random>

namespace ortholog {

/// Seeded random source. Distributions are derived from the raw mt19937_64
/// stream only (no std distribution objects), so the values are identical
/// on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (one variate per call).
  double normal() {
    const double u1 =
        (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

/// Gaussian matrix with i.i.d. standard normal entries.
Mat random_gaussian(int n, Rng& rng);

/// Skew-symmetric matrix with Gaussian strict upper triangle. If
/// target_norm > 0 the result is rescaled to that Frobenius norm.
Mat random_skew(int n, Rng& rng, double target_norm = 0.0);

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the
/// R-diagonal sign fix, i.e. a product of Householder reflections).
/// want_det = +1 or -1 forces the determinant sign by flipping the last
/// column when needed; want_det = 0 leaves it random.
Mat random_orthogonal(int n, Rng& rng, int want_det = 0);

/// Haar-distributed special orthogonal matrix.
Mat random_special_orthogonal(int n, Rng& rng);

}  // namespace ortholog
