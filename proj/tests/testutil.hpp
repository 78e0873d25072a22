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

#include "ortholog/ortholog.hpp"

#include <initializer_list>
#include <vector>

namespace ortholog::testutil {

inline constexpr double kPi = 3.14159265358979323846;

/// diag of square blocks
inline Mat block_diag(std::initializer_list<Mat> blocks) {
  int n = 0;
  for (const Mat& b : blocks) n += static_cast<int>(b.rows());
  Mat out = Mat::Zero(n, n);
  int off = 0;
  for (const Mat& b : blocks) {
    const int k = static_cast<int>(b.rows());
    out.block(off, off, k, k) = b;
    off += k;
  }
  return out;
}

inline Mat identity(int n) { return Mat::Identity(n, n); }

/// special orthogonal matrix with the given rotation angles (one plane per
/// angle) and an identity tail up to order n, hidden by a random conjugation
inline Mat so_with_angles(const std::vector<double>& angles, int n, Rng& rng) {
  Mat d = Mat::Identity(n, n);
  int off = 0;
  for (double theta : angles) {
    d.block(off, off, 2, 2) = rot2(theta);
    off += 2;
  }
  const Mat q = random_special_orthogonal(n, rng);
  return q * d * q.transpose();
}

inline double rel_err(const Mat& got, const Mat& want) {
  const double scale = std::max(1.0, want.norm());
  return (got - want).norm() / scale;
}

}  // namespace ortholog::testutil
