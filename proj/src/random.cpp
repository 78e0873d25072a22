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

#include "ortholog/random.hpp"

#include "ortholog/matcore.hpp"

namespace ortholog {

Mat random_gaussian(int n, Rng& rng) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  return g;
}

Mat random_skew(int n, Rng& rng, double target_norm) {
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double x = rng.normal();
      a(i, j) = x;
      a(j, i) = -x;
    }
  }
  if (target_norm > 0.0) {
    const double nrm = a.norm();
    if (nrm > 0.0) a *= target_norm / nrm;
  }
  return a;
}

Mat random_orthogonal(int n, Rng& rng, int want_det) {
  Eigen::HouseholderQR<Mat> qr(random_gaussian(n, rng));
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (want_det != 0 && determinant(q) * want_det < 0)
    q.col(n - 1) = -q.col(n - 1);
  return q;
}

Mat random_special_orthogonal(int n, Rng& rng) {
  return random_orthogonal(n, rng, +1);
}

}  // namespace ortholog
