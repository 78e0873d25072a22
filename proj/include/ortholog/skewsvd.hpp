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

#include "ortholog/matcore.hpp"
#include "ortholog/types.hpp"

#include <utility>
#include <vector>

namespace ortholog {

/// Singular value decomposition of a skew-symmetric matrix,
/// A = sum_j zeta_j * F_j, with distinct zeta_1 > ... > zeta_s > 0 and
/// skew factors satisfying F_j^3 = -F_j and F_j F_h = 0 for j != h.
struct SvdSystem {
  int n = 0;
  std::vector<double> zetas;  ///< descending, strictly positive
  std::vector<Mat> factors;   ///< aligned with zetas

  int size() const { return static_cast<int>(zetas.size()); }

  /// sum_j zeta_j * F_j
  Mat reconstruct() const;
};

/// Decompose a nonzero skew-symmetric matrix into its SVD system.
///
/// Eigen-decomposes -A^2 (symmetric PSD), clusters the square roots of its
/// eigenvalues, and recovers each factor as A * P_j / zeta_j from the cluster
/// projector P_j, followed by an explicit skew-symmetrization.
SvdSystem decompose(const Mat& a, const Tolerances& tol);

struct EigSummary {
  int rank;      ///< rank of the reconstructed matrix, 2 * sum m_k
  double tr_sq;  ///< trace of its square, -2 * sum m_k zeta_k^2
};

EigSummary eig_summary(const SvdSystem& sys);

/// Closed-form exponential of the reconstructed matrix:
/// I + sum_j [ sin(zeta_j) F_j + (1 - cos(zeta_j)) F_j^2 ].
Mat rodrigues_exp(const SvdSystem& sys);

/// Symmetric and skew-symmetric parts of rodrigues_exp, returned separately.
std::pair<Mat, Mat> sym_skew_parts(const SvdSystem& sys);

}  // namespace ortholog
