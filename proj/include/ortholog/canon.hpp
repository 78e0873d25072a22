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

#include <vector>

namespace ortholog {

/// Angle-block factorization of a special orthogonal matrix:
///   R = K * diag(rot2(theta_1) x m_1, ..., rot2(theta_p) x m_p, I) * K^T
/// with distinct angles theta_k in (0, pi], sorted descending, and K
/// orthogonal. theta_1 = pi exactly when -1 is an eigenvalue of R.
struct CanonicalForm {
  int n = 0;
  std::vector<double> thetas;  ///< descending, in (0, pi]
  std::vector<int> mults;      ///< m_k >= 1, aligned with thetas
  int fixed_dim = 0;           ///< n - 2 * sum m_k
  Mat conjugator;              ///< K

  int angle_count() const { return static_cast<int>(thetas.size()); }
  int rotation_dim() const { return n - fixed_dim; }

  /// First column index of the k-th angle block inside K.
  int block_offset(int k) const;

  /// Skew factor of the k-th angle: K * diag(0,..., e0 x m_k, ..., 0) * K^T.
  Mat angle_factor(int k) const;

  /// Zero-angle direction K * diag(0,...,0, e0) * K^T spanned by the last
  /// two fixed-space columns. Requires fixed_dim >= 2.
  Mat zero_factor() const;

  /// K * diag(blocks, I) * K^T; equals the factored matrix up to roundoff.
  Mat reconstruct() const;

  /// True when every angle is simple (all m_k = 1) and the fixed space has
  /// dimension at most 2; exactly the inputs whose logarithms form a
  /// discrete lattice.
  bool is_generic() const;
};

/// Factor R in SO_n into its canonical form. Eigen-decomposes the symmetric
/// part, recovers each rotation plane from the action of the skew part
/// (atan2-based, so the orientation never flips near 0 or pi), pairs the
/// eigenvalue -1 planes arbitrarily and snaps angles within pi_tol onto pi.
CanonicalForm canonical_form(const Mat& r, const Tolerances& tol);

struct MinusOneInfo {
  bool present = false;
  int multiplicity = 0;  ///< 2 m_1 when present
};

/// Whether -1 is an eigenvalue (theta_1 snapped to pi) and its multiplicity.
MinusOneInfo has_minus_one(const CanonicalForm& form, const Tolerances& tol);

}  // namespace ortholog
