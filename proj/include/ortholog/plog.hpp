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

#include "ortholog/canon.hpp"
#include "ortholog/skewsvd.hpp"
#include "ortholog/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ortholog {

/// Shape of the set of skew-symmetric principal logarithms of R, driven by
/// the multiplicity 2*mu of the eigenvalue -1:
///   mu = 0  -> a single point,
///   mu = 1  -> two points,
///   mu >= 2 -> a manifold of dimension mu*(mu-1) with two connected
///              components, separated by the Pfaffian sign of the pi-block.
enum class AplogKind { Unique, TwoPoints, Manifold };

struct AplogStructure {
  AplogKind kind = AplogKind::Unique;
  int mu = 0;
  int dim = 0;
  int components = 1;
};

std::string to_string(AplogKind kind);

AplogStructure classify_structure(int mu);

/// One principal logarithm of R together with the structure of the whole set.
struct PlogDescriptor {
  Mat principal;           ///< B, with exp(B) = R and |eigenvalues| <= pi
  SvdSystem system;        ///< B = sum_k theta_k B_k
  AplogStructure structure;
  std::optional<Mat> b1_squared;  ///< square of the pi-block factor, present
                                  ///< iff -1 is an eigenvalue; it is uniquely
                                  ///< determined by R even when B_1 is not
  CanonicalForm form;      ///< factorization the construction came from
};

/// Construct a skew-symmetric principal logarithm of R in SO_n from its
/// canonical form, classify the structure of the full set, and (when -1 is
/// an eigenvalue) recover the invariant square of the pi-block from
///   B_1^2 = (R + R^T)/4 - I/2 - (1/2) sum_{j>=2} (1 - cos theta_j) B_j^2,
/// cross-checked against the constructed B_1.
PlogDescriptor principal_log(const Mat& r, const Tolerances& tol);

/// All principal logarithms when the angle structure is generic (every
/// angle simple, fixed space of dimension <= 2): one log when -1 is not an
/// eigenvalue, otherwise the two logs differing in the sign of the pi-block.
std::vector<Mat> all_principal_logs_generic(const Mat& r, const Tolerances& tol);

/// Draw principal logarithms of R when -1 is an eigenvalue (multiplicity
/// 2*mu): each sample is pi*W + sum_{j>=2} theta_j B_j where W restricts to
/// a random skew-symmetric orthogonal matrix on the -1 eigenspace. Samples
/// alternate the determinant sign of the conjugating factor, so both
/// connected components appear deterministically under a fixed seed. For
/// mu = 1 the set degenerates to two points, which are returned exactly.
std::vector<Mat> sample_aplog(const Mat& r, int count, std::uint64_t seed,
                              const Tolerances& tol);

/// Pfaffian sign (+1 or -1) of a skew-symmetric orthogonal block: selects
/// the connected component its conjugation orbit belongs to.
int classify_component(const Mat& w_block);
int classify_component(const Mat& w_block, const Tolerances& tol);

}  // namespace ortholog
