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

#include "ortholog/plog.hpp"
#include "ortholog/skewsvd.hpp"
#include "ortholog/types.hpp"

#include <string>
#include <vector>

namespace ortholog {

/// One point of the logarithm lattice of a generic R: the skew logarithm
/// B + 2*pi * sum_h r_h * B_h, where B is the principal log and the B_h are
/// the floor(n/2) commuting plane directions (including a zero-angle
/// direction when the fixed space is two-dimensional).
struct LatticeLog {
  Mat base;                    ///< principal log B
  std::vector<Mat> directions; ///< B_h, h = 1..floor(n/2)
  std::vector<long> coeffs;    ///< r_h
  Mat matrix;                  ///< B + 2*pi * sum r_h B_h
  double norm = 0.0;           ///< Frobenius norm of `matrix`
};

/// True when every skew logarithm of R is a lattice point: all complex
/// eigenvalue pairs simple, -1 absent or of multiplicity 2, +1 absent or
/// of multiplicity at most 2.
bool is_generic(const Mat& r, const Tolerances& tol);

/// Enumerate every skew logarithm A of a generic R with |A|_F <= radius,
/// sorted ascending by norm (coefficients break ties). When -1 is an
/// eigenvalue both principal logs are enumerated and the results merged,
/// since their lattices coincide as sets.
std::vector<LatticeLog> enumerate_logs(const Mat& r, double radius,
                                       const Tolerances& tol);

/// Outcome of checking a claimed logarithm against the general form
/// B + 2*pi * sum_j l_j C_j.
struct VerifyResult {
  bool ok = false;
  std::string reason;       ///< failure code, empty when ok
  Mat base;                 ///< extracted principal log B
  SvdSystem witness;        ///< the commuting factors C_j
  std::vector<long> ints;   ///< the integers l_j
};

/// Given any skew A, decide whether exp(A) = R and, if so, extract the
/// witness (B, C_j, l_j): A is decomposed, each singular value is reduced
/// to tau + 2*pi*l with tau in [0, pi] (flipping the factor sign on odd
/// half-turn counts), and the reconstructed principal log and commutation
/// axioms are verified numerically.
VerifyResult verify_general_form(const Mat& r, const Mat& a,
                                 const Tolerances& tol);

}  // namespace ortholog
