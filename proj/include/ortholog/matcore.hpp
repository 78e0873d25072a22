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

#include <utility>

namespace ortholog {

/// Frobenius inner product tr(V^T W). Symmetric and positive definite.
double frobenius_inner(const Mat& v, const Mat& w);

/// Trace metric tr(G^{-1} V G^{-1} W). For G orthogonal and V, W tangent
/// at G this equals -frobenius_inner(V, W).
double trace_metric(const Mat& g, const Mat& v, const Mat& w);

bool is_orthogonal(const Mat& m, const Tolerances& tol);
bool is_skew(const Mat& m, const Tolerances& tol);
bool is_symmetric(const Mat& m, const Tolerances& tol);

/// Orthogonal with determinant +1.
bool is_special_orthogonal(const Mat& m, const Tolerances& tol);

/// Determinant via LU with partial pivoting.
double determinant(const Mat& m);

/// Spectral decomposition of a symmetric matrix.
struct SymEig {
  Vec values;   ///< eigenvalues, descending
  Mat vectors;  ///< orthogonal; column j pairs with values[j]
};

/// Cyclic Jacobi eigensolver. Self-contained so the factorizations built on
/// top of it stay reproducible bit-for-bit across platforms.
///
/// Column signs and the order inside ties are fixed deterministically.
SymEig sym_eig(const Mat& s, const Tolerances& tol);
SymEig sym_eig(const Mat& s);

/// Matrix exponential by scaling-and-squaring over a 16-term Taylor kernel
/// (halving until the scaled Frobenius norm is <= 0.5). Serves as the
/// independent reference for every closed-form exponential in the library.
Mat exp_oracle(const Mat& a);

/// Pfaffian of an even-order skew-symmetric matrix, via Parlett-Reid
/// tridiagonalization with partial pivoting (each pivot swap flips the sign).
/// Satisfies pfaffian(A)^2 = det(A) and pfaffian(Q A Q^T) = det(Q) pfaffian(A).
double pfaffian(const Mat& a, const Tolerances& tol);
double pfaffian(const Mat& a);

}  // namespace ortholog
