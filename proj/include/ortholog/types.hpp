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

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace ortholog {

/// Dense real square matrix, the universal carrier of the library.
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Error with a stable machine-readable code (used by the CLI as well).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Operands have incompatible orders.
struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error("dimension", w) {}
};

/// A matrix required to be invertible is (numerically) singular.
struct SingularityError : Error {
  explicit SingularityError(const std::string& w) : Error("singular", w) {}
};

/// Input violates an operation precondition (not skew, not orthogonal, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error("precondition", w) {}
};

/// Input is outside the mathematical domain of the operation.
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error("domain", w) {}
};

/// Input file or stream could not be parsed.
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("parse", w) {}
};

/// Numerical tolerances shared by all decompositions and predicates.
///
/// orth_tol bounds residuals of orthogonality/symmetry predicates,
/// cluster_tol separates singular values / angles into clusters,
/// pi_tol snaps angles onto pi (and cos onto +-1),
/// recon_tol bounds reconstruction residuals of factorizations.
struct Tolerances {
  double orth_tol;
  double cluster_tol;
  double pi_tol;
  double recon_tol;

  /// Defaults for matrices of order n.
  static Tolerances for_order(int n) {
    return Tolerances{1e-9 * n, 1e-8, 1e-8, 1e-9 * n};
  }

  Tolerances scaled(double factor) const {
    return Tolerances{orth_tol * factor, cluster_tol * factor,
                      pi_tol * factor, recon_tol * factor};
  }

  void validate() const {
    if (!(orth_tol > 0 && cluster_tol > 0 && pi_tol > 0 && recon_tol > 0))
      throw DomainError("tolerances must be strictly positive");
  }
};

/// The elementary 2x2 skew-symmetric orthogonal block [[0,1],[-1,0]].
inline Mat e0() {
  Mat e(2, 2);
  e << 0, 1, -1, 0;
  return e;
}

/// The 2x2 swap permutation [[0,1],[1,0]]; conjugating by it flips e0.
inline Mat p0() {
  Mat p(2, 2);
  p << 0, 1, 1, 0;
  return p;
}

/// exp(theta * e0) = [[cos t, sin t], [-sin t, cos t]].
inline Mat rot2(double theta) {
  Mat r(2, 2);
  const double c = std::cos(theta), s = std::sin(theta);
  r << c, s, -s, c;
  return r;
}

}  // namespace ortholog
