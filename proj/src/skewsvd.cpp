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

#include "ortholog/skewsvd.hpp"

#include <cmath>

namespace ortholog {

Mat SvdSystem::reconstruct() const {
  Mat a = Mat::Zero(n, n);
  for (int j = 0; j < size(); ++j) a += zetas[j] * factors[j];
  return a;
}

SvdSystem decompose(const Mat& a, const Tolerances& tol) {
  const int n = static_cast<int>(a.rows());
  {
    Tolerances skew_tol = tol;
    skew_tol.orth_tol = tol.orth_tol * (1.0 + a.norm());
    if (!is_skew(a, skew_tol))
      throw PreconditionError("decompose: input is not skew-symmetric");
  }
  const double anorm = a.norm();

  Mat s = -(a * a);
  s = (s + s.transpose()) / 2.0;
  const SymEig eig = sym_eig(s, tol);

  // singular values; eigenvalues of -A^2 are zeta^2, each appearing twice
  const double zero_cut = std::pow(tol.cluster_tol * anorm, 2);
  std::vector<double> sigma;
  std::vector<int> index;
  for (int i = 0; i < n; ++i) {
    if (eig.values[i] > zero_cut) {
      sigma.push_back(std::sqrt(eig.values[i]));
      index.push_back(i);
    }
  }
  if (sigma.empty())
    throw DomainError(
        "decompose: zero matrix has an empty SVD system; handle the zero "
        "logarithm separately");

  const double gap = tol.cluster_tol * (1.0 + sigma.front());

  SvdSystem sys;
  sys.n = n;
  std::size_t begin = 0;
  while (begin < sigma.size()) {
    std::size_t end = begin + 1;
    while (end < sigma.size() && sigma[end - 1] - sigma[end] <= gap) ++end;
    const std::size_t count = end - begin;
    if (count % 2 != 0)
      throw PreconditionError(
          "decompose: singular-value cluster of odd multiplicity; input is "
          "too far from skew-symmetric");

    double zeta = 0.0;
    Mat projector = Mat::Zero(n, n);
    for (std::size_t i = begin; i < end; ++i) {
      zeta += sigma[i];
      const auto col = eig.vectors.col(index[i]);
      projector += col * col.transpose();
    }
    zeta /= static_cast<double>(count);

    Mat factor = a * projector / zeta;
    factor = (factor - factor.transpose()) / 2.0;
    sys.zetas.push_back(zeta);
    sys.factors.push_back(std::move(factor));
    begin = end;
  }
  return sys;
}

EigSummary eig_summary(const SvdSystem& sys) {
  EigSummary out{0, 0.0};
  for (int j = 0; j < sys.size(); ++j) {
    // F^3 = -F makes -F^2 a projector of rank 2m, so tr(F^2) = -2m
    const double tr2 = (sys.factors[j] * sys.factors[j]).trace();
    const int rank_j = static_cast<int>(std::lround(-tr2));
    out.rank += rank_j;
    out.tr_sq += -static_cast<double>(rank_j) * sys.zetas[j] * sys.zetas[j];
  }
  return out;
}

Mat rodrigues_exp(const SvdSystem& sys) {
  Mat r = Mat::Identity(sys.n, sys.n);
  for (int j = 0; j < sys.size(); ++j) {
    const Mat& f = sys.factors[j];
    r += std::sin(sys.zetas[j]) * f +
         (1.0 - std::cos(sys.zetas[j])) * (f * f);
  }
  return r;
}

std::pair<Mat, Mat> sym_skew_parts(const SvdSystem& sys) {
  Mat sym = Mat::Identity(sys.n, sys.n);
  Mat skew = Mat::Zero(sys.n, sys.n);
  for (int j = 0; j < sys.size(); ++j) {
    const Mat& f = sys.factors[j];
    sym += (1.0 - std::cos(sys.zetas[j])) * (f * f);
    skew += std::sin(sys.zetas[j]) * f;
  }
  return {sym, skew};
}

}  // namespace ortholog
