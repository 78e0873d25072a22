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

#include "ortholog/plog.hpp"

#include "ortholog/matcore.hpp"
#include "ortholog/random.hpp"

#include <cmath>

namespace ortholog {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::string to_string(AplogKind kind) {
  switch (kind) {
    case AplogKind::Unique: return "Unique";
    case AplogKind::TwoPoints: return "TwoPoints";
    case AplogKind::Manifold: return "Manifold";
  }
  return "Unique";
}

AplogStructure classify_structure(int mu) {
  AplogStructure s;
  s.mu = mu;
  if (mu == 0) {
    s.kind = AplogKind::Unique;
    s.dim = 0;
    s.components = 1;
  } else if (mu == 1) {
    s.kind = AplogKind::TwoPoints;
    s.dim = 0;
    s.components = 2;
  } else {
    s.kind = AplogKind::Manifold;
    s.dim = mu * (mu - 1);
    s.components = 2;
  }
  return s;
}

PlogDescriptor principal_log(const Mat& r, const Tolerances& tol) {
  PlogDescriptor out;
  out.form = canonical_form(r, tol);
  const CanonicalForm& form = out.form;
  const int n = form.n;

  out.system.n = n;
  out.principal = Mat::Zero(n, n);
  for (int k = 0; k < form.angle_count(); ++k) {
    Mat factor = form.angle_factor(k);
    out.principal += form.thetas[k] * factor;
    out.system.zetas.push_back(form.thetas[k]);
    out.system.factors.push_back(std::move(factor));
  }

  const MinusOneInfo minus = has_minus_one(form, tol);
  out.structure = classify_structure(minus.present ? minus.multiplicity / 2 : 0);

  if (minus.present) {
    Mat b1sq = (r + r.transpose()) / 4.0 -
               Mat::Identity(n, n) / 2.0;
    for (int k = 1; k < form.angle_count(); ++k) {
      const Mat& bk = out.system.factors[k];
      b1sq -= 0.5 * (1.0 - std::cos(form.thetas[k])) * (bk * bk);
    }
    const Mat& b1 = out.system.factors.front();
    if ((b1sq - b1 * b1).norm() > 100.0 * tol.recon_tol * n)
      throw Error("selfcheck",
                  "principal_log: invariant square of the pi-block disagrees "
                  "with the constructed factor");
    out.b1_squared = std::move(b1sq);
  }
  return out;
}

std::vector<Mat> all_principal_logs_generic(const Mat& r, const Tolerances& tol) {
  const PlogDescriptor d = principal_log(r, tol);
  if (!d.form.is_generic())
    throw DomainError(
        "all_principal_logs_generic: angle structure is not generic; use "
        "sample_aplog to draw from the manifold");
  if (d.structure.kind == AplogKind::Unique) return {d.principal};
  const Mat& b1 = d.system.factors.front();
  return {d.principal, d.principal - 2.0 * kPi * b1};
}

std::vector<Mat> sample_aplog(const Mat& r, int count, std::uint64_t seed,
                              const Tolerances& tol) {
  if (count < 0) throw DomainError("sample_aplog: count must be >= 0");
  const PlogDescriptor d = principal_log(r, tol);
  const MinusOneInfo minus = has_minus_one(d.form, tol);
  if (!minus.present)
    throw DomainError(
        "sample_aplog: -1 is not an eigenvalue, the principal logarithm is "
        "unique");

  const int n = d.form.n;
  const int block = minus.multiplicity;  // 2 m_1

  Mat rest = Mat::Zero(n, n);
  for (int k = 1; k < d.form.angle_count(); ++k)
    rest += d.form.thetas[k] * d.system.factors[k];

  std::vector<Mat> samples;
  samples.reserve(static_cast<std::size_t>(count));

  if (block == 2) {
    // the manifold degenerates to two points; return them exactly
    const Mat& b1 = d.system.factors.front();
    for (int i = 0; i < count; ++i)
      samples.push_back((i % 2 == 0 ? 1.0 : -1.0) * kPi * b1 + rest);
    return samples;
  }

  Mat e_blocks = Mat::Zero(block, block);
  for (int m = 0; m < block / 2; ++m)
    e_blocks.block(2 * m, 2 * m, 2, 2) = e0();

  Rng rng(seed);
  const Mat& k_cols = d.form.conjugator;
  for (int i = 0; i < count; ++i) {
    const int want_det = (i % 2 == 0) ? +1 : -1;
    const Mat q = random_orthogonal(block, rng, want_det);
    const Mat m = q * e_blocks * q.transpose();
    Mat w = Mat::Zero(n, n);
    w.topLeftCorner(block, block) = m;
    w = k_cols * w * k_cols.transpose();
    samples.push_back(kPi * w + rest);
  }
  return samples;
}

int classify_component(const Mat& w_block, const Tolerances& tol) {
  if (!is_skew(w_block, tol) || !is_orthogonal(w_block, tol))
    throw PreconditionError(
        "classify_component: block must be skew-symmetric and orthogonal");
  return pfaffian(w_block, tol) > 0 ? +1 : -1;
}

int classify_component(const Mat& w_block) {
  return classify_component(
      w_block,
      Tolerances::for_order(static_cast<int>(std::max<Eigen::Index>(w_block.rows(), 1))));
}

}  // namespace ortholog
