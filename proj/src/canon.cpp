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

#include "ortholog/canon.hpp"

#include "ortholog/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ortholog {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic basis ordering: sign-fix each column (largest-magnitude
// entry positive), then sort columns lexicographically by entries.
void order_basis(std::vector<Vec>& basis) {
  for (Vec& v : basis) {
    int imax = 0;
    for (int i = 1; i < v.size(); ++i)
      if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0) v = -v;
  }
  std::stable_sort(basis.begin(), basis.end(), [](const Vec& a, const Vec& b) {
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] < b[i] - 1e-14) return true;
      if (a[i] > b[i] + 1e-14) return false;
    }
    return false;
  });
}

// Remove the components of `basis` along u and v, then re-orthonormalize,
// keeping the vectors of largest remaining norm first. Returns dim-2 vectors.
std::vector<Vec> complement_within(const std::vector<Vec>& basis, const Vec& u,
                                   const Vec& v) {
  std::vector<Vec> work;
  for (const Vec& w : basis) {
    Vec r = w - u * u.dot(w) - v * v.dot(w);
    work.push_back(std::move(r));
  }
  std::vector<Vec> out;
  const std::size_t want = basis.size() - 2;
  while (out.size() < want) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const double nrm = work[i].norm();
      if (nrm > best_norm) {
        best_norm = nrm;
        best = i;
      }
    }
    if (best_norm < 1e-8)
      throw PreconditionError(
          "canonical_form: rotation plane pairing lost rank; input is too far "
          "from orthogonal");
    Vec q = work[best] / best_norm;
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    for (Vec& w : work) w -= q * q.dot(w);
    out.push_back(std::move(q));
  }
  return out;
}

struct Cluster {
  double theta = 0.0;
  std::vector<Vec> basis;
};

}  // namespace

int CanonicalForm::block_offset(int k) const {
  int off = 0;
  for (int j = 0; j < k; ++j) off += 2 * mults[j];
  return off;
}

Mat CanonicalForm::angle_factor(int k) const {
  Mat d = Mat::Zero(n, n);
  const int off = block_offset(k);
  for (int m = 0; m < mults[k]; ++m)
    d.block(off + 2 * m, off + 2 * m, 2, 2) = e0();
  return conjugator * d * conjugator.transpose();
}

Mat CanonicalForm::zero_factor() const {
  if (fixed_dim < 2)
    throw DomainError("zero_factor: fixed space has dimension < 2");
  Mat d = Mat::Zero(n, n);
  d.block(n - 2, n - 2, 2, 2) = e0();
  return conjugator * d * conjugator.transpose();
}

Mat CanonicalForm::reconstruct() const {
  Mat d = Mat::Identity(n, n);
  for (int k = 0; k < angle_count(); ++k) {
    const int off = block_offset(k);
    for (int m = 0; m < mults[k]; ++m)
      d.block(off + 2 * m, off + 2 * m, 2, 2) = rot2(thetas[k]);
  }
  return conjugator * d * conjugator.transpose();
}

bool CanonicalForm::is_generic() const {
  if (fixed_dim > 2) return false;
  for (int m : mults)
    if (m != 1) return false;
  return true;
}

CanonicalForm canonical_form(const Mat& r, const Tolerances& tol) {
  const int n = static_cast<int>(r.rows());
  if (r.rows() != r.cols())
    throw DimensionError("canonical_form: matrix must be square");
  if (!is_orthogonal(r, tol))
    throw PreconditionError("canonical_form: input is not orthogonal");
  if (determinant(r) < 0)
    throw PreconditionError(
        "canonical_form: determinant is -1; only SO_n is factored");

  const Mat sym = (r + r.transpose()) / 2.0;
  const Mat skew = (r - r.transpose()) / 2.0;
  const SymEig eig = sym_eig(sym, tol);

  const double plus_cut = 1.0 - tol.pi_tol * tol.pi_tol / 2.0;

  std::vector<Vec> plus_basis;
  std::vector<Vec> minus_basis;
  std::vector<std::pair<double, Vec>> rotating;  // (theta, eigenvector)
  for (int i = 0; i < n; ++i) {
    const double c = std::clamp(eig.values[i], -1.0, 1.0);
    Vec u = eig.vectors.col(i);
    if (c >= plus_cut) {
      plus_basis.push_back(std::move(u));
    } else if (c <= -plus_cut) {
      minus_basis.push_back(std::move(u));
    } else {
      const double s = (skew * u).norm();
      rotating.emplace_back(std::atan2(s, c), std::move(u));
    }
  }

  // cluster the rotation angles (descending order; adjacency chaining)
  std::stable_sort(rotating.begin(), rotating.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Cluster> clusters;
  if (minus_basis.size() % 2 != 0)
    throw PreconditionError(
        "canonical_form: eigenvalue -1 has odd multiplicity; determinant "
        "cannot be +1");
  if (!minus_basis.empty()) {
    Cluster pi_cluster;
    pi_cluster.theta = kPi;
    pi_cluster.basis = std::move(minus_basis);
    clusters.push_back(std::move(pi_cluster));
  }
  std::size_t begin = 0;
  while (begin < rotating.size()) {
    std::size_t end = begin + 1;
    while (end < rotating.size() &&
           rotating[end - 1].first - rotating[end].first <= tol.cluster_tol)
      ++end;
    Cluster c;
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      sum += rotating[i].first;
      c.basis.push_back(std::move(rotating[i].second));
    }
    c.theta = sum / static_cast<double>(end - begin);
    if (c.theta >= kPi - tol.pi_tol) c.theta = kPi;  // snap onto pi
    if (c.basis.size() % 2 != 0)
      throw PreconditionError(
          "canonical_form: rotation eigenspace of odd dimension; input is not "
          "orthogonal enough to factor");
    clusters.push_back(std::move(c));
    begin = end;
  }
  // a snapped rotation cluster merges into the -1 block if both exist
  if (clusters.size() >= 2 && clusters[0].theta == kPi &&
      clusters[1].theta == kPi) {
    for (Vec& v : clusters[1].basis) clusters[0].basis.push_back(std::move(v));
    clusters.erase(clusters.begin() + 1);
  }

  CanonicalForm form;
  form.n = n;
  form.conjugator.resize(n, n);
  int col = 0;

  for (Cluster& cluster : clusters) {
    order_basis(cluster.basis);
    form.thetas.push_back(cluster.theta);
    form.mults.push_back(static_cast<int>(cluster.basis.size()) / 2);

    std::vector<Vec> remaining = std::move(cluster.basis);
    while (!remaining.empty()) {
      Vec u = remaining.front();
      u.normalize();
      Vec v;
      if (cluster.theta == kPi) {
        // the skew part vanishes on the -1 eigenspace; any partner works
        v = remaining[1];
        v -= u * u.dot(v);
        v.normalize();
      } else {
        v = -(skew * u);
        v.normalize();
        v -= u * u.dot(v);
        v.normalize();
      }
      form.conjugator.col(col++) = u;
      form.conjugator.col(col++) = v;
      if (remaining.size() == 2) break;
      remaining = complement_within(remaining, u, v);
    }
  }

  order_basis(plus_basis);
  form.fixed_dim = static_cast<int>(plus_basis.size());
  for (const Vec& u : plus_basis) form.conjugator.col(col++) = u;

  return form;
}

MinusOneInfo has_minus_one(const CanonicalForm& form, const Tolerances& tol) {
  MinusOneInfo info;
  if (!form.thetas.empty() && std::abs(form.thetas.front() - kPi) <= tol.pi_tol) {
    info.present = true;
    info.multiplicity = 2 * form.mults.front();
  }
  return info;
}

}  // namespace ortholog
