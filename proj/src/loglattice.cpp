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

#include "ortholog/loglattice.hpp"

#include "ortholog/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ortholog {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}

bool is_generic(const Mat& r, const Tolerances& tol) {
  return canonical_form(r, tol).is_generic();
}

std::vector<LatticeLog> enumerate_logs(const Mat& r, double radius,
                                       const Tolerances& tol) {
  if (radius < 0) throw DomainError("enumerate_logs: radius must be >= 0");
  const CanonicalForm form = canonical_form(r, tol);
  if (!form.is_generic())
    throw DomainError(
        "enumerate_logs: the logarithms of this matrix do not form a "
        "lattice; use sample_aplog for principal logarithms");

  const int n = form.n;
  const int q = n / 2;

  std::vector<double> angles;   // theta_h, descending, padded with 0
  std::vector<Mat> directions;  // B_h
  for (int k = 0; k < form.angle_count(); ++k) {
    angles.push_back(form.thetas[k]);
    directions.push_back(form.angle_factor(k));
  }
  if (form.fixed_dim == 2) {
    angles.push_back(0.0);
    directions.push_back(form.zero_factor());
  }
  if (static_cast<int>(directions.size()) != q)
    throw Error("internal", "enumerate_logs: lattice rank mismatch");

  Mat base = Mat::Zero(n, n);
  for (int h = 0; h < q; ++h) base += angles[h] * directions[h];

  const bool has_pi = !angles.empty() && angles.front() == kPi;
  const double coord_bound = radius / std::sqrt(2.0);

  // the two principal bases when theta_1 = pi; their lattices coincide, the
  // merge below removes the duplicates
  std::vector<std::vector<double>> base_angles{angles};
  if (has_pi) {
    std::vector<double> flipped = angles;
    flipped.front() = -kPi;
    base_angles.push_back(std::move(flipped));
  }

  std::map<std::vector<long>, LatticeLog> found;
  for (const auto& start : base_angles) {
    std::vector<long> lo(q), hi(q);
    for (int h = 0; h < q; ++h) {
      lo[h] = static_cast<long>(std::ceil((-coord_bound - start[h]) / kTwoPi - 1e-12));
      hi[h] = static_cast<long>(std::floor((coord_bound - start[h]) / kTwoPi + 1e-12));
      if (lo[h] > hi[h]) {  // empty box
        lo.clear();
        break;
      }
    }
    if (static_cast<int>(lo.size()) != q) continue;

    std::vector<long> counter = lo;
    while (true) {
      double sq = 0.0;
      for (int h = 0; h < q; ++h) {
        const double z = start[h] + kTwoPi * static_cast<double>(counter[h]);
        sq += z * z;
      }
      const double fro = std::sqrt(2.0 * sq);
      if (fro <= radius + 1e-12) {
        // canonical coefficients relative to the unflipped base
        std::vector<long> key(q);
        bool in_box = true;
        for (int h = 0; h < q; ++h) {
          const double z = start[h] + kTwoPi * static_cast<double>(counter[h]);
          const double rh = (z - angles[h]) / kTwoPi;
          key[h] = std::lround(rh);
          if (std::abs(rh - static_cast<double>(key[h])) > 1e-9) in_box = false;
        }
        if (in_box && found.find(key) == found.end()) {
          LatticeLog log;
          log.base = base;
          log.directions = directions;
          log.coeffs = key;
          log.matrix = Mat::Zero(n, n);
          for (int h = 0; h < q; ++h)
            log.matrix += (angles[h] + kTwoPi * static_cast<double>(key[h])) *
                          directions[h];
          log.norm = log.matrix.norm();
          found.emplace(std::move(key), std::move(log));
        }
      }
      int h = q - 1;
      while (h >= 0) {
        if (++counter[h] <= hi[h]) break;
        counter[h] = lo[h];
        --h;
      }
      if (h < 0) break;
    }
  }

  std::vector<LatticeLog> out;
  out.reserve(found.size());
  for (auto& [key, log] : found) out.push_back(std::move(log));
  std::sort(out.begin(), out.end(), [](const LatticeLog& a, const LatticeLog& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coeffs < b.coeffs;
  });
  return out;
}

VerifyResult verify_general_form(const Mat& r, const Mat& a,
                                 const Tolerances& tol) {
  const int n = static_cast<int>(r.rows());
  VerifyResult res;
  res.base = Mat::Zero(n, n);
  res.witness.n = n;

  {
    Tolerances skew_tol = tol;
    skew_tol.orth_tol = tol.orth_tol * (1.0 + a.norm());
    if (!is_skew(a, skew_tol))
      throw PreconditionError("verify_general_form: claimed log is not skew");
  }
  if (a.rows() != r.rows() || a.cols() != r.cols())
    throw DimensionError("verify_general_form: order mismatch");

  const double exp_budget = tol.recon_tol * n * (1.0 + a.norm());
  if ((exp_oracle(a) - r).norm() > exp_budget) {
    res.reason = "exp_mismatch";
    return res;
  }

  const double zero_cut = tol.cluster_tol * (1.0 + a.norm());
  if (a.norm() <= zero_cut) {
    // the zero log of the identity; empty witness
    res.ok = (r - Mat::Identity(n, n)).norm() <= tol.recon_tol * n;
    if (!res.ok) res.reason = "exp_mismatch";
    return res;
  }

  SvdSystem sys;
  try {
    sys = decompose(a, tol);
  } catch (const Error&) {
    res.reason = "decompose_failed";
    return res;
  }

  for (int j = 0; j < sys.size(); ++j) {
    const double zeta = sys.zetas[j];
    // unique split zeta = eta + k*pi with eta in (0, pi], snapping multiples
    long k;
    double eta;
    const long k0 = std::lround(zeta / kPi);
    if (std::abs(zeta - static_cast<double>(k0) * kPi) <= tol.pi_tol) {
      k = k0 - 1;
      eta = kPi;
    } else {
      k = static_cast<long>(std::floor(zeta / kPi));
      eta = zeta - static_cast<double>(k) * kPi;
    }
    double tau;
    long l;
    Mat c;
    if (k % 2 == 0) {
      tau = eta;
      l = k / 2;
      c = sys.factors[j];
    } else {
      tau = kPi - eta;
      l = (-k - 1) / 2;
      c = -sys.factors[j];
    }
    res.base += tau * c;
    res.witness.zetas.push_back(zeta);
    res.witness.factors.push_back(std::move(c));
    res.ints.push_back(l);
  }

  // the witness must reproduce A exactly: tau_j + 2*pi*l_j = +-zeta_j
  Mat rebuilt = res.base;
  for (int j = 0; j < res.witness.size(); ++j)
    rebuilt += kTwoPi * static_cast<double>(res.ints[j]) * res.witness.factors[j];
  if ((rebuilt - a).norm() > tol.recon_tol * n * (1.0 + a.norm())) {
    res.reason = "reconstruction_failed";
    return res;
  }

  // principal-log certificate: exp(B) = R and eigenvalues within [0, pi]
  if ((exp_oracle(res.base) - r).norm() > tol.recon_tol * n * 10.0) {
    res.reason = "base_not_log";
    return res;
  }
  Eigen::JacobiSVD<Mat> svd(res.base);
  if (svd.singularValues().size() > 0 &&
      svd.singularValues()[0] > kPi + tol.pi_tol) {
    res.reason = "base_not_principal";
    return res;
  }

  // witness axioms: factor cubes, mutual annihilation, commutation with B
  const double axiom_budget = tol.recon_tol * n * 10.0;
  for (int j = 0; j < res.witness.size(); ++j) {
    const Mat& cj = res.witness.factors[j];
    if ((cj * cj * cj + cj).norm() > axiom_budget) {
      res.reason = "witness_axioms";
      return res;
    }
    if ((cj * res.base - res.base * cj).norm() > axiom_budget) {
      res.reason = "witness_axioms";
      return res;
    }
    for (int h = 0; h < res.witness.size(); ++h) {
      if (h == j) continue;
      if ((cj * res.witness.factors[h]).norm() > axiom_budget) {
        res.reason = "witness_axioms";
        return res;
      }
    }
  }

  res.ok = true;
  return res;
}

}  // namespace ortholog
