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

#include "ortholog/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ortholog {

namespace {

void require_square(const Mat& m, const char* who) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(who) + ": matrix must be square");
}

void require_same_order(const Mat& a, const Mat& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(who) + ": operands must have the same order");
}

}  // namespace

double frobenius_inner(const Mat& v, const Mat& w) {
  require_same_order(v, w, "frobenius_inner");
  return (v.array() * w.array()).sum();
}

double trace_metric(const Mat& g, const Mat& v, const Mat& w) {
  require_square(g, "trace_metric");
  require_same_order(g, v, "trace_metric");
  require_same_order(g, w, "trace_metric");
  Eigen::FullPivLU<Mat> lu(g);
  if (!lu.isInvertible())
    throw SingularityError("trace_metric: base point is singular");
  const Mat gv = lu.solve(v);
  const Mat gw = lu.solve(w);
  return (gv * gw).trace();
}

bool is_orthogonal(const Mat& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) return false;
  const Mat residual =
      m.transpose() * m - Mat::Identity(m.rows(), m.cols());
  return residual.norm() <= tol.orth_tol;
}

bool is_skew(const Mat& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) return false;
  return (m + m.transpose()).norm() <= tol.orth_tol;
}

bool is_symmetric(const Mat& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.transpose()).norm() <= tol.orth_tol;
}

bool is_special_orthogonal(const Mat& m, const Tolerances& tol) {
  return is_orthogonal(m, tol) && determinant(m) > 0;
}

double determinant(const Mat& m) {
  require_square(m, "determinant");
  return Eigen::PartialPivLU<Mat>(m).determinant();
}

SymEig sym_eig(const Mat& s, const Tolerances& tol) {
  const int n = static_cast<int>(s.rows());
  require_square(s, "sym_eig");
  if (!is_symmetric(s, tol))
    throw PreconditionError("sym_eig: input is not symmetric within tolerance");

  Mat a = (s + s.transpose()) / 2.0;
  Mat q = Mat::Identity(n, n);
  const double scale = std::max(a.norm(), 1e-300);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int r = p + 1; r < n; ++r) off += 2.0 * a(p, r) * a(p, r);
    if (std::sqrt(off) <= 1e-15 * scale) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (std::abs(apr) <= 1e-300) continue;
        const double tau = (a(r, r) - a(p, p)) / (2.0 * apr);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akr = a(k, r);
          a(k, p) = c * akp - sn * akr;
          a(k, r) = sn * akp + c * akr;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), ark = a(r, k);
          a(p, k) = c * apk - sn * ark;
          a(r, k) = sn * apk + c * ark;
        }
        for (int k = 0; k < n; ++k) {
          const double qkp = q(k, p), qkr = q(k, r);
          q(k, p) = c * qkp - sn * qkr;
          q(k, r) = sn * qkp + c * qkr;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  SymEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    out.vectors.col(j) = q.col(order[j]);
    // fix the column sign: largest-magnitude component made positive
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(out.vectors(i, j)) > std::abs(out.vectors(imax, j))) imax = i;
    if (out.vectors(imax, j) < 0) out.vectors.col(j) = -out.vectors.col(j);
  }
  return out;
}

SymEig sym_eig(const Mat& s) {
  return sym_eig(s, Tolerances::for_order(static_cast<int>(std::max<Eigen::Index>(s.rows(), 1))));
}

Mat exp_oracle(const Mat& a) {
  require_square(a, "exp_oracle");
  const int n = static_cast<int>(a.rows());
  int squarings = 0;
  double norm = a.norm();
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const Mat x = a / std::exp2(squarings);
  Mat term = Mat::Identity(n, n);
  Mat sum = Mat::Identity(n, n);
  for (int k = 1; k <= 16; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

double pfaffian(const Mat& a_in, const Tolerances& tol) {
  const int n = static_cast<int>(a_in.rows());
  require_square(a_in, "pfaffian");
  if (n % 2 != 0)
    throw DomainError("pfaffian: order must be even");
  {
    Tolerances skew_tol = tol;
    skew_tol.orth_tol = tol.orth_tol * (1.0 + a_in.norm());
    if (!is_skew(a_in, skew_tol))
      throw PreconditionError("pfaffian: input is not skew-symmetric");
  }
  if (n == 0) return 1.0;

  Mat a = (a_in - a_in.transpose()) / 2.0;
  double result = 1.0;
  for (int k = 0; k + 1 < n; k += 2) {
    int kp = k + 1;
    for (int i = k + 2; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(kp, k))) kp = i;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      result = -result;
    }
    const double pivot = a(k, k + 1);
    if (pivot == 0.0) return 0.0;
    result *= pivot;
    if (k + 2 < n) {
      const int tail = n - (k + 2);
      const Vec mult = a.row(k).segment(k + 2, tail).transpose() / pivot;
      const Vec col = a.col(k + 1).segment(k + 2, tail);
      a.block(k + 2, k + 2, tail, tail) +=
          mult * col.transpose() - col * mult.transpose();
    }
  }
  return result;
}

double pfaffian(const Mat& a) {
  return pfaffian(a, Tolerances::for_order(static_cast<int>(std::max<Eigen::Index>(a.rows(), 1))));
}

}  // namespace ortholog
