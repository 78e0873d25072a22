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

#include "ortholog/geo.hpp"

#include "ortholog/canon.hpp"
#include "ortholog/matcore.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace ortholog {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Best rational p/den approximation of x with den <= max_den, by walking the
// continued-fraction convergents. Returns false when no convergent (or its
// final semiconvergent refinement) comes within tol.
bool rational_approx(double x, int max_den, double tol, long& num, long& den) {
  long p_prev = 1, q_prev = 0;
  long p_cur = static_cast<long>(std::floor(x)), q_cur = 1;
  double frac = x - std::floor(x);
  for (int step = 0; step < 64; ++step) {
    if (q_cur > max_den) break;
    if (std::abs(x - static_cast<double>(p_cur) / static_cast<double>(q_cur)) <=
        tol) {
      num = p_cur;
      den = q_cur;
      return true;
    }
    if (frac < 1e-18) break;
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const long p_next = a * p_cur + p_prev;
    const long q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  return false;
}

}  // namespace

GeodesicArc geodesic(const Mat& g, const Mat& a, const Tolerances& tol) {
  if (g.rows() != a.rows() || g.cols() != a.cols())
    throw DimensionError("geodesic: start point and generator order mismatch");
  if (!is_orthogonal(g, tol))
    throw PreconditionError("geodesic: start point is not orthogonal");
  {
    Tolerances skew_tol = tol;
    skew_tol.orth_tol = tol.orth_tol * (1.0 + a.norm());
    if (!is_skew(a, skew_tol))
      throw PreconditionError("geodesic: generator is not skew-symmetric");
  }
  GeodesicArc arc;
  arc.start = g;
  arc.generator = a;
  arc.system.n = static_cast<int>(a.rows());
  if (a.norm() > tol.cluster_tol * (1.0 + a.norm()))
    arc.system = decompose(a, tol);
  arc.is_principal = arc.system.zetas.empty() ||
                     arc.system.zetas.front() <= kPi + tol.pi_tol;
  return arc;
}

Mat eval(const GeodesicArc& arc, double t) {
  Mat p = arc.start;
  for (int j = 0; j < arc.system.size(); ++j) {
    const double z = arc.system.zetas[j] * t;
    const Mat gf = arc.start * arc.system.factors[j];
    p += std::sin(z) * gf + (1.0 - std::cos(z)) * (gf * arc.system.factors[j]);
  }
  return p;
}

double arc_length(const GeodesicArc& arc) { return arc.generator.norm(); }

double distance(const Mat& g, const Mat& h, const Tolerances& tol) {
  if (g.rows() != h.rows() || g.cols() != h.cols())
    throw DimensionError("distance: order mismatch");
  if (!is_orthogonal(g, tol) || !is_orthogonal(h, tol))
    throw PreconditionError("distance: both points must be orthogonal");
  if (determinant(g) * determinant(h) < 0)
    throw DomainError(
        "distance: points lie in different components of the orthogonal "
        "group");
  const CanonicalForm form = canonical_form(g.transpose() * h, tol);
  double sq = 0.0;
  for (int k = 0; k < form.angle_count(); ++k)
    sq += 2.0 * form.mults[k] * form.thetas[k] * form.thetas[k];
  return std::sqrt(sq);
}

double diameter(int n) {
  if (n < 1) throw DomainError("diameter: order must be >= 1");
  return std::sqrt(2.0 * static_cast<double>(n / 2)) * kPi;
}

MinimalGeodesics minimal_geodesics(const Mat& g, const Mat& h,
                                   const Tolerances& tol) {
  if (!is_orthogonal(g, tol) || !is_orthogonal(h, tol))
    throw PreconditionError("minimal_geodesics: points must be orthogonal");
  if (determinant(g) * determinant(h) < 0)
    throw DomainError(
        "minimal_geodesics: points lie in different components of the "
        "orthogonal group");
  const PlogDescriptor d = principal_log(g.transpose() * h, tol);

  MinimalGeodesics out;
  out.structure = d.structure;
  out.arcs.push_back(geodesic(g, d.principal, tol));
  if (d.structure.kind == AplogKind::TwoPoints) {
    const Mat& b1 = d.system.factors.front();
    out.arcs.push_back(geodesic(g, d.principal - 2.0 * kPi * b1, tol));
  }
  return out;
}

Periodicity classify_periodicity(const GeodesicArc& arc, const Tolerances& tol,
                                 int max_den) {
  if (arc.system.size() == 0)
    throw DomainError("classify_periodicity: arc is constant");
  if (max_den < 1)
    throw DomainError("classify_periodicity: max_den must be >= 1");

  Periodicity out;
  const double z1 = arc.system.zetas.front();

  // reduce every ratio z_j / z_1 to num/den; m = lcm of denominators
  long m = 1;
  for (int j = 0; j < arc.system.size(); ++j) {
    long num = 0, den = 1;
    if (!rational_approx(arc.system.zetas[j] / z1, max_den, tol.recon_tol, num,
                         den))
      return out;  // Undecided
    if (num == 0) return out;
    den /= std::gcd(num, den);
    m = std::lcm(m, den);
  }

  const double period = 2.0 * kPi * static_cast<double>(m) / z1;
  if ((eval(arc, period) - arc.start).norm() <= tol.recon_tol * arc.system.n * 10.0) {
    out.kind = PeriodicityKind::Periodic;
    out.period = period;
  }
  return out;
}

PairClass classify_pair(const Mat& g, const Mat& h, const Tolerances& tol) {
  if (g.rows() != h.rows() || g.cols() != h.cols())
    throw DimensionError("classify_pair: order mismatch");
  if (!is_orthogonal(g, tol) || !is_orthogonal(h, tol))
    throw PreconditionError("classify_pair: points must be orthogonal");
  const int n = static_cast<int>(g.rows());

  PairClass out;
  out.same_component = determinant(g) * determinant(h) > 0;
  if (!out.same_component) {
    out.distance = std::numeric_limits<double>::quiet_NaN();
    return out;
  }

  const Mat m = g.transpose() * h;
  out.distance = distance(g, h, tol);
  out.weakly_diametral = is_symmetric(m, tol);
  if (out.weakly_diametral) {
    // symmetric orthogonal: an involution with eigenvalues +-1
    const SymEig eig = sym_eig((m + m.transpose()) / 2.0, tol);
    int plus = 0;
    for (int i = 0; i < n; ++i)
      if (eig.values[i] > 0) ++plus;
    out.grassmann_signature = std::make_pair(plus, n - plus);
  }
  out.diametral = std::abs(out.distance - diameter(n)) <= tol.pi_tol;
  return out;
}

EinsteinConstants einstein_constants(int n) {
  if (n < 1) throw DomainError("einstein_constants: order must be >= 1");
  const double nd = static_cast<double>(n);
  return EinsteinConstants{(nd - 2.0) / 4.0,
                           (nd - 2.0) * (nd - 1.0) * nd / 8.0};
}

double sectional_curvature(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DimensionError("sectional_curvature: order mismatch");
  const Tolerances tol =
      Tolerances::for_order(static_cast<int>(std::max<Eigen::Index>(x.rows(), 1)));
  Tolerances skew_tol = tol;
  skew_tol.orth_tol = tol.orth_tol * (1.0 + x.norm() + y.norm());
  if (!is_skew(x, skew_tol) || !is_skew(y, skew_tol))
    throw PreconditionError("sectional_curvature: arguments must be skew");

  const double xx = frobenius_inner(x, x);
  const double yy = frobenius_inner(y, y);
  const double xy = frobenius_inner(x, y);
  const double gram = xx * yy - xy * xy;
  if (gram <= 1e-12 * xx * yy)
    throw DomainError("sectional_curvature: arguments are linearly dependent");
  const Mat bracket = x * y - y * x;
  return 0.25 * frobenius_inner(bracket, bracket) / gram;
}

}  // namespace ortholog
