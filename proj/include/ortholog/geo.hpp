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

#include <optional>
#include <utility>
#include <vector>

namespace ortholog {

/// Geodesic t -> G * exp(t A) of the orthogonal group under the Frobenius
/// metric, carried as the start point, the skew generator and the plane
/// decomposition of the generator (used for closed-form evaluation).
struct GeodesicArc {
  Mat start;         ///< G, orthogonal
  Mat generator;     ///< A, skew
  SvdSystem system;  ///< decomposition of A; empty for the constant arc
  bool is_principal = false;  ///< all |eigenvalues of A| <= pi
};

GeodesicArc geodesic(const Mat& g, const Mat& a, const Tolerances& tol);

/// alpha(t) = G + sum_j [ sin(t z_j) G F_j + (1 - cos(t z_j)) G F_j^2 ].
Mat eval(const GeodesicArc& arc, double t);

/// Length over [0, 1]: the constant speed |A|_F.
double arc_length(const GeodesicArc& arc);

/// Riemannian distance between two orthogonal matrices of the same
/// component: sqrt(2 sum_k m_k theta_k^2) over the angle blocks of G^-1 H.
double distance(const Mat& g, const Mat& h, const Tolerances& tol);

/// Diameter of a component, sqrt(2 floor(n/2)) * pi.
double diameter(int n);

struct MinimalGeodesics {
  std::vector<GeodesicArc> arcs;
  AplogStructure structure;
};

/// The minimal-length geodesic arcs joining G and H: one arc per principal
/// logarithm of G^-1 H when the set is finite (unique, or the two pi-block
/// sign flips), otherwise one representative plus the manifold structure.
MinimalGeodesics minimal_geodesics(const Mat& g, const Mat& h,
                                   const Tolerances& tol);

enum class PeriodicityKind { Periodic, InjectiveImmersion, Undecided };

struct Periodicity {
  PeriodicityKind kind = PeriodicityKind::Undecided;
  double period = 0.0;  ///< valid iff kind == Periodic
};

/// Classify a nonconstant geodesic as closed or not. All frequency ratios
/// z_j / z_h are approximated by rationals with denominator <= max_den
/// (continued fractions, within tol.recon_tol); on success the candidate
/// period 2*pi*m / z_1 is verified by evaluating the arc. Irrationality is
/// not falsifiable in floating point, so the negative answer is Undecided,
/// never InjectiveImmersion.
Periodicity classify_periodicity(const GeodesicArc& arc, const Tolerances& tol,
                                 int max_den);

/// Relation of an orthogonal pair to the diameter geometry.
struct PairClass {
  bool same_component = false;
  bool weakly_diametral = false;  ///< some geodesic hits H at both t = +-1;
                                  ///< equivalent to G^-1 H symmetric
  bool diametral = false;         ///< distance equals the component diameter
  std::optional<std::pair<int, int>> grassmann_signature;  ///< (p, n-p)
                                  ///< eigenvalue multiplicities of G^-1 H
                                  ///< when it is a symmetric involution
  double distance = 0.0;          ///< NaN when components differ
};

PairClass classify_pair(const Mat& g, const Mat& h, const Tolerances& tol);

struct EinsteinConstants {
  double ricci_coeff;  ///< (n - 2) / 4
  double scalar;       ///< (n - 2)(n - 1) n / 8
};

EinsteinConstants einstein_constants(int n);

/// Sectional curvature of the plane spanned by skew X, Y:
/// |[X, Y]|^2 / (4 (|X|^2 |Y|^2 - <X, Y>^2)). Always >= 0.
double sectional_curvature(const Mat& x, const Mat& y);

}  // namespace ortholog
