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

#include "testutil.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ortholog;
using namespace ortholog::testutil;

namespace {

double max_singular_value(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
}

// R with -1 of multiplicity 2*mu, one extra rotation plane, conjugated
Mat with_minus_one_multiplicity(int mu, Rng& rng) {
  std::vector<double> angles(static_cast<std::size_t>(mu), kPi);
  angles.push_back(1.0);
  return so_with_angles(angles, 2 * mu + 2, rng);
}

}  // namespace

TEST_SUITE("plog") {

TEST_CASE("identity has the zero logarithm, uniquely") {
  const Tolerances tol = Tolerances::for_order(4);
  const PlogDescriptor d = principal_log(identity(4), tol);
  CHECK(d.principal.norm() == 0.0);
  CHECK(d.structure.kind == AplogKind::Unique);
  CHECK(d.system.size() == 0);
  CHECK_FALSE(d.b1_squared.has_value());
}

TEST_CASE("negated identity in the plane: two logarithms") {
  const Tolerances tol = Tolerances::for_order(2);
  const PlogDescriptor d = principal_log(-identity(2), tol);
  CHECK(d.structure.kind == AplogKind::TwoPoints);
  CHECK(d.structure.mu == 1);
  CHECK(d.structure.components == 2);
  CHECK((exp_oracle(d.principal) + identity(2)).norm() < 1e-12);

  const std::vector<Mat> logs = all_principal_logs_generic(-identity(2), tol);
  REQUIRE(logs.size() == 2);
  const Mat plus = kPi * e0();
  const bool first_is_plus = (logs[0] - plus).norm() < 1e-10;
  CHECK((logs[first_is_plus ? 0 : 1] - plus).norm() < 1e-10);
  CHECK((logs[first_is_plus ? 1 : 0] + plus).norm() < 1e-10);
}

TEST_CASE("negated identity in dimension four: a manifold of logarithms") {
  const Tolerances tol = Tolerances::for_order(4);
  const PlogDescriptor d = principal_log(-identity(4), tol);
  CHECK(d.structure.kind == AplogKind::Manifold);
  CHECK(d.structure.mu == 2);
  CHECK(d.structure.dim == 2);
  CHECK(d.structure.components == 2);
  CHECK((exp_oracle(d.principal) + identity(4)).norm() < 1e-12);
}

TEST_CASE("structure table over the -1 multiplicity") {
  Rng rng(1001);
  const struct {
    int mu;
    AplogKind kind;
    int dim;
    int components;
  } table[] = {
      {0, AplogKind::Unique, 0, 1},
      {1, AplogKind::TwoPoints, 0, 2},
      {2, AplogKind::Manifold, 2, 2},
      {3, AplogKind::Manifold, 6, 2},
  };
  for (const auto& row : table) {
    const Mat r = row.mu == 0 ? so_with_angles({1.0, 2.0}, 6, rng)
                              : with_minus_one_multiplicity(row.mu, rng);
    const Tolerances tol = Tolerances::for_order(static_cast<int>(r.rows()));
    const PlogDescriptor d = principal_log(r, tol);
    CHECK(d.structure.kind == row.kind);
    CHECK(d.structure.mu == row.mu);
    CHECK(d.structure.dim == row.dim);
    CHECK(d.structure.components == row.components);
  }
}

TEST_CASE("round trip and principality on random special orthogonal input") {
  Rng rng(1102);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform() * 9);
    const Tolerances tol = Tolerances::for_order(n);
    const Mat r = exp_oracle(random_skew(n, rng, 1.0 + 6.0 * rng.uniform()));
    const PlogDescriptor d = principal_log(r, tol);
    CHECK((exp_oracle(d.principal) - r).norm() <= 1e-8 * n);
    CHECK(max_singular_value(d.principal) <= kPi + 1e-8);
    CHECK(is_skew(d.principal, tol));
    // trace identity: tr(B^2) = -2 sum m_k theta_k^2
    double want = 0.0;
    for (int k = 0; k < d.form.angle_count(); ++k)
      want += -2.0 * d.form.mults[k] * d.form.thetas[k] * d.form.thetas[k];
    CHECK((d.principal * d.principal).trace() ==
          doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("pi-block square is recovered from the invariant formula") {
  Rng rng(1203);
  for (int mu : {1, 2, 3}) {
    const Mat r = with_minus_one_multiplicity(mu, rng);
    const Tolerances tol = Tolerances::for_order(static_cast<int>(r.rows()));
    const PlogDescriptor d = principal_log(r, tol);
    REQUIRE(d.b1_squared.has_value());
    const Mat& b1 = d.system.factors.front();
    CHECK((*d.b1_squared - b1 * b1).norm() < 1e-10);
    // every sampled log has the same pi-block square
    for (const Mat& s : sample_aplog(r, 6, 99, tol)) {
      Mat rest = Mat::Zero(r.rows(), r.rows());
      for (int k = 1; k < d.form.angle_count(); ++k)
        rest += d.form.thetas[k] * d.system.factors[k];
      const Mat w = (s - rest) / kPi;
      CHECK((w * w - *d.b1_squared).norm() < 1e-9);
    }
  }
}

TEST_CASE("non-principal logs lose the trace inequality strictly") {
  Rng rng(1304);
  int checked = 0;
  while (checked < 50) {
    const int n = 2 + static_cast<int>(rng.uniform() * 7);
    const Tolerances tol = Tolerances::for_order(n);
    const Mat r = exp_oracle(random_skew(n, rng, 4.0));
    const PlogDescriptor d = principal_log(r, tol);
    if (d.system.size() == 0) continue;
    const int pick =
        static_cast<int>(rng.uniform() * d.system.size());
    const int flip = rng.uniform() < 0.5 ? 1 : -1;
    const Mat a =
        d.principal + 2.0 * kPi * flip * d.system.factors[pick];
    CHECK((exp_oracle(a) - r).norm() <= 1e-8 * n);
    const double tr_a = (a * a).trace();
    const double tr_b = (d.principal * d.principal).trace();
    CHECK(tr_a < tr_b - 1e-6);
    ++checked;
  }
}

TEST_CASE("sampling the two-point fiber returns the exact points") {
  const Tolerances tol = Tolerances::for_order(2);
  const std::vector<Mat> samples = sample_aplog(-identity(2), 6, 7, tol);
  REQUIRE(samples.size() == 6);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Mat want = (i % 2 == 0 ? 1.0 : -1.0) * samples[0];
    CHECK((samples[i] - want).norm() < 1e-14);
    CHECK((samples[i] - kPi * e0()).norm() < 1e-12 ||
          (samples[i] + kPi * e0()).norm() < 1e-12);
  }
}

TEST_CASE("sampling the manifold fiber: round trip, constant trace, both components") {
  const Tolerances tol = Tolerances::for_order(4);
  const Mat r = -identity(4);
  const std::vector<Mat> samples = sample_aplog(r, 16, 2024, tol);
  REQUIRE(samples.size() == 16);
  bool plus_seen = false, minus_seen = false;
  const double tr_first = (samples[0] * samples[0]).trace();
  for (const Mat& s : samples) {
    CHECK((exp_oracle(s) - r).norm() <= 1e-8 * 4);
    CHECK(max_singular_value(s) <= kPi + 1e-8);
    CHECK((s * s).trace() == doctest::Approx(tr_first).epsilon(1e-10));
    const Mat w = s / kPi;  // no other angle blocks for -I
    const int side = classify_component(w);
    (side > 0 ? plus_seen : minus_seen) = true;
  }
  CHECK(plus_seen);
  CHECK(minus_seen);
}

TEST_CASE("samples differ from the principal log only on the half-turn plane") {
  Rng rng(1405);
  const Mat r = with_minus_one_multiplicity(1, rng);
  const Tolerances tol = Tolerances::for_order(4);
  const PlogDescriptor d = principal_log(r, tol);
  const Mat& b1 = d.system.factors.front();
  for (const Mat& s : sample_aplog(r, 5, 31, tol)) {
    const Mat diff = s - d.principal;
    CHECK((diff.norm() < 1e-12 || (diff + 2.0 * kPi * b1).norm() < 1e-10));
  }
}

TEST_CASE("sampling requires -1 in the spectrum") {
  const Tolerances tol = Tolerances::for_order(2);
  CHECK_THROWS_AS(sample_aplog(rot2(1.0), 4, 1, tol), DomainError);
}

TEST_CASE("full enumeration needs a generic angle structure") {
  const Tolerances tol = Tolerances::for_order(4);
  CHECK_THROWS_AS(all_principal_logs_generic(-identity(4), tol), DomainError);
}

TEST_CASE("component classification by the Pfaffian sign") {
  CHECK(classify_component(e0()) == 1);
  CHECK(classify_component(-e0()) == -1);
  CHECK(classify_component(block_diag({e0(), -e0()})) == -1);
  CHECK_THROWS_AS(classify_component(identity(2)), PreconditionError);
  CHECK_THROWS_AS(classify_component(2.0 * e0()), PreconditionError);
}

TEST_CASE("rejects orientation-reversing input") {
  const Tolerances tol = Tolerances::for_order(2);
  CHECK_THROWS_AS(principal_log(p0(), tol), PreconditionError);
}

}  // TEST_SUITE
