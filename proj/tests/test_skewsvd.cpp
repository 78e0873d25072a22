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

using namespace ortholog;
using namespace ortholog::testutil;

namespace {

void check_axioms(const SvdSystem& sys, const Mat& a, const Tolerances& tol) {
  const double budget = tol.recon_tol * sys.n * std::max(1.0, a.norm());
  CHECK((sys.reconstruct() - a).norm() <= budget);
  for (int j = 0; j < sys.size(); ++j) {
    const Mat& f = sys.factors[j];
    CHECK(is_skew(f, tol));
    CHECK((f * f * f + f).norm() <= tol.recon_tol * sys.n * 10);
    CHECK(sys.zetas[j] > 0.0);
    if (j > 0) CHECK(sys.zetas[j - 1] > sys.zetas[j]);
    const int rank = static_cast<int>(std::lround(-(f * f).trace()));
    CHECK(rank % 2 == 0);
    CHECK(rank >= 2);
    for (int h = 0; h < sys.size(); ++h) {
      if (h == j) continue;
      CHECK((sys.factors[j] * sys.factors[h]).norm() <=
            tol.recon_tol * sys.n * 10);
    }
  }
}

}  // namespace

TEST_SUITE("skewsvd") {

TEST_CASE("single block decomposition") {
  const Tolerances tol = Tolerances::for_order(2);
  const SvdSystem sys = decompose(3.0 * e0(), tol);
  REQUIRE(sys.size() == 1);
  CHECK(sys.zetas[0] == doctest::Approx(3.0));
  CHECK((sys.factors[0] - e0()).norm() < 1e-12);
}

TEST_CASE("two-block decomposition with distinct singular values") {
  // eigenvalues of -A^2 are {25, 25, 4, 4}
  const Tolerances tol = Tolerances::for_order(4);
  const Mat a = block_diag({2.0 * e0(), 5.0 * e0()});
  const SvdSystem sys = decompose(a, tol);
  REQUIRE(sys.size() == 2);
  CHECK(sys.zetas[0] == doctest::Approx(5.0));
  CHECK(sys.zetas[1] == doctest::Approx(2.0));
  CHECK((sys.factors[0] - block_diag({Mat::Zero(2, 2), e0()})).norm() < 1e-12);
  CHECK((sys.factors[1] - block_diag({e0(), Mat::Zero(2, 2)})).norm() < 1e-12);
  check_axioms(sys, a, tol);
}

TEST_CASE("repeated singular value collapses to one factor") {
  const Tolerances tol = Tolerances::for_order(4);
  const Mat a = block_diag({e0(), e0()});
  const SvdSystem sys = decompose(a, tol);
  REQUIRE(sys.size() == 1);
  CHECK(sys.zetas[0] == doctest::Approx(1.0));
  CHECK((sys.factors[0] - a).norm() < 1e-12);
}

TEST_CASE("zero and non-skew inputs are rejected") {
  const Tolerances tol = Tolerances::for_order(3);
  CHECK_THROWS_AS(decompose(Mat::Zero(3, 3), tol), DomainError);
  CHECK_THROWS_AS(decompose(identity(3), tol), PreconditionError);
}

TEST_CASE("axioms and round trip on random skew matrices") {
  Rng rng(707);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform() * 9);
    const Tolerances tol = Tolerances::for_order(n);
    const Mat a = random_skew(n, rng, 1.0 + 20.0 * rng.uniform());
    const SvdSystem sys = decompose(a, tol);
    check_axioms(sys, a, tol);
  }
}

TEST_CASE("decomposition commutes with orthogonal conjugation") {
  Rng rng(808);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform() * 7);
    const Tolerances tol = Tolerances::for_order(n);
    const Mat a = random_skew(n, rng, 5.0);
    const Mat q = random_orthogonal(n, rng);
    const SvdSystem sys = decompose(a, tol);
    const SvdSystem conj = decompose(q * a * q.transpose(), tol);
    REQUIRE(sys.size() == conj.size());
    for (int j = 0; j < sys.size(); ++j) {
      CHECK(sys.zetas[j] == doctest::Approx(conj.zetas[j]).epsilon(1e-10));
      CHECK((q * sys.factors[j] * q.transpose() - conj.factors[j]).norm() <
            1e-9);
    }
  }
}

TEST_CASE("rank and trace summary") {
  const Tolerances tol2 = Tolerances::for_order(2);
  const Tolerances tol4 = Tolerances::for_order(4);
  EigSummary s = eig_summary(decompose(3.0 * e0(), tol2));
  CHECK(s.rank == 2);
  CHECK(s.tr_sq == doctest::Approx(-18.0));

  // -2 * (4 + 25)
  s = eig_summary(decompose(block_diag({2.0 * e0(), 5.0 * e0()}), tol4));
  CHECK(s.rank == 4);
  CHECK(s.tr_sq == doctest::Approx(-58.0));

  s = eig_summary(decompose(block_diag({e0(), e0()}), tol4));
  CHECK(s.rank == 4);
  CHECK(s.tr_sq == doctest::Approx(-4.0));
}

TEST_CASE("trace summary matches the direct trace of the square") {
  Rng rng(909);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform() * 9);
    const Tolerances tol = Tolerances::for_order(n);
    const Mat a = random_skew(n, rng, 8.0);
    const EigSummary s = eig_summary(decompose(a, tol));
    CHECK(s.tr_sq == doctest::Approx((a * a).trace()).epsilon(1e-9));
  }
}

TEST_CASE("closed-form exponential on fixed systems") {
  const Tolerances tol = Tolerances::for_order(2);
  Mat quarter(2, 2);
  quarter << 0, 1, -1, 0;
  CHECK((rodrigues_exp(decompose(kPi / 2 * e0(), tol)) - quarter).norm() <
        1e-14);
  CHECK((rodrigues_exp(decompose(kPi * e0(), tol)) + identity(2)).norm() <
        1e-14);

  const Mat a = block_diag({2.0 * e0(), 5.0 * e0()});
  const SvdSystem sys = decompose(a, Tolerances::for_order(4));
  CHECK((rodrigues_exp(sys) - exp_oracle(a)).norm() < 1e-10);
}

TEST_CASE("closed-form exponential equals the series oracle") {
  Rng rng(111);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform() * 9);
    const Tolerances tol = Tolerances::for_order(n);
    const Mat a = random_skew(n, rng, 30.0 * rng.uniform());
    if (a.norm() < 1e-6) continue;
    const SvdSystem sys = decompose(a, tol);
    const Mat closed = rodrigues_exp(sys);
    CHECK(rel_err(closed, exp_oracle(a)) <= 1e-9);
    CHECK(is_orthogonal(closed, tol));
    CHECK(determinant(closed) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("symmetric and skew parts of the exponential") {
  const Tolerances tol = Tolerances::for_order(2);
  auto [sym, skew] = sym_skew_parts(decompose(kPi / 2 * e0(), tol));
  CHECK(sym.norm() < 1e-14);  // I + (1 - cos)(e0^2) vanishes at a quarter turn
  CHECK((skew - e0()).norm() < 1e-14);

  std::tie(sym, skew) = sym_skew_parts(decompose(kPi * e0(), tol));
  CHECK((sym + identity(2)).norm() < 1e-14);
  CHECK(skew.norm() < 1e-14);

  Rng rng(222);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform() * 7);
    const Mat a = random_skew(n, rng, 6.0);
    const SvdSystem sys = decompose(a, Tolerances::for_order(n));
    const auto parts = sym_skew_parts(sys);
    CHECK(is_symmetric(parts.first, Tolerances::for_order(n)));
    CHECK(is_skew(parts.second, Tolerances::for_order(n)));
    CHECK((parts.first + parts.second - rodrigues_exp(sys)).norm() < 1e-12);
    CHECK((parts.first + parts.second - exp_oracle(a)).norm() < 1e-9);
  }
}

}  // TEST_SUITE
