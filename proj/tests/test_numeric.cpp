// Copyright 2026 The effectalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "effectalg/hilbert.hpp"
#include "effectalg/numeric.hpp"
#include "effectalg/rng.hpp"
#include "fixtures.hpp"

using namespace effectalg;
using namespace fixtures;
using Catch::Matchers::WithinAbs;

TEST_CASE("eigh of a diagonal matrix sorts eigenvalues ascending") {
  const auto e = hermitian_eigh(ComplexMatrix::diagonal(std::vector<double>{0.7, 0.1, 0.4}));
  REQUIRE(e.eigenvalues.size() == 3);
  CHECK_THAT(e.eigenvalues[0], WithinAbs(0.1, 1e-15));
  CHECK_THAT(e.eigenvalues[1], WithinAbs(0.4, 1e-15));
  CHECK_THAT(e.eigenvalues[2], WithinAbs(0.7, 1e-15));
  CHECK(std::abs(e.vector(0)[1] - Complex(1.0)) < 1e-15);
}

TEST_CASE("eigh of Pplus gives eigenvalues 0 and 1 with the expected vectors") {
  const auto e = hermitian_eigh(Pplus().matrix());
  CHECK_THAT(e.eigenvalues[0], WithinAbs(0.0, 1e-14));
  CHECK_THAT(e.eigenvalues[1], WithinAbs(1.0, 1e-14));
  // First largest-magnitude component is real and positive.
  const auto v1 = e.vector(1);
  CHECK_THAT(v1[0].real(), WithinAbs(kInvSqrt2, 1e-14));
  CHECK_THAT(v1[1].real(), WithinAbs(kInvSqrt2, 1e-14));
  const auto v0 = e.vector(0);
  CHECK_THAT(v0[0].real(), WithinAbs(kInvSqrt2, 1e-14));
  CHECK_THAT(v0[1].real(), WithinAbs(-kInvSqrt2, 1e-14));
}

TEST_CASE("eigh reconstructs random Hermitian matrices with orthonormal vectors") {
  Rng rng(11, 3);
  for (std::size_t d : {1u, 2u, 3u, 5u, 8u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const ComplexMatrix h = detail::gaussian_matrix(d, rng).hermitian_part();
      const auto e = hermitian_eigh(h);
      CHECK(dist(e.reconstruct(), h) <= 1e-12 * std::max(1.0, h.frobenius_norm()));
      CHECK(is_unitary(e.eigenvectors, 1e-12));
      CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    }
  }
}

TEST_CASE("degenerate eigenspaces get a basis that depends only on the subspace") {
  Rng rng(5, 5);
  const ComplexMatrix u = detail::random_unitary(4, rng);
  const std::vector<double> values{0.2, 0.2, 0.2, 0.9};
  // Rotating inside the degenerate block describes the same operator.
  const ComplexMatrix w =
      detail::block_diagonal(detail::random_unitary(3, rng), ComplexMatrix::identity(1));
  const ComplexMatrix a = detail::conjugate_diagonal(u, values);
  const ComplexMatrix b = detail::conjugate_diagonal(u * w, values);
  REQUIRE(dist(a, b) < 1e-13);
  const auto e1 = hermitian_eigh(a);
  const auto e2 = hermitian_eigh(b);
  CHECK(dist(e1.eigenvectors, e2.eigenvectors) < 1e-10);
  const auto ident = hermitian_eigh(ComplexMatrix::identity(3));
  CHECK(dist(ident.eigenvectors, ComplexMatrix::identity(3)) < 1e-15);
}

TEST_CASE("eigh rejects non-Hermitian and non-finite input") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  try {
    hermitian_eigh(m);
    FAIL("expected NotHermitian");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::NotHermitian);
  }
  m(1, 0) = std::nan("");
  CHECK_THROWS_AS(hermitian_eigh(m), Error);
}

TEST_CASE("psd_sqrt squares back and vanishes on null spaces") {
  Rng rng(2, 9);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = detail::random_effect_matrix(4, rng);
    const ComplexMatrix r = psd_sqrt(a);
    CHECK(dist(r * r, a) < 1e-12);
  }
  const ComplexMatrix p = Pplus().matrix();
  CHECK(dist(psd_sqrt(p), p) < 1e-14);
  ComplexMatrix neg = ComplexMatrix::diagonal(std::vector<double>{-0.1, 0.5});
  try {
    psd_sqrt(neg);
    FAIL("expected NegativeEigenvalue");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::NegativeEigenvalue);
  }
}

TEST_CASE("projector requires a unit vector") {
  CHECK(dist(projector(ket_plus()), mat({{0.5, 0.5}, {0.5, 0.5}})) < 1e-15);
  try {
    projector(ComplexVector{1.0, 1.0});
    FAIL("expected NotUnitVector");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::NotUnitVector);
  }
}

TEST_CASE("solve_linear with partial pivoting") {
  // [[0, 1], [2, 1]] x = [1, 3] -> x = (1, 1)
  const auto x = solve_linear({0.0, 1.0, 2.0, 1.0}, {1.0, 3.0});
  CHECK_THAT(x[0], WithinAbs(1.0, 1e-15));
  CHECK_THAT(x[1], WithinAbs(1.0, 1e-15));
}

TEST_CASE("approx_eq is relative to max(1, norm)") {
  const ComplexMatrix a = 100.0 * ComplexMatrix::identity(2);
  CHECK(approx_eq(a, a + 1e-8 * ComplexMatrix::identity(2), 1e-9));
  CHECK_FALSE(approx_eq(ComplexMatrix::identity(2), 2.0 * ComplexMatrix::identity(2), 1e-9));
}

TEST_CASE("tolerance config validation") {
  ToleranceConfig t;
  CHECK_NOTHROW(t.validate());
  t.eq_tol = -1.0;
  CHECK_THROWS_AS(t.validate(), Error);
}

TEST_CASE("rng streams are deterministic and well spread") {
  Rng a(42, 7), b(42, 7), c(42, 8);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  CHECK(mix(1, 2) == mix(1, 2));
  CHECK(mix(1, 2) != mix(2, 1));
  CHECK(hash_name("E1-commutativity") != hash_name("E2-associativity"));

  Rng r(3, 3);
  double sum = 0.0, sum2 = 0.0, usum = 0.0;
  const int n = 20000;
  std::set<std::uint64_t> seen;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    usum += u;
    const double z = r.normal();
    sum += z;
    sum2 += z * z;
    seen.insert(r.below(10));
  }
  CHECK_THAT(usum / n, WithinAbs(0.5, 0.01));
  CHECK_THAT(sum / n, WithinAbs(0.0, 0.03));
  CHECK_THAT(sum2 / n, WithinAbs(1.0, 0.05));
  CHECK(seen.size() == 10);
  CHECK(*seen.rbegin() == 9);
}

TEST_CASE("rng split and counters") {
  Rng r(9);
  r.next_u64();
  CHECK(r.counter() == 1);
  Rng s = r.split(4);
  CHECK(s.key() == mix(r.key(), 4));
  CHECK(s.counter() == 0);
}

TEST_CASE("numeric kernel examples") {
  const auto id = hermitian_eigh(ComplexMatrix::identity(2));
  CHECK(id.eigenvalues == std::vector<double>{1.0, 1.0});
  CHECK(dist(id.eigenvectors, ComplexMatrix::identity(2)) == 0.0);

  const auto x = hermitian_eigh(mat({{0.0, 1.0}, {1.0, 0.0}}));
  CHECK_THAT(x.eigenvalues[0], WithinAbs(-1.0, 1e-15));
  CHECK_THAT(x.eigenvalues[1], WithinAbs(1.0, 1e-15));
  CHECK(std::abs(x.vector(0)[0] - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(x.vector(0)[1] - Complex(-kInvSqrt2)) < 1e-15);
  CHECK(std::abs(x.vector(1)[1] - Complex(kInvSqrt2)) < 1e-15);

  CHECK(dist(psd_sqrt(ComplexMatrix::identity(2)), ComplexMatrix::identity(2)) == 0.0);
  CHECK(dist(psd_sqrt(ComplexMatrix::diagonal(std::vector<double>{0.25, 1.0})),
             ComplexMatrix::diagonal(std::vector<double>{0.5, 1.0})) < 1e-15);

  const ComplexMatrix a = Pplus().matrix();
  CHECK(approx_eq(a, a, 1e-9));
  CHECK(approx_eq(ComplexMatrix(2), ComplexMatrix::diagonal(std::vector<double>{0.0, 1e-12}), 1e-9));
  CHECK_FALSE(approx_eq(P0().matrix(), a, 1e-9));
  CHECK_THAT(dist(P0().matrix(), a), WithinAbs(1.0, 1e-15));
  CHECK_THAT(hermitian_eigh(P0().matrix() - a).eigenvalues[1], WithinAbs(kInvSqrt2, 1e-15));

  CHECK(dist(projector(ket0()), ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0})) == 0.0);
  const ComplexVector yi{kInvSqrt2, Complex(0.0, kInvSqrt2)};
  CHECK(dist(projector(yi), mat({{0.5, Complex(0.0, -0.5)}, {Complex(0.0, 0.5), 0.5}})) < 1e-15);
}
