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

#include "effectalg/classical.hpp"
#include "effectalg/hilbert.hpp"
#include "effectalg/sequential.hpp"
#include "fixtures.hpp"

using namespace effectalg;
using namespace fixtures;
using Catch::Matchers::WithinAbs;

namespace {

Errc code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

HilbertState maximally_mixed(std::size_t d) {
  return HilbertState::density((1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d));
}

} // namespace

TEST_CASE("sequential product basics") {
  const HilbertModel m(3);
  Rng rng(1, 1);
  for (int i = 0; i < 20; ++i) {
    const auto a = m.random_effect(rng), b = m.random_effect(rng);
    CHECK(m.distance(m.seq_product(m.unit(), a), a) < 1e-13);
    const double lam = rng.uniform();
    const auto lhs = m.seq_product(m.scale(lam, a), b);
    CHECK(m.distance(lhs, m.scale(lam, m.seq_product(a, b))) < 1e-12);
    CHECK(m.distance(lhs, m.seq_product(a, m.scale(lam, b))) < 1e-12);
  }
}

TEST_CASE("compatibility") {
  const HilbertModel m(2);
  CHECK_FALSE(compatible(m, P0(), Pplus()));
  CHECK(compatible(m, P0(), P1()));
  const ClassicalModel c(4);
  Rng rng(2, 2);
  for (int i = 0; i < 50; ++i)
    CHECK(compatible(c, c.random_effect(rng), c.random_effect(rng)));
  for (int i = 0; i < 50; ++i) {
    const auto a = m.random_atom(rng), b = m.random_atom(rng);
    const bool zero = m.norm(m.seq_product(a, b)) < 1e-9;
    CHECK(compatible(m, a, b, 1e-9) == (zero || m.distance(a, b) < 1e-9));
  }
}

TEST_CASE("function of an effect") {
  const HilbertModel m(2);
  const Polynomial sq{{1.0, -2.0, 1.0}};
  CHECK(sq(0.3) == Catch::Approx(0.49));
  const auto r = function_of_effect(m, diag_effect({0.3, 0.9}), sq);
  CHECK(dist(r.matrix(), ComplexMatrix::diagonal(std::vector<double>{0.49, 0.01})) < 1e-15);

  Rng rng(3, 3);
  const auto b = m.random_effect(rng);
  const auto bc = m.complement(b);
  CHECK(m.distance(function_of_effect(m, b, sq), m.seq_product(bc, bc)) < 1e-13);

  const auto a = diag_effect({0.9, 0.2});
  CHECK(code_of([&] { function_of_effect(m, a, Polynomial{{0.0, 2.0}}); }) ==
        Errc::ResultNotEffect);
}

TEST_CASE("Vandermonde recovery") {
  SECTION("n = 2 closed form") {
    const HilbertModel m(2);
    Rng rng(4, 4);
    for (int i = 0; i < 20; ++i) {
      const auto ctx = m.random_context(rng);
      const double l1 = rng.uniform(0.0, 0.45), l2 = rng.uniform(0.55, 1.0);
      const auto a = m.make_effect(ambient_combination(m, {l1, l2}, ctx));
      const auto rec = recover_atoms_vandermonde(m, a, {l1, l2}, ctx);
      REQUIRE(rec.polynomials.size() == 2);
      const ComplexMatrix closed = (1.0 / (l2 - l1)) * (a.matrix() - l1 * ComplexMatrix::identity(2));
      CHECK(m.ambient_norm(polynomial_ambient(m, a, rec.polynomials[1]) - closed) <= 1e-10);
      CHECK(m.distance(function_of_effect(m, a, rec.polynomials[0]), ctx[0]) <= 1e-6);
    }
  }
  SECTION("0.25 I + 0.5 P") {
    const HilbertModel m(2);
    const auto a = m.make_effect(0.25 * ComplexMatrix::identity(2) + 0.5 * Pplus().matrix());
    const auto rec = recover_atoms_vandermonde(m, a, {0.75, 0.25}, {Pplus(), Pminus()});
    CHECK(m.distance(function_of_effect(m, a, rec.polynomials[0]), Pplus()) < 1e-12);
    CHECK(m.distance(function_of_effect(m, a, rec.polynomials[1]), Pminus()) < 1e-12);
  }
  SECTION("diagonal d = 3") {
    const HilbertModel m(3);
    std::vector<HilbertEffect> ctx;
    for (std::size_t k = 0; k < 3; ++k)
      ctx.push_back(HilbertEffect::projector(standard_basis_vector(3, k)));
    const auto a = diag_effect({0.7, 0.4, 0.1});
    const auto rec = recover_atoms_vandermonde(m, a, {0.7, 0.4, 0.1}, ctx);
    REQUIRE(rec.polynomials.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(rec.polynomials[k].degree() == 2);
      CHECK(m.distance(function_of_effect(m, a, rec.polynomials[k]), ctx[k]) <= 1e-8);
    }
  }
  SECTION("errors and merging") {
    const HilbertModel m(3);
    std::vector<HilbertEffect> ctx;
    for (std::size_t k = 0; k < 3; ++k)
      ctx.push_back(HilbertEffect::projector(standard_basis_vector(3, k)));
    const auto a = diag_effect({0.7, 0.7, 0.1});
    CHECK(code_of([&] { recover_atoms_vandermonde(m, a, {0.7, 0.7, 0.1}, ctx); }) ==
          Errc::DuplicateCoefficients);
    const auto merged = recover_atoms_vandermonde(m, a, {0.7, 0.7, 0.1}, ctx, true);
    REQUIRE(merged.clusters.size() == 2);
    CHECK(merged.clusters[0] == std::vector<std::size_t>{0, 1});
    CHECK(m.distance(function_of_effect(m, a, merged.polynomials[0]),
                     diag_effect({1.0, 1.0, 0.0})) < 1e-12);
    CHECK(code_of([&] { recover_atoms_vandermonde(m, a, {0.7, 0.4, 0.1}, ctx); }) ==
          Errc::InconsistentDecomposition);
    CHECK(code_of([&] { recover_atoms_vandermonde(m, a, {0.7, 0.4}, ctx); }) ==
          Errc::LengthMismatch);
  }
}

TEST_CASE("conditional probability") {
  const HilbertModel m(2);
  CHECK_THAT(conditional_probability(m, maximally_mixed(2), P0(), Pplus()), WithinAbs(0.5, 1e-15));
  CHECK(code_of([&] {
          conditional_probability(m, HilbertState::vector(ket1()), P0(), Pplus());
        }) == Errc::ConditioningOnNull);
  Rng rng(5, 5);
  for (int i = 0; i < 50; ++i) {
    const auto s = m.random_state(rng);
    const auto a = m.random_sharp(rng);
    if (m.eval(s, a) > 1e-6)
      CHECK_THAT(conditional_probability(m, s, a, a), WithinAbs(1.0, 1e-10));
    const auto atom = m.random_atom(rng), b = m.random_effect(rng);
    if (m.eval(s, atom) > 1e-6)
      CHECK_THAT(conditional_probability(m, s, atom, b), WithinAbs(m.hat_eval(atom, b), 1e-10));
  }
}

TEST_CASE("Bayes and total probability") {
  const HilbertModel m(2);
  const std::vector<HilbertEffect> z{P0(), P1()};
  const auto bayes = bayes_posterior(m, HilbertState::vector(ket0()), z, Pplus(), 0);
  CHECK_THAT(bayes.direct, WithinAbs(0.5, 1e-12));
  CHECK_THAT(bayes.bayes_rhs, WithinAbs(1.0, 1e-12));
  CHECK_THAT(bayes.residual, WithinAbs(0.5, 1e-12));
  CHECK_THAT(total_probability_residual(m, HilbertState::vector(ket_plus()), z, Pplus()),
             WithinAbs(0.5, 1e-12));
  CHECK(code_of([&] { bayes_posterior(m, HilbertState::vector(ket0()), z, Pplus(), 2); }) ==
        Errc::LengthMismatch);
  CHECK(code_of([&] {
          total_probability_residual(m, HilbertState::vector(ket0()), {P0()}, Pplus());
        }) == Errc::NotMeasurement);

  // Co-diagonal instances.
  Rng rng(6, 6);
  const HilbertModel m3(3);
  for (int i = 0; i < 50; ++i) {
    const auto ctx = m3.random_context(rng);
    std::vector<double> w{rng.uniform(), rng.uniform(), rng.uniform()};
    const auto b = m3.make_effect(ambient_combination(m3, w, ctx));
    const auto s = m3.random_state(rng);
    CHECK(total_probability_residual(m3, s, ctx, b) <= 1e-12);
    if (m3.eval(s, ctx[1]) > 1e-6 && m3.eval(s, b) > 1e-6)
      CHECK(bayes_posterior(m3, s, ctx, b, 1).residual <= 1e-12);
  }
  const ClassicalModel c(3);
  for (int i = 0; i < 50; ++i) {
    const auto s = c.random_state(rng);
    const auto meas = c.random_measurement(rng);
    const auto b = c.random_effect(rng);
    CHECK(total_probability_residual(c, s, meas, b) <= 1e-15);
    if (c.eval(s, meas[0]) > 1e-6 && c.eval(s, b) > 1e-6)
      CHECK(bayes_posterior(c, s, meas, b, 0).residual <= 1e-12);
  }
}

TEST_CASE("conditional expectation") {
  const HilbertModel m(2);
  const std::vector<HilbertEffect> z{P0(), P1()};
  const auto e = conditional_expectation(m, maximally_mixed(2), Pplus(), z);
  CHECK(dist(e.matrix(), 0.5 * ComplexMatrix::identity(2)) < 1e-15);

  const auto measurable = diag_effect({0.2, 0.9});
  CHECK(m.distance(conditional_expectation(m, maximally_mixed(2), measurable, z), measurable) <
        1e-15);
  CHECK(m.distance(conditional_expectation(m, maximally_mixed(2), m.unit(), z), m.unit()) < 1e-15);
  // Null-weight term is dropped.
  const auto pure = conditional_expectation(m, HilbertState::vector(ket0()), Pplus(), z);
  CHECK(dist(pure.matrix(), 0.5 * P0().matrix()) < 1e-15);

  const auto half = m.scale(0.5, m.unit());
  CHECK(code_of([&] { conditional_expectation(m, maximally_mixed(2), Pplus(), {half, half}); }) ==
        Errc::MeasurementNotSharp);
  CHECK(code_of([&] { conditional_expectation(m, maximally_mixed(2), Pplus(), {P0()}); }) ==
        Errc::NotMeasurement);
  const HilbertModel m3(3);
  const std::vector<HilbertEffect> split{diag_effect({1.0, 0.0, 0.0}),
                                         diag_effect({0.0, 1.0, 1.0})};
  CHECK_NOTHROW(conditional_expectation(m3, HilbertState::vector({1.0, 0.0, 0.0}),
                                        m3.unit(), split));
  CHECK(code_of([&] {
          conditional_expectation(m, maximally_mixed(2), Pplus(), z, 0.9);
        }) == Errc::AllWeightsNull);
}

TEST_CASE("measurability") {
  const HilbertModel m(2);
  const std::vector<HilbertEffect> z{P0(), P1()};
  CHECK(is_measurable(m, diag_effect({0.3, 0.6}), z));
  CHECK_FALSE(is_measurable(m, Pplus(), z));
  CHECK_THAT(measurability_residual(m, Pplus(), z), WithinAbs(kInvSqrt2, 1e-15));
}
