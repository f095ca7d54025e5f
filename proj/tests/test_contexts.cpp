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

#include <numbers>

#include "effectalg/contexts.hpp"
#include "fixtures.hpp"

using namespace effectalg;
using namespace fixtures;
using Catch::Matchers::WithinAbs;

namespace {

Context<HilbertEffect> standard_context(std::size_t d) {
  Context<HilbertEffect> c;
  for (std::size_t k = 0; k < d; ++k)
    c.atoms.push_back(HilbertEffect::projector(standard_basis_vector(d, k)));
  return c;
}

const Context<HilbertEffect> kPlusMinus{{Pplus(), Pminus()}};

} // namespace

TEST_CASE("context recognition") {
  const HilbertModel m3(3), m2(2);
  CHECK(is_context(m3, standard_context(3).atoms, 1e-8));
  CHECK_FALSE(is_context(m2, {P0(), Pplus()}, 1e-8));
  CHECK_FALSE(is_context(m2, {m2.unit()}, 1e-8));
  const ClassicalModel c1(1);
  CHECK(is_context(c1, {c1.unit()}, 1e-8));
  CHECK(is_context(std::vector<Effect>{Effect(P0()), Effect(P1())}, 1e-8));
}

TEST_CASE("spectral resolution") {
  const HilbertModel m3(3), m2(2);
  const auto r = spectral_resolution(m3, diag_effect({0.7, 0.7, 0.1}));
  REQUIRE(r.coefficients.size() == 3);
  CHECK_THAT(r.coefficients[0], WithinAbs(0.7, 1e-14));
  CHECK_THAT(r.coefficients[1], WithinAbs(0.7, 1e-14));
  CHECK_THAT(r.coefficients[2], WithinAbs(0.1, 1e-14));
  CHECK(contexts_equal(m3, r.context, standard_context(3)));
  CHECK(is_context(m3, r.context.atoms, 1e-8));

  const auto p = spectral_resolution(m2, Pplus());
  CHECK_THAT(p.coefficients[0], WithinAbs(1.0, 1e-14));
  CHECK_THAT(p.coefficients[1], WithinAbs(0.0, 1e-14));
  CHECK(m2.distance(p.context[0], Pplus()) < 1e-14);
  CHECK(m2.distance(p.context[1], Pminus()) < 1e-14);

  const ClassicalModel c(2);
  const auto q = spectral_resolution(c, FuzzyEvent({0.3, 0.9}));
  CHECK(q.context.atoms == unique_context(2));
  CHECK(q.coefficients == std::vector<double>{0.3, 0.9});

  Rng rng(1, 1);
  const HilbertModel m4(4);
  for (int i = 0; i < 50; ++i) {
    const auto b = m4.random_effect(rng);
    const auto res = spectral_resolution(m4, b);
    CHECK(is_context(m4, res.context.atoms, 1e-8));
    CHECK(m4.ambient_norm(ambient_combination(m4, res.coefficients, res.context.atoms) -
                          b.matrix()) <= 1e-8);
  }
}

TEST_CASE("transition probabilities") {
  const HilbertModel m(2);
  CHECK_THAT(transition_probability(m, Pplus(), Pplus()), WithinAbs(1.0, 1e-15));
  CHECK_THAT(transition_probability(m, P0(), P1()), WithinAbs(0.0, 1e-15));
  CHECK_THAT(transition_probability(m, P0(), Pplus()), WithinAbs(0.5, 1e-15));
  CHECK_THROWS_AS(transition_probability(m, m.unit(), P0()), Error);
  Rng rng(2, 2);
  const HilbertModel m4(4);
  for (int i = 0; i < 500; ++i) {
    const auto a = m4.random_atom(rng), b = m4.random_atom(rng);
    CHECK(std::abs(transition_probability(m4, a, b) - transition_probability(m4, b, a)) <= 1e-10);
  }
}

TEST_CASE("comparability maps") {
  const auto self = comparability_map(standard_context(2), standard_context(2));
  CHECK(dist(self.unitary, ComplexMatrix::identity(2)) < 1e-15);
  const auto h = comparability_map(standard_context(2), kPlusMinus).unitary;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK_THAT(std::norm(h(i, j)), WithinAbs(0.5, 1e-15));
  CHECK(dist(h * h.adjoint(), ComplexMatrix::identity(2)) < 1e-15);
  CHECK(dist(comparability_map(kPlusMinus, standard_context(2)).unitary, h.adjoint()) < 1e-15);

  Rng rng(3, 3);
  const HilbertModel m(3);
  for (int i = 0; i < 50; ++i) {
    const Context<HilbertEffect> a{m.random_context(rng)}, b{m.random_context(rng)},
        c{m.random_context(rng)};
    CHECK(comparability_residual(a, b, c) <= 1e-10);
  }
  const Context<FuzzyEvent> fwd{unique_context(3)};
  const Context<FuzzyEvent> rev{{fwd[2], fwd[0], fwd[1]}};
  const ComplexMatrix perm = comparability_map(fwd, rev);
  CHECK(perm(1, 0) == Complex(1.0));
  CHECK(perm(2, 1) == Complex(1.0));
  CHECK(perm(0, 2) == Complex(1.0));
}

TEST_CASE("completeness witness") {
  CHECK(completeness_witness(ket0()) == standard_context(2));
  const auto w = completeness_witness(ket_plus());
  const HilbertModel m(2);
  CHECK(m.distance(w[0], Pplus()) < 1e-15);
  CHECK(m.distance(w[1], Pminus()) < 1e-15);
  CHECK_THAT(m.eval(HilbertState::vector(ket_plus()), w[0]), WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(completeness_witness({1.0, 1.0}), Error);
}

TEST_CASE("classification") {
  for (std::size_t n = 2; n <= 8; ++n)
    CHECK(classify_algebra(ClassicalModel(n), 50, 1).kind == AlgebraClass::Classical);
  for (std::size_t d = 2; d <= 4; ++d)
    CHECK(classify_algebra(HilbertModel(d), 200, 1).kind == AlgebraClass::Hilbertian);
  CHECK(classify_algebra(ClassicalModel(1), 10, 1).kind == AlgebraClass::Trivial);
  CHECK(classify_algebra(HilbertModel(1), 10, 1).kind == AlgebraClass::Trivial);
  CHECK(to_string(AlgebraClass::Hilbertian) == "Hilbertian");
}

TEST_CASE("single-context representation") {
  const HilbertModel m(2);
  const auto z = standard_context(2);
  CHECK(dist(rep_J_single_context(m, P1(), z), ComplexMatrix::diagonal(std::vector<double>{0, 1})) <
        1e-15);
  const auto jp = rep_J_single_context(m, Pplus(), z);
  const auto jm = rep_J_single_context(m, Pminus(), z);
  CHECK(dist(jp, ComplexMatrix::diagonal(std::vector<double>{0.5, 0.5})) < 1e-15);
  CHECK(dist(jp, jm) < 1e-15);
  CHECK(dist(rep_J_single_context(m, m.unit(), z), ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("full representation") {
  const HilbertModel m(3);
  Rng rng(4, 4);
  const Context<HilbertEffect> ref{m.random_context(rng)};
  CHECK(dist(rep_J_full(m.unit(), ref).matrix(), ComplexMatrix::identity(3)) < 1e-12);
  for (int i = 0; i < 50; ++i) {
    const auto b = m.random_effect(rng);
    CHECK(m.distance(rep_J_full_inverse(rep_J_full(b, ref), ref), b) <= 1e-8);
  }
  const auto b = m.random_effect(rng);
  const auto res = spectral_resolution(m, b);
  const auto j = rep_J_full(b, res.context);
  CHECK(dist(j.matrix(), ComplexMatrix::diagonal(res.coefficients)) < 1e-12);
  CHECK_THROWS_AS(rep_J_full(b, standard_context(2)), Error);
}

TEST_CASE("third context witness") {
  const HilbertModel m(2);
  const auto w = third_context_witness(standard_context(2), kPlusMinus);
  CHECK(dist(w.c.matrix(), mat({{0.75, 0.25}, {0.25, 0.25}})) < 1e-15);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK_THAT(w.coefficients[0], WithinAbs((1 + s) / 2, 1e-10));
  CHECK_THAT(w.coefficients[1], WithinAbs((1 - s) / 2, 1e-10));
  CHECK(w.distinct());
  try {
    third_context_witness(kPlusMinus, kPlusMinus);
    FAIL("expected ContextsNotDisjoint");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::ContextsNotDisjoint);
  }
  Rng rng(5, 5);
  const HilbertModel m3(3);
  for (int i = 0; i < 100; ++i) {
    const Context<HilbertEffect> a{m3.random_context(rng)}, b{m3.random_context(rng)};
    CHECK(third_context_witness(a, b).distinct());
  }
}

TEST_CASE("context dynamics") {
  const auto z = standard_context(2);
  CHECK(dist(dynamics_unitary(z, {0.3, 1.1}, 0.0), ComplexMatrix::identity(2)) == 0.0);
  CHECK(dist(dynamics_unitary(z, {0.0, std::numbers::pi}, 1.0),
             ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0})) < 1e-15);
  const auto u1 = dynamics_unitary(z, {0.3, 1.1}, 1.0);
  const auto u04 = dynamics_unitary(z, {0.3, 1.1}, 0.4);
  const auto u06 = dynamics_unitary(z, {0.3, 1.1}, 0.6);
  CHECK(dist(u1, u04 * u06) <= 1e-12);
  CHECK_THROWS_AS(dynamics_unitary(z, {0.3}, 1.0), Error);

  // Ambient form conjugates the context-coordinate form by the atom basis.
  Rng rng(6, 6);
  const HilbertModel m(3);
  const Context<HilbertEffect> a{m.random_context(rng)};
  const std::vector<double> theta{0.2, -1.0, 2.5};
  const ComplexMatrix v = context_basis(a);
  CHECK(dist(dynamics_unitary_ambient(a, theta, 0.7),
             v * dynamics_unitary(a, theta, 0.7) * v.adjoint()) < 1e-12);
}
