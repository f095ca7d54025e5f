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

/**
 * @file
 * The b1b2, representation and conditioning property lists, deliberately
 * broken model variants for fault injection, and run_suite, which picks a
 * model and a property list by name.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "effectalg/axioms.hpp"
#include "effectalg/contexts.hpp"
#include "effectalg/effect.hpp"
#include "effectalg/properties.hpp"
#include "effectalg/report.hpp"
#include "effectalg/sequential.hpp"

namespace effectalg {

template <class M>
inline constexpr bool is_hilbert_v = std::is_same_v<EffectOf<M>, HilbertEffect>;

namespace props {

/// Σ_i a_i∘y_i over a sharp measurement, with y_i spectra in [0.01, 1]; it
/// commutes with every a_i and has no eigenvalues near zero.
template <class M>
EffectOf<M> compatible_with(const M &m, const std::vector<EffectOf<M>> &measurement, Rng &r) {
  auto acc = m.ambient_zero();
  for (const auto &a : measurement) {
    const auto y = sum(m, m.scale(0.01, m.unit()), m.scale(0.99, m.random_effect(r)));
    m.axpy(acc, 1.0, m.ambient(m.seq_product(a, y)));
  }
  return m.make_effect(acc);
}

/// Σ λ_i a_i with random λ_i.
template <class M>
EffectOf<M> measurable_for(const M &m, const std::vector<EffectOf<M>> &family, Rng &r) {
  std::vector<double> lambda(family.size());
  for (auto &l : lambda)
    l = r.uniform();
  return m.make_effect(ambient_combination(m, lambda, family));
}

template <class M>
double ambient_distance(const M &m, const typename M::payload_type &x,
                        const typename M::payload_type &y) {
  auto d = x;
  m.axpy(d, -1.0, y);
  return m.ambient_norm(d);
}

template <class M>
double max_abs(const M &, const ComplexMatrix &x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      worst = std::max(worst, std::abs(x(i, j)));
  return worst;
}

} // namespace props

/// The trace identity and rank-one normalization conditions.
template <class M>
std::vector<Property<M>> b1b2_properties() {
  using namespace props;
  using E = EffectOf<M>;
  using I = Instance<M>;
  std::vector<Property<M>> ps;

  // ⟨a∘ρ, b⟩ = ρ(a∘b), with ρ read as an effect.
  add<M>(ps, "B1", TolKind::B1,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = m.random_effect(r);
           return I{}.set("a", a).set("b", b).set("rho", m.random_state(r));
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           const auto &rho = in.state("rho");
           const E a_rho = m.seq_product(a, m.state_as_effect(rho));
           return std::abs(m.pairing(a_rho, b) - m.eval(rho, m.seq_product(a, b)));
         });

  // a∘P normalized to unit trace is again a one-dimensional projection.
  add<M>(ps, "B2", TolKind::B1,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E p = m.random_atom(r);
           if (m.pairing(m.unit(), m.seq_product(a, p)) <= kProbFloor)
             return std::nullopt;
           return I{}.set("a", a).set("p", p);
         },
         [](const M &m, const I &in, double) {
           const E q = m.seq_product(in.effect("a"), in.effect("p"));
           const double t = m.pairing(m.unit(), q);
           if (t <= kProbFloor)
             return 1.0;
           auto x = m.ambient_zero();
           m.axpy(x, 1.0 / t, m.ambient(q));
           const auto spec = m.ambient_spectrum(x);
           double res = std::max(0.0, 1.0 - spec.back());
           for (std::size_t k = 0; k + 1 < spec.size(); ++k)
             res = std::max(res, std::abs(spec[k]));
           return res;
         });

  return ps;
}

/// Contexts, spectral data, representation maps, witnesses and dynamics.
template <class M>
std::vector<Property<M>> representation_properties() {
  using namespace props;
  using E = EffectOf<M>;
  using I = Instance<M>;
  using Ctx = Context<E>;
  std::vector<Property<M>> ps;

  add<M>(ps, "context-valid", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E b = m.random_effect(r);
           return I{}.set("A", m.random_context(r)).set("b", b);
         },
         [](const M &m, const I &in, double tol) {
           const auto &a = in.list("A");
           const auto res = spectral_resolution(m, in.effect("b"));
           bool bad = !is_context(m, a, tol) || !is_context(m, res.context.atoms, tol);
           // â_i(a_j) = δ_ij
           for (std::size_t i = 0; i < a.size() && !bad; ++i)
             for (std::size_t j = 0; j < a.size(); ++j)
               if (std::abs(m.hat_eval(a[i], a[j]) - (i == j ? 1.0 : 0.0)) > 1e-9)
                 bad = true;
           return flag(bad);
         });

  add<M>(ps, "spectral-reconstruction", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> { return I{}.set("b", m.random_effect(r)); },
         [](const M &m, const I &in, double) {
           const E &b = in.effect("b");
           const auto res = spectral_resolution(m, b);
           return ambient_distance(m, ambient_combination(m, res.coefficients, res.context.atoms),
                                   m.ambient(b));
         });

  add<M>(ps, "transition-symmetry", TolKind::Transition,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_atom(r);
           return I{}.set("a", a).set("c", m.random_atom(r));
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &c = in.effect("c");
           return std::abs(transition_probability(m, a, c) - transition_probability(m, c, a));
         });

  // Atoms of one context: a|b iff a = b or a∘b = 0.
  add<M>(ps, "atom-compatibility", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           const auto ctx = m.random_context(r);
           E a = ctx[0];
           E b = r.uniform() < 0.5 ? ctx[r.below(ctx.size())] : m.random_atom(r);
           return I{}.set("a", a).set("b", b);
         },
         [](const M &m, const I &in, double tol) {
           const E &a = in.effect("a"), &b = in.effect("b");
           const bool related = m.distance(a, b) <= tol || m.norm(m.seq_product(a, b)) <= tol;
           return flag(compatible(m, a, b, tol) != related);
         });

  // Contexts with all atom pairs compatible coincide.
  add<M>(ps, "compatible-contexts-equal", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           auto a = m.random_context(r);
           auto b = a;
           if (r.uniform() < 0.5)
             b = m.random_context(r);
           else
             for (std::size_t i = b.size(); i > 1; --i)
               std::swap(b[i - 1], b[r.below(i)]);
           return I{}.set("A", a).set("B", b);
         },
         [](const M &m, const I &in, double tol) {
           const auto &a = in.list("A"), &b = in.list("B");
           bool all = true;
           for (const auto &x : a)
             for (const auto &y : b)
               all = all && compatible(m, x, y, tol);
           return flag(all != contexts_equal(m, Ctx{a}, Ctx{b}, tol));
         });

  add<M>(ps, "single-context-J", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = orthogonal_to(m, a, r);
           return I{}.set("a", a).set("b", b).set("A", m.random_context(r)).set(
               "lambda", r.uniform());
         },
         [](const M &m, const I &in, double) {
           const Ctx ctx{in.list("A")};
           const E &a = in.effect("a"), &b = in.effect("b");
           const double l = in.scalar("lambda");
           auto j = [&](const E &x) { return rep_J_single_context(m, x, ctx); };
           const ComplexMatrix ja = j(a), jb = j(b);
           double res = (j(sum(m, a, b)) - ja - jb).frobenius_norm();
           res = std::max(res, (j(m.scale(l, a)) - l * ja).frobenius_norm());
           res = std::max(res, (j(m.unit()) - ComplexMatrix::identity(ctx.size())).frobenius_norm());
           for (std::size_t k = 0; k < ctx.size(); ++k) {
             ComplexMatrix e(ctx.size());
             e(k, k) = 1.0;
             res = std::max(res, (j(ctx[k]) - e).frobenius_norm());
           }
           return res;
         });

  add<M>(ps, "dynamics", TolKind::Transition,
         [](const M &m, Rng &r) -> Gen<M> {
           I in;
           in.set("A", m.random_context(r));
           for (std::size_t j = 0; j < m.dim(); ++j)
             in.set("theta" + std::to_string(j), r.uniform(-std::numbers::pi, std::numbers::pi));
           in.set("t1", r.uniform(-2.0, 2.0)).set("t2", r.uniform(-2.0, 2.0));
           return in;
         },
         [](const M &m, const I &in, double) {
           const Ctx ctx{in.list("A")};
           std::vector<double> theta(ctx.size());
           for (std::size_t j = 0; j < theta.size(); ++j)
             theta[j] = in.scalar("theta" + std::to_string(j));
           const double t1 = in.scalar("t1"), t2 = in.scalar("t2");
           auto check = [&](auto unitary) {
             const ComplexMatrix u1 = unitary(t1), u2 = unitary(t2), u12 = unitary(t1 + t2);
             const ComplexMatrix id = ComplexMatrix::identity(u1.dim());
             return std::max({(u1.adjoint() * u1 - id).frobenius_norm(),
                              (unitary(0.0) - id).frobenius_norm(),
                              (u12 - u1 * u2).frobenius_norm()});
           };
           double res = check([&](double t) { return dynamics_unitary(ctx, theta, t); });
           if constexpr (is_hilbert_v<M>)
             res = std::max(res, check([&](double t) {
                               return dynamics_unitary_ambient(ctx, theta, t);
                             }));
           (void)m;
           return res;
         });

  if constexpr (is_hilbert_v<M>) {
    auto j_of = [](const M &m, const E &b, const Ctx &ctx) {
      (void)m;
      return rep_J_full(b, ctx);
    };

    add<M>(ps, "J-roundtrip", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             E b = m.random_effect(r);
             return I{}.set("b", b).set("B", m.random_context(r));
           },
           [](const M &m, const I &in, double) {
             const Ctx ctx{in.list("B")};
             const E &b = in.effect("b");
             return m.distance(rep_J_full_inverse(rep_J_full(b, ctx), ctx), b);
           });

    add<M>(ps, "J-morphism", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             E a = m.random_effect(r);
             E b = orthogonal_to(m, a, r);
             return I{}.set("a", a).set("b", b).set("B", m.random_context(r)).set(
                 "lambda", r.uniform());
           },
           [j_of](const M &m, const I &in, double) {
             const Ctx ctx{in.list("B")};
             const E &a = in.effect("a"), &b = in.effect("b");
             const double l = in.scalar("lambda");
             const ComplexMatrix ja = j_of(m, a, ctx).matrix(), jb = j_of(m, b, ctx).matrix();
             return std::max(
                 {(j_of(m, sum(m, a, b), ctx).matrix() - ja - jb).frobenius_norm(),
                  (j_of(m, m.scale(l, a), ctx).matrix() - l * ja).frobenius_norm(),
                  (j_of(m, m.unit(), ctx).matrix() - ComplexMatrix::identity(m.dim()))
                      .frobenius_norm()});
           });

    add<M>(ps, "J-sharpness", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             E a = r.uniform() < 0.5 ? m.random_sharp(r) : m.random_unsharp(r);
             return I{}.set("a", a).set("B", m.random_context(r));
           },
           [j_of](const M &m, const I &in, double) {
             const E &a = in.effect("a");
             const E ja = j_of(m, a, Ctx{in.list("B")});
             return flag(m.is_sharp(a) != m.is_sharp(ja));
           });

    add<M>(ps, "J-commuting", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             auto [a, b] = m.random_compatible_pair(r);
             return I{}.set("a", a).set("b", b).set("B", m.random_context(r));
           },
           [j_of](const M &m, const I &in, double tol) {
             const Ctx ctx{in.list("B")};
             const E &a = in.effect("a"), &b = in.effect("b");
             const ComplexMatrix ja = j_of(m, a, ctx).matrix(), jb = j_of(m, b, ctx).matrix();
             const bool ok = compatible(m, a, b, tol) && commutes(E(ja), E(jb), tol);
             return std::max(flag(!ok),
                             (j_of(m, m.seq_product(a, b), ctx).matrix() - ja * jb).frobenius_norm());
           });

    add<M>(ps, "J-noncommuting", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             for (int attempt = 0; attempt < 32; ++attempt) {
               E a = m.random_effect(r);
               E b = m.random_effect(r);
               if ((a.matrix() * b.matrix() - b.matrix() * a.matrix()).frobenius_norm() >= 1e-4)
                 return I{}.set("a", a).set("b", b).set("B", m.random_context(r));
             }
             return std::nullopt;
           },
           [j_of](const M &m, const I &in, double tol) {
             const Ctx ctx{in.list("B")};
             const E &a = in.effect("a"), &b = in.effect("b");
             const E ja = j_of(m, a, ctx), jb = j_of(m, b, ctx);
             return flag(compatible(m, a, b, tol) || commutes(ja, jb, tol));
           });

    // The product induced on the image, J(a∘b), is the Lüders product there.
    add<M>(ps, "J-induced-product", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             E a = m.random_effect(r);
             E b = m.random_effect(r);
             return I{}.set("a", a).set("b", b).set("B", m.random_context(r));
           },
           [j_of](const M &m, const I &in, double) {
             const Ctx ctx{in.list("B")};
             const E &a = in.effect("a"), &b = in.effect("b");
             return m.distance(j_of(m, m.seq_product(a, b), ctx),
                               luders_product(j_of(m, a, ctx), j_of(m, b, ctx)));
           });

    add<M>(ps, "comparability", TolKind::Transition,
           [](const M &m, Rng &r) -> Gen<M> {
             auto a = m.random_context(r);
             auto b = m.random_context(r);
             return I{}.set("A", a).set("B", b).set("C", m.random_context(r));
           },
           [](const M &m, const I &in, double) {
             const Ctx a{in.list("A")}, b{in.list("B")}, c{in.list("C")};
             const ComplexMatrix uab = comparability_map(a, b).unitary;
             const ComplexMatrix uba = comparability_map(b, a).unitary;
             const ComplexMatrix uaa = comparability_map(a, a).unitary;
             const ComplexMatrix id = ComplexMatrix::identity(m.dim());
             return std::max({comparability_residual(a, b, c), (uaa - id).frobenius_norm(),
                              (uab - uba.adjoint()).frobenius_norm(),
                              (uab.adjoint() * uab - id).frobenius_norm()});
           });

    add<M>(ps, "completeness-witness", TolKind::Transition,
           [](const M &m, Rng &r) -> Gen<M> { return I{}.set("a", m.random_atom(r)); },
           [](const M &m, const I &in, double) {
             const E &a = in.effect("a");
             const ComplexVector phi = atom_vector(a);
             const auto ctx = completeness_witness(phi);
             if (!is_context(m, ctx.atoms, 1e-8))
               return 1.0;
             return std::max(m.distance(ctx[0], a),
                             std::abs(m.eval(HilbertState::vector(phi), ctx[0]) - 1.0));
           });

    add<M>(ps, "third-context", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             if (m.dim() < 2)
               return std::nullopt;
             auto a = m.random_context(r);
             return I{}.set("A", a).set("B", m.random_context(r));
           },
           [](const M &m, const I &in, double) {
             const auto w = third_context_witness(Ctx{in.list("A")}, Ctx{in.list("B")},
                                                  m.tolerances());
             return flag(!w.distinct() || !is_context(m, w.context.atoms, 1e-8));
           });
  } else {
    add<M>(ps, "classical-iso-J", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             E a = m.random_effect(r);
             return I{}.set("a", a).set("b", m.random_effect(r));
           },
           [](const M &m, const I &in, double) {
             const E &a = in.effect("a"), &b = in.effect("b");
             const E ja = classical_iso_J(classical_iso_J_inverse(a));
             const E jb = classical_iso_J(classical_iso_J_inverse(b));
             const E jab = classical_iso_J(classical_iso_J_inverse(m.seq_product(a, b)));
             return std::max(m.distance(ja, a), m.distance(jab, pointwise_product(ja, jb)));
           });

    add<M>(ps, "unique-context", TolKind::Axiom,
           [](const M &m, Rng &) -> Gen<M> {
             if (m.dim() > 12)
               return std::nullopt;
             return I{};
           },
           [](const M &m, const I &, double) {
             const auto all = enumerate_classical_contexts(m.dim());
             return flag(all.size() != 1 || all.front() != unique_context(m.dim()));
           });

    add<M>(ps, "commutative", TolKind::Axiom,
           [](const M &m, Rng &r) -> Gen<M> {
             E a = m.random_effect(r);
             return I{}.set("a", a).set("b", m.random_effect(r));
           },
           [](const M &m, const I &in, double) {
             const E &a = in.effect("a"), &b = in.effect("b");
             return m.distance(m.seq_product(a, b), m.seq_product(b, a));
           });
  }

  return ps;
}

/// Conditional probability, Bayes, total probability, conditional
/// expectation, measurability and atom recovery.
template <class M>
std::vector<Property<M>> conditioning_properties() {
  using namespace props;
  using E = EffectOf<M>;
  using I = Instance<M>;
  std::vector<Property<M>> ps;

  add<M>(ps, "atom-conditioning-universal", TolKind::Transition,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_atom(r);
           E b = m.random_effect(r);
           auto s = any_state(m, r);
           if (m.eval(s, a) <= 1e-6)
             return std::nullopt;
           return I{}.set("a", a).set("b", b).set("omega", s);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           return std::abs(conditional_probability(m, in.state("omega"), a, b) - m.hat_eval(a, b));
         });

  add<M>(ps, "self-conditioning", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_sharp(r);
           auto s = any_state(m, r);
           if (m.eval(s, a) <= 1e-4)
             return std::nullopt;
           return I{}.set("a", a).set("omega", s);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a");
           return std::abs(conditional_probability(m, in.state("omega"), a, a) - 1.0);
         });

  add<M>(ps, "cond-prob-product", TolKind::Conditioning,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = m.random_effect(r);
           auto s = any_state(m, r);
           if (m.eval(s, a) <= kProbFloor)
             return std::nullopt;
           return I{}.set("a", a).set("b", b).set("omega", s);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           const auto &s = in.state("omega");
           return std::abs(m.eval(s, m.seq_product(a, b)) -
                           m.eval(s, a) * conditional_probability(m, s, a, b));
         });

  add<M>(ps, "total-probability", TolKind::Exact,
         [](const M &m, Rng &r) -> Gen<M> {
           auto meas = m.random_sharp_measurement(r);
           E b = compatible_with(m, meas, r);
           return I{}.set("m", meas).set("b", b).set("omega", any_state(m, r));
         },
         [](const M &m, const I &in, double) {
           return total_probability_residual(m, in.state("omega"), in.list("m"), in.effect("b"));
         });

  add<M>(ps, "bayes-compatible", TolKind::Exact,
         [](const M &m, Rng &r) -> Gen<M> {
           auto meas = m.random_sharp_measurement(r);
           E b = compatible_with(m, meas, r);
           auto s = any_state(m, r);
           const std::size_t i = r.below(meas.size());
           if (m.eval(s, b) <= 1e-2 || m.eval(s, meas[i]) <= 1e-2)
             return std::nullopt;
           return I{}.set("m", meas).set("b", b).set("omega", s).set("i", static_cast<double>(i));
         },
         [](const M &m, const I &in, double) {
           const auto i = static_cast<std::size_t>(in.scalar("i"));
           return bayes_posterior(m, in.state("omega"), in.list("m"), in.effect("b"), i).residual;
         });

  // Total probability holding on a spanning family of states forces b|a_i.
  add<M>(ps, "total-probability-converse", TolKind::Exact,
         [](const M &m, Rng &r) -> Gen<M> {
           auto meas = m.random_sharp_measurement(r);
           E b = r.uniform() < 0.5 ? compatible_with(m, meas, r) : m.random_effect(r);
           return I{}.set("m", meas).set("b", b);
         },
         [](const M &m, const I &in, double tol) {
           const auto &meas = in.list("m");
           const E &b = in.effect("b");
           auto states = m.spanning_states();
           for (const auto &a : meas)
             for (const auto &atom : spectral_resolution(m, a).context.atoms)
               states.push_back(m.hat_state(atom));
           double worst = 0.0;
           for (const auto &s : states)
             worst = std::max(worst, total_probability_residual(m, s, meas, b));
           bool all = true;
           for (const auto &a : meas)
             all = all && compatible(m, b, a, 1e-8);
           return flag(all != (worst <= tol));
         });

  auto sharp_instance = [](const M &m, Rng &r) {
    auto meas = m.random_sharp_measurement(r);
    return I{}.set("m", meas).set("omega", m.random_state(r)).set("b", m.random_effect(r));
  };

  add<M>(ps, "E-defining", TolKind::Conditioning,
         [sharp_instance](const M &m, Rng &r) -> Gen<M> { return sharp_instance(m, r); },
         [](const M &m, const I &in, double) {
           const auto &meas = in.list("m");
           const auto &s = in.state("omega");
           const E &b = in.effect("b");
           const E e = conditional_expectation(m, s, b, meas);
           double worst = 0.0;
           for (const auto &a : meas)
             if (m.eval(s, a) > kProbFloor)
               worst = std::max(worst, std::abs(m.eval(s, m.seq_product(a, e)) -
                                                m.eval(s, m.seq_product(a, b))));
           return worst;
         });

  add<M>(ps, "E-measurable-fixed", TolKind::Conditioning,
         [](const M &m, Rng &r) -> Gen<M> {
           auto meas = m.random_sharp_measurement(r);
           E c = measurable_for(m, meas, r);
           return I{}.set("m", meas).set("omega", m.random_state(r)).set("c", c);
         },
         [](const M &m, const I &in, double) {
           const E &c = in.effect("c");
           return m.distance(conditional_expectation(m, in.state("omega"), c, in.list("m")), c);
         });

  add<M>(ps, "E-unit", TolKind::Conditioning,
         [](const M &m, Rng &r) -> Gen<M> {
           auto meas = m.random_sharp_measurement(r);
           return I{}.set("m", meas).set("omega", m.random_state(r));
         },
         [](const M &m, const I &in, double) {
           return m.distance(conditional_expectation(m, in.state("omega"), m.unit(), in.list("m")),
                             m.unit());
         });

  add<M>(ps, "E-additive", TolKind::Conditioning,
         [sharp_instance](const M &m, Rng &r) -> Gen<M> {
           I in = sharp_instance(m, r);
           return in.set("b2", orthogonal_to(m, in.effect("b"), r));
         },
         [](const M &m, const I &in, double) {
           const auto &meas = in.list("m");
           const auto &s = in.state("omega");
           const E &b1 = in.effect("b"), &b2 = in.effect("b2");
           auto ex = [&](const E &x) { return conditional_expectation(m, s, x, meas); };
           auto rhs = m.orth_sum(ex(b1), ex(b2));
           return rhs ? m.distance(ex(sum(m, b1, b2)), *rhs) : 1.0;
         });

  add<M>(ps, "E-affine", TolKind::Conditioning,
         [sharp_instance](const M &m, Rng &r) -> Gen<M> {
           I in = sharp_instance(m, r);
           return in.set("lambda", r.uniform());
         },
         [](const M &m, const I &in, double) {
           const auto &meas = in.list("m");
           const auto &s = in.state("omega");
           const E &b = in.effect("b");
           const double l = in.scalar("lambda");
           return m.distance(conditional_expectation(m, s, m.scale(l, b), meas),
                             m.scale(l, conditional_expectation(m, s, b, meas)));
         });

  add<M>(ps, "E-measurable-factor", TolKind::Conditioning,
         [sharp_instance](const M &m, Rng &r) -> Gen<M> {
           I in = sharp_instance(m, r);
           return in.set("c", measurable_for(m, in.list("m"), r));
         },
         [](const M &m, const I &in, double) {
           const auto &meas = in.list("m");
           const auto &s = in.state("omega");
           const E &b = in.effect("b"), &c = in.effect("c");
           return m.distance(conditional_expectation(m, s, m.seq_product(c, b), meas),
                             m.seq_product(c, conditional_expectation(m, s, b, meas)));
         });

  add<M>(ps, "E-decomposition", TolKind::Conditioning,
         [sharp_instance](const M &m, Rng &r) -> Gen<M> { return sharp_instance(m, r); },
         [](const M &m, const I &in, double) {
           const auto &meas = in.list("m");
           const auto &s = in.state("omega");
           const E &b = in.effect("b");
           auto total = m.ambient_zero();
           for (const auto &a : meas)
             m.axpy(total, 1.0, m.ambient(conditional_expectation(m, s, m.seq_product(a, b), meas)));
           return ambient_distance(m, m.ambient(conditional_expectation(m, s, b, meas)), total);
         });

  add<M>(ps, "measurability-criterion", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           auto ctx = m.random_context(r);
           E b = r.uniform() < 0.5 ? measurable_for(m, ctx, r) : m.random_effect(r);
           return I{}.set("A", ctx).set("b", b);
         },
         [](const M &m, const I &in, double tol) {
           const auto &ctx = in.list("A");
           const E &b = in.effect("b");
           bool all = true;
           for (const auto &a : ctx)
             all = all && compatible(m, b, a, tol);
           return flag(all != is_measurable(m, b, ctx, tol));
         });

  add<M>(ps, "vandermonde", TolKind::Recovery,
         [](const M &m, Rng &r) -> Gen<M> {
           auto ctx = m.random_context(r);
           const std::size_t n = ctx.size();
           std::vector<double> lambda(n);
           for (std::size_t k = 0; k < n; ++k)
             lambda[k] = (static_cast<double>(k) + r.uniform(0.1, 0.5)) / static_cast<double>(n);
           for (std::size_t i = n; i > 1; --i)
             std::swap(lambda[i - 1], lambda[r.below(i)]);
           I in;
           in.set("A", ctx);
           for (std::size_t k = 0; k < n; ++k)
             in.set("lambda" + std::to_string(k), lambda[k]);
           return in;
         },
         [](const M &m, const I &in, double) {
           const auto &ctx = in.list("A");
           std::vector<double> lambda(ctx.size());
           for (std::size_t k = 0; k < lambda.size(); ++k)
             lambda[k] = in.scalar("lambda" + std::to_string(k));
           const E a = m.make_effect(ambient_combination(m, lambda, ctx));
           const auto rec = recover_atoms_vandermonde(m, a, lambda, ctx);
           double worst = 0.0;
           for (std::size_t k = 0; k < rec.polynomials.size(); ++k) {
             auto target = m.ambient_zero();
             for (std::size_t i : rec.clusters[k])
               m.axpy(target, 1.0, m.ambient(ctx[i]));
             worst = std::max(worst, ambient_distance(m, polynomial_ambient(m, a, rec.polynomials[k]),
                                                      target));
           }
           return worst;
         });

  // a|b: a∘b is measurable for the products of their spectral atoms.
  add<M>(ps, "product-measurable", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           auto [a, b] = m.random_compatible_pair(r);
           return I{}.set("a", a).set("b", b);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           std::vector<E> family;
           for (const auto &x : spectral_resolution(m, a).context.atoms)
             for (const auto &y : spectral_resolution(m, b).context.atoms) {
               E xy = m.seq_product(x, y);
               if (m.norm(xy) > 1e-6)
                 family.push_back(std::move(xy));
             }
           return measurability_residual(m, m.seq_product(a, b), family);
         });

  return ps;
}

// Broken models for fault injection.

namespace detail {

inline FuzzyEvent clip_payload(const std::vector<double> &x) {
  std::vector<double> v = x;
  for (auto &e : v)
    e = std::clamp(e, 0.0, 1.0);
  return FuzzyEvent(std::move(v));
}

inline HilbertEffect clip_payload(const ComplexMatrix &x) {
  const EigenDecomposition eig = hermitian_eigh(x.hermitian_part());
  std::vector<double> v = eig.eigenvalues;
  for (auto &e : v)
    e = std::clamp(e, 0.0, 1.0);
  return HilbertEffect(eig.reconstruct_with(v).hermitian_part());
}

} // namespace detail

/// ⊕ made total by clipping the sum into the unit interval.
template <class Base>
class ClippedSumModel : public Base {
public:
  using Base::Base;
  using typename Base::effect_type;
  std::string name() const { return Base::name() + "+clipped-sum"; }
  std::optional<effect_type> orth_sum(const effect_type &a, const effect_type &b) const {
    auto s = this->ambient(a);
    this->axpy(s, 1.0, this->ambient(b));
    return detail::clip_payload(s);
  }
};

/// a∘b replaced by the clipped Jordan product ½(AB + BA).
class SymmetrizedProductModel : public HilbertModel {
public:
  using HilbertModel::HilbertModel;
  std::string name() const { return "hilbert+symmetrized-product"; }
  HilbertEffect seq_product(const HilbertEffect &a, const HilbertEffect &b) const {
    require_member(a);
    require_member(b);
    const ComplexMatrix ab = a.matrix() * b.matrix();
    return detail::clip_payload(0.5 * (ab + ab.adjoint()));
  }
};

/// Contexts built from normalized but not orthogonalized Gaussian vectors.
class NonNormalizedContextModel : public HilbertModel {
public:
  using HilbertModel::HilbertModel;
  std::string name() const { return "hilbert+non-normalized-context"; }
  std::vector<HilbertEffect> random_context(Rng &rng) const {
    std::vector<HilbertEffect> atoms;
    for (std::size_t j = 0; j < dim(); ++j)
      atoms.emplace_back(effectalg::projector(random_unit_vector(rng)), tolerances());
    return atoms;
  }
};

enum class Fault { None, ClippedSum, SymmetrizedProduct, NonNormalizedContext };

inline std::string to_string(Fault f) {
  switch (f) {
  case Fault::None: return "none";
  case Fault::ClippedSum: return "clipped-sum";
  case Fault::SymmetrizedProduct: return "symmetrized-product";
  case Fault::NonNormalizedContext: return "non-normalized-context";
  }
  return "none";
}

inline Fault parse_fault(const std::string &name) {
  for (Fault f : {Fault::None, Fault::ClippedSum, Fault::SymmetrizedProduct,
                  Fault::NonNormalizedContext})
    if (to_string(f) == name)
      return f;
  throw Error(Errc::InvalidSpec, "unknown fault '" + name + "'");
}

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"effect", "convex", "sea", "b1b2",
                                              "representation", "conditioning", "all"};
  return names;
}

/// The property list for a suite name; "all" concatenates the others.
template <class M>
std::vector<Property<M>> suite_properties(const std::string &suite) {
  if (suite == "effect")
    return effect_properties<M>();
  if (suite == "convex")
    return convex_properties<M>();
  if (suite == "sea")
    return sea_properties<M>();
  if (suite == "b1b2")
    return b1b2_properties<M>();
  if (suite == "representation")
    return representation_properties<M>();
  if (suite == "conditioning")
    return conditioning_properties<M>();
  if (suite == "all") {
    std::vector<Property<M>> out;
    for (const auto &name : suite_names())
      if (name != "all")
        for (auto &p : suite_properties<M>(name))
          out.push_back(std::move(p));
    return out;
  }
  throw Error(Errc::InvalidSuiteName, "unknown suite '" + suite + "'");
}

struct SuiteRequest {
  std::string suite = "all";
  ModelKind model = ModelKind::Hilbert;
  std::size_t dim = 2;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  SuiteTolerances tolerances;
  unsigned threads = 1;
  Fault fault = Fault::None;
};

namespace detail {

/// Calls f(model) with the concrete (possibly broken) model the request names.
template <class F>
decltype(auto) with_model(const SuiteRequest &req, F &&f) {
  if (req.dim == 0)
    throw Error(Errc::InvalidSpec, "dimension must be at least 1");
  if (req.model == ModelKind::Classical) {
    switch (req.fault) {
    case Fault::None: return f(ClassicalModel(req.dim));
    case Fault::ClippedSum: return f(ClippedSumModel<ClassicalModel>(req.dim));
    default:
      throw Error(Errc::InvalidSpec, "fault '" + to_string(req.fault) +
                                         "' is only defined for the hilbert model");
    }
  }
  switch (req.fault) {
  case Fault::None: return f(HilbertModel(req.dim));
  case Fault::ClippedSum: return f(ClippedSumModel<HilbertModel>(req.dim));
  case Fault::SymmetrizedProduct: return f(SymmetrizedProductModel(req.dim));
  case Fault::NonNormalizedContext: return f(NonNormalizedContextModel(req.dim));
  }
  return f(HilbertModel(req.dim));
}

} // namespace detail

inline VerificationReport run_suite(const SuiteRequest &req) {
  return detail::with_model(req, [&](const auto &m) {
    using M = std::decay_t<decltype(m)>;
    const auto ps = suite_properties<M>(req.suite);
    return run_properties(m, ps, RunOptions{req.suite, req.trials, req.seed, req.tolerances,
                                            req.threads});
  });
}

/// Residual of a reported violation, recomputed from its stored instance.
inline double replay_violation(const SuiteRequest &req, const Violation &v) {
  return detail::with_model(req, [&](const auto &m) {
    using M = std::decay_t<decltype(m)>;
    return replay(m, suite_properties<M>(req.suite), v, req.tolerances);
  });
}

template <class M>
VerificationReport check_effect_convex_axioms(const M &m, std::uint64_t trials, std::uint64_t seed,
                                              const SuiteTolerances &tol = {}) {
  auto ps = effect_properties<M>();
  for (auto &p : convex_properties<M>())
    ps.push_back(std::move(p));
  return run_properties(m, ps, RunOptions{"effect+convex", trials, seed, tol, 1});
}

template <class M>
VerificationReport check_sea_axioms(const M &m, std::uint64_t trials, std::uint64_t seed,
                                    const SuiteTolerances &tol = {}) {
  return run_properties(m, sea_properties<M>(), RunOptions{"sea", trials, seed, tol, 1});
}

template <class M>
VerificationReport check_B1_B2(const M &m, std::uint64_t trials, std::uint64_t seed,
                               const SuiteTolerances &tol = {}) {
  return run_properties(m, b1b2_properties<M>(), RunOptions{"b1b2", trials, seed, tol, 1});
}

} // namespace effectalg
