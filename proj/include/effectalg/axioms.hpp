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
 * Property lists for the effect-algebra, convexity and sequential-product
 * laws, generic over ClassicalModel and HilbertModel (and anything shaped
 * like them). Premises are met by construction where possible: b = a′∘y is
 * always orthogonal to a, and a ⊕ (a′∘y) always lies above a.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effectalg/effect.hpp"
#include "effectalg/properties.hpp"
#include "effectalg/sequential.hpp"

namespace effectalg {

namespace props {

template <class M>
using Gen = std::optional<Instance<M>>;

template <class M>
double opt_distance(const M &m, const std::optional<EffectOf<M>> &x,
                    const std::optional<EffectOf<M>> &y) {
  if (x.has_value() != y.has_value())
    return 1.0;
  return x ? m.distance(*x, *y) : 0.0;
}

template <class M>
EffectOf<M> sum(const M &m, const EffectOf<M> &a, const EffectOf<M> &b) {
  auto s = m.orth_sum(a, b);
  if (!s)
    throw Error(Errc::NotEffect, "orthogonal sum undefined");
  return *std::move(s);
}

/// An effect orthogonal to a.
template <class M>
EffectOf<M> orthogonal_to(const M &m, const EffectOf<M> &a, Rng &rng) {
  return m.seq_product(m.complement(a), m.random_effect(rng));
}

template <class M>
StateOf<M> any_state(const M &m, Rng &rng) {
  return rng.uniform() < 0.5 ? m.random_state(rng) : m.random_pure_state(rng);
}

inline double flag(bool bad) { return bad ? 1.0 : 0.0; }

template <class M, class G, class R>
void add(std::vector<Property<M>> &ps, std::string id, TolKind kind, G gen, R res) {
  ps.push_back(Property<M>{std::move(id), kind, std::move(gen), std::move(res)});
}

} // namespace props

/// E1–E4 plus the order, state and witness laws.
template <class M>
std::vector<Property<M>> effect_properties() {
  using namespace props;
  using E = EffectOf<M>;
  using I = Instance<M>;
  std::vector<Property<M>> ps;

  add<M>(ps, "E1-commutativity", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = r.uniform() < 0.5 ? orthogonal_to(m, a, r) : m.random_effect(r);
           return I{}.set("a", a).set("b", b);
         },
         [](const M &m, const I &in, double) {
           return opt_distance(m, m.orth_sum(in.effect("a"), in.effect("b")),
                               m.orth_sum(in.effect("b"), in.effect("a")));
         });

  add<M>(ps, "E2-associativity", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = m.scale(0.5, orthogonal_to(m, a, r));
           E c = m.scale(0.5, orthogonal_to(m, a, r));
           if (r.uniform() < 0.25) {
             b = m.random_effect(r);
             c = m.random_effect(r);
           }
           auto ab = m.orth_sum(a, b);
           if (!ab || !m.orth_sum(*ab, c))
             return std::nullopt;
           return I{}.set("a", a).set("b", b).set("c", c);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b"), &c = in.effect("c");
           auto lhs = m.orth_sum(sum(m, a, b), c);
           auto bc = m.orth_sum(b, c);
           if (!bc)
             return 1.0;
           return opt_distance(m, lhs, m.orth_sum(a, *bc));
         });

  add<M>(ps, "E3-orthosupplement", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> { return I{}.set("a", m.random_effect(r)); },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a");
           auto s = m.orth_sum(a, m.complement(a));
           return s ? m.distance(*s, m.unit()) : 1.0;
         });

  // Perturbed candidates x near a′: whenever a ⊕ x = 1, x must be a′.
  add<M>(ps, "E3-uniqueness", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           const double delta = std::exp(r.uniform(std::log(1e-6), std::log(1e-3)));
           auto x = m.ambient(m.complement(a));
           if (r.uniform() < 0.5)
             m.axpy(x, delta, m.ambient(a));
           else
             m.axpy(x, -delta, m.ambient(m.complement(a)));
           return I{}.set("a", a).set("x", m.make_effect(x));
         },
         [](const M &m, const I &in, double tol) {
           const E &a = in.effect("a"), &x = in.effect("x");
           auto s = m.orth_sum(a, x);
           if (!s || m.distance(*s, m.unit()) > tol)
             return 0.0;
           return m.distance(x, m.complement(a));
         });

  add<M>(ps, "E4-zero-one", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = r.uniform() < 0.1 ? m.zero() : m.random_effect(r);
           return I{}.set("a", a);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a");
           auto z = m.orth_sum(m.zero(), m.unit());
           double res = z ? m.distance(*z, m.unit()) : 1.0;
           if (m.orth_sum(a, m.unit()))
             res = std::max(res, m.norm(a));
           return res;
         });

  add<M>(ps, "order-reversal", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           return I{}.set("a", a).set("b", sum(m, a, orthogonal_to(m, a, r)));
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           return std::max(m.leq_violation(a, b),
                           m.leq_violation(m.complement(b), m.complement(a)));
         });

  add<M>(ps, "double-complement", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> { return I{}.set("a", m.random_effect(r)); },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a");
           return m.distance(m.complement(m.complement(a)), a);
         });

  add<M>(ps, "ES-pairing", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           const double l = r.uniform();
           return I{}.set("a", a).set("lambda", l).set("s", any_state(m, r));
         },
         [](const M &m, const I &in, double) {
           const auto &s = in.state("s");
           const E &a = in.effect("a");
           const double l = in.scalar("lambda");
           return std::max({std::abs(m.eval(s, m.zero())), std::abs(m.eval(s, m.unit()) - 1.0),
                            std::abs(m.eval(s, m.scale(l, a)) - l * m.eval(s, a))});
         });

  add<M>(ps, "state-additivity", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = orthogonal_to(m, a, r);
           return I{}.set("a", a).set("b", b).set("s", any_state(m, r));
         },
         [](const M &m, const I &in, double) {
           const auto &s = in.state("s");
           const E &a = in.effect("a"), &b = in.effect("b");
           return std::abs(m.eval(s, sum(m, a, b)) - m.eval(s, a) - m.eval(s, b));
         });

  // s(λa ⊕ (1−λ)b) = λs(a) + (1−λ)s(b)
  add<M>(ps, "state-affinity", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = m.random_effect(r);
           const double l = r.uniform();
           return I{}.set("a", a).set("b", b).set("lambda", l).set("s", any_state(m, r));
         },
         [](const M &m, const I &in, double) {
           const auto &s = in.state("s");
           const E &a = in.effect("a"), &b = in.effect("b");
           const double l = in.scalar("lambda");
           const E mixed = sum(m, m.scale(l, a), m.scale(1.0 - l, b));
           return std::abs(m.eval(s, mixed) - l * m.eval(s, a) - (1.0 - l) * m.eval(s, b));
         });

  add<M>(ps, "extension-agreement", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = m.random_effect(r);
           const double alpha = r.uniform(-2.0, 2.0), beta = r.uniform(-2.0, 2.0);
           return I{}.set("a", a).set("b", b).set("alpha", alpha).set("beta", beta).set(
               "s", any_state(m, r));
         },
         [](const M &m, const I &in, double) {
           const auto f = extend_state(in.state("s"));
           const E &a = in.effect("a"), &b = in.effect("b");
           const double alpha = in.scalar("alpha"), beta = in.scalar("beta");
           auto combo = m.ambient_zero();
           m.axpy(combo, alpha, m.ambient(a));
           m.axpy(combo, beta, m.ambient(b));
           const double fa = f(m.ambient(a)), fb = f(m.ambient(b));
           return std::max({std::abs(fa - m.eval(in.state("s"), a)),
                            std::abs(f(m.ambient(m.unit())) - 1.0),
                            std::abs(f(combo) - alpha * fa - beta * fb)});
         });

  add<M>(ps, "order-witness", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = r.uniform() < 0.2 ? sum(m, a, orthogonal_to(m, a, r)) : m.random_effect(r);
           return I{}.set("a", a).set("b", b);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           const auto w = order_witness(m, a, b);
           if (m.leq(a, b))
             return flag(w.has_value());
           if (!w)
             return 1.0;
           return flag(!(m.eval(*w, a) - m.eval(*w, b) > 1e-12));
         });

  return ps;
}

/// C1–C4 and closure of λa ⊕ (1−λ)b.
template <class M>
std::vector<Property<M>> convex_properties() {
  using namespace props;
  using E = EffectOf<M>;
  using I = Instance<M>;
  std::vector<Property<M>> ps;

  add<M>(ps, "C1", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           const double al = r.uniform(), be = r.uniform();
           return I{}.set("a", a).set("alpha", al).set("beta", be);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a");
           const double al = in.scalar("alpha"), be = in.scalar("beta");
           return m.distance(m.scale(al, m.scale(be, a)), m.scale(al * be, a));
         });

  add<M>(ps, "C2", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           const double al = r.uniform();
           const double be = r.uniform(0.0, 1.0 - al);
           return I{}.set("a", a).set("alpha", al).set("beta", be);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a");
           const double al = in.scalar("alpha"), be = in.scalar("beta");
           auto s = m.orth_sum(m.scale(al, a), m.scale(be, a));
           return s ? m.distance(m.scale(std::min(1.0, al + be), a), *s) : 1.0;
         });

  add<M>(ps, "C3", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = orthogonal_to(m, a, r);
           return I{}.set("a", a).set("b", b).set("lambda", r.uniform());
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           const double l = in.scalar("lambda");
           auto rhs = m.orth_sum(m.scale(l, a), m.scale(l, b));
           return rhs ? m.distance(m.scale(l, sum(m, a, b)), *rhs) : 1.0;
         });

  add<M>(ps, "C4", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> { return I{}.set("a", m.random_effect(r)); },
         [](const M &m, const I &in, double) {
           return m.distance(m.scale(1.0, in.effect("a")), in.effect("a"));
         });

  add<M>(ps, "convex-closure", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = m.random_effect(r);
           return I{}.set("a", a).set("b", b).set("lambda", r.uniform());
         },
         [](const M &m, const I &in, double) {
           const double l = in.scalar("lambda");
           return flag(!m.orth_sum(m.scale(l, in.effect("a")), m.scale(1.0 - l, in.effect("b"))));
         });

  return ps;
}

/// S1–S6 and the order/sharpness consequences (i), (ii), (iii), (iv), (vi).
template <class M>
std::vector<Property<M>> sea_properties() {
  using namespace props;
  using E = EffectOf<M>;
  using I = Instance<M>;
  std::vector<Property<M>> ps;

  add<M>(ps, "S1", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = m.random_effect(r);
           E c = orthogonal_to(m, b, r);
           return I{}.set("a", a).set("b", b).set("c", c);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b"), &c = in.effect("c");
           auto rhs = m.orth_sum(m.seq_product(a, b), m.seq_product(a, c));
           return rhs ? m.distance(m.seq_product(a, sum(m, b, c)), *rhs) : 1.0;
         });

  add<M>(ps, "S2", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> { return I{}.set("a", m.random_effect(r)); },
         [](const M &m, const I &in, double) {
           return m.distance(m.seq_product(m.unit(), in.effect("a")), in.effect("a"));
         });

  // Sharp b and a ≤ b′ give a∘b = 0; then b∘a must vanish too.
  add<M>(ps, "S3", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E b = m.random_sharp(r);
           E a = m.seq_product(m.complement(b), m.random_effect(r));
           return I{}.set("a", a).set("b", b);
         },
         [](const M &m, const I &in, double tol) {
           const E &a = in.effect("a"), &b = in.effect("b");
           if (m.norm(m.seq_product(a, b)) > tol)
             return 0.0;
           return m.norm(m.seq_product(b, a));
         });

  add<M>(ps, "S4", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           auto [a, b] = m.random_compatible_pair(r);
           return I{}.set("a", a).set("b", b).set("c", m.random_effect(r));
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b"), &c = in.effect("c");
           const E bc = m.complement(b);
           return std::max(m.distance(m.seq_product(a, bc), m.seq_product(bc, a)),
                           m.distance(m.seq_product(a, m.seq_product(b, c)),
                                      m.seq_product(m.seq_product(a, b), c)));
         });

  add<M>(ps, "S5", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           auto t = m.random_commuting_triple(r);
           return I{}.set("a", t.a).set("b", t.b).set("c", t.c);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b"), &c = in.effect("c");
           const E ab = m.seq_product(a, b);
           auto s = m.orth_sum(a, b);
           if (!s)
             return 1.0;
           return std::max(m.distance(m.seq_product(c, ab), m.seq_product(ab, c)),
                           m.distance(m.seq_product(c, *s), m.seq_product(*s, c)));
         });

  add<M>(ps, "S6", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = m.random_effect(r);
           return I{}.set("a", a).set("b", b).set("lambda", r.uniform());
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           const double l = in.scalar("lambda");
           const E ref = m.scale(l, m.seq_product(a, b));
           return std::max(m.distance(m.seq_product(m.scale(l, a), b), ref),
                           m.distance(m.seq_product(a, m.scale(l, b)), ref));
         });

  add<M>(ps, "product-below-first", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           return I{}.set("a", a).set("b", m.random_effect(r));
         },
         [](const M &m, const I &in, double) {
           return m.leq_violation(m.seq_product(in.effect("a"), in.effect("b")), in.effect("a"));
         });

  add<M>(ps, "product-monotone", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E a = m.random_effect(r);
           E b = sum(m, a, orthogonal_to(m, a, r));
           return I{}.set("a", a).set("b", b).set("c", m.random_effect(r));
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b"), &c = in.effect("c");
           return std::max(m.leq_violation(a, b),
                           m.leq_violation(m.seq_product(c, a), m.seq_product(c, b)));
         });

  add<M>(ps, "idempotent-sharp", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> { return I{}.set("a", m.random_sharp(r)); },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a");
           return std::max(flag(!m.is_sharp(a)), m.distance(m.seq_product(a, a), a));
         });

  add<M>(ps, "unsharp-not-idempotent", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> { return I{}.set("a", m.random_unsharp(r)); },
         [](const M &m, const I &in, double tol) {
           const E &a = in.effect("a");
           return flag(m.is_sharp(a) || m.distance(m.seq_product(a, a), a) <= tol);
         });

  // For sharp b: a∘b = 0 iff a ⊥ b.
  add<M>(ps, "sharp-null-product-orthogonal", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E b = m.random_sharp(r);
           E a = r.uniform() < 0.5 ? m.seq_product(m.complement(b), m.random_effect(r))
                                   : m.random_effect(r);
           return I{}.set("a", a).set("b", b);
         },
         [](const M &m, const I &in, double tol) {
           const E &a = in.effect("a"), &b = in.effect("b");
           const bool null_product = m.norm(m.seq_product(a, b)) <= tol;
           return flag(null_product != m.orth_sum(a, b).has_value());
         });

  add<M>(ps, "sharp-absorbs-below", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E b = m.random_sharp(r);
           return I{}.set("a", m.seq_product(b, m.random_effect(r))).set("b", b);
         },
         [](const M &m, const I &in, double) {
           const E &a = in.effect("a"), &b = in.effect("b");
           return std::max({m.leq_violation(a, b), m.distance(m.seq_product(a, b), a),
                            m.distance(m.seq_product(b, a), a)});
         });

  // For sharp b: a ≤ b iff a∘b = b∘a = a.
  add<M>(ps, "sharp-order-fixed-point", TolKind::Axiom,
         [](const M &m, Rng &r) -> Gen<M> {
           E b = m.random_sharp(r);
           E a = r.uniform() < 0.5 ? m.seq_product(b, m.random_effect(r)) : m.random_effect(r);
           return I{}.set("a", a).set("b", b);
         },
         [](const M &m, const I &in, double tol) {
           const E &a = in.effect("a"), &b = in.effect("b");
           const bool fixed = m.distance(m.seq_product(a, b), a) <= tol &&
                              m.distance(m.seq_product(b, a), a) <= tol;
           return flag(m.leq(a, b) != fixed);
         });

  return ps;
}

} // namespace effectalg
