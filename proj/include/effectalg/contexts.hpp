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
 * Contexts: finest sharp measurements {a_1, ..., a_n}, a_1 ⊕ ... ⊕ a_n = 1,
 * with every a_i one-dimensional sharp. Recognition, spectral resolution,
 * transition probabilities, comparability maps between contexts, completeness
 * witnesses, classification of the two concrete models, the representation
 * maps J, the third-context construction and context dynamics.
 *
 * In the Hilbert model the state space H(A) of a context is coordinate space
 * C^|A| with orthonormal basis {â_i}; a comparability map U_AB is the change
 * of coordinates from A's atom vectors to B's.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "effectalg/classical.hpp"
#include "effectalg/effect.hpp"
#include "effectalg/error.hpp"
#include "effectalg/hilbert.hpp"
#include "effectalg/numeric.hpp"
#include "effectalg/rng.hpp"
#include "effectalg/sequential.hpp"

namespace effectalg {

template <class E>
struct Context {
  std::vector<E> atoms;

  std::size_t size() const noexcept { return atoms.size(); }
  const E &operator[](std::size_t i) const { return atoms[i]; }

  friend bool operator==(const Context &, const Context &) = default;
};

template <class E>
Context(std::vector<E>) -> Context<E>;

template <class E>
struct SpectralResolution {
  Context<E> context;
  std::vector<double> coefficients;
};

/// Each atom one-dimensional sharp (idempotent within tol, rank one) and
/// Σ atoms = unit within tol.
template <class M>
bool is_context(const M &m, const std::vector<EffectOf<M>> &atoms, double tol) {
  if (atoms.empty())
    return false;
  for (const auto &a : atoms) {
    m.require_member(a);
    if (m.distance(m.seq_product(a, a), a) > tol)
      return false;
    if (!m.is_one_dimensional_sharp(a))
      return false;
  }
  auto diff = m.ambient(m.unit());
  for (const auto &a : atoms)
    m.axpy(diff, -1.0, m.ambient(a));
  return m.ambient_norm(diff) <= tol;
}

/// Model-tagged overload; mixed tags or sizes raise ModelMismatch.
inline bool is_context(const std::vector<Effect> &atoms, double tol) {
  if (atoms.empty())
    return false;
  for (const auto &a : atoms)
    if (a.model() != atoms.front().model() || a.dim() != atoms.front().dim())
      throw Error(Errc::ModelMismatch, "context atoms from different models");
  if (atoms.front().model() == ModelKind::Classical) {
    std::vector<FuzzyEvent> xs;
    for (const auto &a : atoms)
      xs.push_back(a.classical());
    return is_context(ClassicalModel(xs.front().size()), xs, tol);
  }
  std::vector<HilbertEffect> xs;
  for (const auto &a : atoms)
    xs.push_back(a.hilbert());
  return is_context(HilbertModel(xs.front().dim()), xs, tol);
}

/// b = λ_1 a_1 ⊕ ... ⊕ λ_n a_n over a context.
template <class M>
SpectralResolution<EffectOf<M>> spectral_resolution(const M &m, const EffectOf<M> &b) {
  auto [atoms, coefficients] = m.spectral_resolution(b);
  return {Context<EffectOf<M>>{std::move(atoms)}, std::move(coefficients)};
}

/// â(c) for one-dimensional sharp a and c.
template <class M>
double transition_probability(const M &m, const EffectOf<M> &a, const EffectOf<M> &c) {
  if (!m.is_one_dimensional_sharp(a) || !m.is_one_dimensional_sharp(c))
    throw Error(Errc::NotOneDimensionalSharp, "transition probability needs atoms");
  return m.hat_eval(a, c);
}

/// Atom vectors of a Hilbert context, as the columns of a matrix.
inline ComplexMatrix context_basis(const Context<HilbertEffect> &ctx) {
  const std::size_t d = ctx.size();
  ComplexMatrix u(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (ctx[j].dim() != d)
      throw Error(Errc::DimMismatch, "context size differs from dimension");
    const ComplexVector v = atom_vector(ctx[j]);
    for (std::size_t i = 0; i < d; ++i)
      u(i, j) = v[i];
  }
  return u;
}

struct ComparabilityMap {
  Context<HilbertEffect> source;
  Context<HilbertEffect> target;
  ComplexMatrix unitary; ///< column j: coordinates of source atom j in the target basis
};

/// U_AB with (U_AB)_{kj} = ⟨b_k, a_j⟩.
inline ComparabilityMap comparability_map(const Context<HilbertEffect> &source,
                                          const Context<HilbertEffect> &target) {
  if (source.size() != target.size() || source.size() == 0)
    throw Error(Errc::DimMismatch, "contexts of different sizes");
  const ComplexMatrix a = context_basis(source);
  const ComplexMatrix b = context_basis(target);
  return {source, target, b.adjoint() * a};
}

/// Classical algebras have one context; the map between two orderings of it
/// is the permutation matching equal atoms.
inline ComplexMatrix comparability_map(const Context<FuzzyEvent> &source,
                                       const Context<FuzzyEvent> &target) {
  const std::size_t n = source.size();
  if (target.size() != n)
    throw Error(Errc::DimMismatch, "contexts of different sizes");
  ComplexMatrix u(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (source[j] == target[k])
        u(k, j) = 1.0;
  return u;
}

/**
 * Largest deviation of |⟨U_AB â_i, U_CB ĉ_k⟩|² from â_i(c_k) over all atom
 * pairs of A and C, with B the reference context.
 */
inline double comparability_residual(const Context<HilbertEffect> &a,
                                     const Context<HilbertEffect> &b,
                                     const Context<HilbertEffect> &c) {
  const ComplexMatrix uab = comparability_map(a, b).unitary;
  const ComplexMatrix ucb = comparability_map(c, b).unitary;
  const HilbertModel m(a.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double lhs = std::norm(inner(uab.column(i), ucb.column(k)));
      worst = std::max(worst, std::abs(lhs - transition_probability(m, a[i], c[k])));
    }
  return worst;
}

/**
 * A context whose first atom is the projector onto φ: φ is extended to an
 * orthonormal basis by Gram–Schmidt over the standard basis, taking at each
 * step the candidate with the largest residual (lowest index on ties).
 */
inline Context<HilbertEffect> completeness_witness(const ComplexVector &phi) {
  const std::size_t d = phi.size();
  if (d == 0 || std::abs(norm(phi) - 1.0) > ToleranceConfig{}.eq_tol)
    throw Error(Errc::NotUnitVector, "completeness witness needs a unit vector");
  std::vector<ComplexVector> chosen{phi};
  std::vector<bool> used(d, false);
  while (chosen.size() < d) {
    double best = -1.0;
    std::size_t best_k = 0;
    ComplexVector best_r;
    for (std::size_t k = 0; k < d; ++k) {
      if (used[k])
        continue;
      ComplexVector r = standard_basis_vector(d, k);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto &q : chosen) {
          const Complex c = inner(q, r);
          for (std::size_t i = 0; i < d; ++i)
            r[i] -= c * q[i];
        }
      const double n = norm(r);
      if (n > best + 1e-12) {
        best = n;
        best_k = k;
        best_r = std::move(r);
      }
    }
    used[best_k] = true;
    for (auto &z : best_r)
      z /= best;
    normalize_phase(best_r);
    chosen.push_back(std::move(best_r));
  }
  Context<HilbertEffect> ctx;
  for (const auto &v : chosen)
    ctx.atoms.push_back(HilbertEffect::projector(v));
  return ctx;
}

enum class AlgebraClass { Classical, Hilbertian, Trivial, Unverified };

inline std::string to_string(AlgebraClass c) {
  switch (c) {
  case AlgebraClass::Classical: return "Classical";
  case AlgebraClass::Hilbertian: return "Hilbertian";
  case AlgebraClass::Trivial: return "Trivial";
  case AlgebraClass::Unverified: return "Unverified";
  }
  return "Unverified";
}

struct Classification {
  AlgebraClass kind = AlgebraClass::Unverified;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

/// Exactly one context (found exhaustively) and spectral on samples.
inline Classification classify_algebra(const ClassicalModel &m, std::size_t sample_budget,
                                       std::uint64_t seed) {
  Classification out;
  if (m.dim() == 1) {
    out.kind = AlgebraClass::Trivial;
    return out;
  }
  const auto contexts = enumerate_classical_contexts(m.dim());
  ++out.checks;
  if (contexts.size() != 1 || contexts.front() != unique_context(m.dim()))
    ++out.failures;
  Rng rng(seed, hash_name("classify"));
  for (std::size_t s = 0; s < sample_budget; ++s) {
    const FuzzyEvent sharp = m.random_sharp(rng);
    ++out.checks;
    if (!std::all_of(sharp.values().begin(), sharp.values().end(),
                     [](double x) { return x == 0.0 || x == 1.0; }))
      ++out.failures;
    const FuzzyEvent b = m.random_effect(rng);
    const auto res = spectral_resolution(m, b);
    ++out.checks;
    const auto rebuilt = ambient_combination(m, res.coefficients, res.context.atoms);
    if (!is_context(m, res.context.atoms, 1e-8) ||
        m.distance(m.make_effect(rebuilt), b) > 1e-8)
      ++out.failures;
  }
  out.kind = out.failures == 0 ? AlgebraClass::Classical : AlgebraClass::Unverified;
  return out;
}

/// Spectral on samples and every sampled unit vector arises as the first atom
/// of some context.
inline Classification classify_algebra(const HilbertModel &m, std::size_t sample_budget,
                                       std::uint64_t seed) {
  Classification out;
  if (m.dim() == 1) {
    out.kind = AlgebraClass::Trivial;
    return out;
  }
  Rng rng(seed, hash_name("classify"));
  for (std::size_t s = 0; s < sample_budget; ++s) {
    const HilbertEffect b = m.random_effect(rng);
    const auto res = spectral_resolution(m, b);
    ++out.checks;
    const auto rebuilt = ambient_combination(m, res.coefficients, res.context.atoms);
    if (!is_context(m, res.context.atoms, 1e-8) || m.ambient_norm(rebuilt - b.matrix()) > 1e-8)
      ++out.failures;

    const ComplexVector phi = m.random_unit_vector(rng);
    const auto witness = completeness_witness(phi);
    ++out.checks;
    const HilbertEffect target = HilbertEffect::projector(phi);
    if (!is_context(m, witness.atoms, 1e-8) || m.distance(witness[0], target) > 1e-8 ||
        std::abs(m.eval(HilbertState::vector(phi), witness[0]) - 1.0) > 1e-10)
      ++out.failures;
  }
  out.kind = out.failures == 0 ? AlgebraClass::Hilbertian : AlgebraClass::Unverified;
  return out;
}

/// b_A = diag(â_1(b), ..., â_n(b)) acting on H(A).
template <class M>
ComplexMatrix rep_J_single_context(const M &m, const EffectOf<M> &b, const Context<EffectOf<M>> &a) {
  m.require_member(b);
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out(i, i) = m.hat_eval(a[i], b);
  return out;
}

/**
 * J(b) = Σ λ_i P(U_AB â_i) on H(B), where b = Σ λ_i a_i is the spectral
 * resolution of b over its context A.
 */
inline HilbertEffect rep_J_full(const HilbertEffect &b, const Context<HilbertEffect> &target) {
  const HilbertModel m(b.dim());
  if (target.size() != b.dim())
    throw Error(Errc::ModelMismatch, "reference context does not match the dimension");
  const auto res = spectral_resolution(m, b);
  const ComplexMatrix u = comparability_map(res.context, target).unitary;
  ComplexMatrix out(b.dim());
  for (std::size_t i = 0; i < res.context.size(); ++i)
    out += res.coefficients[i] * effectalg::projector(u.column(i));
  return HilbertEffect(out);
}

/// J⁻¹(X) = V X V†, V the atom basis of the reference context.
inline HilbertEffect rep_J_full_inverse(const HilbertEffect &image,
                                        const Context<HilbertEffect> &target) {
  if (target.size() != image.dim())
    throw Error(Errc::ModelMismatch, "reference context does not match the dimension");
  const ComplexMatrix v = context_basis(target);
  return HilbertEffect((v * image.matrix() * v.adjoint()).hermitian_part());
}

/// min over atom matchings of the largest Frobenius distance between matched
/// atoms; +inf for contexts of different sizes. Exhaustive over permutations.
template <class M>
double context_distance(const M &m, const Context<EffectOf<M>> &a, const Context<EffectOf<M>> &b) {
  const std::size_t n = a.size();
  if (b.size() != n)
    return std::numeric_limits<double>::infinity();
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dist[i * n + j] = m.distance(a[i], b[j]);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < n && worst < best; ++i)
      worst = std::max(worst, dist[i * n + perm[i]]);
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

template <class M>
bool contexts_equal(const M &m, const Context<EffectOf<M>> &a, const Context<EffectOf<M>> &b,
                    std::optional<double> tol = std::nullopt) {
  return context_distance(m, a, b) <= tol.value_or(m.tolerances().eq_tol);
}

struct ThirdContextWitness {
  HilbertEffect c;                 ///< ½a_1 + ½b_1
  Context<HilbertEffect> context;  ///< spectral context of c
  std::vector<double> coefficients;
  double distance_to_a = 0.0;
  double distance_to_b = 0.0;

  bool distinct(double threshold = 1e-6) const {
    return distance_to_a > threshold && distance_to_b > threshold;
  }
};

/// c = ½a_1 + ½b_1 for disjoint contexts A and B, with its spectral context.
inline ThirdContextWitness third_context_witness(const Context<HilbertEffect> &a,
                                                 const Context<HilbertEffect> &b,
                                                 const ToleranceConfig &tol = {}) {
  if (a.size() == 0 || b.size() == 0 || a[0].dim() != b[0].dim())
    throw Error(Errc::ModelMismatch, "contexts from different models");
  const HilbertModel m(a[0].dim(), tol);
  for (const auto &x : a.atoms)
    for (const auto &y : b.atoms)
      if (m.distance(x, y) <= tol.eq_tol)
        throw Error(Errc::ContextsNotDisjoint, "contexts share an atom");
  const auto sum = m.orth_sum(m.scale(0.5, a[0]), m.scale(0.5, b[0]));
  ThirdContextWitness w{*sum, {}, {}, 0.0, 0.0};
  auto res = spectral_resolution(m, w.c);
  w.context = std::move(res.context);
  w.coefficients = std::move(res.coefficients);
  w.distance_to_a = context_distance(m, w.context, a);
  w.distance_to_b = context_distance(m, w.context, b);
  return w;
}

/// U_t = Σ_j e^{iθ_j t} P(â_j) in the coordinates of A: diag(e^{iθ_j t}).
template <class E>
ComplexMatrix dynamics_unitary(const Context<E> &a, const std::vector<double> &theta, double t) {
  if (theta.size() != a.size())
    throw Error(Errc::LengthMismatch, "one frequency per context atom required");
  ComplexMatrix u(a.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    u(j, j) = std::polar(1.0, theta[j] * t);
  return u;
}

/// The same group expressed on C^d: Σ_j e^{iθ_j t} a_j.
inline ComplexMatrix dynamics_unitary_ambient(const Context<HilbertEffect> &a,
                                              const std::vector<double> &theta, double t) {
  if (theta.size() != a.size() || a.size() == 0)
    throw Error(Errc::LengthMismatch, "one frequency per context atom required");
  ComplexMatrix u(a[0].dim());
  for (std::size_t j = 0; j < a.size(); ++j)
    u += std::polar(1.0, theta[j] * t) * a[j].matrix();
  return u;
}

} // namespace effectalg
