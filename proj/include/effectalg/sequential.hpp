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
 * Sequential-product structure shared by both concrete models: compatibility,
 * functions of an effect, recovery of spectral atoms by Vandermonde
 * interpolation, conditional probability, Bayes' rule, the law of total
 * probability and conditional expectation given a sharp measurement.
 *
 * Everything here is a template over a model type (ClassicalModel,
 * HilbertModel, or anything exposing the same members).
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "effectalg/error.hpp"
#include "effectalg/numeric.hpp"

namespace effectalg {

/// Denominators at or below this are refused when conditioning.
inline constexpr double kProbFloor = 1e-12;

/// p(x) = Σ_k coeffs[k] x^k. Coefficients may lie outside [0, 1].
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  friend bool operator==(const Polynomial &, const Polynomial &) = default;
};

template <class M>
using EffectOf = typename M::effect_type;
template <class M>
using StateOf = typename M::state_type;

/// Σ coefficients[i]·effects[i] in the ambient space (no interval check).
template <class M>
typename M::payload_type ambient_combination(const M &m, const std::vector<double> &coefficients,
                                             const std::vector<EffectOf<M>> &effects) {
  if (coefficients.size() != effects.size())
    throw Error(Errc::LengthMismatch, "coefficient and effect counts differ");
  auto acc = m.ambient_zero();
  for (std::size_t i = 0; i < effects.size(); ++i)
    m.axpy(acc, coefficients[i], m.ambient(effects[i]));
  return acc;
}

/// Throws NotMeasurement unless the elements sum to the unit within eq_tol.
template <class M>
void require_measurement(const M &m, const std::vector<EffectOf<M>> &elements) {
  if (elements.empty())
    throw Error(Errc::NotMeasurement, "measurement has no elements");
  const auto total = ambient_combination(m, std::vector<double>(elements.size(), 1.0), elements);
  auto diff = m.ambient(m.unit());
  m.axpy(diff, -1.0, total);
  if (m.ambient_norm(diff) > m.tolerances().eq_tol * std::max(1.0, m.norm(m.unit())))
    throw Error(Errc::NotMeasurement, "elements do not sum to the unit");
}

template <class M>
bool is_sharp_measurement(const M &m, const std::vector<EffectOf<M>> &elements) {
  return std::all_of(elements.begin(), elements.end(),
                     [&](const auto &a) { return m.is_sharp(a); });
}

/// a|b: a∘b = b∘a within tol (default eq_tol).
template <class M>
bool compatible(const M &m, const EffectOf<M> &a, const EffectOf<M> &b,
                std::optional<double> tol = std::nullopt) {
  const double t = tol.value_or(m.tolerances().eq_tol);
  return m.distance(m.seq_product(a, b), m.seq_product(b, a)) <= t * std::max(1.0, m.norm(a));
}

/// Σ α_i a^i with a^0 = unit, evaluated in the ambient space. No interval
/// check; see function_of_effect.
template <class M>
typename M::payload_type polynomial_ambient(const M &m, const EffectOf<M> &a, const Polynomial &p) {
  auto acc = m.ambient_zero();
  for (std::size_t k = 0; k < p.coeffs.size(); ++k)
    m.axpy(acc, p.coeffs[k], m.ambient_power(a, k));
  return acc;
}

/// Σ α_i a^i, which must land in [0, unit] (within clip_tol).
template <class M>
EffectOf<M> function_of_effect(const M &m, const EffectOf<M> &a, const Polynomial &p) {
  try {
    return m.make_effect(polynomial_ambient(m, a, p));
  } catch (const Error &e) {
    if (e.code() == Errc::NotEffect)
      throw Error(Errc::ResultNotEffect, "polynomial of the effect leaves the unit interval");
    throw;
  }
}

struct VandermondeRecovery {
  /// One interpolating polynomial per distinct coefficient value.
  std::vector<Polynomial> polynomials;
  /// clusters[k] lists the context indices recovered by polynomials[k].
  std::vector<std::vector<std::size_t>> clusters;
};

/**
 * Given a = Σ λ_i a_i over a context, solves the Vandermonde system in the
 * distinct values λ so that p_k(λ_i) = 1 on cluster k and 0 elsewhere; then
 * p_k(a) is the sum of the atoms in cluster k.
 *
 * Coefficients closer than cluster_tol collide. With merge_clusters=false the
 * collision raises DuplicateCoefficients; with merge_clusters=true each
 * cluster is solved at its mean and yields an eigenprojection (possibly of
 * rank > 1).
 */
template <class M>
VandermondeRecovery recover_atoms_vandermonde(const M &m, const EffectOf<M> &a,
                                              const std::vector<double> &lambda,
                                              const std::vector<EffectOf<M>> &context,
                                              bool merge_clusters = false) {
  const std::size_t n = context.size();
  if (lambda.size() != n || n == 0)
    throw Error(Errc::LengthMismatch, "one coefficient per context atom required");
  const auto rebuilt = m.make_effect(ambient_combination(m, lambda, context));
  if (m.distance(rebuilt, a) > m.tolerances().eq_tol * std::max(1.0, m.norm(a)))
    throw Error(Errc::InconsistentDecomposition, "a differs from the given combination");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return lambda[i] < lambda[j]; });
  VandermondeRecovery out;
  std::vector<double> representatives;
  for (std::size_t pos = 0; pos < n;) {
    std::size_t end = pos + 1;
    while (end < n && lambda[order[end]] - lambda[order[end - 1]] <= m.tolerances().cluster_tol)
      ++end;
    if (end - pos > 1 && !merge_clusters)
      throw Error(Errc::DuplicateCoefficients, "coefficients closer than cluster_tol");
    std::vector<std::size_t> members(order.begin() + pos, order.begin() + end);
    std::sort(members.begin(), members.end());
    double mean = 0.0;
    for (std::size_t i : members)
      mean += lambda[i];
    representatives.push_back(mean / static_cast<double>(members.size()));
    out.clusters.push_back(std::move(members));
    pos = end;
  }
  // Report clusters in order of their first context index.
  std::vector<std::size_t> cluster_order(out.clusters.size());
  std::iota(cluster_order.begin(), cluster_order.end(), 0);
  std::sort(cluster_order.begin(), cluster_order.end(), [&](std::size_t x, std::size_t y) {
    return out.clusters[x].front() < out.clusters[y].front();
  });

  const std::size_t k = representatives.size();
  std::vector<double> vandermonde(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    double power = 1.0;
    for (std::size_t c = 0; c < k; ++c) {
      vandermonde[r * k + c] = power;
      power *= representatives[r];
    }
  }
  VandermondeRecovery sorted;
  for (std::size_t idx : cluster_order) {
    std::vector<double> rhs(k, 0.0);
    rhs[idx] = 1.0;
    sorted.polynomials.push_back(Polynomial{solve_linear(vandermonde, rhs)});
    sorted.clusters.push_back(out.clusters[idx]);
  }
  return sorted;
}

/// ω(b|a) = ω(a∘b)/ω(a)
template <class M>
double conditional_probability(const M &m, const StateOf<M> &omega, const EffectOf<M> &a,
                               const EffectOf<M> &b, double prob_floor = kProbFloor) {
  const double wa = m.eval(omega, a);
  if (wa <= prob_floor)
    throw Error(Errc::ConditioningOnNull, "conditioning on an effect of probability " +
                                              std::to_string(wa));
  double p = m.eval(omega, m.seq_product(a, b)) / wa;
  if (p > 1.0 && p <= 1.0 + 1e-12)
    p = 1.0;
  if (p < 0.0 && p >= -1e-12)
    p = 0.0;
  return p;
}

struct BayesResult {
  double direct;    ///< ω(a_i|b)
  double bayes_rhs; ///< ω(b|a_i)ω(a_i)/ω(b)
  double residual;  ///< |direct − bayes_rhs|
};

template <class M>
BayesResult bayes_posterior(const M &m, const StateOf<M> &omega,
                            const std::vector<EffectOf<M>> &measurement, const EffectOf<M> &b,
                            std::size_t i, double prob_floor = kProbFloor) {
  if (i >= measurement.size())
    throw Error(Errc::LengthMismatch, "measurement index out of range");
  require_measurement(m, measurement);
  const auto &ai = measurement[i];
  const double wb = m.eval(omega, b);
  const double wai = m.eval(omega, ai);
  if (wb <= prob_floor || wai <= prob_floor)
    throw Error(Errc::ConditioningOnNull, "Bayes' rule needs ω(b), ω(a_i) > floor");
  const double direct = conditional_probability(m, omega, b, ai, prob_floor);
  const double rhs = conditional_probability(m, omega, ai, b, prob_floor) * wai / wb;
  return {direct, rhs, std::abs(direct - rhs)};
}

/// |ω(b) − Σ_i ω(a_i∘b)|
template <class M>
double total_probability_residual(const M &m, const StateOf<M> &omega,
                                  const std::vector<EffectOf<M>> &measurement,
                                  const EffectOf<M> &b) {
  require_measurement(m, measurement);
  double total = 0.0;
  for (const auto &a : measurement)
    total += m.eval(omega, m.seq_product(a, b));
  return std::abs(m.eval(omega, b) - total);
}

/// Σ_i â_i(b) a_i, with â the model's hat state of a sharp element.
template <class M>
typename M::payload_type measurable_part(const M &m, const EffectOf<M> &b,
                                         const std::vector<EffectOf<M>> &sharp_family) {
  std::vector<double> coefficients;
  for (const auto &a : sharp_family)
    coefficients.push_back(m.hat_eval(a, b));
  return ambient_combination(m, coefficients, sharp_family);
}

/// Distance from b to Σ_i â_i(b) a_i; zero iff b is measurable relative to
/// the sharp family.
template <class M>
double measurability_residual(const M &m, const EffectOf<M> &b,
                              const std::vector<EffectOf<M>> &sharp_family) {
  auto diff = m.ambient(b);
  m.axpy(diff, -1.0, measurable_part(m, b, sharp_family));
  return m.ambient_norm(diff);
}

template <class M>
bool is_measurable(const M &m, const EffectOf<M> &b, const std::vector<EffectOf<M>> &sharp_family,
                   std::optional<double> tol = std::nullopt) {
  return measurability_residual(m, b, sharp_family) <= tol.value_or(m.tolerances().eq_tol);
}

/**
 * E_ω(b|A) = Σ ω(b|a_i) a_i over the elements with ω(a_i) > prob_floor, for a
 * sharp measurement A. Terms with null weight are dropped.
 */
template <class M>
EffectOf<M> conditional_expectation(const M &m, const StateOf<M> &omega, const EffectOf<M> &b,
                                    const std::vector<EffectOf<M>> &measurement,
                                    double prob_floor = kProbFloor) {
  require_measurement(m, measurement);
  if (!is_sharp_measurement(m, measurement))
    throw Error(Errc::MeasurementNotSharp, "conditional expectation needs a sharp measurement");
  std::vector<double> coefficients;
  std::vector<EffectOf<M>> retained;
  for (const auto &a : measurement) {
    if (m.eval(omega, a) <= prob_floor)
      continue;
    coefficients.push_back(conditional_probability(m, omega, a, b, prob_floor));
    retained.push_back(a);
  }
  if (retained.empty())
    throw Error(Errc::AllWeightsNull, "every measurement element has null probability");
  return m.make_effect(ambient_combination(m, coefficients, retained));
}

} // namespace effectalg
