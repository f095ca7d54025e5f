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
 * The finite classical effect algebra of fuzzy events on Ω = {0, ..., n-1}
 * with the pointwise sequential product.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effectalg/error.hpp"
#include "effectalg/numeric.hpp"
#include "effectalg/rng.hpp"

namespace effectalg {

/// A [0,1]-valued function on a finite outcome set. Construction clamps
/// entries within clip_tol of the interval and rejects anything further out.
class FuzzyEvent {
public:
  FuzzyEvent() = default;
  explicit FuzzyEvent(std::vector<double> values, const ToleranceConfig &tol = {})
      : values_(std::move(values)) {
    if (values_.empty())
      throw Error(Errc::NotEffect, "fuzzy event needs at least one outcome");
    for (auto &x : values_) {
      if (!std::isfinite(x) || x < -tol.clip_tol || x > 1.0 + tol.clip_tol)
        throw Error(Errc::NotEffect, "fuzzy event value " + std::to_string(x) +
                                         " outside [0,1]");
      x = std::clamp(x, 0.0, 1.0);
    }
  }

  static FuzzyEvent constant(std::size_t n, double value) {
    return FuzzyEvent(std::vector<double>(n, value));
  }

  /// χ_{k}
  static FuzzyEvent indicator(std::size_t n, std::size_t k) {
    std::vector<double> v(n, 0.0);
    v.at(k) = 1.0;
    return FuzzyEvent(std::move(v));
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double> &values() const noexcept { return values_; }

  friend bool operator==(const FuzzyEvent &, const FuzzyEvent &) = default;

private:
  std::vector<double> values_;
};

/// Nonnegative weights summing to one within 1e-12.
class ProbabilityVector {
public:
  ProbabilityVector() = default;
  explicit ProbabilityVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty())
      throw Error(Errc::InvalidState, "probability vector is empty");
    double total = 0.0;
    for (double w : weights_) {
      if (!std::isfinite(w) || w < 0.0)
        throw Error(Errc::InvalidState, "negative or non-finite weight");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw Error(Errc::InvalidState, "weights sum to " + std::to_string(total));
  }

  static ProbabilityVector dirac(std::size_t n, std::size_t k) {
    std::vector<double> w(n, 0.0);
    w.at(k) = 1.0;
    return ProbabilityVector(std::move(w));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double> &weights() const noexcept { return weights_; }

  friend bool operator==(const ProbabilityVector &, const ProbabilityVector &) = default;

private:
  std::vector<double> weights_;
};

/// A state of the classical model: a probability vector, remembering whether
/// it was introduced as a Dirac measure.
struct ClassicalState {
  ProbabilityVector measure;
  std::optional<std::size_t> dirac_index;

  static ClassicalState dirac(std::size_t n, std::size_t k) {
    return {ProbabilityVector::dirac(n, k), k};
  }
  static ClassicalState from_weights(std::vector<double> w) {
    return {ProbabilityVector(std::move(w)), std::nullopt};
  }
  std::size_t size() const noexcept { return measure.size(); }

  friend bool operator==(const ClassicalState &, const ClassicalState &) = default;
};

inline void require_same_size(const FuzzyEvent &f, const FuzzyEvent &g) {
  if (f.size() != g.size())
    throw Error(Errc::DimMismatch, "fuzzy events on " + std::to_string(f.size()) +
                                       " and " + std::to_string(g.size()) + " outcomes");
}

/// f∘g = fg
inline FuzzyEvent pointwise_product(const FuzzyEvent &f, const FuzzyEvent &g) {
  require_same_size(f, g);
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out[i] = f[i] * g[i];
  return FuzzyEvent(std::move(out));
}

inline bool is_sharp_classical(const FuzzyEvent &f, double tol) {
  return std::all_of(f.values().begin(), f.values().end(),
                     [tol](double x) { return x <= tol || x >= 1.0 - tol; });
}

/// The singleton indicators χ_{0}, ..., χ_{n-1}: the only context of the
/// classical algebra on n outcomes.
inline std::vector<FuzzyEvent> unique_context(std::size_t n) {
  if (n == 0)
    throw Error(Errc::InvalidSpec, "outcome count must be positive");
  std::vector<FuzzyEvent> atoms;
  atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    atoms.push_back(FuzzyEvent::indicator(n, i));
  return atoms;
}

/// Coordinates b = ⊕ λ_i a_i over the unique context mapped to the function
/// ω_i ↦ λ_i.
inline FuzzyEvent classical_iso_J(const std::vector<double> &coefficients) {
  for (double c : coefficients)
    if (!(c >= 0.0 && c <= 1.0))
      throw Error(Errc::CoefficientOutOfRange,
                  "coefficient " + std::to_string(c) + " outside [0,1]");
  return FuzzyEvent(coefficients);
}

/// Inverse of classical_iso_J: the coefficient on atom i is read off with the
/// Dirac state at ω_i.
inline std::vector<double> classical_iso_J_inverse(const FuzzyEvent &f) {
  std::vector<double> coefficients(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    coefficients[i] = f[i];
  return coefficients;
}

/// True for singleton indicators (the one-dimensional sharp elements).
inline bool is_one_dimensional_sharp_classical(const FuzzyEvent &f, double tol) {
  if (!is_sharp_classical(f, tol))
    return false;
  return std::count_if(f.values().begin(), f.values().end(),
                       [tol](double x) { return x >= 1.0 - tol; }) == 1;
}

/**
 * Brute-force enumeration of every context of the classical algebra on n
 * outcomes (n ≤ 16). Sharp elements are the 2^n - 1 nonzero indicators; an
 * indicator is kept as one-dimensional only if no indicator strictly below it
 * is nonzero, and contexts are the exact covers of Ω by those atoms.
 */
inline std::vector<std::vector<FuzzyEvent>> enumerate_classical_contexts(std::size_t n) {
  if (n == 0 || n > 16)
    throw Error(Errc::InvalidSpec, "enumeration supports 1 <= n <= 16");
  const unsigned full = (1u << n) - 1u;
  std::vector<unsigned> atoms;
  for (unsigned s = 1; s <= full; ++s) {
    // Any nonzero indicator of a proper subset of s lies below χ_s without
    // being a multiple of it, so only singletons survive.
    const bool one_dimensional = ((s - 1) & s) == 0;
    if (one_dimensional)
      atoms.push_back(s);
  }
  std::vector<std::vector<FuzzyEvent>> contexts;
  std::vector<unsigned> chosen;
  auto search = [&](auto &&self, unsigned covered, std::size_t from) -> void {
    if (covered == full) {
      std::vector<FuzzyEvent> ctx;
      for (unsigned s : chosen) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i)
          v[i] = (s >> i) & 1u ? 1.0 : 0.0;
        ctx.emplace_back(std::move(v));
      }
      contexts.push_back(std::move(ctx));
      return;
    }
    for (std::size_t k = from; k < atoms.size(); ++k) {
      if (atoms[k] & covered)
        continue;
      chosen.push_back(atoms[k]);
      self(self, covered | atoms[k], k + 1);
      chosen.pop_back();
    }
  };
  search(search, 0u, 0);
  return contexts;
}

/// The classical effect algebra E(Ω) with Ω = {0, ..., n-1}.
class ClassicalModel {
public:
  using effect_type = FuzzyEvent;
  using state_type = ClassicalState;
  using payload_type = std::vector<double>;

  explicit ClassicalModel(std::size_t n, ToleranceConfig tol = {}) : n_(n), tol_(tol) {
    if (n == 0)
      throw Error(Errc::InvalidSpec, "classical model needs n >= 1");
    tol_.validate();
  }

  std::string name() const { return "classical"; }
  std::size_t dim() const noexcept { return n_; }
  const ToleranceConfig &tolerances() const noexcept { return tol_; }

  FuzzyEvent zero() const { return FuzzyEvent::constant(n_, 0.0); }
  FuzzyEvent unit() const { return FuzzyEvent::constant(n_, 1.0); }

  void require_member(const FuzzyEvent &a) const {
    if (a.size() != n_)
      throw Error(Errc::DimMismatch, "event has " + std::to_string(a.size()) +
                                         " outcomes, model has " + std::to_string(n_));
  }

  std::optional<FuzzyEvent> orth_sum(const FuzzyEvent &a, const FuzzyEvent &b) const {
    require_member(a);
    require_member(b);
    std::vector<double> s(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      s[i] = a[i] + b[i];
      if (s[i] > 1.0 + tol_.clip_tol)
        return std::nullopt;
    }
    return FuzzyEvent(std::move(s), tol_);
  }

  FuzzyEvent complement(const FuzzyEvent &a) const {
    require_member(a);
    std::vector<double> c(n_);
    for (std::size_t i = 0; i < n_; ++i)
      c[i] = 1.0 - a[i];
    return FuzzyEvent(std::move(c), tol_);
  }

  FuzzyEvent scale(double lambda, const FuzzyEvent &a) const {
    if (!(lambda >= 0.0 && lambda <= 1.0))
      throw Error(Errc::ScalarOutOfRange, "scalar " + std::to_string(lambda));
    require_member(a);
    std::vector<double> c(n_);
    for (std::size_t i = 0; i < n_; ++i)
      c[i] = lambda * a[i];
    return FuzzyEvent(std::move(c), tol_);
  }

  /// max(0, max_i (a_i − b_i)); a ≤ b iff this is at most clip_tol.
  double leq_violation(const FuzzyEvent &a, const FuzzyEvent &b) const {
    require_member(a);
    require_member(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      worst = std::max(worst, a[i] - b[i]);
    return worst;
  }
  bool leq(const FuzzyEvent &a, const FuzzyEvent &b) const {
    return leq_violation(a, b) <= tol_.clip_tol;
  }

  FuzzyEvent seq_product(const FuzzyEvent &a, const FuzzyEvent &b) const {
    require_member(a);
    require_member(b);
    return pointwise_product(a, b);
  }

  double distance(const FuzzyEvent &a, const FuzzyEvent &b) const {
    require_member(a);
    require_member(b);
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
  }
  double norm(const FuzzyEvent &a) const { return distance(a, zero()); }
  bool approx_equal(const FuzzyEvent &a, const FuzzyEvent &b, double tol) const {
    return distance(a, b) <= tol * std::max(1.0, norm(a));
  }

  bool is_sharp(const FuzzyEvent &a) const { return is_sharp_classical(a, tol_.sharp_tol); }
  bool is_one_dimensional_sharp(const FuzzyEvent &a) const {
    return is_one_dimensional_sharp_classical(a, tol_.sharp_tol);
  }

  void require_state(const ClassicalState &s) const {
    if (s.size() != n_)
      throw Error(Errc::DimMismatch, "state size mismatch");
  }

  double eval(const ClassicalState &s, const FuzzyEvent &a) const {
    require_state(s);
    require_member(a);
    double v = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      v += s.measure[i] * a[i];
    return clamp_probability(v);
  }

  /// â(b) for sharp a: the average of b over the support of a, i.e. the
  /// uniform measure on that support. For singleton a this is the Dirac
  /// state at the supporting outcome.
  double hat_eval(const FuzzyEvent &a, const FuzzyEvent &b) const {
    return eval(hat_state(a, false), b);
  }

  ClassicalState hat_state(const FuzzyEvent &a, bool require_atom = true) const {
    require_member(a);
    if (!is_sharp(a) || (require_atom && !is_one_dimensional_sharp(a)))
      throw Error(Errc::NotOneDimensionalSharp, "hat state needs a sharp atom");
    std::vector<double> w(n_, 0.0);
    double count = 0.0;
    std::optional<std::size_t> index;
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i] >= 0.5) {
        w[i] = 1.0;
        count += 1.0;
        index = i;
      }
    if (count == 0.0)
      throw Error(Errc::NotOneDimensionalSharp, "hat state of the zero effect");
    for (auto &x : w)
      x /= count;
    return {ProbabilityVector(std::move(w)), count == 1.0 ? index : std::nullopt};
  }

  // Ambient (unconstrained) vector space operations.
  payload_type ambient(const FuzzyEvent &a) const { return a.values(); }
  payload_type ambient_zero() const { return payload_type(n_, 0.0); }
  void axpy(payload_type &y, double alpha, const payload_type &x) const {
    for (std::size_t i = 0; i < n_; ++i)
      y[i] += alpha * x[i];
  }
  double ambient_norm(const payload_type &x) const {
    double s = 0.0;
    for (double v : x)
      s += v * v;
    return std::sqrt(s);
  }
  /// a^k = a∘a∘...∘a (k factors), a^0 = unit.
  payload_type ambient_power(const FuzzyEvent &a, std::size_t k) const {
    payload_type p(n_, 1.0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n_; ++i)
        p[i] *= a[i];
    return p;
  }
  FuzzyEvent make_effect(payload_type p) const { return FuzzyEvent(std::move(p), tol_); }

  /// Coefficients over the unique context.
  std::pair<std::vector<FuzzyEvent>, std::vector<double>>
  spectral_resolution(const FuzzyEvent &b) const {
    require_member(b);
    return {unique_context(n_), b.values()};
  }

  /// ⟨x, y⟩ = Σ x_i y_i
  double pairing(const FuzzyEvent &x, const FuzzyEvent &y) const {
    require_member(x);
    require_member(y);
    double v = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      v += x[i] * y[i];
    return v;
  }
  /// The weights of a state read as an effect.
  FuzzyEvent state_as_effect(const ClassicalState &s) const {
    require_state(s);
    return FuzzyEvent(s.measure.weights(), tol_);
  }
  /// Sorted ascending.
  std::vector<double> ambient_spectrum(const payload_type &x) const {
    std::vector<double> v = x;
    std::sort(v.begin(), v.end());
    return v;
  }
  /// Dirac states; they separate every pair of distinct events.
  std::vector<ClassicalState> spanning_states() const {
    std::vector<ClassicalState> out;
    for (std::size_t i = 0; i < n_; ++i)
      out.push_back(ClassicalState::dirac(n_, i));
    return out;
  }

  // Random instances.
  FuzzyEvent random_effect(Rng &rng) const {
    double lo = rng.uniform(), hi = rng.uniform();
    if (lo > hi)
      std::swap(lo, hi);
    std::vector<double> v(n_);
    for (auto &x : v)
      x = rng.uniform(lo, hi);
    return FuzzyEvent(std::move(v));
  }

  /// An effect with at least one value in [0.2, 0.8].
  FuzzyEvent random_unsharp(Rng &rng) const {
    std::vector<double> v = random_effect(rng).values();
    v[rng.below(n_)] = rng.uniform(0.2, 0.8);
    return FuzzyEvent(std::move(v));
  }

  FuzzyEvent random_sharp(Rng &rng) const {
    std::vector<double> v(n_);
    for (auto &x : v)
      x = rng.uniform() < 0.5 ? 1.0 : 0.0;
    return FuzzyEvent(std::move(v));
  }

  FuzzyEvent random_atom(Rng &rng) const { return FuzzyEvent::indicator(n_, rng.below(n_)); }

  /// The unique context in a random order.
  std::vector<FuzzyEvent> random_context(Rng &rng) const {
    std::vector<FuzzyEvent> ctx = unique_context(n_);
    for (std::size_t i = n_; i > 1; --i)
      std::swap(ctx[i - 1], ctx[rng.below(i)]);
    return ctx;
  }

  ClassicalState random_state(Rng &rng) const {
    std::vector<double> w(n_);
    double total = 0.0;
    for (auto &x : w) {
      x = -std::log(1.0 - rng.uniform());
      total += x;
    }
    for (auto &x : w)
      x /= total;
    normalize_weights(w);
    return ClassicalState::from_weights(std::move(w));
  }

  ClassicalState random_pure_state(Rng &rng) const {
    return ClassicalState::dirac(n_, rng.below(n_));
  }

  std::vector<FuzzyEvent> random_measurement(Rng &rng) const {
    const std::size_t parts = 2 + rng.below(n_ + 1);
    std::vector<std::vector<double>> raw(parts, std::vector<double>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      double total = 0.0;
      for (auto &r : raw) {
        r[i] = rng.uniform() + 1e-3;
        total += r[i];
      }
      for (auto &r : raw)
        r[i] /= total;
    }
    std::vector<FuzzyEvent> m;
    for (auto &r : raw)
      m.emplace_back(std::move(r), tol_);
    return m;
  }

  /// Indicators of a random partition of Ω into nonempty blocks.
  std::vector<FuzzyEvent> random_sharp_measurement(Rng &rng) const {
    const std::size_t blocks = 1 + rng.below(n_);
    std::vector<std::size_t> label(n_);
    for (std::size_t i = 0; i < n_; ++i)
      label[i] = i < blocks ? i : rng.below(blocks);
    for (std::size_t i = n_; i > 1; --i)
      std::swap(label[i - 1], label[rng.below(i)]);
    std::vector<FuzzyEvent> m;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::vector<double> v(n_);
      for (std::size_t i = 0; i < n_; ++i)
        v[i] = label[i] == b ? 1.0 : 0.0;
      m.emplace_back(std::move(v));
    }
    return m;
  }

  std::pair<FuzzyEvent, FuzzyEvent> random_compatible_pair(Rng &rng) const {
    return {random_effect(rng), random_effect(rng)};
  }

  struct CommutingTriple {
    FuzzyEvent c, a, b; ///< c|a, c|b and a ⊥ b
  };
  CommutingTriple random_commuting_triple(Rng &rng) const {
    FuzzyEvent c = random_effect(rng);
    FuzzyEvent a = random_effect(rng);
    FuzzyEvent b = seq_product(complement(a), random_effect(rng));
    return {std::move(c), std::move(a), std::move(b)};
  }

private:
  static double clamp_probability(double v) {
    if (v < 0.0 && v >= -1e-12)
      return 0.0;
    if (v > 1.0 && v <= 1.0 + 1e-12)
      return 1.0;
    return v;
  }

  static void normalize_weights(std::vector<double> &w) {
    // Push the rounding residue onto the largest weight.
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    auto it = std::max_element(w.begin(), w.end());
    *it += 1.0 - total;
  }

  std::size_t n_;
  ToleranceConfig tol_;
};

} // namespace effectalg
