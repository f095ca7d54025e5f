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
 * Model-independent effect-algebra interface. `Effect` and `State` carry a
 * model tag (classical(n) or hilbert(d)); the free functions dispatch to the
 * concrete model and report ModelMismatch when tags or sizes disagree.
 * Partiality of ⊕ is an ordinary outcome: orth_sum returns std::nullopt when
 * the sum leaves the unit interval.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "effectalg/classical.hpp"
#include "effectalg/error.hpp"
#include "effectalg/hilbert.hpp"
#include "effectalg/numeric.hpp"

namespace effectalg {

enum class ModelKind { Classical, Hilbert };

inline std::string to_string(ModelKind k) {
  return k == ModelKind::Classical ? "classical" : "hilbert";
}

inline ModelKind parse_model_kind(const std::string &name) {
  if (name == "classical")
    return ModelKind::Classical;
  if (name == "hilbert")
    return ModelKind::Hilbert;
  throw Error(Errc::InvalidSpec, "unknown model '" + name + "'");
}

class Effect {
public:
  Effect() = default;
  Effect(FuzzyEvent f) : value_(std::move(f)) {}
  Effect(HilbertEffect h) : value_(std::move(h)) {}

  ModelKind model() const noexcept {
    return std::holds_alternative<FuzzyEvent>(value_) ? ModelKind::Classical : ModelKind::Hilbert;
  }
  std::size_t dim() const {
    return std::visit([](const auto &e) -> std::size_t {
      if constexpr (std::is_same_v<std::decay_t<decltype(e)>, FuzzyEvent>)
        return e.size();
      else
        return e.dim();
    }, value_);
  }
  const FuzzyEvent &classical() const { return std::get<FuzzyEvent>(value_); }
  const HilbertEffect &hilbert() const { return std::get<HilbertEffect>(value_); }
  const std::variant<FuzzyEvent, HilbertEffect> &variant() const noexcept { return value_; }

  friend bool operator==(const Effect &, const Effect &) = default;

private:
  std::variant<FuzzyEvent, HilbertEffect> value_;
};

class State {
public:
  State() = default;
  State(ClassicalState s) : value_(std::move(s)) {}
  State(HilbertState s) : value_(std::move(s)) {}

  ModelKind model() const noexcept {
    return std::holds_alternative<ClassicalState>(value_) ? ModelKind::Classical
                                                          : ModelKind::Hilbert;
  }
  std::size_t dim() const {
    return model() == ModelKind::Classical ? classical().size() : hilbert().dim();
  }
  const ClassicalState &classical() const { return std::get<ClassicalState>(value_); }
  const HilbertState &hilbert() const { return std::get<HilbertState>(value_); }

  friend bool operator==(const State &, const State &) = default;

private:
  std::variant<ClassicalState, HilbertState> value_;
};

/// Unital positive functional on the ambient space: x ↦ Σ μ_i x_i.
struct ClassicalFunctional {
  std::vector<double> weights;
  double operator()(std::span<const double> x) const {
    if (x.size() != weights.size())
      throw Error(Errc::DimMismatch, "functional size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      s += weights[i] * x[i];
    return s;
  }
};

/// Unital positive functional on Hermitian matrices: X ↦ tr(G X).
struct HilbertFunctional {
  ComplexMatrix kernel;
  double operator()(const ComplexMatrix &x) const {
    kernel.require_same_dim(x);
    return (kernel * x).trace().real();
  }
};

using LinearFunctional = std::variant<ClassicalFunctional, HilbertFunctional>;

// Per-model state extension and order witnesses.

inline ClassicalFunctional extend_state(const ClassicalState &s) {
  return {s.measure.weights()};
}

inline HilbertFunctional extend_state(const HilbertState &s) { return {s.density_matrix()}; }

/// Dirac state at the coordinate where a exceeds b the most, or nullopt if
/// a ≤ b.
inline std::optional<ClassicalState> order_witness(const ClassicalModel &m, const FuzzyEvent &a,
                                                   const FuzzyEvent &b) {
  if (m.leq(a, b))
    return std::nullopt;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] - b[i] > a[worst] - b[worst])
      worst = i;
  return ClassicalState::dirac(a.size(), worst);
}

/// Vector state on the eigenvector of b − a with the most negative
/// eigenvalue, or nullopt if a ≤ b.
inline std::optional<HilbertState> order_witness(const HilbertModel &m, const HilbertEffect &a,
                                                 const HilbertEffect &b) {
  if (m.leq(a, b))
    return std::nullopt;
  const EigenDecomposition eig = hermitian_eigh(b.matrix() - a.matrix(), m.tolerances());
  return HilbertState::vector(eig.vector(0));
}

namespace detail {

inline void require_same_model(const Effect &a, const Effect &b) {
  if (a.model() != b.model() || a.dim() != b.dim())
    throw Error(Errc::ModelMismatch, to_string(a.model()) + "(" + std::to_string(a.dim()) +
                                         ") vs " + to_string(b.model()) + "(" +
                                         std::to_string(b.dim()) + ")");
}

inline void require_same_model(const State &s, const Effect &a) {
  if (s.model() != a.model() || s.dim() != a.dim())
    throw Error(Errc::ModelMismatch, "state and effect belong to different models");
}

/// Calls fn(model, a-payload, b-payload) on the matching concrete model.
template <class Fn>
decltype(auto) dispatch(const Effect &a, const Effect &b, const ToleranceConfig &tol, Fn &&fn) {
  require_same_model(a, b);
  if (a.model() == ModelKind::Classical)
    return fn(ClassicalModel(a.dim(), tol), a.classical(), b.classical());
  return fn(HilbertModel(a.dim(), tol), a.hilbert(), b.hilbert());
}

} // namespace detail

inline Effect zero_effect(ModelKind kind, std::size_t dim) {
  if (kind == ModelKind::Classical)
    return ClassicalModel(dim).zero();
  return HilbertModel(dim).zero();
}

inline Effect unit_effect(ModelKind kind, std::size_t dim) {
  if (kind == ModelKind::Classical)
    return ClassicalModel(dim).unit();
  return HilbertModel(dim).unit();
}

inline std::optional<Effect> orth_sum(const Effect &a, const Effect &b,
                                      const ToleranceConfig &tol = {}) {
  return detail::dispatch(a, b, tol, [](const auto &m, const auto &x, const auto &y) {
    auto s = m.orth_sum(x, y);
    return s ? std::optional<Effect>(std::move(*s)) : std::nullopt;
  });
}

inline Effect complement(const Effect &a, const ToleranceConfig &tol = {}) {
  if (a.model() == ModelKind::Classical)
    return ClassicalModel(a.dim(), tol).complement(a.classical());
  return HilbertModel(a.dim(), tol).complement(a.hilbert());
}

inline Effect scalar_mul(double lambda, const Effect &a, const ToleranceConfig &tol = {}) {
  if (a.model() == ModelKind::Classical)
    return ClassicalModel(a.dim(), tol).scale(lambda, a.classical());
  return HilbertModel(a.dim(), tol).scale(lambda, a.hilbert());
}

inline bool leq(const Effect &a, const Effect &b, const ToleranceConfig &tol = {}) {
  return detail::dispatch(a, b, tol, [](const auto &m, const auto &x, const auto &y) {
    return m.leq(x, y);
  });
}

inline Effect seq_product(const Effect &a, const Effect &b, const ToleranceConfig &tol = {}) {
  return detail::dispatch(a, b, tol, [](const auto &m, const auto &x, const auto &y) {
    return Effect(m.seq_product(x, y));
  });
}

inline double state_eval(const State &s, const Effect &a, const ToleranceConfig &tol = {}) {
  detail::require_same_model(s, a);
  if (a.model() == ModelKind::Classical)
    return ClassicalModel(a.dim(), tol).eval(s.classical(), a.classical());
  return HilbertModel(a.dim(), tol).eval(s.hilbert(), a.hilbert());
}

inline LinearFunctional extend_state(const State &s) {
  if (s.model() == ModelKind::Classical)
    return extend_state(s.classical());
  return extend_state(s.hilbert());
}

/// Evaluates an extended state on the ambient payload of an effect.
inline double apply(const LinearFunctional &f, const Effect &a) {
  if (const auto *c = std::get_if<ClassicalFunctional>(&f)) {
    if (a.model() != ModelKind::Classical)
      throw Error(Errc::ModelMismatch, "classical functional on a hilbert effect");
    return (*c)(a.classical().values());
  }
  if (a.model() != ModelKind::Hilbert)
    throw Error(Errc::ModelMismatch, "hilbert functional on a classical effect");
  return std::get<HilbertFunctional>(f)(a.hilbert().matrix());
}

inline std::optional<State> order_witness(const Effect &a, const Effect &b,
                                          const ToleranceConfig &tol = {}) {
  return detail::dispatch(a, b, tol, [](const auto &m, const auto &x, const auto &y) {
    auto w = order_witness(m, x, y);
    return w ? std::optional<State>(std::move(*w)) : std::nullopt;
  });
}

} // namespace effectalg
