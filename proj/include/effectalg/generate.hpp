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
 * Standalone random instance generation. Output is a pure function of the
 * GeneratorSpec: the stream is Rng(seed, hash_name(kind)).
 */

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "effectalg/classical.hpp"
#include "effectalg/effect.hpp"
#include "effectalg/error.hpp"
#include "effectalg/hilbert.hpp"
#include "effectalg/io.hpp"
#include "effectalg/rng.hpp"

namespace effectalg {

enum class InstanceKind { Effect, Sharp, Context, StateVector, StateDensity, Measurement };

inline std::string to_string(InstanceKind k) {
  switch (k) {
  case InstanceKind::Effect: return "effect";
  case InstanceKind::Sharp: return "sharp";
  case InstanceKind::Context: return "context";
  case InstanceKind::StateVector: return "state-vector";
  case InstanceKind::StateDensity: return "state-density";
  case InstanceKind::Measurement: return "measurement";
  }
  return "effect";
}

inline InstanceKind parse_instance_kind(const std::string &name) {
  for (auto k : {InstanceKind::Effect, InstanceKind::Sharp, InstanceKind::Context,
                 InstanceKind::StateVector, InstanceKind::StateDensity, InstanceKind::Measurement})
    if (to_string(k) == name)
      return k;
  throw Error(Errc::InvalidSpec, "unknown instance kind '" + name + "'");
}

struct GeneratorSpec {
  ModelKind model = ModelKind::Hilbert;
  std::size_t dim = 2;
  InstanceKind kind = InstanceKind::Effect;
  std::uint64_t seed = 0;
};

/// An effect, a state, or a list of effects (context or measurement).
using Generated = std::variant<Effect, State, std::vector<Effect>>;

namespace detail {

template <class M>
Generated generate_in(const M &m, InstanceKind kind, Rng &rng) {
  auto lift = [](const auto &xs) {
    std::vector<Effect> out;
    for (const auto &x : xs)
      out.emplace_back(x);
    return out;
  };
  switch (kind) {
  case InstanceKind::Effect: return Effect(m.random_effect(rng));
  case InstanceKind::Sharp: return Effect(m.random_sharp(rng));
  case InstanceKind::Context: return lift(m.random_context(rng));
  case InstanceKind::StateVector: return State(m.random_pure_state(rng));
  case InstanceKind::StateDensity: return State(m.random_state(rng));
  case InstanceKind::Measurement: return lift(m.random_measurement(rng));
  }
  throw Error(Errc::InvalidSpec, "unknown instance kind");
}

} // namespace detail

inline Generated generate(const GeneratorSpec &spec) {
  if (spec.dim == 0)
    throw Error(Errc::InvalidSpec, "dimension must be at least 1");
  Rng rng(spec.seed, hash_name(to_string(spec.kind)));
  if (spec.model == ModelKind::Classical)
    return detail::generate_in(ClassicalModel(spec.dim), spec.kind, rng);
  return detail::generate_in(HilbertModel(spec.dim), spec.kind, rng);
}

/// Contexts as {"atoms": [...]}, measurements as {"elements": [...]}.
inline json generated_to_json(const Generated &g, InstanceKind kind) {
  if (const auto *e = std::get_if<Effect>(&g))
    return json(*e);
  if (const auto *s = std::get_if<State>(&g))
    return json(*s);
  return effect_list_to_json(std::get<std::vector<Effect>>(g),
                             kind == InstanceKind::Context ? "atoms" : "elements");
}

} // namespace effectalg
