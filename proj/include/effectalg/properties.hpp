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
 * Seeded property checking. A property pairs a generator of named instances
 * with a residual function; a residual above the property's tolerance is a
 * violation. Instances serialize to JSON, so every violation can be replayed
 * by parsing its instance and calling the residual again.
 *
 * Trial t of property p draws from Rng(mix(seed, t), hash_name(p.id)), so a
 * report does not depend on how trials are split across threads.
 */

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "effectalg/error.hpp"
#include "effectalg/io.hpp"
#include "effectalg/report.hpp"
#include "effectalg/rng.hpp"
#include "effectalg/sequential.hpp"

namespace effectalg {

/// Residual thresholds, one per family of checks.
struct SuiteTolerances {
  double axiom = 1e-8;        ///< E/C/S axioms, order properties, representation
  double conditioning = 1e-9; ///< conditional expectation identities
  double b1 = 1e-9;           ///< trace identity and rank-one normalization
  double exact = 1e-12;       ///< total probability and Bayes on compatible input
  double transition = 1e-10;  ///< transition probabilities, dynamics, hat states
  double recovery = 1e-6;     ///< Vandermonde atom recovery

  std::map<std::string, double> as_map() const {
    return {{"axiom", axiom},   {"conditioning", conditioning}, {"b1", b1},
            {"exact", exact},   {"transition", transition},     {"recovery", recovery}};
  }
};

enum class TolKind { Axiom, Conditioning, B1, Exact, Transition, Recovery };

inline double pick(const SuiteTolerances &t, TolKind k) {
  switch (k) {
  case TolKind::Axiom: return t.axiom;
  case TolKind::Conditioning: return t.conditioning;
  case TolKind::B1: return t.b1;
  case TolKind::Exact: return t.exact;
  case TolKind::Transition: return t.transition;
  case TolKind::Recovery: return t.recovery;
  }
  return t.axiom;
}

/// Named effects, scalars, states and effect lists making up one test case.
template <class M>
struct Instance {
  std::map<std::string, EffectOf<M>> effects;
  std::map<std::string, double> scalars;
  std::map<std::string, StateOf<M>> states;
  std::map<std::string, std::vector<EffectOf<M>>> lists;

  Instance &set(const std::string &name, EffectOf<M> e) {
    effects.insert_or_assign(name, std::move(e));
    return *this;
  }
  Instance &set(const std::string &name, double x) {
    scalars.insert_or_assign(name, x);
    return *this;
  }
  Instance &set(const std::string &name, StateOf<M> s) {
    states.insert_or_assign(name, std::move(s));
    return *this;
  }
  Instance &set(const std::string &name, std::vector<EffectOf<M>> list) {
    lists.insert_or_assign(name, std::move(list));
    return *this;
  }

  const EffectOf<M> &effect(const std::string &name) const { return lookup(effects, name); }
  double scalar(const std::string &name) const { return lookup(scalars, name); }
  const StateOf<M> &state(const std::string &name) const { return lookup(states, name); }
  const std::vector<EffectOf<M>> &list(const std::string &name) const {
    return lookup(lists, name);
  }

  json to_json() const {
    json j = json::object();
    for (const auto &[k, v] : effects)
      j[k] = v;
    for (const auto &[k, v] : scalars)
      j[k] = v;
    for (const auto &[k, v] : states)
      j[k] = v;
    for (const auto &[k, v] : lists) {
      json arr = json::array();
      for (const auto &e : v)
        arr.push_back(e);
      j[k] = std::move(arr);
    }
    return j;
  }

  static Instance from_json(const json &j) {
    Instance in;
    for (const auto &[k, v] : j.items()) {
      if (v.is_number())
        in.scalars[k] = v.template get<double>();
      else if (v.is_array())
        for (const auto &e : v)
          in.lists[k].push_back(e.template get<EffectOf<M>>());
      else if (v.is_object() && v.contains("kind"))
        in.states.emplace(k, v.template get<StateOf<M>>());
      else if (v.is_object() && v.contains("model"))
        in.effects.emplace(k, v.template get<EffectOf<M>>());
      else
        throw Error(Errc::ParseError, "instance field '" + k + "' has no recognizable type");
    }
    // Empty lists serialize as [] and must come back as present-but-empty.
    for (const auto &[k, v] : j.items())
      if (v.is_array() && v.empty())
        in.lists[k];
    return in;
  }

private:
  template <class Map>
  static const typename Map::mapped_type &lookup(const Map &map, const std::string &name) {
    auto it = map.find(name);
    if (it == map.end())
      throw Error(Errc::ParseError, "instance has no field '" + name + "'");
    return it->second;
  }
};

template <class M>
struct Property {
  std::string id;
  TolKind tol_kind = TolKind::Axiom;
  /// nullopt when the sampled premise does not hold; such trials are skipped.
  std::function<std::optional<Instance<M>>(const M &, Rng &)> generate;
  /// Nonnegative; 0 when the property holds exactly.
  std::function<double(const M &, const Instance<M> &, double tol)> residual;
};

struct RunOptions {
  std::string suite;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  SuiteTolerances tolerances;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

namespace detail {

inline double finite_residual(double r) {
  if (std::isnan(r))
    return 1.0;
  return std::min(r, 1e300);
}

template <class M>
VerificationReport run_trial_range(const M &m, const std::vector<Property<M>> &props,
                                   const RunOptions &opt, std::uint64_t begin, std::uint64_t end) {
  VerificationReport r;
  for (std::uint64_t t = begin; t < end; ++t) {
    for (const auto &p : props) {
      Rng rng(mix(opt.seed, t), hash_name(p.id));
      const double tol = pick(opt.tolerances, p.tol_kind);
      std::optional<Instance<M>> inst;
      try {
        inst = p.generate(m, rng);
      } catch (const Error &e) {
        ++r.trials;
        r.violations.push_back({p.id, 1.0, json{{"error", e.what()}, {"trial", t}}});
        continue;
      }
      if (!inst)
        continue;
      ++r.trials;
      try {
        const double res = finite_residual(p.residual(m, *inst, tol));
        if (!(res <= tol))
          r.violations.push_back({p.id, res, inst->to_json()});
      } catch (const Error &e) {
        json j = inst->to_json();
        j["error"] = e.what();
        r.violations.push_back({p.id, 1.0, std::move(j)});
      }
    }
  }
  return r;
}

} // namespace detail

/// Runs every property for trials 0..opt.trials-1.
template <class M>
VerificationReport run_properties(const M &m, const std::vector<Property<M>> &props,
                                  const RunOptions &opt) {
  const auto start = std::chrono::steady_clock::now();
  unsigned workers = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                      : opt.threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, opt.trials)));
  std::vector<VerificationReport> parts(workers);
  if (workers == 1) {
    parts[0] = detail::run_trial_range(m, props, opt, 0, opt.trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (opt.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min<std::uint64_t>(opt.trials, w * chunk);
      const std::uint64_t e = std::min<std::uint64_t>(opt.trials, b + chunk);
      pool.emplace_back([&, w, b, e] { parts[w] = detail::run_trial_range(m, props, opt, b, e); });
    }
    for (auto &t : pool)
      t.join();
  }
  VerificationReport report;
  report.suite = opt.suite;
  report.model = m.name();
  report.dim = m.dim();
  report.seed = opt.seed;
  report.tolerances = opt.tolerances.as_map();
  for (const auto &p : parts) {
    report.trials += p.trials;
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Recomputes the residual recorded in a violation from its instance.
template <class M>
double replay(const M &m, const std::vector<Property<M>> &props, const Violation &v,
              const SuiteTolerances &tol = {}) {
  for (const auto &p : props)
    if (p.id == v.axiom)
      return detail::finite_residual(
          p.residual(m, Instance<M>::from_json(v.instance), pick(tol, p.tol_kind)));
  throw Error(Errc::InvalidSuiteName, "no property named '" + v.axiom + "'");
}

} // namespace effectalg
