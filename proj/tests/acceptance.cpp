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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "effectalg/suites.hpp"

using namespace effectalg;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

template <class M>
VerificationReport run_ids(const M &m, const std::vector<std::string> &ids, std::uint64_t trials,
                           std::uint64_t seed = kSeed) {
  std::vector<Property<M>> picked;
  for (auto &p : suite_properties<M>("all"))
    if (std::find(ids.begin(), ids.end(), p.id) != ids.end())
      picked.push_back(std::move(p));
  if (picked.size() != ids.size())
    throw Error(Errc::InvalidSuiteName, "unknown property id in acceptance list");
  return run_properties(m, picked, RunOptions{"acceptance", trials, seed, {}, 1});
}

template <class M>
std::vector<EffectOf<M>> standard(const M &m) {
  std::vector<EffectOf<M>> out;
  for (std::size_t k = 0; k < m.dim(); ++k)
    out.push_back(HilbertEffect::projector(standard_basis_vector(m.dim(), k)));
  return out;
}

Outcome axiom_suites() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t bad = 0, trials = 0;
  auto run = [&](ModelKind kind, std::size_t dim) {
    for (const char *suite : {"effect", "convex", "sea"}) {
      SuiteRequest req;
      req.suite = suite;
      req.model = kind;
      req.dim = dim;
      req.trials = 1000;
      req.seed = kSeed;
      const auto r = run_suite(req);
      trials += r.trials;
      bad += r.violations.size();
      if (!r.clean())
        o.detail << " " << to_string(kind) << dim << "/" << suite << ":" << r.violations.front().axiom;
    }
  };
  for (std::size_t n = 2; n <= 8; ++n)
    run(ModelKind::Classical, n);
  for (std::size_t d : {2u, 3u, 4u, 6u})
    run(ModelKind::Hilbert, d);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << " instances=" << trials << " violations=" << bad << " time=" << secs << "s";
  o.require(bad == 0, "violations");
  o.require(secs < 60.0, "runtime");
  return o;
}

Outcome product_properties() {
  Outcome o;
  const std::vector<std::string> ids{"product-below-first",    "product-monotone",
                                     "idempotent-sharp",       "unsharp-not-idempotent",
                                     "sharp-null-product-orthogonal", "sharp-absorbs-below",
                                     "sharp-order-fixed-point"};
  const auto c = run_ids(ClassicalModel(4), ids, 1000);
  const auto h = run_ids(HilbertModel(3), ids, 1000);
  o.detail << " classical4 instances=" << c.trials << " violations=" << c.violations.size()
           << "; hilbert3 instances=" << h.trials << " violations=" << h.violations.size();
  o.require(c.clean() && h.clean(), "violations");
  o.require(c.trials == 7000 && h.trials == 7000, "instance count");
  return o;
}

Outcome b1_b2() {
  Outcome o;
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto r = run_ids(HilbertModel(d), {"B1", "B2"}, 500);
    o.detail << " d" << d << ":" << r.violations.size() << "/" << r.trials;
    o.require(r.clean() && r.trials == 1000, "d=" + std::to_string(d));
  }
  return o;
}

Outcome vandermonde() {
  Outcome o;
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto r = run_ids(HilbertModel(d), {"vandermonde"}, 200);
    o.detail << " n" << d << ":" << r.violations.size() << "/" << r.trials;
    o.require(r.clean(), "recovery n=" + std::to_string(d));
  }
  const HilbertModel m(2);
  Rng rng(kSeed, hash_name("closed-form"));
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto ctx = m.random_context(rng);
    const double l1 = rng.uniform(0.0, 0.45), l2 = rng.uniform(l1 + 0.05, 1.0);
    const auto a = m.make_effect(ambient_combination(m, {l1, l2}, ctx));
    const auto rec = recover_atoms_vandermonde(m, a, {l1, l2}, ctx);
    const ComplexMatrix closed =
        (1.0 / (l2 - l1)) * (a.matrix() - l1 * ComplexMatrix::identity(2));
    worst = std::max(worst, (polynomial_ambient(m, a, rec.polynomials[1]) - closed).frobenius_norm());
  }
  o.detail << " closed-form max=" << worst;
  o.require(worst <= 1e-10, "closed form");
  return o;
}

Outcome conditional_expectation_checks() {
  Outcome o;
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto r = run_ids(HilbertModel(d),
                           {"E-defining", "E-additive", "E-affine", "E-measurable-factor",
                            "E-decomposition"},
                           500);
    o.detail << " d" << d << ":" << r.violations.size() << "/" << r.trials;
    o.require(r.clean(), "d=" + std::to_string(d));
  }
  return o;
}

Outcome total_probability_bayes() {
  Outcome o;
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto r = run_ids(HilbertModel(d), {"total-probability", "bayes-compatible"}, 500);
    o.detail << " d" << d << ":" << r.violations.size() << "/" << r.trials;
    o.require(r.clean(), "compatible d=" + std::to_string(d));
  }
  const HilbertModel m(2);
  const auto p0 = standard(m)[0], p1 = standard(m)[1];
  const ComplexVector plus{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  const auto pplus = HilbertEffect::projector(plus);
  const double res = total_probability_residual(m, HilbertState::vector(plus), {p0, p1}, pplus);
  const auto bayes =
      bayes_posterior(m, HilbertState::vector(standard_basis_vector(2, 0)), {p0, p1}, pplus, 0);
  o.detail << " fixed residual=" << res << " bayes direct=" << bayes.direct
           << " rhs=" << bayes.bayes_rhs;
  o.require(std::abs(res - 0.5) <= 1e-12, "fixed total probability");
  o.require(std::abs(bayes.direct - 0.5) <= 1e-12 && std::abs(bayes.bayes_rhs - 1.0) <= 1e-12,
            "fixed Bayes");
  return o;
}

Outcome universality() {
  Outcome o;
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto r = run_ids(HilbertModel(d), {"atom-conditioning-universal"}, 500);
    o.detail << " d" << d << ":" << r.violations.size() << "/" << r.trials;
    o.require(r.clean() && r.trials >= 450, "d=" + std::to_string(d));
  }
  return o;
}

Outcome representation() {
  Outcome o;
  for (std::size_t d = 2; d <= 4; ++d) {
    const HilbertModel m(d);
    const auto rt = run_ids(m, {"J-roundtrip"}, 500);
    const auto comm = run_ids(m, {"J-commuting"}, 200);
    const auto non = run_ids(m, {"J-noncommuting"}, 200);
    o.detail << " d" << d << " roundtrip " << rt.violations.size() << "/" << rt.trials
             << " commuting " << comm.violations.size() << "/" << comm.trials << " noncommuting "
             << non.violations.size() << "/" << non.trials;
    o.require(rt.clean() && rt.trials == 500, "roundtrip");
    o.require(comm.clean() && comm.trials == 200, "commuting");
    o.require(non.clean() && non.trials == 200, "noncommuting");
  }
  return o;
}

Outcome classification() {
  Outcome o;
  for (std::size_t n = 2; n <= 8; ++n)
    o.require(classify_algebra(ClassicalModel(n), 200, kSeed).kind == AlgebraClass::Classical,
              "classical n=" + std::to_string(n));
  for (std::size_t d = 2; d <= 4; ++d)
    o.require(classify_algebra(HilbertModel(d), 200, kSeed).kind == AlgebraClass::Hilbertian,
              "hilbert d=" + std::to_string(d));
  o.require(classify_algebra(ClassicalModel(1), 200, kSeed).kind == AlgebraClass::Trivial, "n=1");
  o.require(classify_algebra(HilbertModel(1), 200, kSeed).kind == AlgebraClass::Trivial, "d=1");
  const HilbertModel m(2);
  const Context<HilbertEffect> z{standard(m)};
  const double s = 1.0 / std::numbers::sqrt2;
  const auto jp = rep_J_single_context(m, HilbertEffect::projector(ComplexVector{s, s}), z);
  const auto jm = rep_J_single_context(m, HilbertEffect::projector(ComplexVector{s, -s}), z);
  const double gap = (jp - jm).frobenius_norm();
  o.detail << " classical 2..8, hilbert 2..4, trivial 1; J(P+) - J(P-) = " << gap;
  o.require(gap <= 1e-15, "non-injectivity");
  return o;
}

Outcome third_context() {
  Outcome o;
  for (std::size_t d = 2; d <= 4; ++d) {
    const HilbertModel m(d);
    Rng rng(kSeed, hash_name("third-context") + d);
    std::size_t distinct = 0;
    double closest = 1e300;
    for (int i = 0; i < 100; ++i) {
      const Context<HilbertEffect> a{m.random_context(rng)}, b{m.random_context(rng)};
      const auto w = third_context_witness(a, b);
      distinct += w.distinct(1e-6) && is_context(m, w.context.atoms, 1e-8);
      closest = std::min({closest, w.distance_to_a, w.distance_to_b});
    }
    o.detail << " d" << d << ":" << distinct << "/100 (min distance " << closest << ")";
    o.require(distinct == 100, "d=" + std::to_string(d));
  }
  const HilbertModel m(2);
  const double s = 1.0 / std::numbers::sqrt2;
  const Context<HilbertEffect> pm{{HilbertEffect::projector(ComplexVector{s, s}), HilbertEffect::projector(ComplexVector{s, -s})}};
  const auto w = third_context_witness(Context<HilbertEffect>{standard(m)}, pm);
  const double e0 = std::abs(w.coefficients[0] - (1 + s) / 2);
  const double e1 = std::abs(w.coefficients[1] - (1 - s) / 2);
  o.detail << " fixed eigenvalue errors " << e0 << ", " << e1;
  o.require(e0 <= 1e-10 && e1 <= 1e-10 && w.distinct(), "fixed instance");
  return o;
}

Outcome dynamics() {
  Outcome o;
  double worst_unitary = 0.0, worst_group = 0.0;
  Rng rng(kSeed, hash_name("dynamics"));
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 2 + rng.below(3);
    const HilbertModel m(d);
    const Context<HilbertEffect> a{m.random_context(rng)};
    std::vector<double> theta(d);
    for (auto &x : theta)
      x = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const double t1 = rng.uniform(-2.0, 2.0), t2 = rng.uniform(-2.0, 2.0);
    const ComplexMatrix id = ComplexMatrix::identity(d);
    for (const auto &[u1, u2, u12] :
         {std::tuple{dynamics_unitary(a, theta, t1), dynamics_unitary(a, theta, t2),
                     dynamics_unitary(a, theta, t1 + t2)},
          std::tuple{dynamics_unitary_ambient(a, theta, t1), dynamics_unitary_ambient(a, theta, t2),
                     dynamics_unitary_ambient(a, theta, t1 + t2)}}) {
      worst_unitary = std::max(worst_unitary, (u1.adjoint() * u1 - id).frobenius_norm());
      worst_group = std::max(worst_group, (u12 - u1 * u2).frobenius_norm());
    }
  }
  o.detail << " unitarity max=" << worst_unitary << " group-law max=" << worst_group;
  o.require(worst_unitary <= 1e-10 && worst_group <= 1e-10, "residuals");
  return o;
}

Outcome transition_symmetry() {
  Outcome o;
  double worst = 0.0;
  Rng rng(kSeed, hash_name("transition"));
  for (int i = 0; i < 500; ++i) {
    const HilbertModel m(2 + static_cast<std::size_t>(i % 3));
    const auto a = m.random_atom(rng), b = m.random_atom(rng);
    worst = std::max(worst, std::abs(transition_probability(m, a, b) - transition_probability(m, b, a)));
  }
  o.detail << " 500 pairs, max=" << worst;
  o.require(worst <= 1e-10, "symmetry");
  return o;
}

Outcome fault_injection() {
  Outcome o;
  struct Case {
    Fault fault;
    const char *suite;
    ModelKind model;
  };
  for (const Case &c : {Case{Fault::ClippedSum, "effect", ModelKind::Hilbert},
                        Case{Fault::SymmetrizedProduct, "sea", ModelKind::Hilbert},
                        Case{Fault::NonNormalizedContext, "representation", ModelKind::Hilbert}}) {
    SuiteRequest req;
    req.suite = c.suite;
    req.model = c.model;
    req.dim = 3;
    req.trials = 100;
    req.seed = kSeed;
    req.fault = c.fault;
    const auto r = run_suite(req);
    std::size_t replayed = 0;
    for (const auto &v : r.violations) {
      if (v.instance.contains("error"))
        continue;
      const double again = replay_violation(req, v);
      if (std::abs(again - v.residual) <= 1e-12 + 1e-9 * v.residual)
        ++replayed;
    }
    o.detail << " " << to_string(c.fault) << ":" << r.violations.size() << " violations, "
             << replayed << " replayed";
    o.require(!r.clean() && replayed > 0, to_string(c.fault));
  }
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, Outcome (*)()>> criteria{
      {"axiom suites E/C/S", axiom_suites},
      {"sequential product order properties", product_properties},
      {"B1 trace identity and B2 rank-one normalization", b1_b2},
      {"Vandermonde atom recovery", vandermonde},
      {"conditional expectation identities", conditional_expectation_checks},
      {"total probability and Bayes", total_probability_bayes},
      {"conditioning on atoms is state independent", universality},
      {"representation J round trip and commutation", representation},
      {"classification and single-context non-injectivity", classification},
      {"third context witness", third_context},
      {"dynamics unitarity and group law", dynamics},
      {"transition probability symmetry", transition_symmetry},
      {"fault injection detected and replayable", fault_injection},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " --" << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
