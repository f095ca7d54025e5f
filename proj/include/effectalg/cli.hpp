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
 * The `effectalg` command line. Exit codes: 0 success or clean report,
 * 1 violations found, 2 usage or input error.
 */

#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "effectalg/contexts.hpp"
#include "effectalg/effect.hpp"
#include "effectalg/generate.hpp"
#include "effectalg/io.hpp"
#include "effectalg/report.hpp"
#include "effectalg/sequential.hpp"
#include "effectalg/suites.hpp"

namespace effectalg {

namespace cli {

inline Effect load_effect(const std::string &path) { return read_json_file(path).get<Effect>(); }
inline State load_state(const std::string &path) { return read_json_file(path).get<State>(); }
inline std::vector<Effect> load_list(const std::string &path, const char *key) {
  return effect_list_from_json<Effect>(read_json_file(path), key);
}

template <class T>
std::vector<T> unwrap(const std::vector<Effect> &xs) {
  std::vector<T> out;
  for (const auto &x : xs) {
    if constexpr (std::is_same_v<T, FuzzyEvent>)
      out.push_back(x.classical());
    else
      out.push_back(x.hilbert());
  }
  return out;
}

inline void require_model(ModelKind k, std::size_t dim, const Effect &e) {
  if (e.model() != k || e.dim() != dim)
    throw Error(Errc::ModelMismatch, "inputs come from different models");
}
inline void require_model(ModelKind k, std::size_t dim, const State &s) {
  if (s.model() != k || s.dim() != dim)
    throw Error(Errc::ModelMismatch, "inputs come from different models");
}

/// Runs f(model, unwrap-effect, unwrap-state) on the model of `ref`.
template <class F>
json with_model_of(const Effect &ref, F &&f) {
  if (ref.model() == ModelKind::Classical) {
    const ClassicalModel m(ref.dim());
    return f(m, [](const Effect &e) { return e.classical(); },
             [](const State &s) { return s.classical(); });
  }
  const HilbertModel m(ref.dim());
  return f(m, [](const Effect &e) { return e.hilbert(); },
           [](const State &s) { return s.hilbert(); });
}

inline std::vector<double> standard_theta(std::size_t d) { return std::vector<double>(d, 0.0); }

inline Context<HilbertEffect> load_or_random_context(const std::string &path, std::size_t dim,
                                                     Rng &rng) {
  if (!path.empty())
    return Context<HilbertEffect>{unwrap<HilbertEffect>(load_list(path, "atoms"))};
  return Context<HilbertEffect>{HilbertModel(dim).random_context(rng)};
}

inline json context_json(const Context<HilbertEffect> &ctx) {
  return effect_list_to_json(ctx.atoms, "atoms");
}

} // namespace cli

inline int cli_main(int argc, const char *const *argv, std::ostream &out = std::cout,
                    std::ostream &err = std::cerr) {
  CLI::App app{"Effect-algebra property checker and calculator", "effectalg"};
  app.require_subcommand(1);

  std::string model = "hilbert", suite = "all", json_path, a_path, b_path, state_path,
              meas_path, kind = "effect", fault = "none", format = "text";
  std::size_t dim = 2, index = 0;
  std::uint64_t trials = 100, seed = 0;
  unsigned threads = 1;
  std::optional<double> tol;
  std::vector<double> theta;
  double t = 1.0;

  auto add_model = [&](CLI::App *sub) {
    sub->add_option("--model", model, "classical or hilbert")
        ->check(CLI::IsMember({"classical", "hilbert"}));
    sub->add_option("--dim", dim, "outcomes (classical) or Hilbert dimension")
        ->check(CLI::PositiveNumber);
  };
  auto add_seed = [&](CLI::App *sub) {
    sub->add_option("--seed", seed, "64-bit seed")->envname("EFFECTALG_SEED");
  };
  auto add_json = [&](CLI::App *sub) {
    sub->add_option("--json", json_path, "also write the JSON result to this path");
  };

  auto *check = app.add_subcommand("check", "run a property suite");
  add_model(check);
  add_seed(check);
  add_json(check);
  check->add_option("--trials", trials, "trials per property");
  check->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  check->add_option("--tol", tol, "axiom residual tolerance")->check(CLI::PositiveNumber);
  check->add_option("--threads", threads, "worker threads (0 = all cores)");
  check->add_option("--fault", fault, "inject a broken model")
      ->check(CLI::IsMember({"none", "clipped-sum", "symmetrized-product",
                             "non-normalized-context"}));
  check->add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "json"}));

  auto *seqprod = app.add_subcommand("seqprod", "sequential product a∘b");
  seqprod->add_option("--a", a_path, "effect JSON")->required();
  seqprod->add_option("--b", b_path, "effect JSON")->required();
  add_json(seqprod);

  auto *condexp = app.add_subcommand("condexp", "conditional expectation E_ω(b|m)");
  condexp->add_option("--state", state_path, "state JSON")->required();
  condexp->add_option("--b", b_path, "effect JSON")->required();
  condexp->add_option("--measurement", meas_path, "sharp measurement JSON")->required();
  add_json(condexp);

  auto *condprob = app.add_subcommand("condprob", "conditional probability ω(b|a)");
  condprob->add_option("--state", state_path, "state JSON")->required();
  condprob->add_option("--a", a_path, "effect JSON");
  condprob->add_option("--b", b_path, "effect JSON")->required();
  condprob->add_option("--measurement", meas_path,
                       "measurement JSON; adds total-probability and Bayes figures");
  condprob->add_option("--index", index, "measurement element for the Bayes figures");
  add_json(condprob);

  auto *classify = app.add_subcommand("classify", "classify a model's algebra");
  add_model(classify);
  add_seed(classify);
  add_json(classify);
  std::size_t budget = 200;
  classify->add_option("--trials", budget, "sample budget")->check(CLI::PositiveNumber);

  auto *witness = app.add_subcommand("witness", "third context from two disjoint contexts");
  witness->add_option("--a", a_path, "context JSON (random when omitted)");
  witness->add_option("--b", b_path, "context JSON (random when omitted)");
  witness->add_option("--dim", dim, "dimension for random contexts")->check(CLI::PositiveNumber);
  add_seed(witness);
  add_json(witness);

  auto *dynamics = app.add_subcommand("dynamics", "U_t = diag(e^{iθ_j t}) over a context");
  dynamics->add_option("--a", a_path, "context JSON (standard basis when omitted)");
  dynamics->add_option("--dim", dim, "dimension when no context is given")
      ->check(CLI::PositiveNumber);
  dynamics->add_option("--theta", theta, "frequencies, comma separated")->delimiter(',');
  dynamics->add_option("--t", t, "time");
  add_json(dynamics);

  auto *gen = app.add_subcommand("generate", "print a random instance");
  add_model(gen);
  add_seed(gen);
  add_json(gen);
  gen->add_option("--kind", kind, "instance kind")
      ->check(CLI::IsMember({"effect", "sharp", "context", "state-vector", "state-density",
                             "measurement"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "effectalg: " << e.what() << '\n';
    return 2;
  }

  auto emit = [&](const json &j) {
    out << j.dump(2) << '\n';
    if (!json_path.empty())
      write_text_file(json_path, j.dump(2) + "\n");
  };

  try {
    if (check->parsed()) {
      SuiteRequest req;
      req.suite = suite;
      req.model = parse_model_kind(model);
      req.dim = dim;
      req.trials = trials;
      req.seed = seed;
      req.threads = threads;
      req.fault = parse_fault(fault);
      if (tol)
        req.tolerances.axiom = *tol;
      const VerificationReport r = run_suite(req);
      if (format == "json")
        out << json(r).dump(2) << '\n';
      else
        out << report_text(r);
      if (!json_path.empty())
        emit_report(r, json_path, ReportFormat::Json);
      return r.clean() ? 0 : 1;
    }

    if (seqprod->parsed()) {
      const Effect a = cli::load_effect(a_path), b = cli::load_effect(b_path);
      emit(json(seq_product(a, b)));
      return 0;
    }

    if (condexp->parsed()) {
      const Effect b = cli::load_effect(b_path);
      const State s = cli::load_state(state_path);
      const auto meas = cli::load_list(meas_path, "elements");
      cli::require_model(b.model(), b.dim(), s);
      for (const auto &x : meas)
        cli::require_model(b.model(), b.dim(), x);
      emit(cli::with_model_of(b, [&](const auto &m, auto eff, auto st) {
        using E = typename std::decay_t<decltype(m)>::effect_type;
        return json(Effect(conditional_expectation(m, st(s), eff(b), cli::unwrap<E>(meas))));
      }));
      return 0;
    }

    if (condprob->parsed()) {
      const Effect b = cli::load_effect(b_path);
      const State s = cli::load_state(state_path);
      cli::require_model(b.model(), b.dim(), s);
      std::optional<Effect> a;
      if (!a_path.empty()) {
        a = cli::load_effect(a_path);
        cli::require_model(b.model(), b.dim(), *a);
      }
      std::vector<Effect> meas;
      if (!meas_path.empty())
        meas = cli::load_list(meas_path, "elements");
      for (const auto &x : meas)
        cli::require_model(b.model(), b.dim(), x);
      if (!a && meas.empty())
        throw Error(Errc::InvalidSpec, "condprob needs --a or --measurement");
      emit(cli::with_model_of(b, [&](const auto &m, auto eff, auto st) {
        using E = typename std::decay_t<decltype(m)>::effect_type;
        json j = json::object();
        if (a)
          j["conditional"] = conditional_probability(m, st(s), eff(*a), eff(b));
        if (!meas.empty()) {
          const auto elems = cli::unwrap<E>(meas);
          j["total_probability_residual"] = total_probability_residual(m, st(s), elems, eff(b));
          const auto bayes = bayes_posterior(m, st(s), elems, eff(b), index);
          j["bayes"] = {{"index", index},
                        {"direct", bayes.direct},
                        {"bayes_rhs", bayes.bayes_rhs},
                        {"residual", bayes.residual}};
        }
        return j;
      }));
      return 0;
    }

    if (classify->parsed()) {
      const Classification c =
          model == "classical" ? classify_algebra(ClassicalModel(dim), budget, seed)
                               : classify_algebra(HilbertModel(dim), budget, seed);
      emit(json{{"model", model},
                {"dim", dim},
                {"class", to_string(c.kind)},
                {"checks", c.checks},
                {"failures", c.failures}});
      return 0;
    }

    if (witness->parsed()) {
      Rng rng(seed, hash_name("witness"));
      const auto a = cli::load_or_random_context(a_path, dim, rng);
      const auto b = cli::load_or_random_context(b_path, dim, rng);
      const auto w = third_context_witness(a, b);
      emit(json{{"c", w.c},
                {"coefficients", w.coefficients},
                {"context", cli::context_json(w.context)},
                {"distance_to_a", w.distance_to_a},
                {"distance_to_b", w.distance_to_b},
                {"distinct", w.distinct()}});
      return 0;
    }

    if (dynamics->parsed()) {
      Context<HilbertEffect> ctx;
      if (!a_path.empty())
        ctx.atoms = cli::unwrap<HilbertEffect>(cli::load_list(a_path, "atoms"));
      else
        for (std::size_t k = 0; k < dim; ++k)
          ctx.atoms.push_back(HilbertEffect::projector(standard_basis_vector(dim, k)));
      if (theta.empty())
        theta = cli::standard_theta(ctx.size());
      const ComplexMatrix u = dynamics_unitary(ctx, theta, t);
      const ComplexMatrix id = ComplexMatrix::identity(u.dim());
      emit(json{{"unitary", u},
                {"ambient", dynamics_unitary_ambient(ctx, theta, t)},
                {"unitarity_residual", (u.adjoint() * u - id).frobenius_norm()}});
      return 0;
    }

    if (gen->parsed()) {
      const GeneratorSpec spec{parse_model_kind(model), dim, parse_instance_kind(kind), seed};
      emit(generated_to_json(generate(spec), spec.kind));
      return 0;
    }
  } catch (const Error &e) {
    err << "effectalg: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const json::exception &e) {
    err << "effectalg: ParseError: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace effectalg
