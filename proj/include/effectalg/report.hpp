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

#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "effectalg/error.hpp"
#include "effectalg/io.hpp"

namespace effectalg {

struct Violation {
  std::string axiom;
  double residual = 0.0;
  json instance = json::object();

  friend bool operator==(const Violation &, const Violation &) = default;
};

/// Outcome of a randomized verification run. `trials` counts checked
/// property instances, so violations.size() <= trials.
struct VerificationReport {
  std::string suite;
  std::string model;
  std::size_t dim = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  std::vector<Violation> violations;
  double wall_ms = 0.0;

  bool clean() const noexcept { return violations.empty(); }

  /// Sums trials and wall time, concatenates violations, unions tolerances.
  VerificationReport &merge(const VerificationReport &other) {
    if (suite.empty())
      suite = other.suite;
    if (model.empty())
      model = other.model;
    if (dim == 0)
      dim = other.dim;
    trials += other.trials;
    wall_ms += other.wall_ms;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto &[k, v] : other.tolerances)
      tolerances.emplace(k, v);
    return *this;
  }

  friend bool operator==(const VerificationReport &, const VerificationReport &) = default;
};

inline void to_json(json &j, const Violation &v) {
  j = json{{"axiom", v.axiom}, {"residual", v.residual}, {"instance", v.instance}};
}
inline void from_json(const json &j, Violation &v) {
  v.axiom = detail::field(j, "axiom").get<std::string>();
  v.residual = detail::field(j, "residual").get<double>();
  v.instance = j.value("instance", json::object());
}

inline void to_json(json &j, const VerificationReport &r) {
  j = json{{"suite", r.suite},         {"model", r.model},
           {"dim", r.dim},             {"trials", r.trials},
           {"seed", r.seed},           {"tolerances", r.tolerances},
           {"violations", r.violations}, {"wall_ms", r.wall_ms}};
}
inline void from_json(const json &j, VerificationReport &r) {
  r.suite = detail::field(j, "suite").get<std::string>();
  r.model = j.value("model", std::string{});
  r.dim = j.value("dim", std::size_t{0});
  r.trials = detail::field(j, "trials").get<std::uint64_t>();
  r.seed = j.value("seed", std::uint64_t{0});
  r.tolerances = j.value("tolerances", std::map<std::string, double>{});
  r.violations = detail::field(j, "violations").get<std::vector<Violation>>();
  r.wall_ms = j.value("wall_ms", 0.0);
}

/// Summary line followed by one line per violation.
inline std::string report_text(const VerificationReport &r) {
  std::ostringstream os;
  os << "suite=" << r.suite << " model=" << r.model << " dim=" << r.dim << " trials=" << r.trials
     << " seed=" << r.seed << " violations=" << r.violations.size() << " wall_ms=" << std::fixed
     << std::setprecision(1) << r.wall_ms << '\n';
  os << std::defaultfloat << std::setprecision(6);
  for (const auto &v : r.violations)
    os << "VIOLATION " << v.axiom << " residual=" << v.residual << ' ' << v.instance.dump() << '\n';
  return os.str();
}

enum class ReportFormat { Json, Text };

inline void emit_report(const VerificationReport &r, const std::string &path,
                        ReportFormat format = ReportFormat::Json) {
  write_text_file(path, format == ReportFormat::Json ? json(r).dump(2) + "\n" : report_text(r));
}

} // namespace effectalg
