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
 * JSON encodings.
 *
 *   ComplexMatrix  {"dim": d, "re": [[...]], "im": [[...]]}  ("im" optional)
 *   Effect         {"model": "classical", "values": [...]}
 *                  {"model": "hilbert", "matrix": <ComplexMatrix>}
 *   State          {"model": "classical", "kind": "dirac", "n": n, "index": i}
 *                  {"model": "classical", "kind": "pvec", "weights": [...]}
 *                  {"model": "hilbert", "kind": "vector", "re": [...], "im": [...]}
 *                  {"model": "hilbert", "kind": "density", "matrix": <ComplexMatrix>}
 *   Measurement    {"elements": [<Effect>, ...]}
 *   Context        {"atoms": [<Effect>, ...]}
 *   Polynomial     {"coeffs": [a0, a1, ...]}
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "effectalg/classical.hpp"
#include "effectalg/effect.hpp"
#include "effectalg/error.hpp"
#include "effectalg/hilbert.hpp"
#include "effectalg/numeric.hpp"

namespace effectalg {

using json = nlohmann::json;

namespace detail {

inline const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline void expect_model(const json &j, const char *model) {
  if (field(j, "model").get<std::string>() != model)
    throw Error(Errc::ModelMismatch, std::string("expected model '") + model + "'");
}

} // namespace detail

inline void to_json(json &j, const ComplexMatrix &m) {
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json rr = json::array(), ir = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) {
      rr.push_back(m(i, k).real());
      ir.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  j = json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline void from_json(const json &j, ComplexMatrix &m) {
  const auto d = detail::field(j, "dim").get<std::size_t>();
  const json &re = detail::field(j, "re");
  const bool has_im = j.contains("im");
  if (re.size() != d || (has_im && j.at("im").size() != d))
    throw Error(Errc::ParseError, "matrix rows do not match dim");
  m = ComplexMatrix(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (re.at(i).size() != d || (has_im && j.at("im").at(i).size() != d))
      throw Error(Errc::ParseError, "matrix columns do not match dim");
    for (std::size_t k = 0; k < d; ++k)
      m(i, k) = Complex(re.at(i).at(k).get<double>(),
                        has_im ? j.at("im").at(i).at(k).get<double>() : 0.0);
  }
}

inline void to_json(json &j, const FuzzyEvent &f) {
  j = json{{"model", "classical"}, {"values", f.values()}};
}
inline void from_json(const json &j, FuzzyEvent &f) {
  detail::expect_model(j, "classical");
  f = FuzzyEvent(detail::field(j, "values").get<std::vector<double>>());
}

inline void to_json(json &j, const HilbertEffect &h) {
  j = json{{"model", "hilbert"}, {"matrix", h.matrix()}};
}
inline void from_json(const json &j, HilbertEffect &h) {
  detail::expect_model(j, "hilbert");
  h = HilbertEffect(detail::field(j, "matrix").get<ComplexMatrix>());
}

inline void to_json(json &j, const Effect &e) {
  if (e.model() == ModelKind::Classical)
    to_json(j, e.classical());
  else
    to_json(j, e.hilbert());
}
inline void from_json(const json &j, Effect &e) {
  const auto model = parse_model_kind(detail::field(j, "model").get<std::string>());
  if (model == ModelKind::Classical)
    e = Effect(j.get<FuzzyEvent>());
  else
    e = Effect(j.get<HilbertEffect>());
}

inline void to_json(json &j, const ProbabilityVector &p) { j = json{{"weights", p.weights()}}; }
inline void from_json(const json &j, ProbabilityVector &p) {
  p = ProbabilityVector(detail::field(j, "weights").get<std::vector<double>>());
}

inline void to_json(json &j, const ClassicalState &s) {
  if (s.dirac_index)
    j = json{{"model", "classical"}, {"kind", "dirac"}, {"n", s.size()}, {"index", *s.dirac_index}};
  else
    j = json{{"model", "classical"}, {"kind", "pvec"}, {"weights", s.measure.weights()}};
}
inline void from_json(const json &j, ClassicalState &s) {
  detail::expect_model(j, "classical");
  const auto kind = detail::field(j, "kind").get<std::string>();
  if (kind == "dirac")
    s = ClassicalState::dirac(detail::field(j, "n").get<std::size_t>(),
                              detail::field(j, "index").get<std::size_t>());
  else if (kind == "pvec")
    s = ClassicalState::from_weights(detail::field(j, "weights").get<std::vector<double>>());
  else
    throw Error(Errc::ParseError, "classical state kind must be dirac or pvec");
}

inline void to_json(json &j, const HilbertState &s) {
  if (s.kind() == HilbertState::Kind::Vector) {
    std::vector<double> re, im;
    for (const auto &z : s.state_vector()) {
      re.push_back(z.real());
      im.push_back(z.imag());
    }
    j = json{{"model", "hilbert"}, {"kind", "vector"}, {"re", re}, {"im", im}};
  } else {
    j = json{{"model", "hilbert"}, {"kind", "density"}, {"matrix", s.density_matrix()}};
  }
}
inline void from_json(const json &j, HilbertState &s) {
  detail::expect_model(j, "hilbert");
  const auto kind = detail::field(j, "kind").get<std::string>();
  if (kind == "vector") {
    const auto re = detail::field(j, "re").get<std::vector<double>>();
    const auto im = j.contains("im") ? j.at("im").get<std::vector<double>>()
                                     : std::vector<double>(re.size(), 0.0);
    if (im.size() != re.size())
      throw Error(Errc::ParseError, "vector re/im length mismatch");
    ComplexVector v(re.size());
    for (std::size_t i = 0; i < re.size(); ++i)
      v[i] = Complex(re[i], im[i]);
    s = HilbertState::vector(std::move(v));
  } else if (kind == "density") {
    s = HilbertState::density(detail::field(j, "matrix").get<ComplexMatrix>());
  } else {
    throw Error(Errc::ParseError, "hilbert state kind must be vector or density");
  }
}

inline void to_json(json &j, const State &s) {
  if (s.model() == ModelKind::Classical)
    to_json(j, s.classical());
  else
    to_json(j, s.hilbert());
}
inline void from_json(const json &j, State &s) {
  const auto model = parse_model_kind(detail::field(j, "model").get<std::string>());
  if (model == ModelKind::Classical)
    s = State(j.get<ClassicalState>());
  else
    s = State(j.get<HilbertState>());
}

/// {"<key>": [<Effect>, ...]}
template <class E>
json effect_list_to_json(const std::vector<E> &items, const char *key) {
  json arr = json::array();
  for (const auto &e : items)
    arr.push_back(e);
  return json{{key, std::move(arr)}};
}

template <class E>
std::vector<E> effect_list_from_json(const json &j, const char *key) {
  std::vector<E> out;
  for (const auto &item : detail::field(j, key))
    out.push_back(item.get<E>());
  return out;
}

inline json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::IoError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out)
    throw Error(Errc::IoError, "write to '" + path + "' failed");
}

} // namespace effectalg
