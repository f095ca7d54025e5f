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

#include <cmath>
#include <vector>

#include "effectalg/hilbert.hpp"
#include "effectalg/numeric.hpp"

namespace fixtures {

using effectalg::Complex;
using effectalg::ComplexMatrix;
using effectalg::ComplexVector;
using effectalg::HilbertEffect;
using effectalg::HilbertState;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline ComplexVector ket0() { return {1.0, 0.0}; }
inline ComplexVector ket1() { return {0.0, 1.0}; }
inline ComplexVector ket_plus() { return {kInvSqrt2, kInvSqrt2}; }
inline ComplexVector ket_minus() { return {kInvSqrt2, -kInvSqrt2}; }

inline HilbertEffect P0() { return HilbertEffect::projector(ket0()); }
inline HilbertEffect P1() { return HilbertEffect::projector(ket1()); }
inline HilbertEffect Pplus() { return HilbertEffect::projector(ket_plus()); }
inline HilbertEffect Pminus() { return HilbertEffect::projector(ket_minus()); }

inline ComplexMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto &r : rows) {
    std::size_t j = 0;
    for (const auto &z : r)
      m(i, j++) = z;
    ++i;
  }
  return m;
}

inline HilbertEffect diag_effect(std::vector<double> v) {
  return HilbertEffect(ComplexMatrix::diagonal(v));
}

inline double dist(const ComplexMatrix &a, const ComplexMatrix &b) {
  return (a - b).frobenius_norm();
}

} // namespace fixtures
