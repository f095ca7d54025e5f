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
 * Dense complex Hermitian linear algebra for small dimensions: a row-major
 * matrix type, a cyclic Jacobi eigensolver, PSD square roots, projectors and
 * tolerant comparison.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "effectalg/error.hpp"

namespace effectalg {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Numerical slack used throughout the library.
struct ToleranceConfig {
  double eq_tol = 1e-9;      ///< matrix equality, relative Frobenius
  double clip_tol = 1e-10;   ///< eigenvalue clamp slack
  double cluster_tol = 1e-8; ///< eigenvalue clustering
  double sharp_tol = 1e-8;   ///< idempotence

  void validate() const {
    if (!(eq_tol > 0 && clip_tol > 0 && cluster_tol > 0 && sharp_tol > 0))
      throw Error(Errc::InvalidSpec, "tolerances must be strictly positive");
    if (clip_tol > cluster_tol)
      throw Error(Errc::InvalidSpec, "clip_tol must not exceed cluster_tol");
  }
};

class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      m(i, i) = values[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  Complex &operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex &operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexVector column(std::size_t j) const {
    ComplexVector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : data_)
      s += std::norm(z);
    return std::sqrt(s);
  }

  bool is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  /// (A + A†)/2
  ComplexMatrix hermitian_part() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return r;
  }

  ComplexMatrix &operator+=(const ComplexMatrix &o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix &operator-=(const ComplexMatrix &o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix &operator*=(Complex s) {
    for (auto &z : data_)
      z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }

  friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0))
          continue;
        for (std::size_t j = 0; j < n; ++j)
          r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v) {
    if (v.size() != a.dim_)
      throw Error(Errc::DimMismatch, "matrix-vector dimension mismatch");
    ComplexVector r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j)
        r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  void require_same_dim(const ComplexMatrix &o) const {
    if (o.dim_ != dim_)
      throw Error(Errc::DimMismatch, "matrix dimensions " + std::to_string(dim_) +
                                         " and " + std::to_string(o.dim_));
  }

private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

inline Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size())
    throw Error(Errc::DimMismatch, "vector dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    s += std::conj(u[i]) * v[i];
  return s;
}

inline double norm(std::span<const Complex> v) { return std::sqrt(std::real(inner(v, v))); }

inline ComplexVector standard_basis_vector(std::size_t dim, std::size_t k) {
  ComplexVector e(dim);
  e[k] = 1.0;
  return e;
}

/// ⟨v, A v⟩, real part.
inline double expectation(const ComplexMatrix &a, std::span<const Complex> v) {
  return std::real(inner(v, a * v));
}

/// Relative closeness: ‖A−B‖_F ≤ tol·max(1, ‖A‖_F).
inline bool approx_eq(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
  a.require_same_dim(b);
  return (a - b).frobenius_norm() <= tol * std::max(1.0, a.frobenius_norm());
}

inline bool is_hermitian(const ComplexMatrix &a, double tol) {
  return (a - a.adjoint()).frobenius_norm() <= tol * std::max(1.0, a.frobenius_norm());
}

inline bool is_unitary(const ComplexMatrix &u, double tol) {
  return approx_eq(u.adjoint() * u, ComplexMatrix::identity(u.dim()), tol);
}

/// Rotates v so that its first largest-magnitude component is real positive.
inline void normalize_phase(ComplexVector &v) {
  double best = 0.0;
  for (const auto &z : v)
    best = std::max(best, std::abs(z));
  if (best == 0.0)
    return;
  for (const auto &z : v) {
    const double mag = std::abs(z);
    if (mag >= best * (1.0 - 1e-9)) {
      const Complex phase = std::conj(z) / mag;
      for (auto &w : v)
        w *= phase;
      return;
    }
  }
}

/// Orthonormal basis of span(basis) built from projected standard basis
/// vectors. At each step the candidate e_k with the largest residual norm is
/// taken; ties go to the lowest index. The result depends only on the
/// subspace, not on the basis used to describe it.
inline std::vector<ComplexVector>
canonical_subspace_basis(const std::vector<ComplexVector> &basis, std::size_t dim) {
  const std::size_t rank = basis.size();
  std::vector<ComplexVector> projected(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    ComplexVector p(dim);
    for (const auto &b : basis) {
      const Complex c = std::conj(b[k]);
      for (std::size_t i = 0; i < dim; ++i)
        p[i] += c * b[i];
    }
    projected[k] = std::move(p);
  }
  std::vector<ComplexVector> chosen;
  std::vector<bool> used(dim, false);
  while (chosen.size() < rank) {
    double best = -1.0;
    std::size_t best_k = 0;
    ComplexVector best_r;
    for (std::size_t k = 0; k < dim; ++k) {
      if (used[k])
        continue;
      ComplexVector r = projected[k];
      for (const auto &q : chosen) {
        const Complex c = inner(q, r);
        for (std::size_t i = 0; i < dim; ++i)
          r[i] -= c * q[i];
      }
      const double n = norm(r);
      if (n > best + 1e-12) {
        best = n;
        best_k = k;
        best_r = std::move(r);
      }
    }
    used[best_k] = true;
    for (auto &z : best_r)
      z /= best;
    normalize_phase(best_r);
    chosen.push_back(std::move(best_r));
  }
  return chosen;
}

struct EigenDecomposition {
  std::vector<double> eigenvalues; ///< ascending
  ComplexMatrix eigenvectors;      ///< orthonormal columns

  ComplexVector vector(std::size_t j) const { return eigenvectors.column(j); }

  ComplexMatrix reconstruct() const {
    return reconstruct_with(eigenvalues);
  }

  /// V diag(values) V†
  ComplexMatrix reconstruct_with(std::span<const double> values) const {
    const std::size_t n = eigenvectors.dim();
    ComplexMatrix r(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (values[k] == 0.0)
        continue;
      for (std::size_t i = 0; i < n; ++i) {
        const Complex vik = values[k] * eigenvectors(i, k);
        for (std::size_t j = 0; j < n; ++j)
          r(i, j) += vik * std::conj(eigenvectors(j, k));
      }
    }
    return r;
  }
};

namespace detail {

inline double off_diagonal_mass(const ComplexMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j)
        s += std::norm(a(i, j));
  return std::sqrt(s);
}

} // namespace detail

/**
 * Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
 *
 * Each rotation first removes the phase of the pivot a_pq and then applies a
 * real Jacobi rotation. Iteration stops when the off-diagonal Frobenius mass
 * drops below 1e-12 (relative to max(1, ‖A‖_F)); at most 100 sweeps.
 * Eigenvalues within cluster_tol of each other form a degenerate block whose
 * basis is replaced by canonical_subspace_basis, so the output is a function
 * of the input matrix alone.
 */
inline EigenDecomposition hermitian_eigh(const ComplexMatrix &input,
                                         const ToleranceConfig &tol = {}) {
  const std::size_t n = input.dim();
  if (!input.is_finite())
    throw Error(Errc::NotHermitian, "matrix has non-finite entries");
  if (!is_hermitian(input, tol.eq_tol))
    throw Error(Errc::NotHermitian, "matrix is not Hermitian within eq_tol");

  ComplexMatrix a = input.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);
  // Sweep down to rounding level; stop early once a sweep no longer helps.
  const double scale = std::max(1.0, a.frobenius_norm());
  const double threshold = std::numeric_limits<double>::epsilon() * scale;
  constexpr int kMaxSweeps = 100;

  int sweep = 0;
  double previous = std::numeric_limits<double>::infinity();
  for (; sweep < kMaxSweeps; ++sweep) {
    const double mass = detail::off_diagonal_mass(a);
    if (mass <= threshold || mass >= previous)
      break;
    previous = mass;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0)
          continue;
        const Complex e = apq / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = diag(1, conj(e)) · [[c, s], [-s, c]] on the (p, q) plane
        const Complex gpp = c, gpq = s;
        const Complex gqp = -s * std::conj(e), gqq = c * std::conj(e);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }
  if (detail::off_diagonal_mass(a) > 1e-12 * scale)
    throw Error(Errc::NoConvergence, "Jacobi iteration exceeded 100 sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  std::vector<ComplexVector> columns(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    columns[k] = v.column(order[k]);
  }

  for (std::size_t start = 0; start < n;) {
    std::size_t stop = start + 1;
    while (stop < n && out.eigenvalues[stop] - out.eigenvalues[stop - 1] <= tol.cluster_tol)
      ++stop;
    if (stop - start == 1) {
      normalize_phase(columns[start]);
    } else {
      std::vector<ComplexVector> block(columns.begin() + start, columns.begin() + stop);
      auto canonical = canonical_subspace_basis(block, n);
      for (std::size_t k = start; k < stop; ++k)
        columns[k] = std::move(canonical[k - start]);
    }
    start = stop;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors(i, k) = columns[k][i];
  return out;
}

/// Eigenvalues at or below this (relative to max(1, |λ|max)) are treated as 0.
inline constexpr double kSqrtNoiseFloor = 1e-13;

/// The unique positive square root; eigenvalues in [-clip_tol, floor] are
/// treated as zero.
inline ComplexMatrix psd_sqrt(const ComplexMatrix &a, const ToleranceConfig &tol = {}) {
  const EigenDecomposition eig = hermitian_eigh(a, tol);
  std::vector<double> roots(eig.eigenvalues.size());
  double scale = 1.0;
  for (double lambda : eig.eigenvalues)
    scale = std::max(scale, std::abs(lambda));
  // Solver noise on a null space would otherwise come back as ~1e-8 roots.
  const double floor = kSqrtNoiseFloor * scale;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -tol.clip_tol)
      throw Error(Errc::NegativeEigenvalue,
                  "eigenvalue " + std::to_string(lambda) + " below -clip_tol");
    roots[k] = lambda <= floor ? 0.0 : std::sqrt(lambda);
  }
  return eig.reconstruct_with(roots).hermitian_part();
}

/// Rank-one projector v v†.
inline ComplexMatrix projector(std::span<const Complex> v, const ToleranceConfig &tol = {}) {
  if (v.empty() || std::abs(norm(v) - 1.0) > tol.eq_tol)
    throw Error(Errc::NotUnitVector, "projector requires a unit vector");
  const std::size_t n = v.size();
  ComplexMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

/// Solves the dense real system A x = b (row-major A) by Gaussian elimination
/// with partial pivoting. Throws InconsistentDecomposition on a singular pivot.
inline std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  if (a.size() != n * n)
    throw Error(Errc::DimMismatch, "solve_linear: matrix is not n x n");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col]))
        pivot = r;
    if (std::abs(a[pivot * n + col]) < 1e-300)
      throw Error(Errc::InconsistentDecomposition, "singular linear system");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[col * n + j], a[pivot * n + j]);
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0)
        continue;
      for (std::size_t j = col; j < n; ++j)
        a[r * n + j] -= f * a[col * n + j];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j)
      s -= a[i * n + j] * x[j];
    x[i] = s / a[i * n + i];
  }
  return x;
}

} // namespace effectalg
