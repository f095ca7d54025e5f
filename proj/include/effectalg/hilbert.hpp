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
 * The Hilbertian effect algebra E(C^d): operators 0 ≤ A ≤ I with the Lüders
 * sequential product A∘B = A^{1/2} B A^{1/2}.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effectalg/error.hpp"
#include "effectalg/numeric.hpp"
#include "effectalg/rng.hpp"

namespace effectalg {

/// Hermitian matrix with spectrum in [0, 1]. Spectra drifting outside the
/// interval by at most clip_tol are clamped on construction.
class HilbertEffect {
public:
  HilbertEffect() = default;
  explicit HilbertEffect(const ComplexMatrix &m, const ToleranceConfig &tol = {}) {
    if (m.dim() == 0)
      throw Error(Errc::NotEffect, "effect must have positive dimension");
    if (!m.is_finite() || !is_hermitian(m, tol.eq_tol))
      throw Error(Errc::NotEffect, "effect matrix is not Hermitian");
    matrix_ = m.hermitian_part();
    const EigenDecomposition eig = hermitian_eigh(matrix_, tol);
    const double lo = eig.eigenvalues.front(), hi = eig.eigenvalues.back();
    if (lo < -tol.clip_tol || hi > 1.0 + tol.clip_tol)
      throw Error(Errc::NotEffect, "spectrum [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "] leaves [0,1]");
    if (lo < 0.0 || hi > 1.0) {
      std::vector<double> clamped = eig.eigenvalues;
      for (auto &x : clamped)
        x = std::clamp(x, 0.0, 1.0);
      matrix_ = eig.reconstruct_with(clamped).hermitian_part();
    }
  }

  static HilbertEffect identity(std::size_t d) { return HilbertEffect(ComplexMatrix::identity(d)); }
  static HilbertEffect zero(std::size_t d) { return HilbertEffect(ComplexMatrix(d)); }
  static HilbertEffect projector(std::span<const Complex> v) {
    return HilbertEffect(effectalg::projector(v));
  }

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix &matrix() const noexcept { return matrix_; }

  friend bool operator==(const HilbertEffect &, const HilbertEffect &) = default;

private:
  ComplexMatrix matrix_;
};

/// A unit vector state φ (acting as A ↦ ⟨φ, Aφ⟩) or a density matrix ρ
/// (acting as A ↦ tr(ρA)).
class HilbertState {
public:
  enum class Kind { Vector, Density };

  HilbertState() = default;

  static HilbertState vector(ComplexVector v) {
    const double n = effectalg::norm(v);
    if (v.empty() || std::abs(n - 1.0) > 1e-9)
      throw Error(Errc::InvalidState, "vector state must have unit norm");
    for (auto &z : v)
      z /= n;
    HilbertState s;
    s.kind_ = Kind::Vector;
    s.vector_ = std::move(v);
    return s;
  }

  static HilbertState density(const ComplexMatrix &rho, const ToleranceConfig &tol = {}) {
    if (rho.dim() == 0 || !is_hermitian(rho, tol.eq_tol))
      throw Error(Errc::InvalidState, "density matrix must be Hermitian");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-12)
      throw Error(Errc::InvalidState, "density matrix trace " + std::to_string(tr));
    const EigenDecomposition eig = hermitian_eigh(rho, tol);
    if (eig.eigenvalues.front() < -tol.clip_tol)
      throw Error(Errc::InvalidState, "density matrix is not positive");
    HilbertState s;
    s.kind_ = Kind::Density;
    s.density_ = rho.hermitian_part();
    return s;
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept {
    return kind_ == Kind::Vector ? vector_.size() : density_.dim();
  }
  const ComplexVector &state_vector() const { return vector_; }

  /// ρ, or φφ† for a vector state.
  ComplexMatrix density_matrix() const {
    return kind_ == Kind::Vector ? effectalg::projector(vector_) : density_;
  }

  double evaluate(const ComplexMatrix &a) const {
    if (a.dim() != dim())
      throw Error(Errc::DimMismatch, "state/effect dimension mismatch");
    if (kind_ == Kind::Vector)
      return expectation(a, vector_);
    double t = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t += std::real(density_(i, j) * a(j, i));
    return t;
  }

  friend bool operator==(const HilbertState &, const HilbertState &) = default;

private:
  Kind kind_ = Kind::Density;
  ComplexVector vector_;
  ComplexMatrix density_;
};

inline void require_same_dim(const HilbertEffect &a, const HilbertEffect &b) {
  if (a.dim() != b.dim())
    throw Error(Errc::DimMismatch, "effects of dimension " + std::to_string(a.dim()) +
                                       " and " + std::to_string(b.dim()));
}

/// A∘B = A^{1/2} B A^{1/2}
inline HilbertEffect luders_product(const HilbertEffect &a, const HilbertEffect &b,
                                    const ToleranceConfig &tol = {}) {
  require_same_dim(a, b);
  const ComplexMatrix root = psd_sqrt(a.matrix(), tol);
  return HilbertEffect((root * b.matrix() * root).hermitian_part(), tol);
}

/// ‖AB − BA‖_F ≤ tol·max(1, ‖A‖_F‖B‖_F)
inline bool commutes(const HilbertEffect &a, const HilbertEffect &b, double tol) {
  require_same_dim(a, b);
  const ComplexMatrix ab = a.matrix() * b.matrix();
  const ComplexMatrix ba = b.matrix() * a.matrix();
  const double scale = std::max(1.0, a.matrix().frobenius_norm() * b.matrix().frobenius_norm());
  return (ab - ba).frobenius_norm() <= tol * scale;
}

/// ‖A² − A‖_F ≤ tol
inline bool is_sharp_hilbert(const HilbertEffect &a, double tol) {
  const ComplexMatrix &m = a.matrix();
  return (m * m - m).frobenius_norm() <= tol;
}

/// Sharp with trace one, i.e. a rank-one projector.
inline bool is_one_dimensional_sharp_hilbert(const HilbertEffect &a, double tol) {
  return is_sharp_hilbert(a, tol) && std::abs(a.matrix().trace().real() - 1.0) <= 0.5;
}

/// Unit vector spanning the range of a rank-one projector: the normalized
/// column with the largest diagonal entry, phase-fixed.
inline ComplexVector atom_vector(const HilbertEffect &p) {
  const ComplexMatrix &m = p.matrix();
  std::size_t k = 0;
  for (std::size_t i = 1; i < m.dim(); ++i)
    if (m(i, i).real() > m(k, k).real())
      k = i;
  ComplexVector v = m.column(k);
  const double n = effectalg::norm(v);
  if (n == 0.0)
    throw Error(Errc::NotOneDimensionalSharp, "zero projector has no range vector");
  for (auto &z : v)
    z /= n;
  normalize_phase(v);
  return v;
}

/// The state â of a one-dimensional sharp a = |φ⟩⟨φ|: the vector state φ.
inline HilbertState hat_state(const HilbertEffect &a, const ToleranceConfig &tol = {}) {
  if (!is_one_dimensional_sharp_hilbert(a, tol.sharp_tol))
    throw Error(Errc::NotOneDimensionalSharp, "hat state requires a rank-one projector");
  return HilbertState::vector(atom_vector(a));
}

/// Model-specific extension of â to sharp a of any rank: b ↦ tr(a b a)/tr(a).
/// Agrees with hat_state(a) on rank-one projectors.
inline double sharp_hat_eval(const HilbertEffect &a, const HilbertEffect &b,
                             const ToleranceConfig &tol = {}) {
  require_same_dim(a, b);
  if (!is_sharp_hilbert(a, tol.sharp_tol))
    throw Error(Errc::NotOneDimensionalSharp, "hat state requires a sharp effect");
  const double tr = a.matrix().trace().real();
  if (tr < 0.5)
    throw Error(Errc::NotOneDimensionalSharp, "hat state of the zero effect");
  return (a.matrix() * b.matrix() * a.matrix()).trace().real() / tr;
}

namespace detail {

inline ComplexMatrix gaussian_matrix(std::size_t d, Rng &rng) {
  ComplexMatrix g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im);
    }
  return g;
}

/// Orthonormalized columns of a Gaussian matrix (QR by modified Gram–Schmidt).
inline ComplexMatrix random_unitary(std::size_t d, Rng &rng) {
  ComplexMatrix g = gaussian_matrix(d, rng);
  std::vector<ComplexVector> cols;
  for (std::size_t j = 0; j < d; ++j) {
    ComplexVector v = g.column(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto &q : cols) {
        const Complex c = inner(q, v);
        for (std::size_t i = 0; i < d; ++i)
          v[i] -= c * q[i];
      }
    const double n = effectalg::norm(v);
    for (auto &z : v)
      z /= n;
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i)
      u(i, j) = cols[j][i];
  return u;
}

/// U diag(values) U†
inline ComplexMatrix conjugate_diagonal(const ComplexMatrix &u, std::span<const double> values) {
  EigenDecomposition e{std::vector<double>(values.begin(), values.end()), u};
  return e.reconstruct_with(values).hermitian_part();
}

/// Affine rescale of the spectrum of a Gaussian Hermitian matrix into
/// [lo, hi] with lo ≤ hi drawn uniformly from [0, 1].
inline ComplexMatrix random_effect_matrix(std::size_t d, Rng &rng) {
  ComplexMatrix g = gaussian_matrix(d, rng);
  const ComplexMatrix h = g.hermitian_part();
  double lo = rng.uniform(), hi = rng.uniform();
  if (lo > hi)
    std::swap(lo, hi);
  const EigenDecomposition eig = hermitian_eigh(h);
  const double emin = eig.eigenvalues.front(), emax = eig.eigenvalues.back();
  std::vector<double> scaled(d);
  for (std::size_t k = 0; k < d; ++k)
    scaled[k] = emax - emin > 1e-12 ? lo + (eig.eigenvalues[k] - emin) / (emax - emin) * (hi - lo)
                                    : 0.5 * (lo + hi);
  return conjugate_diagonal(eig.eigenvectors, scaled);
}

inline ComplexMatrix block_diagonal(const ComplexMatrix &top, const ComplexMatrix &bottom) {
  const std::size_t k = top.dim(), d = k + bottom.dim();
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m(i, j) = top(i, j);
  for (std::size_t i = k; i < d; ++i)
    for (std::size_t j = k; j < d; ++j)
      m(i, j) = bottom(i - k, j - k);
  return m;
}

} // namespace detail

/// The Hilbertian effect algebra on C^d.
class HilbertModel {
public:
  using effect_type = HilbertEffect;
  using state_type = HilbertState;
  using payload_type = ComplexMatrix;

  explicit HilbertModel(std::size_t d, ToleranceConfig tol = {}) : d_(d), tol_(tol) {
    if (d == 0)
      throw Error(Errc::InvalidSpec, "hilbert model needs d >= 1");
    tol_.validate();
  }

  std::string name() const { return "hilbert"; }
  std::size_t dim() const noexcept { return d_; }
  const ToleranceConfig &tolerances() const noexcept { return tol_; }

  HilbertEffect zero() const { return HilbertEffect::zero(d_); }
  HilbertEffect unit() const { return HilbertEffect::identity(d_); }

  void require_member(const HilbertEffect &a) const {
    if (a.dim() != d_)
      throw Error(Errc::DimMismatch, "effect has dimension " + std::to_string(a.dim()) +
                                         ", model has " + std::to_string(d_));
  }

  std::optional<HilbertEffect> orth_sum(const HilbertEffect &a, const HilbertEffect &b) const {
    require_member(a);
    require_member(b);
    const ComplexMatrix s = a.matrix() + b.matrix();
    if (hermitian_eigh(s, tol_).eigenvalues.back() > 1.0 + tol_.clip_tol)
      return std::nullopt;
    return HilbertEffect(s, tol_);
  }

  HilbertEffect complement(const HilbertEffect &a) const {
    require_member(a);
    return HilbertEffect(ComplexMatrix::identity(d_) - a.matrix(), tol_);
  }

  HilbertEffect scale(double lambda, const HilbertEffect &a) const {
    if (!(lambda >= 0.0 && lambda <= 1.0))
      throw Error(Errc::ScalarOutOfRange, "scalar " + std::to_string(lambda));
    require_member(a);
    return HilbertEffect(lambda * a.matrix(), tol_);
  }

  /// max(0, −λ_min(b − a)); a ≤ b iff this is at most clip_tol.
  double leq_violation(const HilbertEffect &a, const HilbertEffect &b) const {
    require_member(a);
    require_member(b);
    return std::max(0.0, -hermitian_eigh(b.matrix() - a.matrix(), tol_).eigenvalues.front());
  }
  bool leq(const HilbertEffect &a, const HilbertEffect &b) const {
    return leq_violation(a, b) <= tol_.clip_tol;
  }

  HilbertEffect seq_product(const HilbertEffect &a, const HilbertEffect &b) const {
    require_member(a);
    require_member(b);
    return luders_product(a, b, tol_);
  }

  double distance(const HilbertEffect &a, const HilbertEffect &b) const {
    require_member(a);
    require_member(b);
    return (a.matrix() - b.matrix()).frobenius_norm();
  }
  double norm(const HilbertEffect &a) const { return a.matrix().frobenius_norm(); }
  bool approx_equal(const HilbertEffect &a, const HilbertEffect &b, double tol) const {
    return distance(a, b) <= tol * std::max(1.0, norm(a));
  }

  bool is_sharp(const HilbertEffect &a) const { return is_sharp_hilbert(a, tol_.sharp_tol); }
  bool is_one_dimensional_sharp(const HilbertEffect &a) const {
    return is_one_dimensional_sharp_hilbert(a, tol_.sharp_tol);
  }

  void require_state(const HilbertState &s) const {
    if (s.dim() != d_)
      throw Error(Errc::DimMismatch, "state dimension mismatch");
  }

  double eval(const HilbertState &s, const HilbertEffect &a) const {
    require_state(s);
    require_member(a);
    double v = s.evaluate(a.matrix());
    if (v < 0.0 && v >= -1e-12)
      v = 0.0;
    if (v > 1.0 && v <= 1.0 + 1e-12)
      v = 1.0;
    return v;
  }

  double hat_eval(const HilbertEffect &a, const HilbertEffect &b) const {
    return sharp_hat_eval(a, b, tol_);
  }
  HilbertState hat_state(const HilbertEffect &a) const { return effectalg::hat_state(a, tol_); }

  payload_type ambient(const HilbertEffect &a) const { return a.matrix(); }
  payload_type ambient_zero() const { return ComplexMatrix(d_); }
  void axpy(payload_type &y, double alpha, const payload_type &x) const {
    y += alpha * x;
  }
  double ambient_norm(const payload_type &x) const { return x.frobenius_norm(); }
  /// A^k; for the Lüders product a∘a∘...∘a equals the matrix power.
  payload_type ambient_power(const HilbertEffect &a, std::size_t k) const {
    ComplexMatrix p = ComplexMatrix::identity(d_);
    for (std::size_t j = 0; j < k; ++j)
      p = p * a.matrix();
    return p.hermitian_part();
  }
  HilbertEffect make_effect(const payload_type &p) const { return HilbertEffect(p, tol_); }

  /**
   * Eigenprojector resolution b = Σ λ_i P_i. Coefficients are clamped
   * eigenvalues in descending order; degenerate eigenvalues are expanded into
   * rank-one atoms sharing the coefficient.
   */
  std::pair<std::vector<HilbertEffect>, std::vector<double>>
  spectral_resolution(const HilbertEffect &b) const {
    require_member(b);
    const EigenDecomposition eig = hermitian_eigh(b.matrix(), tol_);
    // Walk clusters from the top, keeping the canonical order inside each.
    std::vector<std::size_t> order;
    for (std::size_t stop = d_; stop > 0;) {
      std::size_t start = stop - 1;
      while (start > 0 && eig.eigenvalues[start] - eig.eigenvalues[start - 1] <= tol_.cluster_tol)
        --start;
      for (std::size_t k = start; k < stop; ++k)
        order.push_back(k);
      stop = start;
    }
    std::vector<HilbertEffect> atoms;
    std::vector<double> coefficients;
    for (std::size_t k : order) {
      atoms.push_back(HilbertEffect(effectalg::projector(eig.vector(k)), tol_));
      coefficients.push_back(std::clamp(eig.eigenvalues[k], 0.0, 1.0));
    }
    return {std::move(atoms), std::move(coefficients)};
  }

  /// tr(XY)
  double pairing(const HilbertEffect &x, const HilbertEffect &y) const {
    require_member(x);
    require_member(y);
    return (x.matrix() * y.matrix()).trace().real();
  }
  /// A density matrix is itself an effect.
  HilbertEffect state_as_effect(const HilbertState &s) const {
    require_state(s);
    return HilbertEffect(s.density_matrix(), tol_);
  }
  std::vector<double> ambient_spectrum(const payload_type &x) const {
    return hermitian_eigh(x.hermitian_part(), tol_).eigenvalues;
  }
  /**
   * Vector states e_k, (e_j + e_k)/√2 and (e_j + i e_k)/√2: their
   * expectations determine a Hermitian matrix.
   */
  std::vector<HilbertState> spanning_states() const {
    std::vector<HilbertState> out;
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < d_; ++k)
      out.push_back(HilbertState::vector(standard_basis_vector(d_, k)));
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t k = j + 1; k < d_; ++k) {
        ComplexVector v(d_), w(d_);
        v[j] = r;
        v[k] = r;
        w[j] = r;
        w[k] = Complex(0.0, r);
        out.push_back(HilbertState::vector(std::move(v)));
        out.push_back(HilbertState::vector(std::move(w)));
      }
    return out;
  }

  // Random instances.
  HilbertEffect random_effect(Rng &rng) const {
    return HilbertEffect(detail::random_effect_matrix(d_, rng), tol_);
  }

  /// An effect with at least one eigenvalue in [0.2, 0.8].
  HilbertEffect random_unsharp(Rng &rng) const {
    const ComplexMatrix u = detail::random_unitary(d_, rng);
    std::vector<double> values(d_);
    for (auto &x : values)
      x = rng.uniform();
    values[rng.below(d_)] = rng.uniform(0.2, 0.8);
    return HilbertEffect(detail::conjugate_diagonal(u, values), tol_);
  }

  /// Projector onto the span of a random subset of a random orthonormal basis.
  HilbertEffect random_sharp(Rng &rng) const {
    const ComplexMatrix u = detail::random_unitary(d_, rng);
    std::vector<double> values(d_);
    for (auto &x : values)
      x = rng.uniform() < 0.5 ? 1.0 : 0.0;
    return HilbertEffect(detail::conjugate_diagonal(u, values), tol_);
  }

  ComplexVector random_unit_vector(Rng &rng) const {
    ComplexVector v(d_);
    for (auto &z : v) {
      const double re = rng.normal();
      const double im = rng.normal();
      z = Complex(re, im);
    }
    const double n = effectalg::norm(v);
    for (auto &z : v)
      z /= n;
    return v;
  }

  HilbertEffect random_atom(Rng &rng) const {
    return HilbertEffect(effectalg::projector(random_unit_vector(rng)), tol_);
  }

  /// Rank-one projectors onto the columns of a random unitary.
  std::vector<HilbertEffect> random_context(Rng &rng) const {
    const ComplexMatrix u = detail::random_unitary(d_, rng);
    std::vector<HilbertEffect> atoms;
    for (std::size_t j = 0; j < d_; ++j)
      atoms.emplace_back(effectalg::projector(u.column(j)), tol_);
    return atoms;
  }

  /// G†G / tr(G†G) for Gaussian G.
  HilbertState random_state(Rng &rng) const {
    const ComplexMatrix g = detail::gaussian_matrix(d_, rng);
    ComplexMatrix rho = (g.adjoint() * g).hermitian_part();
    rho *= Complex(1.0 / rho.trace().real());
    return HilbertState::density(rho, tol_);
  }

  HilbertState random_pure_state(Rng &rng) const {
    return HilbertState::vector(random_unit_vector(rng));
  }

  /// Parts G_k†G_k normalized by S^{-1/2} · S^{-1/2}, S = Σ_k G_k†G_k.
  std::vector<HilbertEffect> random_measurement(Rng &rng) const {
    const std::size_t parts = 2 + rng.below(d_ + 1);
    std::vector<ComplexMatrix> raw;
    ComplexMatrix total(d_);
    for (std::size_t k = 0; k < parts; ++k) {
      const ComplexMatrix g = detail::gaussian_matrix(d_, rng);
      raw.push_back((g.adjoint() * g).hermitian_part());
      total += raw.back();
    }
    const EigenDecomposition eig = hermitian_eigh(total, tol_);
    std::vector<double> inv_root(d_);
    for (std::size_t k = 0; k < d_; ++k)
      inv_root[k] = 1.0 / std::sqrt(eig.eigenvalues[k]);
    const ComplexMatrix w = eig.reconstruct_with(inv_root).hermitian_part();
    std::vector<HilbertEffect> m;
    for (const auto &p : raw)
      m.emplace_back((w * p * w).hermitian_part(), tol_);
    return m;
  }

  /// Spectral projectors of a random partition of a random orthonormal basis.
  std::vector<HilbertEffect> random_sharp_measurement(Rng &rng) const {
    const ComplexMatrix u = detail::random_unitary(d_, rng);
    const std::size_t blocks = 1 + rng.below(d_);
    std::vector<std::size_t> label(d_);
    for (std::size_t i = 0; i < d_; ++i)
      label[i] = i < blocks ? i : rng.below(blocks);
    std::vector<HilbertEffect> m;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::vector<double> values(d_);
      for (std::size_t i = 0; i < d_; ++i)
        values[i] = label[i] == b ? 1.0 : 0.0;
      m.emplace_back(detail::conjugate_diagonal(u, values), tol_);
    }
    return m;
  }

  /// Two effects diagonal in a shared random basis.
  std::pair<HilbertEffect, HilbertEffect> random_compatible_pair(Rng &rng) const {
    const ComplexMatrix u = detail::random_unitary(d_, rng);
    std::vector<double> x(d_), y(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      x[i] = rng.uniform();
      y[i] = rng.uniform();
    }
    return {HilbertEffect(detail::conjugate_diagonal(u, x), tol_),
            HilbertEffect(detail::conjugate_diagonal(u, y), tol_)};
  }

  struct CommutingTriple {
    HilbertEffect c, a, b; ///< c|a, c|b and a ⊥ b
  };

  /**
   * c has two eigenspaces (sizes k and d−k in a random basis); a and b are
   * block diagonal with respect to them but need not commute with each other.
   * b = a′∘y with y block diagonal, so a ⊥ b.
   */
  CommutingTriple random_commuting_triple(Rng &rng) const {
    const ComplexMatrix u = detail::random_unitary(d_, rng);
    const std::size_t k = d_ == 1 ? 1 : 1 + rng.below(d_ - 1);
    auto block_effect = [&] {
      ComplexMatrix top = detail::random_effect_matrix(k, rng);
      ComplexMatrix m = d_ > k ? detail::block_diagonal(top, detail::random_effect_matrix(d_ - k, rng))
                               : top;
      return HilbertEffect((u * m * u.adjoint()).hermitian_part(), tol_);
    };
    std::vector<double> cvals(d_);
    const double c1 = rng.uniform(), c2 = rng.uniform();
    for (std::size_t i = 0; i < d_; ++i)
      cvals[i] = i < k ? c1 : c2;
    HilbertEffect c(detail::conjugate_diagonal(u, cvals), tol_);
    HilbertEffect a = block_effect();
    HilbertEffect y = block_effect();
    HilbertEffect b = seq_product(complement(a), y);
    return {std::move(c), std::move(a), std::move(b)};
  }

private:
  std::size_t d_;
  ToleranceConfig tol_;
};

} // namespace effectalg
