// Copyright 2026 The leakelim Authors
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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>

namespace leakelim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance for exact algebraic identities.
inline constexpr double kTol = 1e-12;
/// Tolerance after long operator products (compiled sequences, evolutions).
inline constexpr double kLongTol = 1e-10;
/// Largest ambient dimension the dense representation supports.
inline constexpr std::size_t kMaxDim = 4096;

inline constexpr Complex kI{0.0, 1.0};

/** Raised when operand dimensions are incompatible. */
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Raised when a requested dimension exceeds kMaxDim. */
class ResourceCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/** Raised when an operator fails a required predicate (Hermitian, unitary). */
class PredicateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Dense square complex operator on a finite Hilbert space.
 *
 * Qubit/site 1 is the leftmost tensor factor, so in `tensor(a, b)` the
 * entries of `a` index the outer blocks.
 */
class Operator {
 public:
  Operator() = default;
  explicit Operator(Matrix entries);

  static Operator identity(std::size_t dim);
  static Operator zero(std::size_t dim);
  /// Diagonal operator from its diagonal entries.
  static Operator diagonal(const Vector& diag);
  /// Outer product |ket><bra|.
  static Operator outer(const Vector& ket, const Vector& bra);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Operator adjoint() const { return Operator(m_.adjoint()); }
  Complex trace() const { return m_.trace(); }
  /// Largest entry modulus.
  double max_abs() const;
  /// Largest singular value.
  double spectral_norm() const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex scalar);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator-(const Operator& a) { return Operator(-a.m_); }
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, Operator a) { return a *= s; }
  friend Operator operator*(Operator a, Complex s) { return a *= s; }
  friend Vector operator*(const Operator& a, const Vector& v);

  bool operator==(const Operator& other) const { return m_ == other.m_; }

 private:
  Matrix m_;
};

/// max |a - b| over entries; throws DimensionError on mismatch.
double max_abs_diff(const Operator& a, const Operator& b);

bool is_hermitian(const Operator& o, double tol = kTol);
bool is_unitary(const Operator& u, double tol = kTol);

/// Kronecker product, `a` indexing the outer blocks.
Operator tensor(const Operator& a, const Operator& b);

/**
 * e^{i theta H} for Hermitian H, via eigendecomposition.
 *
 * Throws PredicateError (message carries max|H - H^dagger|) when H is not
 * Hermitian to kTol.
 */
Operator expm_hermitian(const Operator& h, double theta);

/**
 * Cached eigendecomposition of a Hermitian generator, for evaluating
 * e^{i theta H} at many angles.
 */
class HermitianExponential {
 public:
  explicit HermitianExponential(const Operator& h);
  Operator at(double theta) const;
  const Eigen::VectorXd& eigenvalues() const { return evals_; }

 private:
  Matrix evecs_;
  Eigen::VectorXd evals_;
};

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

/**
 * 1 - |tr(u^dagger v)| / dim, in [0, 1]; zero exactly when u and v agree
 * up to a global phase. Both inputs must be unitary to `tol`.
 */
double phase_distance(
    const Operator& u, const Operator& v, double tol = kLongTol);

/// Gaussian Hermitian matrix (G + G^dagger)/2 with standard complex normal G.
Operator random_hermitian(std::size_t dim, std::mt19937_64& rng);
/// Haar-ish random unitary via QR of a complex Gaussian matrix.
Operator random_unitary(std::size_t dim, std::mt19937_64& rng);

/// Throws ResourceCapError when dim is zero or exceeds kMaxDim.
void check_dim(std::size_t dim, const std::string& what);

}  // namespace leakelim
