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

#include "leakelim/operator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace leakelim {

void check_dim(std::size_t dim, const std::string& what) {
  if (dim == 0) throw DimensionError(what + ": dimension must be positive");
  if (dim > kMaxDim) {
    std::ostringstream msg;
    msg << what << ": dimension " << dim << " exceeds the supported maximum "
        << kMaxDim;
    throw ResourceCapError(msg.str());
  }
}

Operator::Operator(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) {
    std::ostringstream msg;
    msg << "Operator must be square, got " << m_.rows() << "x" << m_.cols();
    throw DimensionError(msg.str());
  }
  check_dim(static_cast<std::size_t>(m_.rows()), "Operator");
}

Operator Operator::identity(std::size_t dim) {
  check_dim(dim, "Operator::identity");
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator(Matrix::Identity(n, n));
}

Operator Operator::zero(std::size_t dim) {
  check_dim(dim, "Operator::zero");
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator(Matrix::Zero(n, n));
}

Operator Operator::diagonal(const Vector& diag) {
  return Operator(Matrix(diag.asDiagonal()));
}

Operator Operator::outer(const Vector& ket, const Vector& bra) {
  if (ket.size() != bra.size()) {
    throw DimensionError("Operator::outer: ket and bra lengths differ");
  }
  return Operator(ket * bra.adjoint());
}

double Operator::max_abs() const {
  return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

double Operator::spectral_norm() const {
  if (m_.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m_);
  return svd.singularValues()(0);
}

Operator& Operator::operator+=(const Operator& other) {
  if (dim() != other.dim()) throw DimensionError("Operator +: dim mismatch");
  m_ += other.m_;
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  if (dim() != other.dim()) throw DimensionError("Operator -: dim mismatch");
  m_ -= other.m_;
  return *this;
}

Operator& Operator::operator*=(Complex scalar) {
  m_ *= scalar;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << "Operator product: dim " << a.dim() << " vs " << b.dim();
    throw DimensionError(msg.str());
  }
  return Operator(a.m_ * b.m_);
}

Vector operator*(const Operator& a, const Vector& v) {
  if (static_cast<std::size_t>(v.size()) != a.dim()) {
    throw DimensionError("Operator * vector: length mismatch");
  }
  return a.m_ * v;
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dim mismatch");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& o, double tol) {
  return (o.matrix() - o.matrix().adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Operator& u, double tol) {
  const auto n = static_cast<Eigen::Index>(u.dim());
  const Matrix gram = u.matrix().adjoint() * u.matrix();
  return (gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;
}

Operator tensor(const Operator& a, const Operator& b) {
  const Eigen::Index na = a.matrix().rows();
  const Eigen::Index nb = b.matrix().rows();
  check_dim(static_cast<std::size_t>(na * nb), "tensor");
  Matrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
    }
  }
  return Operator(std::move(out));
}

HermitianExponential::HermitianExponential(const Operator& h) {
  const double asym =
      (h.matrix() - h.matrix().adjoint()).cwiseAbs().maxCoeff();
  if (asym > kTol) {
    std::ostringstream msg;
    msg << "expm_hermitian: generator is not Hermitian, max|H - H^dagger| = "
        << asym;
    throw PredicateError(msg.str());
  }
  // Symmetrize so the solver sees an exactly self-adjoint input.
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  evecs_ = solver.eigenvectors();
  evals_ = solver.eigenvalues();
}

Operator HermitianExponential::at(double theta) const {
  Vector phases(evals_.size());
  for (Eigen::Index k = 0; k < evals_.size(); ++k) {
    phases(k) = std::polar(1.0, theta * evals_(k));
  }
  return Operator(evecs_ * phases.asDiagonal() * evecs_.adjoint());
}

Operator expm_hermitian(const Operator& h, double theta) {
  return HermitianExponential(h).at(theta);
}

Operator commutator(const Operator& a, const Operator& b) {
  return a * b - b * a;
}

Operator anticommutator(const Operator& a, const Operator& b) {
  return a * b + b * a;
}

double phase_distance(const Operator& u, const Operator& v, double tol) {
  if (u.dim() != v.dim()) throw DimensionError("phase_distance: dim mismatch");
  if (!is_unitary(u, tol) || !is_unitary(v, tol)) {
    throw PredicateError("phase_distance: inputs must be unitary");
  }
  const Complex overlap = (u.matrix().adjoint() * v.matrix()).trace();
  const double d = 1.0 - std::abs(overlap) / static_cast<double>(u.dim());
  return std::clamp(d, 0.0, 1.0);
}

Operator random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  check_dim(dim, "random_hermitian");
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return Operator(0.5 * (g + g.adjoint()));
}

Operator random_unitary(std::size_t dim, std::mt19937_64& rng) {
  check_dim(dim, "random_unitary");
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix the phase of each column against R's diagonal for a proper Haar draw.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return Operator(std::move(q));
}

}  // namespace leakelim
