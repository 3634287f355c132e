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

// Independent reference computations used only by the test suites. Nothing
// here calls into the eigendecomposition path of the library.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace leakelim::oracle {

using Matrix = Eigen::MatrixXcd;

/// Element-by-element Kronecker product, four nested loops.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      for (Eigen::Index k = 0; k < rb; ++k)
        for (Eigen::Index l = 0; l < cb; ++l)
          out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
  return out;
}

/**
 * exp(A) via scaling and squaring around a truncated Taylor series. Throws
 * if the norm-bounded remainder of the series is not below `remainder_tol`.
 */
inline Matrix taylor_expm(const Matrix& a, int terms = 30,
                          double remainder_tol = 1e-15) {
  // Frobenius norm bounds the operator norm.
  double norm = a.norm();
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const Matrix scaled = a / std::pow(2.0, squarings);
  // Remainder of the Taylor series beyond `terms`: bounded by
  // norm^(terms+1)/(terms+1)! * e^norm.
  double bound = std::exp(norm);
  for (int k = 1; k <= terms + 1; ++k) bound *= norm / k;
  if (bound > remainder_tol) throw std::runtime_error("taylor_expm: remainder");
  const auto n = a.rows();
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= terms; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// e^{i theta H} through the Taylor oracle.
inline Matrix expi(const Matrix& h, double theta) {
  return taylor_expm(std::complex<double>(0.0, theta) * h);
}

/// Largest singular value by power iteration on M^dagger M.
inline double top_singular_value(const Matrix& m, int iters = 500) {
  Eigen::VectorXcd v(m.cols());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    v(k) = std::complex<double>(1.0 + 0.37 * k, 0.11 * k * k);
  }
  const Matrix g = m.adjoint() * m;
  double lambda = 0.0;
  for (int k = 0; k < iters; ++k) {
    Eigen::VectorXcd w = g * v;
    const double n = w.norm();
    if (n == 0.0) return 0.0;
    lambda = n / v.norm();
    v = w / n;
  }
  return std::sqrt(lambda);
}

}  // namespace leakelim::oracle
