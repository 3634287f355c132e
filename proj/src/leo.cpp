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

#include "leakelim/leo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace leakelim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sign(int sign, const char* what) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument(std::string(what) + ": sign must be +1 or -1");
  }
}

}  // namespace

Operator canonical_leo(const CodeSubspace& code, double phase) {
  return std::polar(1.0, phase) * (code.complement() - code.projector());
}

Operator projected_rotation_leo(const std::array<double, 3>& n_hat,
                                const LogicalSet& logical, int sign) {
  check_sign(sign, "projected_rotation_leo");
  const double norm = std::sqrt(n_hat[0] * n_hat[0] + n_hat[1] * n_hat[1] +
                                n_hat[2] * n_hat[2]);
  if (std::abs(norm - 1.0) > kTol) {
    std::ostringstream msg;
    msg << "projected_rotation_leo: |n_hat| = " << norm << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  const Operator& p = logical.projector;
  auto supported = [&](const Operator& s, bool canonical) {
    return canonical ? s : p * s * p;
  };
  Operator g = Operator::zero(p.dim());
  if (n_hat[0] != 0.0) {
    g += n_hat[0] * supported(logical.x_bar, logical.x_canonical);
  }
  if (n_hat[1] != 0.0) {
    g += n_hat[1] * supported(logical.y_bar, logical.y_canonical);
  }
  if (n_hat[2] != 0.0) {
    g += n_hat[2] * supported(logical.z_bar, logical.z_canonical);
  }
  return expm_hermitian(g, sign * kPi);
}

Operator qudit_identity_leo(std::size_t d, std::size_t ambient_dim, int sign) {
  check_sign(sign, "qudit_identity_leo");
  check_dim(ambient_dim, "qudit_identity_leo");
  if (d < 1 || d >= ambient_dim) {
    std::ostringstream msg;
    msg << "qudit_identity_leo: need 1 <= d < ambient_dim, got d = " << d
        << ", ambient_dim = " << ambient_dim;
    throw std::invalid_argument(msg.str());
  }
  Vector diag = Vector::Ones(static_cast<Eigen::Index>(ambient_dim));
  diag.head(static_cast<Eigen::Index>(d)).setConstant(-1.0);
  return Operator::diagonal(diag);
}

Operator multi_qubit_leo(const std::vector<Operator>& factors,
                         const std::vector<Operator>& projectors, int sign) {
  check_sign(sign, "multi_qubit_leo");
  if (factors.empty() || factors.size() != projectors.size()) {
    throw std::invalid_argument(
        "multi_qubit_leo: need one projector per factor and K >= 1");
  }
  Operator product = Operator::identity(factors.front().dim());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_canonical(factors[i], projectors[i])) {
      std::ostringstream msg;
      msg << "multi_qubit_leo: factor " << i + 1
          << " is not canonical for its qubit subspace";
      throw PredicateError(msg.str());
    }
    product = product * factors[i];
  }
  return expm_hermitian(product, sign * kPi);
}

Operator encoding_leo(const Encoding& encoding, const LEOSpec& spec) {
  check_sign(spec.sign, "encoding_leo");
  Operator r;
  if (encoding.descriptor.kind == EncodingKind::DualRail) {
    r = expm_hermitian(*encoding.identity_generator, spec.sign * kPi);
  } else {
    std::vector<Operator> factors, projectors;
    for (const LogicalSet& q : encoding.qubits) {
      factors.push_back(encoding.descriptor.kind == EncodingKind::Dfs3
                            ? q.x_bar
                            : q.z_bar);
      projectors.push_back(q.projector);
    }
    r = multi_qubit_leo(factors, projectors, spec.sign);
  }
  if (spec.phase != 0.0) r = std::polar(1.0, spec.phase) * r;
  return r;
}

double leo_shape_residual(const Operator& r, const CodeSubspace& code,
                          double phase) {
  return max_abs_diff(r, canonical_leo(code, phase));
}

ValidationReport validate_leo(const Operator& r, const CodeSubspace& code,
                              int samples, std::uint64_t seed) {
  if (!is_unitary(r)) {
    throw PredicateError("validate_leo: operator is not unitary");
  }
  if (r.dim() != code.ambient_dim()) {
    throw DimensionError("validate_leo: operator and code dims differ");
  }
  ValidationReport report;
  report.samples = samples;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const Operator& p = code.projector();
  const Operator& q = code.complement();
  for (int s = 0; s < samples; ++s) {
    const Operator e = p * random_hermitian(r.dim(), rng) * p;
    const Operator eperp = q * random_hermitian(r.dim(), rng) * q;
    const Operator h = random_hermitian(r.dim(), rng);
    const Operator l = p * h * q + q * h * p;
    report.commutator_e =
        std::max(report.commutator_e, commutator(r, e).max_abs());
    report.commutator_eperp =
        std::max(report.commutator_eperp, commutator(r, eperp).max_abs());
    report.anticommutator_l =
        std::max(report.anticommutator_l, anticommutator(r, l).max_abs());
    report.max_l_entry = std::max(report.max_l_entry, l.max_abs());
  }
  report.verdict = report.commutator_e <= report.tolerance &&
                   report.commutator_eperp <= report.tolerance &&
                   report.anticommutator_l <= report.tolerance;
  return report;
}

}  // namespace leakelim
