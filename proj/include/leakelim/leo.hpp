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

#include <array>
#include <cstdint>
#include <vector>

#include "leakelim/codes.hpp"

namespace leakelim {

/** Which LEO to build: encoding, size, sign of the exponent, global phase. */
struct LEOSpec {
  EncodingKind encoding = EncodingKind::Fermionic;
  int k = 1;
  int sign = +1;
  double phase = 0.0;

  bool operator==(const LEOSpec&) const = default;
};

/// e^{i phase} (-P + (I - P)).
Operator canonical_leo(const CodeSubspace& code, double phase = 0.0);

/**
 * exp(sign * i pi n.(X, Y, Z)) for one qubit of an encoding. Canonical
 * logical operators are used as they are; the others are first sandwiched
 * by the qubit projector. Throws std::invalid_argument unless |n_hat| = 1.
 */
Operator projected_rotation_leo(const std::array<double, 3>& n_hat,
                                const LogicalSet& logical, int sign = +1);

/// diag(-1 x d, +1 x (ambient_dim - d)); requires 1 <= d < ambient_dim.
Operator qudit_identity_leo(std::size_t d, std::size_t ambient_dim,
                            int sign = +1);

/**
 * exp(sign * i pi S_1 S_2 ... S_K). `factors[i]` must be canonical with
 * respect to `projectors[i]`; the first offender is named in the
 * PredicateError.
 */
Operator multi_qubit_leo(const std::vector<Operator>& factors,
                         const std::vector<Operator>& projectors,
                         int sign = +1);

/**
 * The standard LEO of an encoding: Z_1...Z_K (fermionic), Zbar_1...Zbar_K
 * (dfs2), Xbar_1...Xbar_K (dfs3), or the phaseshifter exp(i pi (n1 + n2))
 * (dual-rail), times e^{i spec.phase}.
 */
Operator encoding_leo(const Encoding& encoding, const LEOSpec& spec = {});

/// Largest deviation of r from the block form e^{i phase}(-P + (I-P)).
double leo_shape_residual(const Operator& r, const CodeSubspace& code,
                          double phase = 0.0);

struct ValidationReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double anticommutator_l = 0.0;    ///< max over samples of max|{R, L}|
  double commutator_e = 0.0;        ///< max|[R, E]|
  double commutator_eperp = 0.0;    ///< max|[R, E_perp]|
  double max_l_entry = 0.0;         ///< max|L| over the drawn L samples
  double tolerance = kLongTol;
  bool verdict = false;
};

/**
 * Draws `samples` random pure-E, pure-E_perp and pure-L operators (random
 * Hermitian matrices sandwiched by the code projectors) and reports the
 * worst residuals of {R, L} = 0, [R, E] = 0, [R, E_perp] = 0. Throws
 * PredicateError if r is not unitary.
 */
ValidationReport validate_leo(const Operator& r, const CodeSubspace& code,
                              int samples, std::uint64_t seed);

}  // namespace leakelim
