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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leakelim/codes.hpp"

namespace leakelim {

/**
 * Generator labels are sums of products of atoms, e.g. "Z1Z2",
 * "X3X4+Y3Y4" or "ZL1ZL2". An atom is X, Y or Z (physical site) or XL, YL,
 * ZL (logical qubit), followed by a 1-based index. Coefficients are carried
 * by the gate angle, never by the label.
 */
struct LabelAtom {
  char letter;   ///< 'X', 'Y' or 'Z'
  bool logical;  ///< XL/YL/ZL
  int index;     ///< 1-based

  bool operator==(const LabelAtom&) const = default;
};
using LabelTerm = std::vector<LabelAtom>;

/// Throws std::invalid_argument on malformed text.
std::vector<LabelTerm> parse_label(const std::string& label);
std::string format_label(const std::vector<LabelTerm>& terms);

/** One pulse e^{i angle G}. */
struct Gate {
  std::string generator;
  double angle = 0.0;
  /// Conjugation nesting level; only used for rendering.
  int depth = 0;

  bool operator==(const Gate& o) const {
    return generator == o.generator && angle == o.angle;
  }
};

enum class PrimitivePattern {
  SingleX,        ///< X_i
  SingleY,        ///< Y_i
  SingleZ,        ///< Z_i
  NearestZZ,      ///< Z_i Z_{i+1}
  NearestXY,      ///< X_i X_{i+1} + Y_i Y_{i+1}
  NearestXX,      ///< X_i X_{i+1}
  NearestYY,      ///< Y_i Y_{i+1}
  LogicalX,       ///< XL_i
  LogicalY,       ///< YL_i
  LogicalZ,       ///< ZL_i
  LogicalNearestZZ,  ///< ZL_i ZL_{i+1}
};

std::string to_string(PrimitivePattern p);

struct PrimitiveSet {
  std::string name;
  std::vector<PrimitivePattern> patterns;

  bool matches(const Gate& gate) const;
};

/// Single-site X, Y, Z and nearest-neighbour ZZ.
PrimitiveSet fermionic_primitives();
/// Nearest-neighbour XX+YY and ZZ, single-site Z (Zeeman).
PrimitiveSet dfs2_primitives();
/// Logical X, Y, Z and nearest logical ZZ, all exchange-expressible.
PrimitiveSet dfs3_primitives();
/// Nearest-neighbour ZZ, XX+YY, XX and YY on plain qubits.
PrimitiveSet nearest_neighbor_primitives();

/// Sign bookkeeping of one recursion step: conjugating by `conjugator`
/// turns the previous exponent into `sign` * `generator`.
struct RecursionStep {
  int level = 0;
  std::string conjugator;
  std::string generator;
  int sign = +1;
};

struct GateSequence {
  std::vector<Gate> gates;
  PrimitiveSet primitive_set;
  /// The sequence realizes e^{i target_angle target_label}.
  std::string target_label;
  double target_angle = 0.0;
  std::vector<RecursionStep> steps;

  std::size_t size() const { return gates.size(); }
  /// Gates outside the primitive set, in order.
  std::vector<Gate> violations() const;
};

/// Reverse order with negated angles, so realize(s) realize(inverse(s)) = I.
GateSequence inverse(const GateSequence& seq);

/**
 * Conjugation of `inner` by the pulse realized by `shell` (meant to be
 * e^{i pi/4 A}). The result lists inverse(shell), then inner, then shell;
 * with the first gate acting first this realizes
 * e^{i pi/4 A} inner e^{-i pi/4 A}.
 */
GateSequence conjugate(const GateSequence& shell, const GateSequence& inner);
GateSequence conjugate(const Gate& shell, const GateSequence& inner);

/**
 * Resolves generator labels to Hermitian operators on one ambient space.
 * Physical atoms address sites of the tensor layout; logical atoms address
 * the encoding's logical sets.
 */
class OperatorContext {
 public:
  /// Plain register of n qubits.
  static OperatorContext qubits(std::size_t n_qubits);
  explicit OperatorContext(const Encoding& encoding);

  std::size_t dim() const { return dim_; }
  /// Throws std::invalid_argument for labels that do not resolve.
  Operator resolve(const std::string& label) const;

 private:
  OperatorContext() = default;
  Operator atom(const LabelAtom& a) const;

  std::size_t dim_ = 0;
  std::size_t n_sites_ = 0;
  std::optional<Encoding> encoding_;
};

/// Ordered product, first gate applied first: U_n ... U_2 U_1.
Operator realize(const GateSequence& seq, const OperatorContext& context);

/// Largest K accepted by the symbolic compilers.
inline constexpr int kMaxCompileK = 6;

/// e^{i theta Z_1 ... Z_K} from single-site X, Y, Z and nearest ZZ pulses.
GateSequence compile_zz_chain(int k, double theta);
/// compile_zz_chain(K, pi).
GateSequence compile_leo_ferm(int k);

/**
 * e^{i theta Z_i Z_j} for i < j from a nearest-neighbour ZZ pulse on
 * (i, i+1) walked to j by iSWAP-type XX+YY shells.
 */
GateSequence compile_long_range_zz(int i, int j, double theta);
/// e^{i theta Z_i Z_{i+2}}; `two_step` splits the shell into XX and YY.
GateSequence compile_next_nearest(int i, double theta, bool two_step = false);

/// exp(i pi Zbar_1 ... Zbar_K) on 2K physical qubits.
GateSequence compile_leo_dfs2(int k);
/// exp(i pi Xbar_1 ... Xbar_K) over logical three-spin primitives.
GateSequence compile_leo_dfs3(int k);
/// Dispatch; dual-rail is rejected with std::invalid_argument.
GateSequence compile_leo(EncodingKind kind, int k);

/// 1 - |tr(P u^dagger v P)| / rank(P), the distance seen by code states.
double code_distance(const Operator& u, const Operator& v,
                     const CodeSubspace& code);

struct GateCountReport {
  EncodingKind kind = EncodingKind::Fermionic;
  std::vector<std::pair<int, std::size_t>> counts;
  long long slope = 0;
  long long intercept = 0;
  long long max_residual = 0;
};

/// Symbolic gate counts over [k_min, k_max] with an exact affine fit.
GateCountReport gate_count_report(EncodingKind kind, int k_min, int k_max);

/**
 * One gate per line. Pulses at +pi/4 print as U[A], at -pi/4 as U[A]^dag,
 * anything else as exp(i*angle*A); nesting is shown by indentation.
 */
std::string render_text(const GateSequence& seq);

}  // namespace leakelim
