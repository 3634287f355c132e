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
#include <optional>
#include <string>
#include <vector>

#include "leakelim/operator.hpp"
#include "leakelim/pauli.hpp"

namespace leakelim {

enum class EncodingKind { Fermionic, DualRail, Dfs2, Dfs3 };

std::string to_string(EncodingKind kind);
/// Accepts "fermionic", "dual-rail", "dfs2", "dfs3".
EncodingKind encoding_kind_from_string(const std::string& name);

/** Serializable description of an encoding instance. */
struct EncodingDescriptor {
  EncodingKind kind = EncodingKind::Fermionic;
  int k = 1;              ///< number of logical (physical) qubits
  int n_levels = 4;       ///< fermionic: levels per site
  int total_photons = 2;  ///< dual-rail: photons in the 4-mode sector

  bool operator==(const EncodingDescriptor&) const = default;
};

/**
 * Code subspace given by an isometry V from the logical space into the
 * ambient space. The projector P = V V^dagger fixes the block split that
 * classifies operators as logical, orthogonal or leakage.
 */
class CodeSubspace {
 public:
  /// Throws PredicateError unless V^dagger V = I to kTol.
  CodeSubspace(Matrix isometry, EncodingKind label);

  std::size_t ambient_dim() const {
    return static_cast<std::size_t>(isometry_.rows());
  }
  std::size_t logical_dim() const {
    return static_cast<std::size_t>(isometry_.cols());
  }
  const Matrix& isometry() const { return isometry_; }
  const Operator& projector() const { return projector_; }
  /// I - P
  const Operator& complement() const { return complement_; }
  EncodingKind label() const { return label_; }

  /// V^dagger o V, the logical-space restriction of `o`.
  Operator restrict(const Operator& o) const;

 private:
  Matrix isometry_;
  Operator projector_;
  Operator complement_;
  EncodingKind label_;
};

struct BlockDecomposition {
  Operator e_part;      ///< P o P
  Operator eperp_part;  ///< (I-P) o (I-P)
  Operator l_part;      ///< P o (I-P) + (I-P) o P
};

/**
 * Ambient realizations of the logical X, Y, Z of one (encoded or physical)
 * qubit, together with that qubit's code projector.
 */
struct LogicalSet {
  Operator x_bar;
  Operator y_bar;
  Operator z_bar;
  Operator projector;
  bool x_canonical = false;
  bool y_canonical = false;
  bool z_canonical = false;
};

/** A concrete encoding: code, per-qubit logical sets and tensor layout. */
struct Encoding {
  EncodingDescriptor descriptor;
  CodeSubspace code;
  std::vector<LogicalSet> qubits;
  /// Tensor factors of the ambient space, leftmost first. A single entry
  /// means no tensor structure is exposed (dual-rail Fock sector).
  std::vector<std::size_t> site_dims;
  /// Projector-type generator whose pi-exponential is an identity LEO
  /// (n0+n1 on a single fermionic site, n1+n2 for dual-rail).
  std::optional<Operator> identity_generator;
};

BlockDecomposition block_decompose(const Operator& o, const CodeSubspace& code);

/// Largest singular value of the leakage block.
double leakage_norm(const Operator& o, const CodeSubspace& code);

/// S (I-P) = 0 and (I-P) S = 0 to `tol`.
bool is_canonical(const Operator& s, const Operator& projector,
                  double tol = kTol);

/**
 * Largest residual of the su(2) relations [X,Y]=2iZ, [Y,Z]=2iX, [Z,X]=2iY
 * after restriction to the code subspace.
 */
double su2_residual(const LogicalSet& set, const CodeSubspace& code);

/// kron(I_{d^site}, local, I_{d^{n_sites-site-1}}) with d = local.dim().
Operator embed(const Operator& local, std::size_t site, std::size_t n_sites);

/// Pauli `p` on `qubit` (0-based) of an n-qubit register.
Operator pauli_on(Pauli p, std::size_t qubit, std::size_t n_qubits);

/// sigma_i . sigma_j on an n-qubit register (0-based indices).
Operator heisenberg(std::size_t i, std::size_t j, std::size_t n_qubits);

/**
 * One potential well per site, each an n_levels-dim single-particle sector;
 * the qubit lives on levels {0, 1}. Site ops are X = |0><1|+|1><0|,
 * Y = i(|1><0|-|0><1|), Z = |0><0|-|1><1| (zero on higher levels).
 * Throws std::invalid_argument if n_levels < 3 or k_sites < 1.
 */
Encoding fermionic_site_code(int n_levels, int k_sites);

/// One Fock basis state of the 4-mode sector: occupations (n1, n2, n3, n4).
using FockState = std::array<int, 4>;

/// All 4-mode occupation patterns with the given photon count, in
/// lexicographically descending order of (n1, n2, n3, n4).
std::vector<FockState> fock_basis(int total_photons);

/// b_k^dagger b_l on the fixed-photon-number sector (modes 1-based).
Operator boson_hopping(int total_photons, int k, int l);

/// n_k on the fixed-photon-number sector (mode 1-based).
Operator boson_number(int total_photons, int k);

/**
 * Dual-rail encoding of qubits in four optical modes. With two photons the
 * code is spanned by b1'b3', b1'b4', b2'b3', b2'b4' acting on vacuum; with
 * one photon it is b1', b2'. Other photon numbers are rejected.
 */
Encoding dual_rail_code(int total_photons = 2);

/**
 * Two physical qubits per logical qubit, |0_L> = |01>, |1_L> = |10>. Logical
 * qubit m uses physical pair (2m-1, 2m).
 */
Encoding dfs2_code(int k);

/// One vector of the coupled basis of three spins.
struct SpinState {
  int twice_s;   ///< 1 or 3
  int lambda;    ///< 0 or 1 for S=1/2, -1 for S=3/2
  int twice_sz;  ///< -3..3
  Vector state;
};

/**
 * Orthonormal |S, lambda, S_z> basis of three spins (|0> is spin up). The
 * S=1/2 states come first: (lambda, S_z) = (0,+), (0,-), (1,+), (1,-), then
 * S=3/2 with S_z = 3/2, 1/2, -1/2, -3/2. lambda=0 is the singlet on spins
 * 1 and 2; the lambda=1 states are the images of the lambda=0 states under
 * the exchange-built logical X, which fixes their phases.
 */
std::vector<SpinState> spin_coupled_basis();

/**
 * Three physical qubits per logical qubit; the code is the whole S=1/2
 * sector of each triple (logical x gauge), so logical_dim = 4^k.
 * Throws std::out_of_range unless 1 <= k <= 3.
 */
Encoding dfs3_code(int k);

/// Dispatch on the descriptor.
Encoding make_encoding(const EncodingDescriptor& descriptor);

/// Ambient dimension without building anything (for resource checks).
std::size_t ambient_dim_of(const EncodingDescriptor& descriptor);

}  // namespace leakelim
