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

#include "leakelim/codes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace leakelim {

std::string to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::Fermionic:
      return "fermionic";
    case EncodingKind::DualRail:
      return "dual-rail";
    case EncodingKind::Dfs2:
      return "dfs2";
    case EncodingKind::Dfs3:
      return "dfs3";
  }
  return "unknown";
}

EncodingKind encoding_kind_from_string(const std::string& name) {
  static const std::map<std::string, EncodingKind> kinds{
      {"fermionic", EncodingKind::Fermionic},
      {"dual-rail", EncodingKind::DualRail},
      {"dfs2", EncodingKind::Dfs2},
      {"dfs3", EncodingKind::Dfs3}};
  auto it = kinds.find(name);
  if (it == kinds.end()) {
    throw std::invalid_argument("unknown encoding kind '" + name + "'");
  }
  return it->second;
}

CodeSubspace::CodeSubspace(Matrix isometry, EncodingKind label)
    : isometry_(std::move(isometry)), label_(label) {
  check_dim(static_cast<std::size_t>(isometry_.rows()), "CodeSubspace");
  if (isometry_.cols() == 0 || isometry_.cols() > isometry_.rows()) {
    throw DimensionError("CodeSubspace: logical dim must be in [1, ambient]");
  }
  const Matrix gram = isometry_.adjoint() * isometry_;
  const double err =
      (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (err > kTol) {
    std::ostringstream msg;
    msg << "CodeSubspace: columns are not orthonormal, max|V'V - I| = " << err;
    throw PredicateError(msg.str());
  }
  projector_ = Operator(isometry_ * isometry_.adjoint());
  complement_ = Operator::identity(ambient_dim()) - projector_;
}

Operator CodeSubspace::restrict(const Operator& o) const {
  if (o.dim() != ambient_dim()) {
    throw DimensionError("CodeSubspace::restrict: dim mismatch");
  }
  return Operator(isometry_.adjoint() * o.matrix() * isometry_);
}

BlockDecomposition block_decompose(const Operator& o,
                                   const CodeSubspace& code) {
  if (o.dim() != code.ambient_dim()) {
    std::ostringstream msg;
    msg << "block_decompose: operator dim " << o.dim()
        << " vs code ambient dim " << code.ambient_dim();
    throw DimensionError(msg.str());
  }
  const Operator& p = code.projector();
  const Operator& q = code.complement();
  const Operator po = p * o;
  const Operator qo = q * o;
  return {po * p, qo * q, po * q + qo * p};
}

double leakage_norm(const Operator& o, const CodeSubspace& code) {
  return block_decompose(o, code).l_part.spectral_norm();
}

bool is_canonical(const Operator& s, const Operator& projector, double tol) {
  const Operator q = Operator::identity(projector.dim()) - projector;
  return (s * q).max_abs() <= tol && (q * s).max_abs() <= tol;
}

double su2_residual(const LogicalSet& set, const CodeSubspace& code) {
  const Operator x = code.restrict(set.x_bar);
  const Operator y = code.restrict(set.y_bar);
  const Operator z = code.restrict(set.z_bar);
  const Complex two_i(0.0, 2.0);
  return std::max({max_abs_diff(commutator(x, y), two_i * z),
                   max_abs_diff(commutator(y, z), two_i * x),
                   max_abs_diff(commutator(z, x), two_i * y)});
}

Operator embed(const Operator& local, std::size_t site, std::size_t n_sites) {
  if (site >= n_sites) throw std::out_of_range("embed: site out of range");
  const std::size_t d = local.dim();
  std::size_t left = 1;
  for (std::size_t s = 0; s < site; ++s) left *= d;
  std::size_t right = 1;
  for (std::size_t s = site + 1; s < n_sites; ++s) right *= d;
  check_dim(left * d * right, "embed");
  Operator out = local;
  if (left > 1) out = tensor(Operator::identity(left), out);
  if (right > 1) out = tensor(out, Operator::identity(right));
  return out;
}

Operator pauli_on(Pauli p, std::size_t qubit, std::size_t n_qubits) {
  return embed(pauli_matrix(p), qubit, n_qubits);
}

Operator heisenberg(std::size_t i, std::size_t j, std::size_t n_qubits) {
  Operator out = Operator::zero(std::size_t{1} << n_qubits);
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
    out += pauli_on(p, i, n_qubits) * pauli_on(p, j, n_qubits);
  }
  return out;
}

namespace {

LogicalSet make_logical_set(Operator x, Operator y, Operator z,
                            Operator projector) {
  LogicalSet set{std::move(x), std::move(y), std::move(z),
                 std::move(projector)};
  set.x_canonical = is_canonical(set.x_bar, set.projector);
  set.y_canonical = is_canonical(set.y_bar, set.projector);
  set.z_canonical = is_canonical(set.z_bar, set.projector);
  return set;
}

// Kronecker power of a per-block isometry.
Matrix isometry_power(const Matrix& block, int k) {
  Matrix out = block;
  for (int m = 1; m < k; ++m) {
    Matrix next(out.rows() * block.rows(), out.cols() * block.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(i * block.rows(), j * block.cols(), block.rows(),
                   block.cols()) = out(i, j) * block;
      }
    }
    out = std::move(next);
  }
  return out;
}

void checked_power(std::size_t base, int k, const std::string& what) {
  std::size_t out = 1;
  for (int m = 0; m < k; ++m) {
    out *= base;
    if (out > kMaxDim) {
      std::ostringstream msg;
      msg << what << ": ambient dimension " << base << "^" << k
          << " exceeds the supported maximum " << kMaxDim;
      throw ResourceCapError(msg.str());
    }
  }
}

}  // namespace

Encoding fermionic_site_code(int n_levels, int k_sites) {
  if (n_levels < 3) {
    throw std::invalid_argument(
        "fermionic_site_code: n_levels must be >= 3 (no leakage levels)");
  }
  if (k_sites < 1) {
    throw std::invalid_argument("fermionic_site_code: k_sites must be >= 1");
  }
  const auto d = static_cast<std::size_t>(n_levels);
  const auto k = static_cast<std::size_t>(k_sites);
  checked_power(d, k_sites, "fermionic_site_code");

  const auto n = static_cast<Eigen::Index>(d);
  Matrix x = Matrix::Zero(n, n), y = Matrix::Zero(n, n), z = Matrix::Zero(n, n),
         p = Matrix::Zero(n, n);
  x(0, 1) = x(1, 0) = 1.0;
  y(1, 0) = kI;
  y(0, 1) = -kI;
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  p(0, 0) = p(1, 1) = 1.0;
  Matrix site_iso = Matrix::Zero(n, 2);
  site_iso(0, 0) = site_iso(1, 1) = 1.0;

  Matrix iso = isometry_power(site_iso, k_sites);
  Encoding enc{{EncodingKind::Fermionic, k_sites, n_levels, 0},
               CodeSubspace(std::move(iso), EncodingKind::Fermionic),
               {},
               std::vector<std::size_t>(k, d),
               std::nullopt};
  for (std::size_t s = 0; s < k; ++s) {
    enc.qubits.push_back(make_logical_set(
        embed(Operator(x), s, k), embed(Operator(y), s, k),
        embed(Operator(z), s, k), embed(Operator(p), s, k)));
  }
  if (k == 1) enc.identity_generator = Operator(p);
  return enc;
}

std::vector<FockState> fock_basis(int total_photons) {
  if (total_photons < 0) {
    throw std::invalid_argument("fock_basis: negative photon number");
  }
  std::vector<FockState> out;
  for (int a = total_photons; a >= 0; --a) {
    for (int b = total_photons - a; b >= 0; --b) {
      for (int c = total_photons - a - b; c >= 0; --c) {
        out.push_back({a, b, c, total_photons - a - b - c});
      }
    }
  }
  return out;
}

namespace {

Eigen::Index fock_index(const std::vector<FockState>& basis,
                        const FockState& s) {
  auto it = std::find(basis.begin(), basis.end(), s);
  return static_cast<Eigen::Index>(it - basis.begin());
}

}  // namespace

Operator boson_hopping(int total_photons, int k, int l) {
  if (k < 1 || k > 4 || l < 1 || l > 4) {
    throw std::out_of_range("boson_hopping: modes are 1..4");
  }
  const auto basis = fock_basis(total_photons);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    FockState s = basis[static_cast<std::size_t>(col)];
    if (s[l - 1] == 0) continue;
    double amp = std::sqrt(static_cast<double>(s[l - 1]));
    --s[l - 1];
    amp *= std::sqrt(static_cast<double>(s[k - 1] + 1));
    ++s[k - 1];
    m(fock_index(basis, s), col) += amp;
  }
  return Operator(std::move(m));
}

Operator boson_number(int total_photons, int k) {
  return boson_hopping(total_photons, k, k);
}

Encoding dual_rail_code(int total_photons) {
  if (total_photons != 1 && total_photons != 2) {
    throw std::invalid_argument(
        "dual_rail_code: supported photon numbers are 1 and 2");
  }
  const auto basis = fock_basis(total_photons);
  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<FockState> code_states;
  if (total_photons == 1) {
    code_states = {{1, 0, 0, 0}, {0, 1, 0, 0}};
  } else {
    code_states = {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}};
  }
  Matrix iso = Matrix::Zero(n, static_cast<Eigen::Index>(code_states.size()));
  for (std::size_t c = 0; c < code_states.size(); ++c) {
    iso(fock_index(basis, code_states[c]), static_cast<Eigen::Index>(c)) = 1.0;
  }
  const int k = total_photons;
  Encoding enc{{EncodingKind::DualRail, k, 0, total_photons},
               CodeSubspace(std::move(iso), EncodingKind::DualRail),
               {},
               {static_cast<std::size_t>(n)},
               std::nullopt};
  for (int q = 0; q < k; ++q) {
    const int m0 = 2 * q + 1;
    const int m1 = 2 * q + 2;
    const Operator up = boson_hopping(total_photons, m0, m1);
    const Operator down = boson_hopping(total_photons, m1, m0);
    const Operator n0 = boson_number(total_photons, m0);
    const Operator n1 = boson_number(total_photons, m1);
    // Projector onto exactly one photon in this rail pair.
    Vector diag(n);
    for (Eigen::Index s = 0; s < n; ++s) {
      const auto& st = basis[static_cast<std::size_t>(s)];
      diag(s) = (st[m0 - 1] + st[m1 - 1] == 1) ? 1.0 : 0.0;
    }
    enc.qubits.push_back(make_logical_set(up + down, kI * (down - up),
                                          n0 - n1, Operator::diagonal(diag)));
  }
  enc.identity_generator =
      boson_number(total_photons, 1) + boson_number(total_photons, 2);
  return enc;
}

Encoding dfs2_code(int k) {
  if (k < 1) throw std::out_of_range("dfs2_code: K must be >= 1");
  checked_power(4, k, "dfs2_code");
  const Operator x = pauli_matrix(Pauli::X);
  const Operator y = pauli_matrix(Pauli::Y);
  const Operator z = pauli_matrix(Pauli::Z);
  const Operator id = Operator::identity(2);
  // Pair-local (4x4) operators, first physical qubit of the pair leftmost.
  const Operator x_pair = 0.5 * (tensor(x, x) + tensor(y, y));
  const Operator y_pair = 0.5 * (tensor(y, x) - tensor(x, y));
  const Operator z_pair = 0.5 * (tensor(z, id) - tensor(id, z));
  Matrix p_pair = Matrix::Zero(4, 4);
  p_pair(1, 1) = p_pair(2, 2) = 1.0;
  Matrix pair_iso = Matrix::Zero(4, 2);
  pair_iso(1, 0) = 1.0;  // |01>
  pair_iso(2, 1) = 1.0;  // |10>

  const auto kk = static_cast<std::size_t>(k);
  Encoding enc{{EncodingKind::Dfs2, k, 0, 0},
               CodeSubspace(isometry_power(pair_iso, k), EncodingKind::Dfs2),
               {},
               std::vector<std::size_t>(2 * kk, 2),
               std::nullopt};
  for (std::size_t m = 0; m < kk; ++m) {
    enc.qubits.push_back(make_logical_set(
        embed(x_pair, m, kk), embed(y_pair, m, kk), embed(z_pair, m, kk),
        embed(Operator(p_pair), m, kk)));
  }
  return enc;
}

namespace {

struct TripleOperators {
  Operator x_bar, y_bar, z_bar;
};

// Exchange-built logical operators on one triple (dim 8).
TripleOperators triple_logicals() {
  const Operator s12 = heisenberg(0, 1, 3);
  const Operator s13 = heisenberg(0, 2, 3);
  const Operator s23 = heisenberg(1, 2, 3);
  const Operator x_bar = (1.0 / (2.0 * std::sqrt(3.0))) * (s13 - s23);
  const Operator z_bar = (-1.0 / 3.0) * s12 + (1.0 / 6.0) * (s13 + s23);
  const Operator y_bar = Complex(0.0, -0.5) * commutator(z_bar, x_bar);
  return {x_bar, y_bar, z_bar};
}

Vector basis_vector(std::initializer_list<std::pair<int, double>> terms) {
  Vector v = Vector::Zero(8);
  for (const auto& [index, amp] : terms) v(index) = amp;
  return v;
}

}  // namespace

std::vector<SpinState> spin_coupled_basis() {
  // Index of |b1 b2 b3> is 4 b1 + 2 b2 + b3; |0> is spin up.
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const Vector singlet_up = basis_vector({{2, r2}, {4, -r2}});    // (|01>-|10>)|0>
  const Vector singlet_down = basis_vector({{3, r2}, {5, -r2}});  // (|01>-|10>)|1>
  const Operator x_bar = triple_logicals().x_bar;

  std::vector<SpinState> out;
  out.push_back({1, 0, 1, singlet_up});
  out.push_back({1, 0, -1, singlet_down});
  out.push_back({1, 1, 1, x_bar * singlet_up});
  out.push_back({1, 1, -1, x_bar * singlet_down});
  out.push_back({3, -1, 3, basis_vector({{0, 1.0}})});
  out.push_back({3, -1, 1, basis_vector({{1, r3}, {2, r3}, {4, r3}})});
  out.push_back({3, -1, -1, basis_vector({{3, r3}, {5, r3}, {6, r3}})});
  out.push_back({3, -1, -3, basis_vector({{7, 1.0}})});
  return out;
}

Encoding dfs3_code(int k) {
  if (k < 1 || k > 3) {
    throw std::out_of_range("dfs3_code: K must be in [1, 3]");
  }
  const auto basis = spin_coupled_basis();
  Matrix triple_iso(8, 4);
  for (int c = 0; c < 4; ++c) triple_iso.col(c) = basis[c].state;
  const Operator p_triple(triple_iso * triple_iso.adjoint());
  const TripleOperators ops = triple_logicals();

  const auto kk = static_cast<std::size_t>(k);
  Encoding enc{{EncodingKind::Dfs3, k, 0, 0},
               CodeSubspace(isometry_power(triple_iso, k), EncodingKind::Dfs3),
               {},
               std::vector<std::size_t>(3 * kk, 2),
               std::nullopt};
  for (std::size_t m = 0; m < kk; ++m) {
    enc.qubits.push_back(make_logical_set(
        embed(ops.x_bar, m, kk), embed(ops.y_bar, m, kk),
        embed(ops.z_bar, m, kk), embed(p_triple, m, kk)));
  }
  return enc;
}

Encoding make_encoding(const EncodingDescriptor& descriptor) {
  switch (descriptor.kind) {
    case EncodingKind::Fermionic:
      return fermionic_site_code(descriptor.n_levels, descriptor.k);
    case EncodingKind::DualRail:
      return dual_rail_code(descriptor.total_photons);
    case EncodingKind::Dfs2:
      return dfs2_code(descriptor.k);
    case EncodingKind::Dfs3:
      return dfs3_code(descriptor.k);
  }
  throw std::invalid_argument("make_encoding: unknown kind");
}

std::size_t ambient_dim_of(const EncodingDescriptor& descriptor) {
  auto power = [](std::size_t base, int k) {
    std::size_t out = 1;
    for (int m = 0; m < k; ++m) {
      out *= base;
      if (out > (std::size_t{1} << 40)) break;
    }
    return out;
  };
  switch (descriptor.kind) {
    case EncodingKind::Fermionic:
      return power(static_cast<std::size_t>(std::max(descriptor.n_levels, 0)),
                   descriptor.k);
    case EncodingKind::DualRail:
      return fock_basis(descriptor.total_photons).size();
    case EncodingKind::Dfs2:
      return power(4, descriptor.k);
    case EncodingKind::Dfs3:
      return power(8, descriptor.k);
  }
  return 0;
}

}  // namespace leakelim
