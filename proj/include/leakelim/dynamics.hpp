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
#include <string>
#include <vector>

#include "leakelim/codes.hpp"

namespace leakelim {

/** One S_a (x) B_a term of a system-bath Hamiltonian. */
struct CouplingTerm {
  std::string label;
  Operator system;
  Operator bath;
};

/** E / E_perp / L sizes (spectral norms) of one system operator. */
struct TermClass {
  std::string label;
  double e_norm = 0.0;
  double eperp_norm = 0.0;
  double l_norm = 0.0;
};

/**
 * H_SB = sum_a S_a (x) B_a on system (x) bath, classified against a code.
 * Terms must be Hermitian; throws PredicateError otherwise.
 */
class SystemBathModel {
 public:
  SystemBathModel(std::vector<CouplingTerm> terms, const CodeSubspace& code,
                  double strength = 1.0);

  std::size_t system_dim() const { return code_.ambient_dim(); }
  std::size_t bath_dim() const { return bath_dim_; }
  std::size_t joint_dim() const { return system_dim() * bath_dim_; }
  double strength() const { return strength_; }
  const CodeSubspace& code() const { return code_; }
  const std::vector<CouplingTerm>& terms() const { return terms_; }
  const std::vector<TermClass>& classification() const { return classes_; }

  const Operator& h_sb() const { return h_sb_; }
  const Operator& h_e() const { return h_e_; }
  const Operator& h_eperp() const { return h_eperp_; }
  const Operator& h_l() const { return h_l_; }

 private:
  std::vector<CouplingTerm> terms_;
  CodeSubspace code_;
  double strength_;
  std::size_t bath_dim_ = 0;
  std::vector<TermClass> classes_;
  Operator h_sb_, h_e_, h_eperp_, h_l_;
};

/// Gaussian Hermitian bath operator scaled to unit spectral radius.
Operator random_bath_operator(std::size_t bath_dim, std::mt19937_64& rng);

/**
 * Generic linear coupling with Gaussian weights times `strength`, each term
 * with its own bath operator. Fermionic sites get every level-to-level
 * hopping generator |k><l| + |l><k|, i(|k><l| - |l><k|) and |k><k|;
 * dual-rail gets the mode hoppings b_k'b_l + h.c., i(b_k'b_l - h.c.) and
 * n_k; qubit arrays (dfs2, dfs3) get single-site X, Y and Z.
 */
SystemBathModel random_linear_coupling(const Encoding& encoding,
                                       std::size_t bath_dim,
                                       std::uint64_t seed,
                                       double strength = 1.0);

enum class BilinearMode { Scalar, Cross, Symmetric, Full };

std::string to_string(BilinearMode mode);
BilinearMode bilinear_mode_from_string(const std::string& name);

using Vec3 = std::array<double, 3>;
using Tensor3 = std::array<std::array<double, 3>, 3>;

/**
 * g = scalar I + antisymmetric part + symmetric traceless part, the last
 * split into rank-1 terms weight * v v^T. The antisymmetric part is stored
 * as beta with g^{bc} - g^{cb} = 2 eps_{abc} beta_a.
 */
struct CouplingTensorParts {
  double scalar = 0.0;
  Vec3 beta{};
  std::vector<std::pair<double, Vec3>> symmetric;
};

CouplingTensorParts decompose_coupling_tensor(const Tensor3& g);
Tensor3 reconstruct_coupling_tensor(const CouplingTensorParts& parts);

/// sum_{ab} g^{ab} sigma_i^a sigma_j^b on an n-qubit register (0-based).
Operator bilinear_operator(const Tensor3& g, std::size_t i, std::size_t j,
                           std::size_t n_qubits);

/**
 * Two-body couplings over every physical pair i < j of a dfs3 encoding:
 * scalar g sigma_i.sigma_j, cross beta.(sigma_i x sigma_j), symmetric
 * (sigma_i.gamma)(sigma_j.gamma) with unit gamma, or a full random g tensor
 * split into its scalar, cross and symmetric parts. beta and gamma are unit
 * vectors times `strength`. Throws std::invalid_argument for other codes.
 */
SystemBathModel bilinear_coupling(const Encoding& encoding,
                                  std::size_t bath_dim, std::uint64_t seed,
                                  BilinearMode mode, double strength = 1.0);

struct EvolutionResult {
  Operator final_unitary;
  /// Leakage of each logical basis state, bath maximally mixed.
  std::vector<double> leakage_population;
  double leakage_worst = 0.0;
  double leakage_avg = 0.0;
  double target_distance = 0.0;
};

/**
 * n cycles of: pulse R, free evolution for t/(2n), pulse R^dagger, free
 * evolution for t/(2n); total free evolution time t. Throws
 * std::invalid_argument unless t > 0 and n >= 1.
 */
EvolutionResult parity_kick_evolve(const SystemBathModel& model,
                                   const Operator& leo, double t, int n);

/// Leakage of every logical basis state under a joint unitary.
std::vector<double> leakage_populations(const Operator& u,
                                        const SystemBathModel& model);

struct IdealTarget {
  Operator unitary;  ///< e^{-i(H_E + H_Eperp) t}
  /// max |e^{-iH_E t} e^{-iH_Eperp t} - e^{-i(H_E + H_Eperp) t}|
  double product_residual = 0.0;
};

IdealTarget ideal_target(const SystemBathModel& model, double t);

enum class SweepKind { Time, Pulses };
enum class FitStatus { Ok, NoSignal, InsufficientPoints };

std::string to_string(SweepKind kind);
std::string to_string(FitStatus status);

struct SweepPoint {
  double x = 0.0;  ///< t for a time sweep, n for a pulse sweep
  double leakage_worst = 0.0;
  double leakage_avg = 0.0;
  double target_distance = 0.0;
};

struct LogLogFit {
  FitStatus status = FitStatus::InsufficientPoints;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points_used = 0;
  double x_min = 0.0;
  double x_max = 0.0;
};

/// Points with y below this are dropped before fitting.
inline constexpr double kLeakageFloor = 1e-13;
/// strength * (largest free-evolution time per cycle) above this warns.
inline constexpr double kPerturbativeLimit = 0.3;

/// Least squares of log y on log x over points with y >= kLeakageFloor.
LogLogFit fit_log_log(const std::vector<double>& x,
                      const std::vector<double>& y);

struct SweepResult {
  SweepKind kind = SweepKind::Time;
  int n = 1;                ///< pulse cycles (time sweep)
  double total_time = 0.0;  ///< fixed T (pulse sweep)
  std::vector<SweepPoint> points;
  LogLogFit fit;
  bool perturbative = true;
  std::string warning;
};

/// Worst-case leakage against t at fixed n. Needs >= 3 points over a decade.
SweepResult time_sweep(const SystemBathModel& model, const Operator& leo,
                       const std::vector<double>& t_values, int n);

/// Worst-case leakage against n at fixed total time.
SweepResult pulse_sweep(const SystemBathModel& model, const Operator& leo,
                        double total_time, const std::vector<int>& n_values);

}  // namespace leakelim
