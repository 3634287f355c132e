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

#include <catch_amalgamated.hpp>
#include <cmath>

#include "leakelim/dynamics.hpp"
#include "leakelim/leo.hpp"
#include "oracles.hpp"

namespace leakelim {
namespace {

// Oracle: the parity-kick product with Taylor exponentials and leakage read
// off column by column.
double oracle_worst_leakage(const SystemBathModel& m, const Operator& leo,
                            double t, int n) {
  const std::size_t db = m.bath_dim();
  const Matrix r = oracle::kron(leo.matrix(), Matrix::Identity(db, db));
  const Matrix free = oracle::expi(m.h_sb().matrix(), -t / (2.0 * n));
  const Matrix cycle = free * r.adjoint() * free * r;
  Matrix u = Matrix::Identity(cycle.rows(), cycle.cols());
  for (int k = 0; k < n; ++k) u = cycle * u;
  const Matrix& iso = m.code().isometry();
  const Matrix& q = m.code().complement().matrix();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < iso.cols(); ++j) {
    double total = 0.0;
    for (std::size_t b = 0; b < db; ++b) {
      Eigen::VectorXcd eb = Eigen::VectorXcd::Zero(db);
      eb(b) = 1.0;
      const Eigen::VectorXcd in =
          oracle::kron(iso.col(j), eb.head(db)).col(0);
      const Eigen::VectorXcd out = u * in;
      for (Eigen::Index s = 0; s < q.rows(); ++s) {
        for (Eigen::Index s2 = 0; s2 < q.rows(); ++s2) {
          if (q(s, s2) == 0.0) continue;
          for (std::size_t c = 0; c < db; ++c) {
            total += std::real(std::conj(out(s * db + c)) * q(s, s2) *
                               out(s2 * db + c));
          }
        }
      }
    }
    worst = std::max(worst, total / db);
  }
  return worst;
}

SystemBathModel block_model(const Encoding& enc, std::size_t bath_dim,
                            std::uint64_t seed, bool e, bool eperp, bool l) {
  std::mt19937_64 rng(seed);
  const Operator& p = enc.code.projector();
  const Operator& q = enc.code.complement();
  std::vector<CouplingTerm> terms;
  for (int a = 0; a < 3; ++a) {
    const Operator h = random_hermitian(p.dim(), rng);
    Operator s = Operator::zero(p.dim());
    if (e) s += p * h * p;
    if (eperp) s += q * h * q;
    if (l) s += p * h * q + q * h * p;
    terms.push_back({"t" + std::to_string(a), s,
                     random_bath_operator(bath_dim, rng)});
  }
  return SystemBathModel(terms, enc.code);
}

TEST_CASE("SystemBathModel assembles and classifies", "[dynamics]") {
  const Encoding enc = fermionic_site_code(4, 1);
  const SystemBathModel m = random_linear_coupling(enc, 4, 9);
  CHECK(m.joint_dim() == 16);
  CHECK(is_hermitian(m.h_sb()));
  Operator sum = Operator::zero(16);
  for (const CouplingTerm& t : m.terms()) sum += tensor(t.system, t.bath);
  CHECK(max_abs_diff(sum, m.h_sb()) == 0.0);
  CHECK(max_abs_diff(m.h_e() + m.h_eperp() + m.h_l(), m.h_sb()) <= 1e-13);

  bool saw_leak = false;
  for (const TermClass& c : m.classification()) {
    if (c.label == "hop1(0,2)") {
      saw_leak = true;
      CHECK(c.l_norm > 0.0);
      CHECK(c.e_norm == 0.0);
    }
    if (c.label == "hop1(0,1)") CHECK(c.l_norm == 0.0);
  }
  CHECK(saw_leak);

  for (const CouplingTerm& t : m.terms()) {
    const double radius = Eigen::SelfAdjointEigenSolver<Matrix>(t.bath.matrix())
                              .eigenvalues()
                              .cwiseAbs()
                              .maxCoeff();
    CHECK(radius == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("random_linear_coupling is deterministic and scalable",
          "[dynamics]") {
  const Encoding enc = dfs2_code(1);
  const SystemBathModel a = random_linear_coupling(enc, 3, 5);
  const SystemBathModel b = random_linear_coupling(enc, 3, 5);
  CHECK(a.h_sb() == b.h_sb());
  CHECK(a.terms().size() == 6);
  const SystemBathModel c = random_linear_coupling(enc, 3, 6);
  CHECK_FALSE(a.h_sb() == c.h_sb());
  const SystemBathModel zero = random_linear_coupling(enc, 3, 5, 0.0);
  CHECK(zero.h_sb().max_abs() == 0.0);
  const EvolutionResult ev =
      parity_kick_evolve(zero, Operator::identity(4), 0.5, 3);
  CHECK(max_abs_diff(ev.final_unitary, Operator::identity(12)) <= 1e-15);

  CHECK(random_linear_coupling(dual_rail_code(2), 2, 1).terms().size() == 16);
  CHECK(random_linear_coupling(dfs3_code(1), 2, 1).terms().size() == 9);
  CHECK_THROWS_AS(random_linear_coupling(enc, 0, 1), std::invalid_argument);
}

TEST_CASE("Coupling tensor decomposition reconstructs g", "[dynamics]") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    Tensor3 g{};
    for (auto& row : g)
      for (double& c : row) c = gauss(rng);
    const CouplingTensorParts parts = decompose_coupling_tensor(g);
    const Tensor3 back = reconstruct_coupling_tensor(parts);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(std::abs(back[a][b] - g[a][b]) <= 1e-14);
    double trace = 0.0;
    for (const auto& [w, v] : parts.symmetric) trace += w;
    CHECK(std::abs(trace) <= 1e-14);
  }
}

TEST_CASE("Bilinear couplings on the three-qubit DFS", "[dynamics]") {
  const Encoding enc = dfs3_code(1);
  SECTION("scalar terms are logical errors") {
    const SystemBathModel m = bilinear_coupling(enc, 2, 4, BilinearMode::Scalar);
    REQUIRE(m.terms().size() == 3);
    for (const TermClass& c : m.classification()) CHECK(c.l_norm <= 1e-12);
  }
  SECTION("cross and symmetric terms leak") {
    for (std::uint64_t seed : {1, 2, 3}) {
      for (BilinearMode mode : {BilinearMode::Cross, BilinearMode::Symmetric}) {
        const SystemBathModel m = bilinear_coupling(enc, 2, seed, mode);
        for (const TermClass& c : m.classification()) CHECK(c.l_norm > 0.1);
      }
    }
  }
  SECTION("full mode splits each pair into its parts") {
    const SystemBathModel m = bilinear_coupling(enc, 2, 8, BilinearMode::Full);
    REQUIRE(m.terms().size() == 15);
    // Reassemble pair (1,2) and compare with a fresh draw of the same g.
    std::mt19937_64 rng(8);
    std::normal_distribution<double> gauss;
    Tensor3 g{};
    for (auto& row : g)
      for (double& c : row) c = gauss(rng);
    Operator sum = Operator::zero(8);
    for (std::size_t k = 0; k < 5; ++k) sum += m.terms()[k].system;
    CHECK(max_abs_diff(sum, bilinear_operator(g, 0, 1, 3)) <= 1e-13);
  }
  CHECK_THROWS_AS(bilinear_coupling(dfs2_code(1), 2, 1, BilinearMode::Scalar),
                  std::invalid_argument);
  CHECK(bilinear_mode_from_string("cross") == BilinearMode::Cross);
  CHECK_THROWS_AS(bilinear_mode_from_string("tensor"), std::invalid_argument);
}

TEST_CASE("Parity kicks without leakage terms reproduce the target",
          "[dynamics]") {
  const Encoding enc = fermionic_site_code(4, 1);
  const SystemBathModel m = block_model(enc, 3, 17, true, true, false);
  const Operator r = encoding_leo(enc);
  for (double t : {0.05, 0.7, 3.0}) {
    for (int n : {1, 3, 8}) {
      const EvolutionResult ev = parity_kick_evolve(m, r, t, n);
      CHECK(ev.leakage_worst <= 1e-24);
      CHECK(ev.target_distance <= 1e-12);
      CHECK(max_abs_diff(ev.final_unitary,
                         expm_hermitian(m.h_sb(), -t)) <= 1e-12);
    }
  }
}

TEST_CASE("Identity pulses leave free evolution unprotected", "[dynamics]") {
  const Encoding enc = fermionic_site_code(4, 1);
  const SystemBathModel m = random_linear_coupling(enc, 4, 3);
  const EvolutionResult kicked =
      parity_kick_evolve(m, Operator::identity(4), 0.4, 5);
  const Operator free = expm_hermitian(m.h_sb(), -0.4);
  CHECK(max_abs_diff(kicked.final_unitary, free) <= 1e-12);
  const auto pops = leakage_populations(free, m);
  for (std::size_t j = 0; j < pops.size(); ++j) {
    CHECK(kicked.leakage_population[j] ==
          Catch::Approx(pops[j]).epsilon(1e-10));
  }
  CHECK(kicked.leakage_worst > 1e-3);
}

TEST_CASE("Pure leakage is reversed by the kicks", "[dynamics]") {
  const Encoding enc = dfs2_code(1);
  const SystemBathModel m = block_model(enc, 2, 4, false, false, true);
  const EvolutionResult ev = parity_kick_evolve(m, encoding_leo(enc), 0.1, 64);
  CHECK(ev.target_distance < 1e-6);
}

TEST_CASE("Parity kicks agree with the Taylor oracle", "[dynamics]") {
  const Encoding enc = fermionic_site_code(4, 1);
  const SystemBathModel m = random_linear_coupling(enc, 4, 1);
  const Operator r = encoding_leo(enc);
  for (double t : {1e-2, 1e-1, 0.5}) {
    for (int n : {1, 4}) {
      const double lib = parity_kick_evolve(m, r, t, n).leakage_worst;
      const double ref = oracle_worst_leakage(m, r, t, n);
      CHECK(lib == Catch::Approx(ref).epsilon(1e-8).margin(1e-20));
    }
  }
}

TEST_CASE("Leakage decreases with more kicks at fixed t", "[dynamics]") {
  const Encoding enc = fermionic_site_code(4, 1);
  const SystemBathModel m = random_linear_coupling(enc, 4, 2);
  const Operator r = encoding_leo(enc);
  double previous = 1.0;
  for (int n : {1, 2, 4, 8, 16}) {
    const double leak = parity_kick_evolve(m, r, 0.1, n).leakage_worst;
    CHECK(leak < previous);
    CHECK(leak == Catch::Approx(oracle_worst_leakage(m, r, 0.1, n))
                      .epsilon(1e-8));
    previous = leak;
  }
}

TEST_CASE("Evolution invariants", "[dynamics][property]") {
  const Encoding enc = dfs2_code(2);
  const SystemBathModel m = random_linear_coupling(enc, 2, 12);
  const Operator r = encoding_leo(enc);
  const EvolutionResult ev = parity_kick_evolve(m, r, 0.3, 7);
  CHECK(is_unitary(ev.final_unitary, 1e-11));
  for (double p : ev.leakage_population) {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }

  // A random rotation of the bath basis leaves the leakage unchanged.
  std::mt19937_64 rng(5);
  const Operator w = random_unitary(2, rng);
  std::vector<CouplingTerm> rotated;
  for (const CouplingTerm& t : m.terms()) {
    rotated.push_back({t.label, t.system, w * t.bath * w.adjoint()});
  }
  const SystemBathModel m2(rotated, enc.code);
  const EvolutionResult ev2 = parity_kick_evolve(m2, r, 0.3, 7);
  for (std::size_t j = 0; j < ev.leakage_population.size(); ++j) {
    CHECK(ev2.leakage_population[j] ==
          Catch::Approx(ev.leakage_population[j]).epsilon(1e-9));
  }

  CHECK_THROWS_AS(parity_kick_evolve(m, r, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(parity_kick_evolve(m, r, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(parity_kick_evolve(m, Operator::identity(3), 1.0, 1),
                  DimensionError);
}

TEST_CASE("Ideal target", "[dynamics]") {
  const Encoding enc = fermionic_site_code(4, 1);
  const SystemBathModel l_only = block_model(enc, 2, 3, false, false, true);
  CHECK(max_abs_diff(ideal_target(l_only, 0.8).unitary,
                     Operator::identity(8)) == 0.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SystemBathModel m = random_linear_coupling(enc, 4, seed);
    CHECK(ideal_target(m, 0.9).product_residual <= 1e-12);
  }
  const SystemBathModel m = random_linear_coupling(enc, 4, 0);
  const double small = 1e-7;
  CHECK(phase_distance(ideal_target(m, small).unitary,
                       expm_hermitian(m.h_sb(), -small)) <= 1e-12);
}

TEST_CASE("Log-log fits", "[dynamics]") {
  const std::vector<double> x{1, 2, 4, 8};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -2.0));
  const LogLogFit f = fit_log_log(x, y);
  CHECK(f.status == FitStatus::Ok);
  CHECK(f.slope == Catch::Approx(-2.0).margin(1e-12));
  CHECK(f.intercept == Catch::Approx(std::log(3.0)).margin(1e-12));
  CHECK(f.r2 == Catch::Approx(1.0));
  CHECK(fit_log_log(x, {0, 0, 0, 0}).status == FitStatus::NoSignal);
  CHECK(fit_log_log(x, {1, 1e-14, 1e-15, 1}).status ==
        FitStatus::InsufficientPoints);
}

TEST_CASE("Suppression sweeps", "[dynamics]") {
  const Encoding enc = fermionic_site_code(4, 1);
  const Operator r = encoding_leo(enc);
  SECTION("time sweep slope is confirmed by the oracle") {
    const SystemBathModel m = random_linear_coupling(enc, 4, 1);
    const std::vector<double> ts{1e-3, 3e-3, 1e-2, 3e-2, 1e-1};
    const SweepResult s = time_sweep(m, r, ts, 1);
    std::vector<double> oracle_y;
    for (double t : ts) oracle_y.push_back(oracle_worst_leakage(m, r, t, 1));
    const LogLogFit of = fit_log_log(ts, oracle_y);
    CHECK(s.fit.status == FitStatus::Ok);
    CHECK(of.slope == Catch::Approx(s.fit.slope).margin(1e-3));
    CHECK(s.fit.slope == Catch::Approx(4.0).margin(0.3));
    CHECK(s.perturbative);
  }
  SECTION("pulse sweep") {
    const SystemBathModel m = random_linear_coupling(enc, 4, 1, 0.25);
    const SweepResult s = pulse_sweep(m, r, 1.0, {2, 4, 8, 16, 32});
    CHECK(s.fit.slope == Catch::Approx(-2.0).margin(0.3));
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      CHECK(s.points[i].leakage_worst < s.points[i - 1].leakage_worst);
    }
  }
  SECTION("no signal at zero strength") {
    const SystemBathModel m = random_linear_coupling(enc, 4, 1, 0.0);
    const SweepResult s = time_sweep(m, r, {1e-3, 1e-2, 1e-1}, 1);
    CHECK(s.fit.status == FitStatus::NoSignal);
    for (const SweepPoint& p : s.points) CHECK(p.leakage_worst <= 1e-14);
  }
  SECTION("degenerate and non-perturbative sweeps") {
    const SystemBathModel m = random_linear_coupling(enc, 4, 1);
    CHECK_THROWS_AS(time_sweep(m, r, {1e-3, 1e-1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(time_sweep(m, r, {1e-2, 2e-2, 3e-2}, 1),
                    std::invalid_argument);
    const SweepResult s = time_sweep(m, r, {1e-1, 1.0, 2.0}, 1);
    CHECK_FALSE(s.perturbative);
    CHECK_FALSE(s.warning.empty());
  }
}

}  // namespace
}  // namespace leakelim
