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

#include "leakelim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace leakelim {

SystemBathModel::SystemBathModel(std::vector<CouplingTerm> terms,
                                 const CodeSubspace& code, double strength)
    : terms_(std::move(terms)), code_(code), strength_(strength) {
  if (terms_.empty()) {
    throw std::invalid_argument("SystemBathModel: no coupling terms");
  }
  bath_dim_ = terms_.front().bath.dim();
  check_dim(system_dim() * bath_dim_, "SystemBathModel");
  const std::size_t n = system_dim() * bath_dim_;
  h_sb_ = Operator::zero(n);
  h_e_ = Operator::zero(n);
  h_eperp_ = Operator::zero(n);
  h_l_ = Operator::zero(n);
  for (const CouplingTerm& t : terms_) {
    if (t.system.dim() != system_dim() || t.bath.dim() != bath_dim_) {
      throw DimensionError("SystemBathModel: term '" + t.label +
                           "' has mismatched dimensions");
    }
    if (!is_hermitian(t.system) || !is_hermitian(t.bath)) {
      throw PredicateError("SystemBathModel: term '" + t.label +
                           "' is not Hermitian");
    }
    const BlockDecomposition d = block_decompose(t.system, code_);
    classes_.push_back({t.label, d.e_part.spectral_norm(),
                        d.eperp_part.spectral_norm(),
                        d.l_part.spectral_norm()});
    h_sb_ += tensor(t.system, t.bath);
    h_e_ += tensor(d.e_part, t.bath);
    h_eperp_ += tensor(d.eperp_part, t.bath);
    h_l_ += tensor(d.l_part, t.bath);
  }
}

Operator random_bath_operator(std::size_t bath_dim, std::mt19937_64& rng) {
  const Operator b = random_hermitian(bath_dim, rng);
  const double radius =
      Eigen::SelfAdjointEigenSolver<Matrix>(b.matrix(), Eigen::EigenvaluesOnly)
          .eigenvalues()
          .cwiseAbs()
          .maxCoeff();
  if (radius == 0.0) return b;
  return (1.0 / radius) * b;
}

namespace {

Operator ket_bra(std::size_t dim, std::size_t k, std::size_t l) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = 1.0;
  return Operator(std::move(m));
}

struct Generator {
  std::string label;
  Operator op;
};

std::vector<Generator> hopping_generators(const Encoding& enc) {
  std::vector<Generator> out;
  switch (enc.descriptor.kind) {
    case EncodingKind::Fermionic: {
      const std::size_t d = enc.site_dims.front();
      const std::size_t sites = enc.site_dims.size();
      for (std::size_t s = 0; s < sites; ++s) {
        const std::string site = std::to_string(s + 1);
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t l = k + 1; l < d; ++l) {
            const Operator kl = ket_bra(d, k, l);
            const std::string pair = std::to_string(k) + "," + std::to_string(l);
            out.push_back({"hop" + site + "(" + pair + ")",
                           embed(kl + kl.adjoint(), s, sites)});
            out.push_back({"ihop" + site + "(" + pair + ")",
                           embed(kI * (kl - kl.adjoint()), s, sites)});
          }
          out.push_back({"n" + site + "(" + std::to_string(k) + ")",
                         embed(ket_bra(d, k, k), s, sites)});
        }
      }
      break;
    }
    case EncodingKind::DualRail: {
      const int photons = enc.descriptor.total_photons;
      for (int k = 1; k <= 4; ++k) {
        for (int l = k + 1; l <= 4; ++l) {
          const Operator kl = boson_hopping(photons, k, l);
          const std::string pair = std::to_string(k) + "," + std::to_string(l);
          out.push_back({"hop(" + pair + ")", kl + kl.adjoint()});
          out.push_back({"ihop(" + pair + ")", kI * (kl - kl.adjoint())});
        }
        out.push_back({"n(" + std::to_string(k) + ")", boson_number(photons, k)});
      }
      break;
    }
    case EncodingKind::Dfs2:
    case EncodingKind::Dfs3: {
      const std::size_t n = enc.site_dims.size();
      for (std::size_t q = 0; q < n; ++q) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
          out.push_back({std::string(1, pauli_char(p)) + std::to_string(q + 1),
                         pauli_on(p, q, n)});
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

SystemBathModel random_linear_coupling(const Encoding& encoding,
                                       std::size_t bath_dim,
                                       std::uint64_t seed, double strength) {
  if (bath_dim < 1) {
    throw std::invalid_argument("random_linear_coupling: bath_dim must be >= 1");
  }
  check_dim(encoding.code.ambient_dim() * bath_dim, "random_linear_coupling");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<CouplingTerm> terms;
  for (Generator& g : hopping_generators(encoding)) {
    const double weight = gauss(rng) * strength;
    Operator bath = random_bath_operator(bath_dim, rng);
    terms.push_back({g.label, weight * g.op, std::move(bath)});
  }
  return SystemBathModel(std::move(terms), encoding.code, strength);
}

std::string to_string(BilinearMode mode) {
  switch (mode) {
    case BilinearMode::Scalar:
      return "scalar";
    case BilinearMode::Cross:
      return "cross";
    case BilinearMode::Symmetric:
      return "symmetric";
    case BilinearMode::Full:
      return "full";
  }
  return "unknown";
}

BilinearMode bilinear_mode_from_string(const std::string& name) {
  static const std::map<std::string, BilinearMode> modes{
      {"scalar", BilinearMode::Scalar},
      {"cross", BilinearMode::Cross},
      {"symmetric", BilinearMode::Symmetric},
      {"full", BilinearMode::Full}};
  auto it = modes.find(name);
  if (it == modes.end()) {
    throw std::invalid_argument("unknown bilinear mode '" + name + "'");
  }
  return it->second;
}

namespace {

int levi_civita(int a, int b, int c) {
  return (a - b) * (b - c) * (c - a) / 2;
}

Tensor3 antisymmetric_from(const Vec3& beta) {
  Tensor3 g{};
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a) g[b][c] += levi_civita(a, b, c) * beta[a];
  return g;
}

Tensor3 outer3(const Vec3& v, double w) {
  Tensor3 g{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) g[a][b] = w * v[a] * v[b];
  return g;
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vec3 v{};
  double n = 0.0;
  while (n < 1e-6) {
    for (double& c : v) c = gauss(rng);
    n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  }
  for (double& c : v) c /= n;
  return v;
}

}  // namespace

CouplingTensorParts decompose_coupling_tensor(const Tensor3& g) {
  CouplingTensorParts parts;
  parts.scalar = (g[0][0] + g[1][1] + g[2][2]) / 3.0;
  for (int a = 0; a < 3; ++a) {
    double beta = 0.0;
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        beta += 0.5 * levi_civita(a, b, c) * 0.5 * (g[b][c] - g[c][b]);
    parts.beta[a] = beta;
  }
  Eigen::Matrix3d s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      s(a, b) = 0.5 * (g[a][b] + g[b][a]) - (a == b ? parts.scalar : 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(s);
  for (int k = 0; k < 3; ++k) {
    const auto v = eig.eigenvectors().col(k);
    parts.symmetric.push_back({eig.eigenvalues()(k), {v(0), v(1), v(2)}});
  }
  return parts;
}

Tensor3 reconstruct_coupling_tensor(const CouplingTensorParts& parts) {
  Tensor3 g = antisymmetric_from(parts.beta);
  for (int a = 0; a < 3; ++a) g[a][a] += parts.scalar;
  for (const auto& [w, v] : parts.symmetric) {
    const Tensor3 r = outer3(v, w);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) g[a][b] += r[a][b];
  }
  return g;
}

Operator bilinear_operator(const Tensor3& g, std::size_t i, std::size_t j,
                           std::size_t n_qubits) {
  static const Pauli letters[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  Operator out = Operator::zero(std::size_t{1} << n_qubits);
  for (int a = 0; a < 3; ++a) {
    const Operator si = pauli_on(letters[a], i, n_qubits);
    for (int b = 0; b < 3; ++b) {
      if (g[a][b] == 0.0) continue;
      out += g[a][b] * (si * pauli_on(letters[b], j, n_qubits));
    }
  }
  return out;
}

SystemBathModel bilinear_coupling(const Encoding& encoding,
                                  std::size_t bath_dim, std::uint64_t seed,
                                  BilinearMode mode, double strength) {
  if (encoding.descriptor.kind != EncodingKind::Dfs3) {
    throw std::invalid_argument(
        "bilinear_coupling: needs a dfs3 encoding, got " +
        to_string(encoding.descriptor.kind));
  }
  if (bath_dim < 1) {
    throw std::invalid_argument("bilinear_coupling: bath_dim must be >= 1");
  }
  check_dim(encoding.code.ambient_dim() * bath_dim, "bilinear_coupling");
  const std::size_t n = encoding.site_dims.size();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<CouplingTerm> terms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::string pair =
          "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      Tensor3 identity{};
      for (int a = 0; a < 3; ++a) identity[a][a] = 1.0;
      switch (mode) {
        case BilinearMode::Scalar: {
          const double g = gauss(rng) * strength;
          terms.push_back({"scalar" + pair,
                           g * bilinear_operator(identity, i, j, n),
                           random_bath_operator(bath_dim, rng)});
          break;
        }
        case BilinearMode::Cross: {
          Vec3 beta = random_unit(rng);
          for (double& c : beta) c *= strength;
          terms.push_back({"cross" + pair,
                           bilinear_operator(antisymmetric_from(beta), i, j, n),
                           random_bath_operator(bath_dim, rng)});
          break;
        }
        case BilinearMode::Symmetric: {
          const Vec3 gamma = random_unit(rng);
          terms.push_back({"symmetric" + pair,
                           bilinear_operator(outer3(gamma, strength), i, j, n),
                           random_bath_operator(bath_dim, rng)});
          break;
        }
        case BilinearMode::Full: {
          Tensor3 g{};
          for (auto& row : g)
            for (double& c : row) c = gauss(rng) * strength;
          const CouplingTensorParts parts = decompose_coupling_tensor(g);
          const Operator bath = random_bath_operator(bath_dim, rng);
          terms.push_back({"full-scalar" + pair,
                           parts.scalar * bilinear_operator(identity, i, j, n),
                           bath});
          terms.push_back(
              {"full-cross" + pair,
               bilinear_operator(antisymmetric_from(parts.beta), i, j, n),
               bath});
          for (std::size_t k = 0; k < parts.symmetric.size(); ++k) {
            const auto& [w, v] = parts.symmetric[k];
            terms.push_back({"full-symmetric" + std::to_string(k + 1) + pair,
                             bilinear_operator(outer3(v, w), i, j, n), bath});
          }
          break;
        }
      }
    }
  }
  return SystemBathModel(std::move(terms), encoding.code, strength);
}

std::vector<double> leakage_populations(const Operator& u,
                                        const SystemBathModel& model) {
  const std::size_t db = model.bath_dim();
  if (u.dim() != model.joint_dim()) {
    throw DimensionError("leakage_populations: unitary dim mismatch");
  }
  const Matrix& iso = model.code().isometry();
  const Matrix q = tensor(model.code().complement(), Operator::identity(db))
                       .matrix();
  const Matrix id_b = Matrix::Identity(static_cast<Eigen::Index>(db),
                                       static_cast<Eigen::Index>(db));
  std::vector<double> out;
  for (Eigen::Index j = 0; j < iso.cols(); ++j) {
    // Columns v_j (x) e_b for every bath basis state b.
    Matrix inputs(iso.rows() * static_cast<Eigen::Index>(db),
                  static_cast<Eigen::Index>(db));
    for (Eigen::Index s = 0; s < iso.rows(); ++s) {
      inputs.block(s * static_cast<Eigen::Index>(db), 0,
                   static_cast<Eigen::Index>(db),
                   static_cast<Eigen::Index>(db)) = iso(s, j) * id_b;
    }
    const Matrix leaked = q * (u.matrix() * inputs);
    out.push_back(leaked.squaredNorm() / static_cast<double>(db));
  }
  return out;
}

IdealTarget ideal_target(const SystemBathModel& model, double t) {
  IdealTarget target;
  target.unitary = expm_hermitian(model.h_e() + model.h_eperp(), -t);
  const Operator product =
      expm_hermitian(model.h_e(), -t) * expm_hermitian(model.h_eperp(), -t);
  target.product_residual = max_abs_diff(product, target.unitary);
  return target;
}

EvolutionResult parity_kick_evolve(const SystemBathModel& model,
                                   const Operator& leo, double t, int n) {
  if (!(t > 0.0) || n < 1) {
    throw std::invalid_argument("parity_kick_evolve: need t > 0 and n >= 1");
  }
  if (leo.dim() != model.system_dim()) {
    throw DimensionError("parity_kick_evolve: LEO dim differs from system");
  }
  if (!is_unitary(leo)) {
    throw PredicateError("parity_kick_evolve: LEO is not unitary");
  }
  const Operator id_b = Operator::identity(model.bath_dim());
  const Operator r = tensor(leo, id_b);
  const Operator free =
      HermitianExponential(model.h_sb()).at(-t / (2.0 * n));
  const Operator cycle = free * r.adjoint() * free * r;
  Operator u = Operator::identity(model.joint_dim());
  Operator power = cycle;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) u = power * u;
    if (e > 1) power = power * power;
  }
  EvolutionResult res;
  res.leakage_population = leakage_populations(u, model);
  res.leakage_worst = *std::max_element(res.leakage_population.begin(),
                                        res.leakage_population.end());
  double sum = 0.0;
  for (double p : res.leakage_population) sum += p;
  res.leakage_avg = sum / static_cast<double>(res.leakage_population.size());
  res.target_distance = phase_distance(u, ideal_target(model, t).unitary);
  res.final_unitary = std::move(u);
  return res;
}

std::string to_string(SweepKind kind) {
  return kind == SweepKind::Time ? "t-sweep" : "n-sweep";
}

std::string to_string(FitStatus status) {
  switch (status) {
    case FitStatus::Ok:
      return "ok";
    case FitStatus::NoSignal:
      return "no-signal";
    case FitStatus::InsufficientPoints:
      return "insufficient-points";
  }
  return "unknown";
}

LogLogFit fit_log_log(const std::vector<double>& x,
                      const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("fit_log_log: x and y differ in length");
  }
  LogLogFit fit;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < kLeakageFloor || x[i] <= 0.0) continue;
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
    fit.x_min = lx.size() == 1 ? x[i] : std::min(fit.x_min, x[i]);
    fit.x_max = lx.size() == 1 ? x[i] : std::max(fit.x_max, x[i]);
  }
  fit.points_used = lx.size();
  if (lx.empty()) {
    fit.status = FitStatus::NoSignal;
    return fit;
  }
  if (lx.size() < 3) {
    fit.status = FitStatus::InsufficientPoints;
    return fit;
  }
  const double m = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) {
    fit.status = FitStatus::InsufficientPoints;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += r * r;
  }
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  fit.status = FitStatus::Ok;
  return fit;
}

namespace {

template <typename T>
void check_sweep_points(const std::vector<T>& values, const char* what) {
  if (values.size() < 3) {
    std::ostringstream msg;
    msg << what << ": degenerate sweep, need at least 3 points, got "
        << values.size();
    throw std::invalid_argument(msg.str());
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*lo > 0)) {
    throw std::invalid_argument(std::string(what) +
                                ": sweep values must be positive");
  }
  if (static_cast<double>(*hi) < 10.0 * static_cast<double>(*lo)) {
    throw std::invalid_argument(std::string(what) +
                                ": sweep must span at least one decade");
  }
}

void finish_sweep(SweepResult& res, double cycle_time, double strength) {
  std::vector<double> x, y;
  for (const SweepPoint& p : res.points) {
    x.push_back(p.x);
    y.push_back(p.leakage_worst);
  }
  res.fit = fit_log_log(x, y);
  if (strength * cycle_time > kPerturbativeLimit) {
    res.perturbative = false;
    std::ostringstream msg;
    msg << "strength * t/n = " << strength * cycle_time
        << " exceeds the perturbative limit " << kPerturbativeLimit;
    res.warning = msg.str();
  }
}

}  // namespace

SweepResult time_sweep(const SystemBathModel& model, const Operator& leo,
                       const std::vector<double>& t_values, int n) {
  check_sweep_points(t_values, "time_sweep");
  SweepResult res;
  res.kind = SweepKind::Time;
  res.n = n;
  for (double t : t_values) {
    const EvolutionResult ev = parity_kick_evolve(model, leo, t, n);
    res.points.push_back(
        {t, ev.leakage_worst, ev.leakage_avg, ev.target_distance});
  }
  const double t_max = *std::max_element(t_values.begin(), t_values.end());
  finish_sweep(res, t_max / n, std::abs(model.strength()));
  return res;
}

SweepResult pulse_sweep(const SystemBathModel& model, const Operator& leo,
                        double total_time, const std::vector<int>& n_values) {
  check_sweep_points(n_values, "pulse_sweep");
  SweepResult res;
  res.kind = SweepKind::Pulses;
  res.total_time = total_time;
  for (int n : n_values) {
    const EvolutionResult ev = parity_kick_evolve(model, leo, total_time, n);
    res.points.push_back({static_cast<double>(n), ev.leakage_worst,
                          ev.leakage_avg, ev.target_distance});
  }
  const int n_min = *std::min_element(n_values.begin(), n_values.end());
  finish_sweep(res, total_time / n_min, std::abs(model.strength()));
  return res;
}

}  // namespace leakelim
