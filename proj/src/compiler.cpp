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

#include "leakelim/compiler.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace leakelim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = std::numbers::pi / 4;

std::string atom_text(char letter, bool logical, int index) {
  std::string out(1, letter);
  if (logical) out += 'L';
  return out + std::to_string(index);
}

std::string phys(char letter, int index) {
  return atom_text(letter, false, index);
}

std::string logi(char letter, int index) {
  return atom_text(letter, true, index);
}

}  // namespace

std::vector<LabelTerm> parse_label(const std::string& label) {
  std::vector<LabelTerm> terms;
  LabelTerm current;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad generator label '" + label + "': " + why);
  };
  if (label.empty()) fail("empty");
  while (pos < label.size()) {
    const char c = label[pos];
    if (c == '+') {
      if (current.empty()) fail("empty term");
      terms.push_back(std::move(current));
      current.clear();
      ++pos;
      continue;
    }
    if (c != 'X' && c != 'Y' && c != 'Z') fail("unexpected character");
    ++pos;
    bool logical = false;
    if (pos < label.size() && label[pos] == 'L') {
      logical = true;
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < label.size() &&
           std::isdigit(static_cast<unsigned char>(label[pos]))) {
      ++pos;
    }
    if (pos == start || pos - start > 4) fail("missing or oversized index");
    const int index = std::stoi(label.substr(start, pos - start));
    if (index < 1) fail("indices are 1-based");
    current.push_back({c, logical, index});
  }
  if (current.empty()) fail("trailing '+'");
  terms.push_back(std::move(current));
  return terms;
}

std::string format_label(const std::vector<LabelTerm>& terms) {
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) out += '+';
    for (const LabelAtom& a : terms[t]) {
      out += atom_text(a.letter, a.logical, a.index);
    }
  }
  return out;
}

std::string to_string(PrimitivePattern p) {
  switch (p) {
    case PrimitivePattern::SingleX:
      return "X_i";
    case PrimitivePattern::SingleY:
      return "Y_i";
    case PrimitivePattern::SingleZ:
      return "Z_i";
    case PrimitivePattern::NearestZZ:
      return "Z_iZ_i+1";
    case PrimitivePattern::NearestXY:
      return "X_iX_i+1+Y_iY_i+1";
    case PrimitivePattern::NearestXX:
      return "X_iX_i+1";
    case PrimitivePattern::NearestYY:
      return "Y_iY_i+1";
    case PrimitivePattern::LogicalX:
      return "XL_i";
    case PrimitivePattern::LogicalY:
      return "YL_i";
    case PrimitivePattern::LogicalZ:
      return "ZL_i";
    case PrimitivePattern::LogicalNearestZZ:
      return "ZL_iZL_i+1";
  }
  return "?";
}

namespace {

std::optional<PrimitivePattern> classify(const std::string& label) {
  std::vector<LabelTerm> terms;
  try {
    terms = parse_label(label);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  auto pair_of = [](const LabelTerm& t, char letter) {
    return t.size() == 2 && t[0].letter == letter && t[1].letter == letter &&
           t[0].logical == t[1].logical && t[1].index == t[0].index + 1;
  };
  if (terms.size() == 1) {
    const LabelTerm& t = terms[0];
    if (t.size() == 1) {
      const LabelAtom& a = t[0];
      switch (a.letter) {
        case 'X':
          return a.logical ? PrimitivePattern::LogicalX
                           : PrimitivePattern::SingleX;
        case 'Y':
          return a.logical ? PrimitivePattern::LogicalY
                           : PrimitivePattern::SingleY;
        default:
          return a.logical ? PrimitivePattern::LogicalZ
                           : PrimitivePattern::SingleZ;
      }
    }
    if (pair_of(t, 'Z')) {
      return t[0].logical ? PrimitivePattern::LogicalNearestZZ
                          : PrimitivePattern::NearestZZ;
    }
    if (!t[0].logical && pair_of(t, 'X')) return PrimitivePattern::NearestXX;
    if (!t[0].logical && pair_of(t, 'Y')) return PrimitivePattern::NearestYY;
    return std::nullopt;
  }
  if (terms.size() == 2 && !terms[0][0].logical && pair_of(terms[0], 'X') &&
      pair_of(terms[1], 'Y') && terms[0][0].index == terms[1][0].index) {
    return PrimitivePattern::NearestXY;
  }
  return std::nullopt;
}

}  // namespace

bool PrimitiveSet::matches(const Gate& gate) const {
  const auto p = classify(gate.generator);
  return p && std::find(patterns.begin(), patterns.end(), *p) !=
                  patterns.end();
}

PrimitiveSet fermionic_primitives() {
  return {"fermionic",
          {PrimitivePattern::SingleX, PrimitivePattern::SingleY,
           PrimitivePattern::SingleZ, PrimitivePattern::NearestZZ}};
}

PrimitiveSet dfs2_primitives() {
  return {"dfs2",
          {PrimitivePattern::SingleZ, PrimitivePattern::NearestXY,
           PrimitivePattern::NearestZZ}};
}

PrimitiveSet dfs3_primitives() {
  return {"dfs3",
          {PrimitivePattern::LogicalX, PrimitivePattern::LogicalY,
           PrimitivePattern::LogicalZ, PrimitivePattern::LogicalNearestZZ}};
}

PrimitiveSet nearest_neighbor_primitives() {
  return {"nearest-neighbor",
          {PrimitivePattern::NearestZZ, PrimitivePattern::NearestXY,
           PrimitivePattern::NearestXX, PrimitivePattern::NearestYY}};
}

std::vector<Gate> GateSequence::violations() const {
  std::vector<Gate> out;
  for (const Gate& g : gates) {
    if (!primitive_set.matches(g)) out.push_back(g);
  }
  return out;
}

GateSequence inverse(const GateSequence& seq) {
  GateSequence out = seq;
  std::reverse(out.gates.begin(), out.gates.end());
  for (Gate& g : out.gates) g.angle = -g.angle;
  out.target_angle = -seq.target_angle;
  out.steps.clear();
  return out;
}

GateSequence conjugate(const GateSequence& shell, const GateSequence& inner) {
  int shell_depth = 0;
  for (const Gate& g : shell.gates) shell_depth = std::max(shell_depth, g.depth);
  GateSequence out = inner;
  out.gates = inverse(shell).gates;
  for (Gate g : inner.gates) {
    g.depth += shell_depth + 1;
    out.gates.push_back(g);
  }
  out.gates.insert(out.gates.end(), shell.gates.begin(), shell.gates.end());
  return out;
}

GateSequence conjugate(const Gate& shell, const GateSequence& inner) {
  GateSequence s;
  s.gates.push_back(shell);
  return conjugate(s, inner);
}

OperatorContext OperatorContext::qubits(std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > 12) {
    throw ResourceCapError("OperatorContext: qubit count must be in [1, 12]");
  }
  OperatorContext ctx;
  ctx.n_sites_ = n_qubits;
  ctx.dim_ = std::size_t{1} << n_qubits;
  return ctx;
}

OperatorContext::OperatorContext(const Encoding& encoding)
    : dim_(encoding.code.ambient_dim()), encoding_(encoding) {
  switch (encoding.descriptor.kind) {
    case EncodingKind::Fermionic:
      n_sites_ = encoding.qubits.size();
      break;
    case EncodingKind::DualRail:
      n_sites_ = 0;
      break;
    case EncodingKind::Dfs2:
    case EncodingKind::Dfs3:
      n_sites_ = encoding.site_dims.size();
      break;
  }
}

Operator OperatorContext::atom(const LabelAtom& a) const {
  const auto idx = static_cast<std::size_t>(a.index - 1);
  const bool site_ops = encoding_ &&
                        encoding_->descriptor.kind == EncodingKind::Fermionic;
  if (a.logical || site_ops) {
    if (!encoding_ || idx >= encoding_->qubits.size()) {
      throw std::invalid_argument("OperatorContext: no logical qubit " +
                                  std::to_string(a.index));
    }
    const LogicalSet& q = encoding_->qubits[idx];
    return a.letter == 'X' ? q.x_bar : a.letter == 'Y' ? q.y_bar : q.z_bar;
  }
  if (idx >= n_sites_) {
    throw std::invalid_argument("OperatorContext: no physical site " +
                                std::to_string(a.index));
  }
  const Pauli p =
      a.letter == 'X' ? Pauli::X : a.letter == 'Y' ? Pauli::Y : Pauli::Z;
  return pauli_on(p, idx, n_sites_);
}

Operator OperatorContext::resolve(const std::string& label) const {
  Operator sum = Operator::zero(dim_);
  for (const LabelTerm& term : parse_label(label)) {
    Operator prod = atom(term.front());
    for (std::size_t k = 1; k < term.size(); ++k) prod = prod * atom(term[k]);
    sum += prod;
  }
  return sum;
}

Operator realize(const GateSequence& seq, const OperatorContext& context) {
  std::map<std::string, HermitianExponential> cache;
  Operator u = Operator::identity(context.dim());
  for (const Gate& g : seq.gates) {
    auto it = cache.find(g.generator);
    if (it == cache.end()) {
      it = cache.emplace(g.generator,
                         HermitianExponential(context.resolve(g.generator)))
               .first;
    }
    u = it->second.at(g.angle) * u;
  }
  return u;
}

namespace {

void check_compile_k(int k, const char* what) {
  if (k < 1 || k > kMaxCompileK) {
    std::ostringstream msg;
    msg << what << ": K = " << k << " outside [1, " << kMaxCompileK << "]";
    throw std::out_of_range(msg.str());
  }
}

GateSequence single(const std::string& label, double angle) {
  GateSequence s;
  s.gates.push_back({label, angle, 0});
  return s;
}

GateSequence concat(std::vector<GateSequence> parts) {
  GateSequence out;
  for (auto& p : parts) {
    out.gates.insert(out.gates.end(), p.gates.begin(), p.gates.end());
  }
  return out;
}

std::string product_label(char letter, int k, bool logical) {
  std::string out;
  for (int i = 1; i <= k; ++i) out += atom_text(letter, logical, i);
  return out;
}

}  // namespace

GateSequence compile_zz_chain(int k, double theta) {
  check_compile_k(k, "compile_zz_chain");
  GateSequence seq = single(phys('Z', 1), theta);
  for (int m = 1; m < k; ++m) {
    const std::string zs = product_label('Z', m - 1, false);
    seq = conjugate(Gate{phys('X', m), kQuarter}, seq);
    seq.steps.push_back({m, phys('X', m), zs + phys('Y', m), +1});
    seq = conjugate(Gate{phys('Z', m) + phys('Z', m + 1), kQuarter}, seq);
    seq.steps.push_back({m, phys('Z', m) + phys('Z', m + 1),
                         zs + phys('X', m) + phys('Z', m + 1), +1});
    seq = conjugate(Gate{phys('Y', m), kQuarter}, seq);
    seq.steps.push_back({m, phys('Y', m), product_label('Z', m + 1, false), +1});
  }
  seq.primitive_set = fermionic_primitives();
  seq.target_label = product_label('Z', k, false);
  seq.target_angle = theta;
  return seq;
}

GateSequence compile_leo_ferm(int k) {
  check_compile_k(k, "compile_leo_ferm");
  return compile_zz_chain(k, kPi);
}

GateSequence compile_long_range_zz(int i, int j, double theta) {
  if (i < 1 || j <= i || j > 64) {
    throw std::out_of_range("compile_long_range_zz: need 1 <= i < j");
  }
  GateSequence seq = single(phys('Z', i) + phys('Z', i + 1), theta);
  for (int m = i + 1; m < j; ++m) {
    seq = conjugate(Gate{phys('X', m) + phys('X', m + 1) + "+" + phys('Y', m) +
                             phys('Y', m + 1),
                         kQuarter},
                    seq);
  }
  seq.primitive_set = nearest_neighbor_primitives();
  seq.target_label = phys('Z', i) + phys('Z', j);
  seq.target_angle = theta;
  return seq;
}

GateSequence compile_next_nearest(int i, double theta, bool two_step) {
  if (i < 1) throw std::out_of_range("compile_next_nearest: i must be >= 1");
  if (!two_step) return compile_long_range_zz(i, i + 2, theta);
  GateSequence seq = single(phys('Z', i) + phys('Z', i + 1), theta);
  seq = conjugate(Gate{phys('Y', i + 1) + phys('Y', i + 2), kQuarter}, seq);
  seq = conjugate(Gate{phys('X', i + 1) + phys('X', i + 2), kQuarter}, seq);
  seq.primitive_set = nearest_neighbor_primitives();
  seq.target_label = phys('Z', i) + phys('Z', i + 2);
  seq.target_angle = theta;
  return seq;
}

namespace {

// Encoded pulses of the two-qubit DFS, logical qubit m on sites 2m-1, 2m.
GateSequence dfs2_zbar(int m, double phi) {
  return concat({single(phys('Z', 2 * m - 1), phi / 2),
                 single(phys('Z', 2 * m), -phi / 2)});
}

GateSequence dfs2_xbar(int m, double phi) {
  const int a = 2 * m - 1, b = 2 * m;
  return single(phys('X', a) + phys('X', b) + "+" + phys('Y', a) + phys('Y', b),
                phi / 2);
}

GateSequence dfs2_ybar(int m, double phi) {
  return conjugate(dfs2_xbar(m, kQuarter), dfs2_zbar(m, phi));
}

GateSequence dfs2_zbar_zbar(int m, double phi) {
  const int a = 2 * m - 1, b = 2 * m, c = 2 * m + 1, d = 2 * m + 2;
  return concat({compile_long_range_zz(a, c, phi / 4),
                 compile_long_range_zz(a, d, -phi / 4),
                 compile_long_range_zz(b, c, -phi / 4),
                 compile_long_range_zz(b, d, phi / 4)});
}

}  // namespace

GateSequence compile_leo_dfs2(int k) {
  check_compile_k(k, "compile_leo_dfs2");
  GateSequence seq = dfs2_zbar(1, kPi);
  for (int m = 1; m < k; ++m) {
    const std::string zs = product_label('Z', m - 1, true);
    seq = conjugate(dfs2_xbar(m, kQuarter), seq);
    seq.steps.push_back({m, logi('X', m), zs + logi('Y', m), +1});
    seq = conjugate(dfs2_zbar_zbar(m, kQuarter), seq);
    seq.steps.push_back({m, logi('Z', m) + logi('Z', m + 1),
                         zs + logi('X', m) + logi('Z', m + 1), +1});
    seq = conjugate(dfs2_ybar(m, kQuarter), seq);
    seq.steps.push_back({m, logi('Y', m), product_label('Z', m + 1, true), +1});
  }
  seq.primitive_set = dfs2_primitives();
  seq.target_label = product_label('Z', k, true);
  seq.target_angle = kPi;
  return seq;
}

GateSequence compile_leo_dfs3(int k) {
  check_compile_k(k, "compile_leo_dfs3");
  GateSequence seq = single(logi('X', 1), kPi);
  for (int m = 1; m < k; ++m) {
    const std::string xs = product_label('X', m - 1, true);
    seq = conjugate(Gate{logi('Z', m) + logi('Z', m + 1), kQuarter}, seq);
    seq.steps.push_back({m, logi('Z', m) + logi('Z', m + 1),
                         xs + logi('Y', m) + logi('Z', m + 1), -1});
    seq = conjugate(Gate{logi('Z', m), kQuarter}, seq);
    seq.steps.push_back(
        {m, logi('Z', m), xs + logi('X', m) + logi('Z', m + 1), -1});
    seq = conjugate(Gate{logi('Y', m + 1), kQuarter}, seq);
    seq.steps.push_back(
        {m, logi('Y', m + 1), product_label('X', m + 1, true), +1});
  }
  seq.primitive_set = dfs3_primitives();
  seq.target_label = product_label('X', k, true);
  seq.target_angle = kPi;
  return seq;
}

GateSequence compile_leo(EncodingKind kind, int k) {
  switch (kind) {
    case EncodingKind::Fermionic:
      return compile_leo_ferm(k);
    case EncodingKind::Dfs2:
      return compile_leo_dfs2(k);
    case EncodingKind::Dfs3:
      return compile_leo_dfs3(k);
    case EncodingKind::DualRail:
      break;
  }
  throw std::invalid_argument(
      "compile_leo: the dual-rail LEO is a single phaseshifter, no "
      "multi-qubit compilation is defined");
}

double code_distance(const Operator& u, const Operator& v,
                     const CodeSubspace& code) {
  const Matrix& iso = code.isometry();
  const Complex tr =
      (iso.adjoint() * u.matrix().adjoint() * v.matrix() * iso).trace();
  const double d = 1.0 - std::abs(tr) / static_cast<double>(code.logical_dim());
  return std::clamp(d, 0.0, 1.0);
}

GateCountReport gate_count_report(EncodingKind kind, int k_min, int k_max) {
  if (k_min < 1 || k_max < k_min) {
    throw std::invalid_argument("gate_count_report: bad K range");
  }
  GateCountReport rep;
  rep.kind = kind;
  for (int k = k_min; k <= k_max; ++k) {
    rep.counts.emplace_back(k, compile_leo(kind, k).size());
  }
  const auto c = [&](std::size_t i) {
    return static_cast<long long>(rep.counts[i].second);
  };
  rep.slope = rep.counts.size() > 1 ? c(1) - c(0) : 0;
  rep.intercept = c(0) - rep.slope * k_min;
  for (std::size_t i = 0; i < rep.counts.size(); ++i) {
    const long long fit = rep.slope * rep.counts[i].first + rep.intercept;
    rep.max_residual = std::max(rep.max_residual, std::llabs(c(i) - fit));
  }
  return rep;
}

std::string render_text(const GateSequence& seq) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", seq.target_angle);
  out << "# target exp(i*" << buf << "*" << seq.target_label << "), "
      << seq.size() << " gates, primitives " << seq.primitive_set.name
      << "\n";
  for (const Gate& g : seq.gates) {
    out << std::string(static_cast<std::size_t>(2 * g.depth), ' ');
    if (g.angle == kQuarter) {
      out << "U[" << g.generator << "]";
    } else if (g.angle == -kQuarter) {
      out << "U[" << g.generator << "]^dag";
    } else {
      std::snprintf(buf, sizeof buf, "%.17g", g.angle);
      out << "exp(i*" << buf << "*(" << g.generator << "))";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace leakelim
