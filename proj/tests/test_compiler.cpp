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
#include <numbers>

#include "leakelim/compiler.hpp"
#include "leakelim/leo.hpp"
#include "oracles.hpp"

namespace leakelim {
namespace {

const double kPi = std::numbers::pi;

Operator taylor_exp(const Operator& h, double theta) {
  return Operator(oracle::expi(h.matrix(), theta));
}

PauliString random_pauli(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<Pauli> letters(n);
  for (auto& p : letters) p = static_cast<Pauli>(letter(rng));
  return PauliString(letters);
}

TEST_CASE("Generator labels round-trip", "[compiler]") {
  const auto terms = parse_label("X3X4+Y3Y4");
  REQUIRE(terms.size() == 2);
  CHECK(terms[0] == LabelTerm{{'X', false, 3}, {'X', false, 4}});
  CHECK(format_label(terms) == "X3X4+Y3Y4");
  CHECK(format_label(parse_label("ZL1ZL12")) == "ZL1ZL12");
  for (const char* bad : {"", "Q1", "X", "X0", "X1+", "+X1", "X1++Y2", "x1"}) {
    CHECK_THROWS_AS(parse_label(bad), std::invalid_argument);
  }
}

TEST_CASE("Primitive sets classify generators", "[compiler]") {
  const PrimitiveSet ferm = fermionic_primitives();
  CHECK(ferm.matches({"X3", 0.1}));
  CHECK(ferm.matches({"Z2Z3", 0.1}));
  CHECK_FALSE(ferm.matches({"Z1Z3", 0.1}));
  CHECK_FALSE(ferm.matches({"X1X2+Y1Y2", 0.1}));
  const PrimitiveSet dfs2 = dfs2_primitives();
  CHECK(dfs2.matches({"X1X2+Y1Y2", 0.1}));
  CHECK_FALSE(dfs2.matches({"X1X2+Y2Y3", 0.1}));
  CHECK_FALSE(dfs2.matches({"X1", 0.1}));
  CHECK(dfs2.matches({"Z4", 0.1}));
  const PrimitiveSet dfs3 = dfs3_primitives();
  CHECK(dfs3.matches({"ZL1ZL2", 0.1}));
  CHECK(dfs3.matches({"YL2", 0.1}));
  CHECK_FALSE(dfs3.matches({"ZL1ZL3", 0.1}));
  CHECK_FALSE(dfs3.matches({"Z1", 0.1}));
}

TEST_CASE("conjugate builds the pi/4 shell", "[compiler]") {
  const OperatorContext ctx = OperatorContext::qubits(2);
  GateSequence inner;
  inner.gates.push_back({"Z1Z2", 0.7});
  const GateSequence seq = conjugate(Gate{"X2", kPi / 4}, inner);
  REQUIRE(seq.size() == 3);
  CHECK(seq.gates[0] == Gate{"X2", -kPi / 4});
  CHECK(seq.gates[2] == Gate{"X2", kPi / 4});
  // i X2 Z1 Z2 = Z1 Y2.
  CHECK(max_abs_diff(realize(seq, ctx),
                     taylor_exp(ctx.resolve("Z1Y2"), 0.7)) <= 1e-12);

  SECTION("commuting shell does not produce iAB") {
    GateSequence b;
    b.gates.push_back({"X1", 0.7});
    const Operator u = realize(conjugate(Gate{"X1", kPi / 4}, b), ctx);
    CHECK(max_abs_diff(u, taylor_exp(ctx.resolve("X1"), 0.7)) <= 1e-12);
    CHECK(phase_distance(u, Operator::identity(4)) > 1e-2);
  }
  SECTION("theta = 0 gives the identity") {
    GateSequence b;
    b.gates.push_back({"Z1", 0.0});
    CHECK(max_abs_diff(realize(conjugate(Gate{"Y2", kPi / 4}, b), ctx),
                       Operator::identity(4)) <= 1e-14);
  }
  SECTION("empty sequence realizes the identity") {
    CHECK(realize(GateSequence{}, ctx) == Operator::identity(4));
  }
  SECTION("single gate matches the direct exponential") {
    GateSequence s;
    s.gates.push_back({"Z1", kPi});
    CHECK(max_abs_diff(realize(s, ctx), expm_hermitian(ctx.resolve("Z1"), kPi)) ==
          0.0);
  }
}

TEST_CASE("Conjugation soundness on random anticommuting Pauli pairs",
          "[compiler][property]") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 1 + static_cast<std::size_t>(checked % 4);
    const PauliString a = random_pauli(n, rng);
    const PauliString b = random_pauli(n, rng);
    if (a.commutes_with(b)) continue;
    double theta = angle(rng);
    if (theta == 0.0) theta = kPi;
    const OperatorContext ctx = OperatorContext::qubits(n);
    GateSequence inner;
    inner.gates.push_back({b.label(), theta});
    const Operator u = realize(conjugate(Gate{a.label(), kPi / 4}, inner), ctx);
    const Operator iab = (a * b).scaled(kI).to_operator();
    CHECK(max_abs_diff(u, expm_hermitian(iab, theta)) <= 1e-12);
    ++checked;
  }
}

TEST_CASE("ZZ chain recursion", "[compiler]") {
  const GateSequence k1 = compile_zz_chain(1, 0.4);
  REQUIRE(k1.size() == 1);
  CHECK(k1.gates[0] == Gate{"Z1", 0.4});

  const OperatorContext ctx = OperatorContext::qubits(3);
  for (double theta : {0.3, kPi / 2, kPi}) {
    const Operator u = realize(compile_zz_chain(3, theta), ctx);
    CHECK(phase_distance(u, taylor_exp(ctx.resolve("Z1Z2Z3"), theta)) <= 1e-10);
  }
  const OperatorContext ctx5 = OperatorContext::qubits(5);
  CHECK(max_abs_diff(realize(compile_zz_chain(5, 0.9), ctx5),
                     expm_hermitian(ctx5.resolve("Z1Z2Z3Z4Z5"), 0.9)) <= 1e-10);

  CHECK_THROWS_AS(compile_zz_chain(0, 1.0), std::out_of_range);
  CHECK_THROWS_AS(compile_zz_chain(kMaxCompileK + 1, 1.0), std::out_of_range);
}

TEST_CASE("Fermionic LEO circuit has nested pi/4 shells", "[compiler]") {
  const GateSequence seq = compile_leo_ferm(4);
  REQUIRE(seq.size() == 19);
  const std::size_t mid = 9;
  CHECK(seq.gates[mid] == Gate{"Z1", kPi});
  for (std::size_t i = 0; i < mid; ++i) {
    const Gate& open = seq.gates[i];
    const Gate& close = seq.gates[seq.size() - 1 - i];
    CHECK(open.generator == close.generator);
    CHECK(open.angle == -kPi / 4);
    CHECK(close.angle == kPi / 4);
  }
  // Outermost shells belong to the last recursion level.
  CHECK(seq.gates[0].generator == "Y3");
  CHECK(seq.gates[1].generator == "Z3Z4");
  CHECK(seq.gates[2].generator == "X3");
  const std::string text = render_text(seq);
  CHECK(text.find("U[Y3]^dag\n") != std::string::npos);
  CHECK(text.find("\n                  exp(i*3.1415926535897931*(Z1))\n") !=
        std::string::npos);
}

TEST_CASE("Compiled LEOs act as the LEO on the code", "[compiler][property]") {
  SECTION("fermionic") {
    for (int k = 1; k <= 4; ++k) {
      const Encoding enc = fermionic_site_code(4, k);
      const Operator u = realize(compile_leo_ferm(k), OperatorContext(enc));
      const Operator r = encoding_leo(enc);
      CHECK(code_distance(u, r, enc.code) <= 1e-9);
      CHECK(leakage_norm(u, enc.code) <= 1e-12);
    }
  }
  SECTION("dfs2") {
    for (int k = 1; k <= 3; ++k) {
      const Encoding enc = dfs2_code(k);
      const Operator u = realize(compile_leo_dfs2(k), OperatorContext(enc));
      CHECK(code_distance(u, encoding_leo(enc), enc.code) <= 1e-9);
      CHECK(leakage_norm(u, enc.code) <= 1e-12);
    }
  }
  SECTION("dfs3") {
    for (int k = 1; k <= 2; ++k) {
      const Encoding enc = dfs3_code(k);
      const Operator u = realize(compile_leo_dfs3(k), OperatorContext(enc));
      CHECK(code_distance(u, encoding_leo(enc), enc.code) <= 1e-9);
      CHECK(leakage_norm(u, enc.code) <= 1e-12);
    }
  }
}

TEST_CASE("Single-qubit compiled LEOs match on the whole space", "[compiler]") {
  const Encoding f = fermionic_site_code(4, 1);
  CHECK(phase_distance(realize(compile_leo_ferm(1), OperatorContext(f)),
                       encoding_leo(f)) <= 1e-15);
  const Encoding d2 = dfs2_code(1);
  const Operator zz = pauli_on(Pauli::Z, 0, 2) * pauli_on(Pauli::Z, 1, 2);
  CHECK(phase_distance(realize(compile_leo_dfs2(1), OperatorContext(d2)), zz) <=
        1e-15);
  const Encoding d3 = dfs3_code(1);
  CHECK(phase_distance(realize(compile_leo_dfs3(1), OperatorContext(d3)),
                       canonical_leo(d3.code)) <= 1e-12);
}

TEST_CASE("Conjugation shells preserve the spectrum of the base pulse",
          "[compiler][property]") {
  // The realized recursion is a unitary similarity of its base pulse, so
  // its trace is that of the base pulse on the whole ambient space.
  for (int k = 2; k <= 3; ++k) {
    const Encoding enc = fermionic_site_code(4, k);
    const OperatorContext ctx(enc);
    const Operator u = realize(compile_leo_ferm(k), ctx);
    const Operator base = expm_hermitian(ctx.resolve("Z1"), kPi);
    CHECK(std::abs(u.trace() - base.trace()) <= 1e-9);
  }
}

TEST_CASE("Next-nearest-neighbour ZZ", "[compiler]") {
  const OperatorContext ctx = OperatorContext::qubits(3);
  const Operator z13 = ctx.resolve("Z1Z3");
  for (double theta : {0.3, kPi / 2, kPi}) {
    const Operator u = realize(compile_next_nearest(1, theta), ctx);
    CHECK(phase_distance(u, taylor_exp(z13, theta)) <= 1e-11);
    const Operator two = realize(compile_next_nearest(1, theta, true), ctx);
    CHECK(phase_distance(u, two) <= 1e-12);
  }
  CHECK(max_abs_diff(realize(compile_next_nearest(1, 0.0), ctx),
                     Operator::identity(8)) <= 1e-14);
  const auto seq = compile_next_nearest(1, 0.3);
  REQUIRE(seq.size() == 3);
  CHECK(seq.gates[0].generator == "X2X3+Y2Y3");
  CHECK(seq.violations().empty());

  const OperatorContext ctx5 = OperatorContext::qubits(5);
  CHECK(phase_distance(realize(compile_long_range_zz(1, 5, 0.8), ctx5),
                       expm_hermitian(ctx5.resolve("Z1Z5"), 0.8)) <= 1e-11);
  CHECK_THROWS_AS(compile_next_nearest(0, 0.3), std::out_of_range);
  CHECK_THROWS_AS(realize(compile_next_nearest(2, 0.3), ctx),
                  std::invalid_argument);
}

TEST_CASE("The four ZZ terms of Zbar Zbar commute", "[compiler]") {
  const OperatorContext ctx = OperatorContext::qubits(4);
  const std::vector<std::string> terms{"Z1Z3", "Z1Z4", "Z2Z3", "Z2Z4"};
  for (const auto& a : terms)
    for (const auto& b : terms)
      CHECK(commutator(ctx.resolve(a), ctx.resolve(b)).max_abs() == 0.0);
  // Their signed sum over 4 is Zbar_1 Zbar_2.
  const Encoding enc = dfs2_code(2);
  const Operator sum = 0.25 * (ctx.resolve("Z1Z3") - ctx.resolve("Z1Z4") -
                               ctx.resolve("Z2Z3") + ctx.resolve("Z2Z4"));
  CHECK(max_abs_diff(sum, enc.qubits[0].z_bar * enc.qubits[1].z_bar) <= 1e-15);
}

TEST_CASE("Primitive closure and inverse pairing", "[compiler][property]") {
  for (EncodingKind kind :
       {EncodingKind::Fermionic, EncodingKind::Dfs2, EncodingKind::Dfs3}) {
    for (int k = 1; k <= kMaxCompileK; ++k) {
      const GateSequence seq = compile_leo(kind, k);
      CHECK(seq.violations().empty());
    }
  }
  const Encoding enc = dfs2_code(2);
  const OperatorContext ctx(enc);
  const GateSequence seq = compile_leo_dfs2(2);
  CHECK(max_abs_diff(realize(seq, ctx) * realize(inverse(seq), ctx),
                     Operator::identity(16)) <= 1e-11);
  const Encoding f = fermionic_site_code(3, 3);
  const GateSequence sf = compile_leo_ferm(3);
  CHECK(max_abs_diff(realize(sf, OperatorContext(f)) *
                         realize(inverse(sf), OperatorContext(f)),
                     Operator::identity(27)) <= 1e-11);
  CHECK_THROWS_AS(compile_leo(EncodingKind::DualRail, 1), std::invalid_argument);
}

TEST_CASE("Recursion steps carry their signs", "[compiler]") {
  const GateSequence d3 = compile_leo_dfs3(2);
  REQUIRE(d3.steps.size() == 3);
  CHECK(d3.steps[0].generator == "YL1ZL2");
  CHECK(d3.steps[0].sign == -1);
  CHECK(d3.steps[1].generator == "XL1ZL2");
  CHECK(d3.steps[1].sign == -1);
  CHECK(d3.steps[2].generator == "XL1XL2");
  CHECK(d3.steps[2].sign == +1);

  // Replay every step on the logical space of two plain qubits.
  const OperatorContext q = OperatorContext::qubits(2);
  auto plain = [](std::string s) {
    s.erase(std::remove(s.begin(), s.end(), 'L'), s.end());
    return s;
  };
  Operator gen = q.resolve("X1");
  for (const RecursionStep& st : d3.steps) {
    const Operator a = q.resolve(plain(st.conjugator));
    gen = Complex(0, 1) * a * gen;
    CHECK(max_abs_diff(gen, double(st.sign) * q.resolve(plain(st.generator))) <=
          1e-15);
  }
  for (const RecursionStep& st : compile_leo_ferm(3).steps) CHECK(st.sign == 1);
}

TEST_CASE("Gate counts are affine in K", "[compiler]") {
  const auto ferm = gate_count_report(EncodingKind::Fermionic, 1, 5);
  CHECK(ferm.counts.front().second == 1);
  CHECK(ferm.max_residual == 0);
  const auto dfs2 = gate_count_report(EncodingKind::Dfs2, 1, 5);
  const auto dfs3 = gate_count_report(EncodingKind::Dfs3, 1, 5);
  CHECK(dfs2.max_residual == 0);
  CHECK(dfs3.max_residual == 0);
  for (std::size_t i = 0; i < ferm.counts.size(); ++i) {
    CHECK(dfs2.counts[i].second > ferm.counts[i].second);
  }
}

}  // namespace
}  // namespace leakelim
