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

#include "leakelim/pauli.hpp"

#include <array>
#include <stdexcept>

namespace leakelim {

Operator pauli_matrix(Pauli p) {
  Matrix m(2, 2);
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -kI, kI, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return Operator(std::move(m));
}

char pauli_char(Pauli p) {
  static constexpr std::array<char, 4> chars{'I', 'X', 'Y', 'Z'};
  return chars[static_cast<int>(p)];
}

namespace {

// Single-letter product table: a*b = phase * letter, phase in quarter turns.
struct LetterProduct {
  Pauli letter;
  int quarter_turns;
};

LetterProduct multiply(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  // X=1, Y=2, Z=3; cyclic order XY=iZ, YZ=iX, ZX=iY.
  const int third = 6 - ia - ib;
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {static_cast<Pauli>(third), cyclic ? 1 : 3};
}

Complex quarter_turn(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

}  // namespace

PauliString::PauliString(std::vector<Pauli> letters, Complex coefficient)
    : letters_(std::move(letters)), coeff_(coefficient) {
  if (letters_.empty()) {
    throw std::invalid_argument("PauliString needs at least one qubit");
  }
}

PauliString PauliString::parse(std::string_view text) {
  Complex coeff = 1.0;
  if (!text.empty() && text.front() == '-') {
    coeff = -coeff;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    coeff *= kI;
    text.remove_prefix(1);
  }
  std::vector<Pauli> letters;
  for (char c : text) {
    switch (c) {
      case 'I':
        letters.push_back(Pauli::I);
        break;
      case 'X':
        letters.push_back(Pauli::X);
        break;
      case 'Y':
        letters.push_back(Pauli::Y);
        break;
      case 'Z':
        letters.push_back(Pauli::Z);
        break;
      default:
        throw std::invalid_argument(
            std::string("PauliString::parse: bad letter '") + c + "'");
    }
  }
  return {std::move(letters), coeff};
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (n_qubits() != other.n_qubits()) {
    throw DimensionError("PauliString product: qubit count mismatch");
  }
  std::vector<Pauli> out(n_qubits());
  int turns = 0;
  for (std::size_t q = 0; q < n_qubits(); ++q) {
    const auto prod = multiply(letters_[q], other.letters_[q]);
    out[q] = prod.letter;
    turns += prod.quarter_turns;
  }
  return {std::move(out), coeff_ * other.coeff_ * quarter_turn(turns)};
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_qubits() != other.n_qubits()) {
    throw DimensionError("PauliString commutes_with: qubit count mismatch");
  }
  int clashes = 0;
  for (std::size_t q = 0; q < n_qubits(); ++q) {
    const Pauli a = letters_[q];
    const Pauli b = other.letters_[q];
    if (a != Pauli::I && b != Pauli::I && a != b) ++clashes;
  }
  return clashes % 2 == 0;
}

bool PauliString::is_identity() const {
  for (Pauli p : letters_) {
    if (p != Pauli::I) return false;
  }
  return true;
}

std::string PauliString::label() const {
  std::string out;
  for (std::size_t q = 0; q < n_qubits(); ++q) {
    if (letters_[q] == Pauli::I) continue;
    out += pauli_char(letters_[q]);
    out += std::to_string(q + 1);
  }
  return out.empty() ? "I" : out;
}

std::string PauliString::str() const {
  std::string prefix;
  if (coeff_ == Complex(-1, 0)) {
    prefix = "-";
  } else if (coeff_ == Complex(0, 1)) {
    prefix = "i";
  } else if (coeff_ == Complex(0, -1)) {
    prefix = "-i";
  } else if (coeff_ != Complex(1, 0)) {
    prefix = "(" + std::to_string(coeff_.real()) + "+" +
             std::to_string(coeff_.imag()) + "i)";
  }
  for (Pauli p : letters_) prefix += pauli_char(p);
  return prefix;
}

Operator PauliString::to_operator() const {
  Operator out = pauli_matrix(letters_.front());
  for (std::size_t q = 1; q < n_qubits(); ++q) {
    out = tensor(out, pauli_matrix(letters_[q]));
  }
  return coeff_ * out;
}

}  // namespace leakelim
