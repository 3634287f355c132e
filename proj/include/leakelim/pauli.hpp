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

#include <string>
#include <string_view>
#include <vector>

#include "leakelim/operator.hpp"

namespace leakelim {

enum class Pauli { I, X, Y, Z };

/// 2x2 matrix of a single Pauli letter.
Operator pauli_matrix(Pauli p);
char pauli_char(Pauli p);

/**
 * Tensor product of Pauli letters with a complex coefficient. Letter 0 acts
 * on qubit 1 (the leftmost tensor factor).
 */
class PauliString {
 public:
  PauliString() = default;
  PauliString(std::vector<Pauli> letters, Complex coefficient = 1.0);
  /// Parses "XIZ", optionally prefixed by '-', "i" or "-i".
  static PauliString parse(std::string_view text);

  std::size_t n_qubits() const { return letters_.size(); }
  const std::vector<Pauli>& letters() const { return letters_; }
  Complex coefficient() const { return coeff_; }

  /// Product with exact phase tracking.
  PauliString operator*(const PauliString& other) const;
  PauliString scaled(Complex s) const { return {letters_, coeff_ * s}; }

  bool commutes_with(const PauliString& other) const;
  bool is_identity() const;

  /**
   * Sparse label such as "X1Z3" (1-based qubit indices, identity letters
   * dropped); the coefficient is not part of the label.
   */
  std::string label() const;
  /// Dense text such as "-iXIZ".
  std::string str() const;

  Operator to_operator() const;

  bool operator==(const PauliString& other) const = default;

 private:
  std::vector<Pauli> letters_;
  Complex coeff_{1.0, 0.0};
};

}  // namespace leakelim
