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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leakelim/codes.hpp"
#include "leakelim/dynamics.hpp"

namespace leakelim {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerification = 1,
  kExitConfig = 2,
  kExitResource = 3,
  kExitMode = 4,
};

struct SweepConfig {
  SweepKind kind = SweepKind::Time;
  std::vector<double> points;  ///< empty: built-in defaults
  int n = 1;                   ///< cycles for a time sweep
  double total_time = 1.0;     ///< T for a pulse sweep
};

/**
 * Everything a command needs. Filled from an optional JSON file, then from
 * command-line flags, which win.
 */
struct ExperimentConfig {
  EncodingDescriptor encoding;
  std::size_t bath_dim = 4;
  std::optional<std::uint64_t> seed;
  double strength = 1.0;
  int samples = 20;
  std::string coupling = "linear";  ///< or a bilinear mode (dfs3 only)
  SweepConfig sweep;
  std::string output_dir = ".";
  std::string format = "json";
};

/// Parses a JSON config document; unknown keys are rejected.
ExperimentConfig config_from_json(const std::string& text);

/// Largest K that `compile` verifies with dense matrices.
int verification_cap(EncodingKind kind);

/// Entry point behind the leakelim executable; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace leakelim
