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

#include <json.hpp>
#include <string>

#include "leakelim/compiler.hpp"
#include "leakelim/dynamics.hpp"
#include "leakelim/leo.hpp"

namespace leakelim {

using Json = nlohmann::ordered_json;

/// %.17g; non-finite values become null in JSON and nan/inf in CSV.
std::string format_double(double v);

/**
 * Deterministic JSON text: keys in insertion order, two-space indent,
 * floats with 17 significant digits, trailing newline.
 */
std::string dump_json(const Json& j);

Json to_json(const EncodingDescriptor& d);
EncodingDescriptor descriptor_from_json(const Json& j);
Json to_json(const LEOSpec& s);
Json to_json(const ValidationReport& r);
Json to_json(const Gate& g);
Json to_json(const GateSequence& s);
Json to_json(const TermClass& c);
Json to_json(const LogLogFit& f);
Json to_json(const GateCountReport& r);

/// Header t_or_n,leakage_worst,leakage_avg,target_distance then one row per point.
std::string sweep_csv(const SweepResult& s);

/// Fit, metadata and warning of a sweep (no per-point data).
Json sweep_fit_json(const SweepResult& s);

/// Gate counts for K = 1..k_max of every compilable encoding.
Json gate_count_golden(int k_max = 5);

/// Writes to a sibling temporary and renames over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace leakelim
