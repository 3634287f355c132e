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

// Regenerates tests/golden/gate_counts.json:
//   gen_gate_counts > tests/golden/gate_counts.json

#include <iostream>

#include "leakelim/json_io.hpp"

int main() {
  std::cout << leakelim::dump_json(leakelim::gate_count_golden(5));
  return 0;
}
