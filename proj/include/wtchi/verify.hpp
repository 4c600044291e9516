// Copyright 2026 The wtchi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded self-checks behind the `verify` command: closed forms against
// their numerical oracles, plus the cross-module soundness invariant.

#ifndef WTCHI_VERIFY_HPP_
#define WTCHI_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace wtchi {

struct VerifyOptions {
  int samples = 2000;
  std::uint64_t seed = 7;
  int grid_steps = 300;
};

struct CheckOutcome {
  std::string name;
  bool passed;
  int cases;
  /// Largest observed violation measure (the quantity compared against
  /// `tolerance`).
  double worst;
  double tolerance;
};

/// Runs every check. Sample counts of the expensive checks are scaled down
/// from `samples`.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

}  // namespace wtchi

#endif  // WTCHI_VERIFY_HPP_
