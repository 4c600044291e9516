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

// Achievable secrecy rate of the wiretap channel with a helping interferer
// at a fixed operating point (P1, P2), and the interferer-free baseline.
//
// The rate is piecewise in (a, b). Three regimes on a:
//   ZERO       a >= 1 + P2
//   REGIME_I   1 <= a < 1 + P2    (b split at 1 + P1 and 1)
//   REGIME_II  a < 1              (b split at 1 + P1, beta1, beta2)
// Interval ends follow the closed/open directions of the rate expression
// exactly; the rate itself is continuous across every boundary.

#ifndef WTCHI_ACHIEVABLE_HPP_
#define WTCHI_ACHIEVABLE_HPP_

#include <string>

#include "wtchi/model.hpp"

namespace wtchi {

enum class Regime { kZero, kRegimeI, kRegimeII };

struct BranchLabel {
  Regime regime = Regime::kZero;
  /// 1 for kZero, 1..3 for kRegimeI, 1..4 for kRegimeII.
  int sub_case = 1;

  /// "ZERO", "I-2", "II-4", ...
  std::string to_string() const;

  friend bool operator==(const BranchLabel&, const BranchLabel&) = default;
};

/// b-thresholds that separate the REGIME_II sub-cases.
///   beta1 = (1 + P1) / (1 + a P1)
///   beta2 = a (1 + P1) / (1 + a P1 + (1 - a) P2)
/// For a < 1: beta2 <= 1 <= beta1. Both equal 1 at a = 1.
struct Thresholds {
  double beta1;
  double beta2;
};

/// Only meaningful (and only required) for a <= 1, where the beta2
/// denominator is positive.
Thresholds thresholds(double a, const PowerAllocation& alloc);

/// Which branch of the piecewise rate applies to (gains, alloc).
BranchLabel classify_branch(const ChannelGains& gains,
                            const PowerAllocation& alloc);

struct RateResult {
  RateValue rate;
  BranchLabel branch;
};

/// Achievable secrecy rate R_s(P1, P2) in bits per channel use.
RateResult achievable_rate(const ChannelGains& gains,
                           const PowerAllocation& alloc);

/// Secrecy capacity of the Gaussian wiretap channel without interferer:
/// [g(P1) - g(a P1)]^+.
RateValue wiretap_capacity(double a, double p1);

}  // namespace wtchi

#endif  // WTCHI_ACHIEVABLE_HPP_
