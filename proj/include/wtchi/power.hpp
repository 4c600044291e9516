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

// Secrecy-rate-maximizing power control.
//
// optimal_allocation() applies the closed-form power control rules (one rule
// set for a >= 1, one for a < 1). grid_search_allocation() is the brute
// force oracle that the closed form is checked against. asymptotic_rate()
// gives the limit of the optimized rate as both budgets grow without bound.

#ifndef WTCHI_POWER_HPP_
#define WTCHI_POWER_HPP_

#include <optional>

#include "wtchi/achievable.hpp"
#include "wtchi/model.hpp"

namespace wtchi {

enum class AllocationSource { kClosedForm, kGridOracle };

const char* to_string(AllocationSource source);

struct AllocationResult {
  PowerAllocation alloc;
  RateValue rate;
  AllocationSource source;
  BranchLabel branch;
  /// Which rule set produced the point: 1 (a >= 1), 2 (a < 1), 0 for the grid.
  int rule_set = 0;
  /// 1-based row within the rule set; the last row is "otherwise".
  int rule_case = 0;
};

/// Critical powers of the closed-form rules.
///   p1_star = b - 1
///   p2_star = (a - 1 + sqrt(radicand)) / (1 - a b)
///   radicand = (a - 1)^2 + (1/b - a) [a - b + (1 - b) a P1max]
/// p2_star is only defined when a b < 1; at b = 0 it is +infinity (the
/// interferer never hurts the receiver).
struct CriticalPowers {
  double p1_star;
  std::optional<double> p2_star;
  double radicand;
  double denominator;
};

CriticalPowers critical_powers(const ChannelGains& gains,
                               const PowerBudget& budget);

/// Closed-form optimum over the budget box. Falls back to the grid oracle
/// (source kGridOracle) when the P2* rule is needed but |1 - ab| < 1e-9.
AllocationResult optimal_allocation(const ChannelGains& gains,
                                    const PowerBudget& budget);

/// Maximum of the achievable rate over the (n_steps + 1)^2 lattice on
/// [0, P1max] x [0, P2max], augmented with the clamped critical powers.
/// Ties go to the smallest P1, then the smallest P2. n_steps >= 2.
AllocationResult grid_search_allocation(const ChannelGains& gains,
                                        const PowerBudget& budget,
                                        int n_steps);

/// Power-unconstrained achievable secrecy rate. Unbounded when a = 0 or
/// b = 0, where the limit diverges.
RateValue asymptotic_rate(const ChannelGains& gains);

/// Power-unconstrained secrecy capacity of the plain wiretap channel,
/// (1/2)[log2(1/a)]^+. Unbounded at a = 0.
RateValue wiretap_asymptotic_rate(double a);

}  // namespace wtchi

#endif  // WTCHI_POWER_HPP_
