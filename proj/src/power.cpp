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

#include "wtchi/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtchi {

// Threshold expressions such as 1/a and (b - a) / (a (1 - b)) rely on IEEE
// division: x/0 is +inf for x > 0 and NaN comparisons are false.
static_assert(std::numeric_limits<double>::is_iec559);

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRadicandSlack = 1e-12;
constexpr double kDegradedLine = 1e-9;
constexpr int kFallbackGridSteps = 300;

void ensure(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("power control invariant violated: " + what);
}

AllocationResult closed_form(const ChannelGains& gains, double p1, double p2,
                             int rule_set, int rule_case) {
  PowerAllocation alloc(p1, p2);
  const RateResult r = achievable_rate(gains, alloc);
  return {alloc, r.rate, AllocationSource::kClosedForm, r.branch, rule_set,
          rule_case};
}

}  // namespace

const char* to_string(AllocationSource source) {
  switch (source) {
    case AllocationSource::kClosedForm:
      return "closed-form";
    case AllocationSource::kGridOracle:
      return "grid-oracle";
  }
  return "?";
}

CriticalPowers critical_powers(const ChannelGains& gains,
                               const PowerBudget& budget) {
  const double a = gains.a();
  const double b = gains.b();
  CriticalPowers cp{};
  cp.p1_star = b - 1.0;
  cp.denominator = 1.0 - a * b;
  if (b == 0.0) {
    cp.radicand = kInf;
    cp.p2_star = kInf;
    return cp;
  }
  cp.radicand = (a - 1.0) * (a - 1.0) +
                (1.0 / b - a) * (a - b + (1.0 - b) * a * budget.p1_max());
  if (cp.denominator > 0.0) {
    const double rad = std::max(cp.radicand, 0.0);
    cp.p2_star = (a - 1.0 + std::sqrt(rad)) / cp.denominator;
  }
  return cp;
}

AllocationResult optimal_allocation(const ChannelGains& gains,
                                    const PowerBudget& budget) {
  const double a = gains.a();
  const double b = gains.b();
  const double p1_max = budget.p1_max();
  const double p2_max = budget.p2_max();

  // min{P2max, P2*}, or the grid when the P2* rule is ill-conditioned.
  auto with_p2_star = [&](int rule_set,
                          int rule_case) -> std::optional<AllocationResult> {
    if (std::abs(1.0 - a * b) < kDegradedLine) return std::nullopt;
    ensure(a * b < 1.0 - 1e-12, "P2* requires ab < 1");
    const CriticalPowers cp = critical_powers(gains, budget);
    ensure(cp.radicand >= -kRadicandSlack, "P2* radicand is negative");
    ensure(cp.p2_star.has_value() && *cp.p2_star >= 0.0,
           "P2* is negative in a branch that uses it");
    return closed_form(gains, p1_max, std::min(p2_max, *cp.p2_star), rule_set,
                       rule_case);
  };

  std::optional<AllocationResult> result;
  if (a >= 1.0) {
    if (b > 1.0 && p2_max > a - 1.0) {
      result = closed_form(gains, std::min(p1_max, b - 1.0), p2_max, 1, 1);
    } else if (b < 1.0 / a && p2_max > (a - 1.0) / (1.0 - a * b)) {
      result = with_p2_star(1, 2);
      if (!result) {
        return grid_search_allocation(gains, budget, kFallbackGridSteps);
      }
    } else {
      // Silent transmitter and interferer; the rate is exactly zero.
      const PowerAllocation zero(0.0, 0.0);
      result = AllocationResult{zero,
                                RateValue::bits(0.0),
                                AllocationSource::kClosedForm,
                                classify_branch(gains, zero),
                                1,
                                3};
    }
  } else {
    const double p1_star = b - 1.0;
    if (b >= 1.0 && p1_max < p1_star) {
      result = closed_form(gains, p1_max, p2_max, 2, 1);
    } else if (b >= 1.0 / a && p1_max >= p1_star &&
               p2_max < (1.0 - a) / (a * b - 1.0)) {
      result = closed_form(gains, p1_max, p2_max, 2, 2);
    } else if (b >= 1.0 / a && p1_max >= p1_star) {
      result = closed_form(gains, p1_star, p2_max, 2, 3);
    } else if (b >= 1.0 && b < 1.0 / a && p1_max >= p1_star &&
               p1_max < p1_star / (1.0 - a * b)) {
      result = closed_form(gains, p1_max, p2_max, 2, 4);
    } else if (b < 1.0 && p1_max >= (b - a) / (a * (1.0 - b))) {
      result = with_p2_star(2, 5);
      if (!result) {
        return grid_search_allocation(gains, budget, kFallbackGridSteps);
      }
    } else {
      result = closed_form(gains, p1_max, 0.0, 2, 6);
    }
  }

  ensure(result->alloc.within(budget), "allocation outside the budget");
  return *result;
}

AllocationResult grid_search_allocation(const ChannelGains& gains,
                                        const PowerBudget& budget,
                                        int n_steps) {
  if (n_steps < 2) {
    throw DomainError("grid search needs n_steps >= 2, got " +
                      std::to_string(n_steps));
  }
  const double p1_max = budget.p1_max();
  const double p2_max = budget.p2_max();

  std::vector<double> p1s;
  std::vector<double> p2s;
  p1s.reserve(n_steps + 2);
  p2s.reserve(n_steps + 2);
  for (int i = 0; i <= n_steps; ++i) {
    p1s.push_back(p1_max * i / n_steps);
    p2s.push_back(p2_max * i / n_steps);
  }

  const CriticalPowers cp = critical_powers(gains, budget);
  if (std::isfinite(cp.p1_star) && cp.p1_star >= 0.0) {
    p1s.push_back(std::min(cp.p1_star, p1_max));
  }
  if (cp.p2_star && std::isfinite(*cp.p2_star) && *cp.p2_star >= 0.0) {
    p2s.push_back(std::min(*cp.p2_star, p2_max));
  }
  for (auto* axis : {&p1s, &p2s}) {
    std::sort(axis->begin(), axis->end());
    axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
  }

  double best_rate = -1.0;
  double best_p1 = 0.0;
  double best_p2 = 0.0;
  for (double p1 : p1s) {
    for (double p2 : p2s) {
      const double r = achievable_rate(gains, PowerAllocation(p1, p2)).rate.value();
      if (r > best_rate) {
        best_rate = r;
        best_p1 = p1;
        best_p2 = p2;
      }
    }
  }

  PowerAllocation alloc(best_p1, best_p2);
  return {alloc, RateValue::bits(best_rate), AllocationSource::kGridOracle,
          classify_branch(gains, alloc), 0, 0};
}

RateValue asymptotic_rate(const ChannelGains& gains) {
  const double a = gains.a();
  const double b = gains.b();
  if (a == 0.0 || b == 0.0) return RateValue::unbounded();

  if (a >= 1.0) {
    if (b > 1.0) return RateValue::bits(0.5 * std::log2(b));
    if (b < 1.0 / a) return RateValue::bits(0.5 * std::log2(1.0 / (a * b)));
    return RateValue::bits(0.0);
  }
  if (b > 1.0 / a) return RateValue::bits(0.5 * std::log2(b));
  if (b < 1.0) return RateValue::bits(0.5 * std::log2(1.0 / (a * b)));
  return RateValue::bits(0.5 * std::log2(1.0 / a));
}

RateValue wiretap_asymptotic_rate(double a) {
  detail::require_nonnegative(a, "gain a");
  if (a == 0.0) return RateValue::unbounded();
  return RateValue::bits(pos_part(0.5 * std::log2(1.0 / a)));
}

}  // namespace wtchi
