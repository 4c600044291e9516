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

#include "wtchi/sweep.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "wtchi/bound.hpp"
#include "wtchi/format.hpp"
#include "wtchi/power.hpp"

namespace wtchi {

namespace {

constexpr double kSoundnessSlack = 1e-9;

}  // namespace

void SweepSpec::validate() const {
  detail::require_nonnegative(from, "sweep start");
  if (!std::isfinite(to) || to < from) {
    throw DomainError("sweep end must be finite and >= start");
  }
  if (steps < 1) throw DomainError("sweep needs steps >= 1");
  if (!symmetric) detail::require_nonnegative(fixed_gain, "fixed gain");
}

SweepRow evaluate_point(const ChannelGains& gains, const PowerBudget& budget,
                        PowerMode mode, double x) {
  PowerAllocation alloc(budget.p1_max(), budget.p2_max());
  RateResult rate{RateValue::bits(0.0), {}};
  if (mode == PowerMode::kOptimalControl) {
    const AllocationResult opt = optimal_allocation(gains, budget);
    alloc = opt.alloc;
    rate = {opt.rate, opt.branch};
  } else {
    rate = achievable_rate(gains, alloc);
  }
  const SatoEvaluation bound = sato_upper_bound(gains, budget);
  if (rate.rate.value() > bound.final_bound.value() + kSoundnessSlack) {
    throw std::logic_error(
        "achievable rate " + format_number(rate.rate.value()) +
        " exceeds upper bound " + format_number(bound.final_bound.value()) +
        " at a = " + format_number(gains.a()) +
        ", b = " + format_number(gains.b()));
  }
  return SweepRow{x,         rate.rate,  bound.final_bound,
                  alloc.p1(), alloc.p2(), rate.branch};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const int n = spec.from == spec.to ? 0 : spec.steps;
  std::vector<SweepRow> rows;
  rows.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    // Pin the last point to `to` exactly.
    const double x =
        i == n ? spec.to : spec.from + (spec.to - spec.from) * i / n;
    double a = spec.fixed_gain;
    double b = spec.fixed_gain;
    if (spec.symmetric) {
      a = b = x;
    } else if (spec.parameter == SweptParameter::kA) {
      a = x;
    } else {
      b = x;
    }
    rows.push_back(
        evaluate_point(ChannelGains(a, b), spec.budget, spec.power_mode, x));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_number(r.x) << ',' << format_number(r.achievable.value())
        << ',' << format_number(r.upper_bound.value()) << ','
        << format_number(r.p1) << ',' << format_number(r.p2) << ','
        << r.branch.to_string() << '\n';
  }
}

std::vector<NamedSweep> figure_preset(const std::string& name, int steps,
                                      PowerMode mode) {
  auto make = [&](SweptParameter p, bool symmetric, double fixed) {
    SweepSpec s;
    s.parameter = p;
    s.from = 0.0;
    s.to = 4.0;
    s.steps = steps;
    s.symmetric = symmetric;
    s.fixed_gain = fixed;
    s.budget = PowerBudget(2.0, 2.0);
    s.power_mode = mode;
    return s;
  };
  if (name == "fig2") {
    return {{"fig2", make(SweptParameter::kA, true, 0.0)}};
  }
  if (name == "fig3") {
    return {{"fig3_a0.6", make(SweptParameter::kB, false, 0.6)},
            {"fig3_a1.2", make(SweptParameter::kB, false, 1.2)}};
  }
  if (name == "fig4") {
    return {{"fig4_b0.2", make(SweptParameter::kA, false, 0.2)},
            {"fig4_b1.2", make(SweptParameter::kA, false, 1.2)}};
  }
  throw DomainError("unknown figure preset '" + name + "'");
}

}  // namespace wtchi
