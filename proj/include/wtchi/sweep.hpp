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

// Parameter sweeps over one channel gain, emitted as CSV rows
// x,achievable_rate,upper_bound,p1,p2,branch.

#ifndef WTCHI_SWEEP_HPP_
#define WTCHI_SWEEP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "wtchi/achievable.hpp"
#include "wtchi/model.hpp"

namespace wtchi {

enum class SweptParameter { kA, kB };
enum class PowerMode { kOptimalControl, kFullPower };

struct SweepSpec {
  SweptParameter parameter = SweptParameter::kA;
  double from = 0.0;
  double to = 4.0;
  int steps = 400;
  /// Forces a = b = x; `fixed_gain` is ignored.
  bool symmetric = false;
  /// Value of the gain that is not swept.
  double fixed_gain = 1.0;
  PowerBudget budget{2.0, 2.0};
  PowerMode power_mode = PowerMode::kOptimalControl;

  /// Throws DomainError on an invalid range, step count or fixed gain.
  void validate() const;
};

struct SweepRow {
  double x;
  RateValue achievable;
  RateValue upper_bound;
  double p1;
  double p2;
  BranchLabel branch;
};

/// Evaluates steps + 1 equispaced points of [from, to] in ascending order.
/// A zero-width range yields one row. Throws std::logic_error if a row's
/// achievable rate exceeds its upper bound by more than 1e-9.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Single sweep point; run_sweep() is this evaluated on the x grid.
SweepRow evaluate_point(const ChannelGains& gains, const PowerBudget& budget,
                        PowerMode mode, double x);

inline constexpr const char* kCsvHeader =
    "x,achievable_rate,upper_bound,p1,p2,branch";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct NamedSweep {
  std::string name;
  SweepSpec spec;
};

/// Figure presets at budget (2, 2) over [0, 4]: "fig2" (symmetric a = b),
/// "fig3" (b swept, a in {0.6, 1.2}), "fig4" (a swept, b in {0.2, 1.2}).
/// Throws DomainError for an unknown name.
std::vector<NamedSweep> figure_preset(const std::string& name, int steps,
                                      PowerMode mode);

}  // namespace wtchi

#endif  // WTCHI_SWEEP_HPP_
