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

#include "wtchi/achievable.hpp"

#include <cassert>

namespace wtchi {

namespace {

// Rounding slack for the unclipped REGIME_II expressions. Anything more
// negative than this means a branch was selected incorrectly.
constexpr double kUnclippedSlack = 1e-12;

double unclipped(double v) {
  assert(v >= -kUnclippedSlack && "REGIME_II branch produced a negative rate");
  // Rounding only; see kUnclippedSlack.
  return v < 0.0 ? 0.0 : v;
}

}  // namespace

std::string BranchLabel::to_string() const {
  switch (regime) {
    case Regime::kZero:
      return "ZERO";
    case Regime::kRegimeI:
      return "I-" + std::to_string(sub_case);
    case Regime::kRegimeII:
      return "II-" + std::to_string(sub_case);
  }
  return "?";
}

Thresholds thresholds(double a, const PowerAllocation& alloc) {
  const double p1 = alloc.p1();
  const double p2 = alloc.p2();
  return Thresholds{
      (1.0 + p1) / (1.0 + a * p1),
      a * (1.0 + p1) / (1.0 + a * p1 + (1.0 - a) * p2),
  };
}

BranchLabel classify_branch(const ChannelGains& gains,
                            const PowerAllocation& alloc) {
  const double a = gains.a();
  const double b = gains.b();
  const double p1 = alloc.p1();
  const double p2 = alloc.p2();

  if (a >= 1.0 + p2) return {Regime::kZero, 1};
  if (a >= 1.0) {
    if (b >= 1.0 + p1) return {Regime::kRegimeI, 1};
    if (b >= 1.0) return {Regime::kRegimeI, 2};
    return {Regime::kRegimeI, 3};
  }
  const Thresholds t = thresholds(a, alloc);
  if (b >= 1.0 + p1) return {Regime::kRegimeII, 1};
  if (b >= t.beta1) return {Regime::kRegimeII, 2};
  if (b >= t.beta2) return {Regime::kRegimeII, 3};
  return {Regime::kRegimeII, 4};
}

RateResult achievable_rate(const ChannelGains& gains,
                           const PowerAllocation& alloc) {
  const double a = gains.a();
  const double b = gains.b();
  const double p1 = alloc.p1();
  const double p2 = alloc.p2();
  const BranchLabel branch = classify_branch(gains, alloc);

  // Receiver decodes and cancels the interference; eavesdropper treats it as
  // noise.
  auto cancel_vs_noise = [&] {
    return gauss_cap(p1) - gauss_cap(a * p1 / (1.0 + p2));
  };
  // Both sides decode the interference jointly.
  auto joint = [&] { return gauss_cap(p1 + b * p2) - gauss_cap(a * p1 + p2); };
  // Both sides treat the interference as noise.
  auto noise_vs_noise = [&] {
    return gauss_cap(p1 / (1.0 + b * p2)) - gauss_cap(a * p1 / (1.0 + p2));
  };

  double rate = 0.0;
  switch (branch.regime) {
    case Regime::kZero:
      rate = 0.0;
      break;
    case Regime::kRegimeI:
      switch (branch.sub_case) {
        case 1:
          rate = cancel_vs_noise();
          break;
        case 2:
          rate = pos_part(joint());
          break;
        default:
          rate = pos_part(noise_vs_noise());
          break;
      }
      break;
    case Regime::kRegimeII:
      switch (branch.sub_case) {
        case 1:
          rate = cancel_vs_noise();
          break;
        case 2:
          rate = unclipped(joint());
          break;
        case 3:
          rate = unclipped(gauss_cap(p1) - gauss_cap(a * p1));
          break;
        default:
          rate = unclipped(noise_vs_noise());
          break;
      }
      break;
  }
  return {RateValue::bits(rate), branch};
}

RateValue wiretap_capacity(double a, double p1) {
  detail::require_nonnegative(a, "gain a");
  detail::require_nonnegative(p1, "power P1");
  return RateValue::bits(pos_part(gauss_cap(p1) - gauss_cap(a * p1)));
}

}  // namespace wtchi
