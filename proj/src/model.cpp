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

#include "wtchi/model.hpp"

#include <cmath>

#include "wtchi/format.hpp"

namespace wtchi {

namespace detail {

void require_nonnegative(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be finite");
  }
  if (x < 0.0) {
    throw DomainError(std::string(what) + " must be >= 0, got " +
                      format_number(x));
  }
}

}  // namespace detail

ChannelGains::ChannelGains(double a, double b) : a_(a), b_(b) {
  detail::require_nonnegative(a, "gain a");
  detail::require_nonnegative(b, "gain b");
}

PowerBudget::PowerBudget(double p1_max, double p2_max)
    : p1_max_(p1_max), p2_max_(p2_max) {
  detail::require_nonnegative(p1_max, "power budget P1");
  detail::require_nonnegative(p2_max, "power budget P2");
}

PowerAllocation::PowerAllocation(double p1, double p2) : p1_(p1), p2_(p2) {
  detail::require_nonnegative(p1, "power P1");
  detail::require_nonnegative(p2, "power P2");
}

void PowerAllocation::check_within(const PowerBudget& budget) const {
  if (!within(budget)) {
    throw DomainError("allocation (" + format_number(p1_) + ", " +
                      format_number(p2_) + ") exceeds budget (" +
                      format_number(budget.p1_max()) + ", " +
                      format_number(budget.p2_max()) + ")");
  }
}

RateValue RateValue::bits(double value) {
  if (std::isnan(value)) {
    throw DomainError("rate must not be NaN");
  }
  return RateValue(value);
}

std::string RateValue::to_string() const {
  return is_unbounded() ? std::string("inf") : format_number(value_);
}

double gauss_cap(double x) {
  detail::require_nonnegative(x, "SNR");
  return 0.5 * std::log2(1.0 + x);
}

double pos_part(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace wtchi
