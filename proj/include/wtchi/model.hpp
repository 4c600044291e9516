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

// Domain types for the Gaussian wiretap channel with a helping interferer.
//
// Channel outputs (unit-variance noise):
//   receiver:     Y1 = X1 + sqrt(b) X2 + Z1
//   eavesdropper: Y2 = sqrt(a) X1 + X2 + Z2
//
// All rates are in bits per channel use. Every type validates its inputs on
// construction and throws DomainError on non-finite or negative values, so
// the rest of the library works with already-checked values.

#ifndef WTCHI_MODEL_HPP_
#define WTCHI_MODEL_HPP_

#include <limits>
#include <stdexcept>
#include <string>

namespace wtchi {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Power gains of the two cross links: a (transmitter to eavesdropper) and
/// b (interferer to receiver).
class ChannelGains {
 public:
  ChannelGains(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double a_;
  double b_;
};

/// Block-average power limits of the transmitter and the interferer.
class PowerBudget {
 public:
  PowerBudget(double p1_max, double p2_max);

  double p1_max() const { return p1_max_; }
  double p2_max() const { return p2_max_; }

 private:
  double p1_max_;
  double p2_max_;
};

/// An operating point (P1, P2).
class PowerAllocation {
 public:
  PowerAllocation(double p1, double p2);

  double p1() const { return p1_; }
  double p2() const { return p2_; }

  bool within(const PowerBudget& budget) const {
    return p1_ <= budget.p1_max() && p2_ <= budget.p2_max();
  }

  /// Throws DomainError unless the allocation fits in `budget`.
  void check_within(const PowerBudget& budget) const;

 private:
  double p1_;
  double p2_;
};

/// A secrecy rate in bits per channel use. The unbounded marker is reserved
/// for power-unconstrained limits that diverge.
class RateValue {
 public:
  static RateValue bits(double value);
  static RateValue unbounded() { return RateValue(kInf); }

  bool is_unbounded() const { return value_ == kInf; }
  /// +infinity when unbounded.
  double value() const { return value_; }

  std::string to_string() const;

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  explicit RateValue(double v) : value_(v) {}

  double value_;
};

/// g(x) = (1/2) log2(1 + x), the capacity of a unit-noise Gaussian channel at
/// SNR x. Throws DomainError for negative or non-finite x.
double gauss_cap(double x);

/// [x]^+ = max(x, 0).
double pos_part(double x);

namespace detail {

/// Throws DomainError naming `what` unless `x` is finite and nonnegative.
void require_nonnegative(double x, const char* what);

}  // namespace detail

}  // namespace wtchi

#endif  // WTCHI_MODEL_HPP_
