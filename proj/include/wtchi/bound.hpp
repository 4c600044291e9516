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

// Sato-type (genie-aided) upper bound on the secrecy capacity.
//
// The receiver is handed the eavesdropper's output. For jointly Gaussian
// noises with correlation rho, the resulting conditional mutual information
// is
//
//   f(P1, P2, rho) = 1/2 log2 [ ((1 + P1 + b P2)(1 + a P1 + P2)
//                                - (rho + sqrt(a) P1 + sqrt(b) P2)^2)
//                               / ((1 - rho^2)(1 + a P1 + P2)) ]
//
// which is convex in rho and increasing in P1 and P2. The bound takes the
// minimizing rho at full budgets and caps it with g(P1max).
//
// Writing C- and C+ for the numerator evaluated at rho = +1 and rho = -1,
//   C- = (sqrt(a)-1)^2 P1 + (sqrt(b)-1)^2 P2 + (sqrt(ab)-1)^2 P1 P2
//   C+ = (sqrt(a)+1)^2 P1 + (sqrt(b)+1)^2 P2 + (sqrt(ab)-1)^2 P1 P2
// the quotient inside the log is 1 + C-/(2(1-rho)) + C+/(2(1+rho)), which
// stays well conditioned as |rho| -> 1. The discriminant of the minimizer is
// Delta = C- * C+.

#ifndef WTCHI_BOUND_HPP_
#define WTCHI_BOUND_HPP_

#include "wtchi/model.hpp"

namespace wtchi {

/// Correlation between the two receivers' noises, strictly inside (-1, 1).
class NoiseCorrelation {
 public:
  explicit NoiseCorrelation(double rho);

  double rho() const { return rho_; }

 private:
  double rho_;
};

/// Search interval for rho used by the oracle and for clamping rho*.
inline constexpr double kRhoEdge = 1e-9;

struct SatoTerms {
  /// Numerator at rho = +1 (first factor of Delta).
  double c_minus;
  /// Numerator at rho = -1 (second factor of Delta).
  double c_plus;
  /// sqrt(a) P1 + sqrt(b) P2.
  double cross;
  /// 1 + a P1 + P2, the eavesdropper's received power.
  double eve_power;
};

SatoTerms sato_terms(const ChannelGains& gains, const PowerAllocation& alloc);

/// f(P1, P2, rho) in bits. The raw quotient is used unless |rho| is within
/// 1e-3 of 1, where the cancelled form takes over. Throws std::logic_error
/// if the log argument is not positive.
double sato_f(const ChannelGains& gains, const PowerAllocation& alloc,
              const NoiseCorrelation& rho);

/// The cancelled form of f; exact for every rho in (-1, 1).
double sato_f_cancelled(const ChannelGains& gains,
                        const PowerAllocation& alloc,
                        const NoiseCorrelation& rho);

/// Delta = C- * C+, clamped at zero after a -1e-12 sanity check.
double discriminant(const ChannelGains& gains, const PowerAllocation& alloc);

/// Closed-form minimizer of f over rho. Returns 0 when
/// sqrt(a) P1 + sqrt(b) P2 <= 1e-12 and clamps to +/-(1 - kRhoEdge).
NoiseCorrelation rho_star(const ChannelGains& gains,
                          const PowerAllocation& alloc);

/// Golden-section minimization of f over [-1 + kRhoEdge, 1 - kRhoEdge] to
/// 1e-10 in rho. Equal probe values shrink both ends, so a constant f yields
/// the midpoint 0.
NoiseCorrelation rho_min_oracle(const ChannelGains& gains,
                                const PowerAllocation& alloc);

struct SatoEvaluation {
  NoiseCorrelation rho_star;
  double f_at_star;
  /// R_u = f(P1max, P2max, rho*).
  double r_u;
  /// g(P1max): the receiver's single-user capacity with the interference
  /// removed.
  double single_user_cap;
  /// min(R_u, g(P1max)) clipped at 0.
  RateValue final_bound;
  double discriminant;
  bool degenerate;
  bool cap_active() const { return single_user_cap < r_u; }
};

SatoEvaluation sato_upper_bound(const ChannelGains& gains,
                                const PowerBudget& budget);

}  // namespace wtchi

#endif  // WTCHI_BOUND_HPP_
