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

#include "wtchi/bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wtchi/format.hpp"

namespace wtchi {

namespace {

constexpr double kDegenerateCross = 1e-12;
constexpr double kDeltaSlack = 1e-12;
constexpr double kOracleTol = 1e-10;
// The raw quotient loses about eps / (1 - |rho|) in relative accuracy.
constexpr double kRawQuotientEdge = 1e-3;

double checked_half_log2(double quotient, double rho) {
  if (!(quotient > 0.0)) {
    throw std::logic_error("Sato bound log argument is not positive (" +
                           format_number(quotient) + ") at rho = " +
                           format_number(rho));
  }
  return 0.5 * std::log2(quotient);
}

}  // namespace

NoiseCorrelation::NoiseCorrelation(double rho) : rho_(rho) {
  if (!std::isfinite(rho) || rho <= -1.0 || rho >= 1.0) {
    throw DomainError("noise correlation must lie in (-1, 1), got " +
                      format_number(rho));
  }
}

SatoTerms sato_terms(const ChannelGains& gains, const PowerAllocation& alloc) {
  const double a = gains.a();
  const double b = gains.b();
  const double p1 = alloc.p1();
  const double p2 = alloc.p2();
  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  const double joint = (std::sqrt(a * b) - 1.0) * (std::sqrt(a * b) - 1.0) * p1 * p2;
  return SatoTerms{
      (sa - 1.0) * (sa - 1.0) * p1 + (sb - 1.0) * (sb - 1.0) * p2 + joint,
      (sa + 1.0) * (sa + 1.0) * p1 + (sb + 1.0) * (sb + 1.0) * p2 + joint,
      sa * p1 + sb * p2,
      1.0 + a * p1 + p2,
  };
}

double sato_f_cancelled(const ChannelGains& gains,
                        const PowerAllocation& alloc,
                        const NoiseCorrelation& rho) {
  const SatoTerms t = sato_terms(gains, alloc);
  const double r = rho.rho();
  const double quotient =
      1.0 + t.c_minus / (2.0 * (1.0 - r)) + t.c_plus / (2.0 * (1.0 + r));
  return checked_half_log2(quotient / t.eve_power, r);
}

double sato_f(const ChannelGains& gains, const PowerAllocation& alloc,
              const NoiseCorrelation& rho) {
  const double r = rho.rho();
  if (1.0 - std::abs(r) <= kRawQuotientEdge) {
    return sato_f_cancelled(gains, alloc, rho);
  }
  const double a = gains.a();
  const double b = gains.b();
  const double p1 = alloc.p1();
  const double p2 = alloc.p2();
  const double rx = 1.0 + p1 + b * p2;
  const double eve = 1.0 + a * p1 + p2;
  const double shift = r + std::sqrt(a) * p1 + std::sqrt(b) * p2;
  const double num = rx * eve - shift * shift;
  const double den = (1.0 - r * r) * eve;
  return checked_half_log2(num / den, r);
}

double discriminant(const ChannelGains& gains, const PowerAllocation& alloc) {
  const SatoTerms t = sato_terms(gains, alloc);
  const double delta = t.c_minus * t.c_plus;
  if (delta < -kDeltaSlack) {
    throw std::logic_error("negative discriminant " + format_number(delta));
  }
  return std::max(delta, 0.0);
}

NoiseCorrelation rho_star(const ChannelGains& gains,
                          const PowerAllocation& alloc) {
  const SatoTerms t = sato_terms(gains, alloc);
  if (t.cross <= kDegenerateCross) return NoiseCorrelation(0.0);

  // Algebraically equal to
  //   [(1+a)P1 + (1+b)P2 + (sqrt(ab)-1)^2 P1 P2 - sqrt(Delta)] / (2 cross)
  // since C+ + C- = 2[(1+a)P1 + (1+b)P2 + (sqrt(ab)-1)^2 P1 P2] and
  // C+ - C- = 4 cross; this form avoids the cancellation in the numerator.
  const double lo = std::sqrt(std::max(t.c_minus, 0.0));
  const double hi = std::sqrt(t.c_plus);
  const double rho = (hi - lo) / (hi + lo);
  return NoiseCorrelation(std::clamp(rho, -1.0 + kRhoEdge, 1.0 - kRhoEdge));
}

NoiseCorrelation rho_min_oracle(const ChannelGains& gains,
                                const PowerAllocation& alloc) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double r) { return sato_f(gains, alloc, NoiseCorrelation(r)); };

  double lo = -1.0 + kRhoEdge;
  double hi = 1.0 - kRhoEdge;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > kOracleTol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else if (fc > fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    } else {
      lo = c;
      hi = d;
      c = hi - inv_phi * (hi - lo);
      d = lo + inv_phi * (hi - lo);
      fc = f(c);
      fd = f(d);
    }
  }
  return NoiseCorrelation(0.5 * (lo + hi));
}

SatoEvaluation sato_upper_bound(const ChannelGains& gains,
                                const PowerBudget& budget) {
  const PowerAllocation full(budget.p1_max(), budget.p2_max());
  const SatoTerms t = sato_terms(gains, full);
  const bool degenerate = t.cross <= kDegenerateCross;
  const NoiseCorrelation rho = rho_star(gains, full);
  const double f = sato_f(gains, full, rho);
  const double cap = gauss_cap(budget.p1_max());
  return SatoEvaluation{
      rho,
      f,
      f,
      cap,
      RateValue::bits(pos_part(std::min(f, cap))),
      discriminant(gains, full),
      degenerate,
  };
}

}  // namespace wtchi
