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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "wtchi/achievable.hpp"
#include "wtchi/power.hpp"

namespace wtchi {
namespace {

// Direct transcription of f, kept separate from the library's evaluation.
double f_direct(double a, double b, double p1, double p2, double rho) {
  const double num = (1 + p1 + b * p2) * (1 + a * p1 + p2) -
                     std::pow(rho + std::sqrt(a) * p1 + std::sqrt(b) * p2, 2);
  return 0.5 * std::log2(num / ((1 - rho * rho) * (1 + a * p1 + p2)));
}

// The minimizer as printed: numerator with -sqrt(Delta), over 2 cross.
double rho_star_direct(double a, double b, double p1, double p2) {
  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  const double k = std::pow(std::sqrt(a * b) - 1, 2) * p1 * p2;
  const double delta =
      (std::pow(sa - 1, 2) * p1 + std::pow(sb - 1, 2) * p2 + k) *
      (std::pow(sa + 1, 2) * p1 + std::pow(sb + 1, 2) * p2 + k);
  return ((1 + a) * p1 + (1 + b) * p2 + k - std::sqrt(delta)) /
         (2 * (sa * p1 + sb * p2));
}

double f(double a, double b, double p1, double p2, double rho) {
  return sato_f(ChannelGains(a, b), PowerAllocation(p1, p2),
                NoiseCorrelation(rho));
}

TEST(NoiseCorrelationTest, StrictlyInsideUnitInterval) {
  EXPECT_NO_THROW(NoiseCorrelation(0.999999));
  EXPECT_THROW(NoiseCorrelation(1.0), DomainError);
  EXPECT_THROW(NoiseCorrelation(-1.0), DomainError);
  EXPECT_THROW(NoiseCorrelation(std::nan("")), DomainError);
}

TEST(SatoFTest, ZeroPowerIsZero) {
  EXPECT_EQ(f(0.7, 2.0, 0.0, 0.0, 0.0), 0.0);
}

TEST(SatoFTest, HandEvaluated) {
  // (1/2) log2[(5 * 5 - 16) / 5].
  EXPECT_NEAR(f(1.0, 1.0, 2.0, 2.0, 0.0), 0.5 * std::log2(9.0 / 5.0), 1e-15);
  EXPECT_NEAR(f(1.0, 1.0, 2.0, 2.0, 0.0), 0.423998453277, 1e-12);
}

TEST(SatoFTest, AboveMinimum) {
  const double at_half = f(0.6, 0.6, 2.0, 2.0, 0.5);
  EXPECT_NEAR(at_half, f_direct(0.6, 0.6, 2.0, 2.0, 0.5), 1e-14);
  EXPECT_NEAR(at_half, 0.287366142257, 1e-12);
  const double rho =
      rho_star(ChannelGains(0.6, 0.6), PowerAllocation(2.0, 2.0)).rho();
  EXPECT_GT(at_half, f(0.6, 0.6, 2.0, 2.0, rho));
}

TEST(SatoFTest, CancelledFormMatchesRawQuotient) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> gain(0.0, 5.0);
  std::uniform_real_distribution<double> pw(0.0, 10.0);
  std::uniform_real_distribution<double> corr(-0.99, 0.99);
  for (int i = 0; i < 5000; ++i) {
    const ChannelGains g(gain(rng), gain(rng));
    const PowerAllocation alloc(pw(rng), pw(rng));
    const NoiseCorrelation rho(corr(rng));
    EXPECT_NEAR(sato_f_cancelled(g, alloc, rho), sato_f(g, alloc, rho), 1e-12);
  }
}

TEST(RhoStarTest, MatchesPrintedFormula) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> gain(0.05, 5.0);
  std::uniform_real_distribution<double> pw(0.1, 10.0);
  for (int i = 0; i < 5000; ++i) {
    const double a = gain(rng);
    const double b = gain(rng);
    const double p1 = pw(rng);
    const double p2 = pw(rng);
    const double direct = rho_star_direct(a, b, p1, p2);
    if (std::abs(direct) > 1 - 1e-6) continue;
    EXPECT_NEAR(rho_star(ChannelGains(a, b), PowerAllocation(p1, p2)).rho(),
                direct, 1e-10);
  }
}

TEST(RhoStarTest, StationaryAtSmallSymmetricGains) {
  const ChannelGains g(0.25, 0.25);
  const PowerAllocation alloc(2.0, 2.0);
  const double r = rho_star(g, alloc).rho();
  const double h = 1e-5;
  const double slope = (f(0.25, 0.25, 2, 2, r + h) - f(0.25, 0.25, 2, 2, r - h)) /
                       (2 * h);
  EXPECT_LE(std::abs(slope), 1e-6);
  EXPECT_NEAR(rho_min_oracle(g, alloc).rho(), r, 1e-6);
}

TEST(RhoStarTest, AgreesWithOracleOnAsymmetricGains) {
  for (auto [a, b, p1, p2] : {std::tuple{4.0, 0.25, 1.0, 1.0},
                              std::tuple{2.0, 0.3, 2.0, 2.0}}) {
    const ChannelGains g(a, b);
    const PowerAllocation alloc(p1, p2);
    EXPECT_NEAR(rho_star(g, alloc).rho(), rho_min_oracle(g, alloc).rho(), 1e-6);
  }
}

TEST(RhoStarTest, DegradedLineClampsBelowOne) {
  // a = b = 1: the first factor of Delta vanishes and the minimizer is 1^-.
  const ChannelGains g(1.0, 1.0);
  const PowerAllocation alloc(2.0, 2.0);
  EXPECT_EQ(discriminant(g, alloc), 0.0);
  EXPECT_DOUBLE_EQ(rho_star(g, alloc).rho(), 1.0 - kRhoEdge);
}

TEST(RhoStarTest, ZeroCrossPowerUsesZero) {
  EXPECT_EQ(rho_star(ChannelGains(0.0, 0.0), PowerAllocation(3.0, 3.0)).rho(),
            0.0);
  EXPECT_EQ(rho_star(ChannelGains(2.0, 2.0), PowerAllocation(0.0, 0.0)).rho(),
            0.0);
}

TEST(RhoMinOracleTest, ConstantObjectiveReturnsMidpoint) {
  EXPECT_NEAR(
      rho_min_oracle(ChannelGains(0.4, 3.0), PowerAllocation(0.0, 0.0)).rho(),
      0.0, 1e-9);
}

TEST(SatoUpperBoundTest, NoPowerNoBound) {
  const SatoEvaluation e =
      sato_upper_bound(ChannelGains(0.3, 2.0), PowerBudget(0.0, 0.0));
  EXPECT_EQ(e.final_bound.value(), 0.0);
  EXPECT_TRUE(e.degenerate);
}

TEST(SatoUpperBoundTest, DegradedSymmetricChannelIsTight) {
  // Both receivers see statistically identical signals: the bound's limit
  // (1/2) log2[(4 + (sqrt(C-) + sqrt(C+))^2) / (4 (1 + aP1 + P2))] is 0.
  const ChannelGains g(1.0, 1.0);
  const PowerBudget budget(2.0, 2.0);
  const SatoEvaluation e = sato_upper_bound(g, budget);
  EXPECT_NEAR(e.r_u, 0.0, 1e-9);
  EXPECT_GE(e.r_u, 0.0);
  EXPECT_NEAR(e.single_user_cap, 0.792481250360578, 1e-12);
  EXPECT_NEAR(e.final_bound.value(), std::min(e.r_u, e.single_user_cap), 0.0);
  const PowerAllocation full(2.0, 2.0);
  EXPECT_NEAR(sato_f(g, full, rho_min_oracle(g, full)), e.r_u, 1e-8);
}

TEST(SatoUpperBoundTest, WeakInterferenceBoundIsClose) {
  const ChannelGains g(0.36, 0.36);
  const PowerBudget budget(2.0, 2.0);
  const double bound = sato_upper_bound(g, budget).final_bound.value();
  const double rate = optimal_allocation(g, budget).rate.value();
  EXPECT_GE(bound, rate);
  EXPECT_LT(bound - rate, 0.1);
}

class RandomPoints : public ::testing::Test {
 protected:
  std::mt19937_64 rng{77};
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
};

TEST_F(RandomPoints, ConvexInRho) {
  const double h = 1e-3;
  for (int i = 0; i < 2000; ++i) {
    const double a = uniform(0.05, 5);
    const double b = uniform(0.05, 5);
    const double p1 = uniform(0, 10);
    const double p2 = uniform(0, 10);
    const double r = uniform(-0.99, 0.99);
    const double second = f(a, b, p1, p2, r + h) - 2 * f(a, b, p1, p2, r) +
                          f(a, b, p1, p2, r - h);
    EXPECT_GE(second, -1e-9);
  }
}

TEST_F(RandomPoints, RhoStarIsGlobalMinimum) {
  for (int i = 0; i < 300; ++i) {
    const double a = uniform(0.05, 5);
    const double b = uniform(0.05, 5);
    const double p1 = uniform(0, 10);
    const double p2 = uniform(0, 10);
    if (std::sqrt(a) * p1 + std::sqrt(b) * p2 <= 1e-6) continue;
    const ChannelGains g(a, b);
    const PowerAllocation alloc(p1, p2);
    const double at_star = sato_f(g, alloc, rho_star(g, alloc));
    for (int k = 0; k <= 1000; ++k) {
      const double r = -0.999 + 1.998 * k / 1000;
      ASSERT_LE(at_star, f(a, b, p1, p2, r) + 1e-12);
    }
  }
}

TEST_F(RandomPoints, IncreasingInPowers) {
  const double dp = 1e-4;
  for (int i = 0; i < 3000; ++i) {
    const double a = uniform(0.05, 5);
    const double b = uniform(0.05, 5);
    const double p1 = uniform(0, 10);
    const double p2 = uniform(0, 10);
    const double r = uniform(-0.95, 0.95);
    const double base = f(a, b, p1, p2, r);
    EXPECT_GE(f(a, b, p1 + dp, p2, r) - base, -1e-9);
    EXPECT_GE(f(a, b, p1, p2 + dp, r) - base, -1e-9);
  }
}

TEST_F(RandomPoints, DiscriminantNonnegative) {
  for (int i = 0; i < 5000; ++i) {
    const ChannelGains g(uniform(0, 5), uniform(0, 5));
    const PowerAllocation alloc(uniform(0, 10), uniform(0, 10));
    const SatoTerms t = sato_terms(g, alloc);
    EXPECT_GE(t.c_minus * t.c_plus, -1e-12);
    EXPECT_GE(discriminant(g, alloc), 0.0);
  }
}

TEST_F(RandomPoints, BoundDominatesEveryFeasibleRate) {
  for (int i = 0; i < 5000; ++i) {
    const ChannelGains g(uniform(0.05, 5), uniform(0.05, 5));
    const PowerBudget budget(uniform(0.1, 10), uniform(0.1, 10));
    const SatoEvaluation e = sato_upper_bound(g, budget);
    EXPECT_EQ(e.final_bound.value(),
              std::max(0.0, std::min(e.r_u, e.single_user_cap)));
    const PowerAllocation alloc(uniform(0, budget.p1_max()),
                                uniform(0, budget.p2_max()));
    EXPECT_LE(achievable_rate(g, alloc).rate.value(),
              e.final_bound.value() + 1e-9);
  }
}

}  // namespace
}  // namespace wtchi
