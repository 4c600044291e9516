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

#include "wtchi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wtchi/achievable.hpp"
#include "wtchi/bound.hpp"
#include "wtchi/power.hpp"

namespace wtchi {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  ChannelGains gains() { return {uniform(0.05, 5.0), uniform(0.05, 5.0)}; }
  PowerBudget budget() { return {uniform(0.1, 10.0), uniform(0.1, 10.0)}; }
  PowerAllocation allocation(const PowerBudget& b) {
    return {uniform(0.0, b.p1_max()), uniform(0.0, b.p2_max())};
  }

 private:
  std::mt19937_64 rng_;
};

double rate_at(double a, double b, double p1, double p2) {
  return achievable_rate(ChannelGains(a, b), PowerAllocation(p1, p2))
      .rate.value();
}

CheckOutcome check_soundness(Sampler& s, int n) {
  double worst = -1.0;
  for (int i = 0; i < n; ++i) {
    const ChannelGains g = s.gains();
    const PowerBudget budget = s.budget();
    const double bound = sato_upper_bound(g, budget).final_bound.value();
    const double fixed = achievable_rate(g, s.allocation(budget)).rate.value();
    const double best = optimal_allocation(g, budget).rate.value();
    worst = std::max({worst, fixed - bound, best - bound});
  }
  return {"soundness: achievable <= upper bound", worst <= 1e-9, n, worst,
          1e-9};
}

CheckOutcome check_interferer_off(Sampler& s, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const ChannelGains g = s.gains();
    const double p1 = s.uniform(0.0, 10.0);
    const double lhs = rate_at(g.a(), g.b(), p1, 0.0);
    const double rhs = wiretap_capacity(g.a(), p1).value();
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {"interferer off recovers the wiretap channel", worst <= 1e-12, n,
          worst, 1e-12};
}

CheckOutcome check_continuity(Sampler& s, int n) {
  constexpr double kEps = 1e-7;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double p1 = s.uniform(0.1, 10.0);
    const double p2 = s.uniform(0.1, 10.0);
    const double weak_a = s.uniform(0.05, 0.95);
    const double any_a =
        (i / 6) % 2 == 0 ? weak_a : s.uniform(1.0, 1.0 + p2 - 2 * kEps);
    const double b_any = s.uniform(0.05, 5.0);
    const Thresholds t = thresholds(weak_a, PowerAllocation(p1, p2));
    double lo = 0.0;
    double hi = 0.0;
    switch (i % 6) {
      case 0:
        lo = rate_at(any_a, 1.0 + p1 - kEps, p1, p2);
        hi = rate_at(any_a, 1.0 + p1 + kEps, p1, p2);
        break;
      case 1:
        lo = rate_at(any_a, 1.0 - kEps, p1, p2);
        hi = rate_at(any_a, 1.0 + kEps, p1, p2);
        break;
      case 2:
        lo = rate_at(weak_a, t.beta1 - kEps, p1, p2);
        hi = rate_at(weak_a, t.beta1 + kEps, p1, p2);
        break;
      case 3:
        lo = rate_at(weak_a, t.beta2 - kEps, p1, p2);
        hi = rate_at(weak_a, t.beta2 + kEps, p1, p2);
        break;
      case 4:
        lo = rate_at(1.0 - kEps, b_any, p1, p2);
        hi = rate_at(1.0 + kEps, b_any, p1, p2);
        break;
      default:
        lo = rate_at(1.0 + p2 - kEps, b_any, p1, p2);
        hi = rate_at(1.0 + p2 + kEps, b_any, p1, p2);
        break;
    }
    worst = std::max(worst, std::abs(hi - lo));
  }
  return {"rate is continuous across branch boundaries", worst <= 1e-5, n,
          worst, 1e-5};
}

CheckOutcome check_power_oracle(Sampler& s, int n, int grid_steps) {
  double worst_gap = 0.0;
  bool grid_never_wins = true;
  for (int i = 0; i < n; ++i) {
    const ChannelGains g = s.gains();
    const PowerBudget budget = s.budget();
    const double closed = optimal_allocation(g, budget).rate.value();
    const double grid =
        grid_search_allocation(g, budget, grid_steps).rate.value();
    worst_gap = std::max(worst_gap, std::abs(closed - grid));
    if (grid > closed + 1e-9) grid_never_wins = false;
  }
  return {"closed-form power control matches the grid oracle",
          worst_gap <= 2e-3 && grid_never_wins, n, worst_gap, 2e-3};
}

CheckOutcome check_rho_star(Sampler& s, int n) {
  constexpr double kStep = 1e-5;
  double worst = 0.0;
  bool stationary = true;
  int done = 0;
  while (done < n) {
    const ChannelGains g = s.gains();
    const PowerAllocation alloc(s.uniform(0.0, 10.0), s.uniform(0.0, 10.0));
    if (std::sqrt(g.a()) * alloc.p1() + std::sqrt(g.b()) * alloc.p2() <= 1e-3) {
      continue;
    }
    ++done;
    const NoiseCorrelation star = rho_star(g, alloc);
    const NoiseCorrelation oracle = rho_min_oracle(g, alloc);
    worst = std::max(worst, std::abs(sato_f(g, alloc, star) -
                                     sato_f(g, alloc, oracle)));
    const double r = star.rho();
    if (1.0 - std::abs(r) > 2 * kStep) {
      const double slope = (sato_f(g, alloc, NoiseCorrelation(r + kStep)) -
                            sato_f(g, alloc, NoiseCorrelation(r - kStep))) /
                           (2 * kStep);
      if (std::abs(slope) > 1e-6) stationary = false;
    }
  }
  return {"rho* matches the golden-section minimizer",
          worst <= 1e-8 && stationary, n, worst, 1e-8};
}

CheckOutcome check_asymptotics(Sampler& s, int n) {
  double worst = 0.0;
  int done = 0;
  while (done < n) {
    const ChannelGains g = s.gains();
    const double a = g.a();
    const double b = g.b();
    if (std::abs(b - 1.0) < 0.05 || std::abs(b - 1.0 / a) < 0.05 ||
        std::abs(a * b - 1.0) < 0.05) {
      continue;
    }
    ++done;
    const double controlled =
        optimal_allocation(g, PowerBudget(1e8, 1e8)).rate.value();
    worst = std::max(worst, std::abs(controlled - asymptotic_rate(g).value()));
  }
  return {"large-budget rate approaches the unconstrained limit",
          worst <= 1e-2, n, worst, 1e-2};
}

}  // namespace

std::vector<CheckOutcome> run_verification(const VerifyOptions& options) {
  const int n = std::max(options.samples, 1);
  Sampler s(options.seed);
  std::vector<CheckOutcome> out;
  out.push_back(check_soundness(s, n));
  out.push_back(check_interferer_off(s, n));
  out.push_back(check_continuity(s, std::max(n / 10, 6)));
  out.push_back(check_power_oracle(s, std::max(n / 100, 5), options.grid_steps));
  out.push_back(check_rho_star(s, std::max(n / 10, 5)));
  out.push_back(check_asymptotics(s, std::max(n / 20, 5)));
  return out;
}

}  // namespace wtchi
