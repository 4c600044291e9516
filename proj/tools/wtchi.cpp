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

// wtchi: secrecy rates, power control and upper bounds for the Gaussian
// wiretap channel with a helping interferer.
//
// Exit status: 0 success, 1 verification or invariant failure, 2 usage or
// domain error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wtchi/achievable.hpp"
#include "wtchi/bound.hpp"
#include "wtchi/format.hpp"
#include "wtchi/model.hpp"
#include "wtchi/power.hpp"
#include "wtchi/sweep.hpp"
#include "wtchi/verify.hpp"

namespace {

using wtchi::format_number;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void print(const std::string& key, const std::string& value) {
  std::cout << key << ": " << value << '\n';
}
void print(const std::string& key, double value) {
  print(key, format_number(value));
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// `key = value` per line; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wtchi::DomainError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw wtchi::DomainError(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

bool truthy(const std::string& v) {
  return v == "1" || v == "true" || v == "yes" || v == "on";
}

// Config values are spliced in right after the subcommand name so that
// explicit flags, parsed later, take precedence.
std::vector<std::string> expand_config(const CLI::App& app,
                                       std::vector<std::string> args) {
  std::optional<std::string> config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (!config) return args;

  const auto kv = read_config(*config);
  for (std::size_t i = 0; i < args.size(); ++i) {
    const CLI::App* sub = nullptr;
    try {
      sub = app.get_subcommand(args[i]);
    } catch (const CLI::OptionNotFound&) {
      continue;
    }
    std::vector<std::string> injected;
    for (const auto& [key, value] : kv) {
      const CLI::Option* opt = sub->get_option_no_throw("--" + key);
      if (opt == nullptr) continue;
      if (opt->get_type_size() == 0) {
        if (truthy(value)) injected.push_back("--" + key);
      } else {
        injected.push_back("--" + key);
        injected.push_back(value);
      }
    }
    args.insert(args.begin() + i + 1, injected.begin(), injected.end());
    break;
  }
  return args;
}

struct Options {
  double a = 0.0;
  double b = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double pbar1 = 2.0;
  double pbar2 = 2.0;
  std::string param = "a";
  double from = 0.0;
  double to = 4.0;
  int steps = 400;
  bool symmetric = false;
  std::string power_mode = "optimal";
  std::string out;
  std::string out_dir = ".";
  int samples = 2000;
  std::uint64_t seed = 7;
  int grid_steps = 0;
};

wtchi::PowerMode parse_mode(const std::string& s) {
  return s == "full" ? wtchi::PowerMode::kFullPower
                     : wtchi::PowerMode::kOptimalControl;
}

int cmd_rate(const Options& o) {
  const wtchi::RateResult r = wtchi::achievable_rate(
      wtchi::ChannelGains(o.a, o.b), wtchi::PowerAllocation(o.p1, o.p2));
  print("rate_bits", r.rate.value());
  print("branch", r.branch.to_string());
  return kExitOk;
}

int cmd_power(const Options& o) {
  const wtchi::ChannelGains gains(o.a, o.b);
  const wtchi::PowerBudget budget(o.pbar1, o.pbar2);
  const wtchi::AllocationResult r = wtchi::optimal_allocation(gains, budget);
  print("p1", r.alloc.p1());
  print("p2", r.alloc.p2());
  print("rate_bits", r.rate.value());
  print("branch", r.branch.to_string());
  print("source", wtchi::to_string(r.source));
  if (r.source == wtchi::AllocationSource::kClosedForm) {
    print("rule", (r.rule_set == 1 ? std::string("a>=1 case ")
                                   : std::string("a<1 case ")) +
                      std::to_string(r.rule_case));
  }
  const wtchi::CriticalPowers cp = wtchi::critical_powers(gains, budget);
  print("p1_star", cp.p1_star);
  print("p2_star", cp.p2_star ? format_number(*cp.p2_star) : "undefined");
  if (o.grid_steps > 0) {
    const wtchi::AllocationResult g =
        wtchi::grid_search_allocation(gains, budget, o.grid_steps);
    print("grid_p1", g.alloc.p1());
    print("grid_p2", g.alloc.p2());
    print("grid_rate_bits", g.rate.value());
    print("grid_gap_bits", g.rate.value() - r.rate.value());
  }
  print("asymptotic_rate_bits", wtchi::asymptotic_rate(gains).to_string());
  return kExitOk;
}

int cmd_bound(const Options& o) {
  const wtchi::SatoEvaluation e = wtchi::sato_upper_bound(
      wtchi::ChannelGains(o.a, o.b), wtchi::PowerBudget(o.pbar1, o.pbar2));
  print("rho_star", e.rho_star.rho());
  print("discriminant", e.discriminant);
  print("r_u", e.r_u);
  print("single_user_cap", e.single_user_cap);
  print("final_bound", e.final_bound.value());
  print("active_term", e.cap_active() ? "single_user_cap" : "r_u");
  if (e.degenerate) print("note", "zero cross power; rho fixed at 0");
  return kExitOk;
}

int write_rows(const std::vector<wtchi::SweepRow>& rows,
               const std::string& path) {
  if (path.empty() || path == "-") {
    wtchi::write_csv(std::cout, rows);
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wtchi::DomainError("cannot write '" + path + "'");
  wtchi::write_csv(out, rows);
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  wtchi::SweepSpec spec;
  spec.parameter =
      o.param == "b" ? wtchi::SweptParameter::kB : wtchi::SweptParameter::kA;
  spec.from = o.from;
  spec.to = o.to;
  spec.steps = o.steps;
  spec.symmetric = o.symmetric;
  spec.fixed_gain = spec.parameter == wtchi::SweptParameter::kA ? o.b : o.a;
  spec.budget = wtchi::PowerBudget(o.pbar1, o.pbar2);
  spec.power_mode = parse_mode(o.power_mode);
  return write_rows(wtchi::run_sweep(spec), o.out);
}

int cmd_figure(const std::string& name, const Options& o) {
  for (const auto& curve :
       wtchi::figure_preset(name, o.steps, parse_mode(o.power_mode))) {
    const std::string path = o.out_dir + "/" + curve.name + ".csv";
    write_rows(wtchi::run_sweep(curve.spec), path);
    std::cerr << "wrote " << path << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  wtchi::VerifyOptions vo;
  vo.samples = o.samples;
  vo.seed = o.seed;
  vo.grid_steps = o.grid_steps > 0 ? o.grid_steps : 300;
  std::cout << "seed: " << o.seed << '\n';
  bool ok = true;
  for (const wtchi::CheckOutcome& c : wtchi::run_verification(vo)) {
    ok = ok && c.passed;
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name
              << " (cases=" << c.cases << ", worst=" << format_number(c.worst, 6)
              << ", tol=" << format_number(c.tolerance, 6) << ")\n";
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy rates and bounds for the Gaussian wiretap channel "
               "with a helping interferer",
               "wtchi"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--config", "key = value file mirroring the flags");

  Options o;
  auto gains = [&](CLI::App* sub, bool required) {
    sub->add_option("--a", o.a, "transmitter->eavesdropper power gain")
        ->check(CLI::NonNegativeNumber)
        ->required(required);
    sub->add_option("--b", o.b, "interferer->receiver power gain")
        ->check(CLI::NonNegativeNumber)
        ->required(required);
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--pbar1", o.pbar1, "transmitter power budget")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--pbar2", o.pbar2, "interferer power budget")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* rate = app.add_subcommand("rate", "achievable rate at (P1, P2)");
  gains(rate, true);
  rate->add_option("--p1", o.p1, "transmit power")
      ->check(CLI::NonNegativeNumber)
      ->required();
  rate->add_option("--p2", o.p2, "interferer power")
      ->check(CLI::NonNegativeNumber)
      ->required();

  CLI::App* power = app.add_subcommand("power", "optimal power control");
  gains(power, true);
  budget(power);
  power->add_option("--grid-steps", o.grid_steps,
                    "also run the grid oracle with this resolution");

  CLI::App* bound = app.add_subcommand("bound", "Sato-type upper bound");
  gains(bound, true);
  budget(bound);

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one gain, write CSV");
  gains(sweep, false);
  budget(sweep);
  sweep->add_option("--param", o.param, "swept gain")
      ->check(CLI::IsMember({"a", "b"}));
  sweep->add_option("--from", o.from, "range start");
  sweep->add_option("--to", o.to, "range end");
  sweep->add_option("--steps", o.steps, "intervals in the range");
  sweep->add_flag("--symmetric", o.symmetric, "sweep a = b together");
  sweep->add_option("--power-mode", o.power_mode, "optimal or full")
      ->check(CLI::IsMember({"optimal", "full"}));
  sweep->add_option("--out", o.out, "output path (default stdout)");

  std::vector<CLI::App*> figures;
  for (const char* name : {"fig2", "fig3", "fig4"}) {
    CLI::App* fig = app.add_subcommand(name, "figure preset sweep(s)");
    fig->add_option("--steps", o.steps, "intervals in [0, 4]");
    fig->add_option("--power-mode", o.power_mode, "optimal or full")
        ->check(CLI::IsMember({"optimal", "full"}));
    fig->add_option("--out-dir", o.out_dir, "directory for the CSV files");
    figures.push_back(fig);
  }

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--samples", o.samples, "random samples per check");
  verify->add_option("--seed", o.seed, "RNG seed");
  verify->add_option("--grid-steps", o.grid_steps, "grid oracle resolution");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const wtchi::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (rate->parsed()) return cmd_rate(o);
    if (power->parsed()) return cmd_power(o);
    if (bound->parsed()) return cmd_bound(o);
    if (sweep->parsed()) return cmd_sweep(o);
    for (CLI::App* fig : figures) {
      if (fig->parsed()) return cmd_figure(fig->get_name(), o);
    }
    if (verify->parsed()) return cmd_verify(o);
  } catch (const wtchi::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
