// Copyright 2026 The fedl-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cerrno>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fedl_lab/errors.hpp"
#include "fedl_lab/wireless/allocation.hpp"
#include "fedl_lab_cli/cli.hpp"

namespace fedl_lab::cli {

namespace {

double parse_number(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw InvalidInputError(std::string("kappa grid: bad ") + what + " '" + s + "'");
  }
  return v;
}

void check_thread_cap() {
  const char* env = std::getenv("FEDL_LAB_THREADS");
  if (env == nullptr) return;
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || errno != 0 || v < 1) {
    throw InvalidInputError(std::string("FEDL_LAB_THREADS must be a positive integer, got '") +
                            env + "'");
  }
}

}  // namespace

std::vector<double> parse_kappa_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::stringstream ss{std::string(text)};
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4) {
    throw InvalidInputError("kappa grid must look like MIN:MAX:COUNT:log, got '" +
                            std::string(text) + "'");
  }
  const double lo = parse_number(parts[0], "MIN");
  const double hi = parse_number(parts[1], "MAX");
  const double count_d = parse_number(parts[2], "COUNT");
  if (!(count_d >= 0.0) || count_d != std::floor(count_d) || count_d > 1e7) {
    throw InvalidInputError("kappa grid: COUNT must be a non-negative integer");
  }
  const auto count = static_cast<std::size_t>(count_d);
  if (count == 0) return {};
  if (parts[3] == "log") return wireless::log_grid(lo, hi, count);
  if (parts[3] != "lin") {
    throw InvalidInputError("kappa grid: spacing must be 'log' or 'lin'");
  }
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw InvalidInputError("kappa grid needs 0 < MIN <= MAX");
  }
  std::vector<double> grid(count, lo);
  for (std::size_t i = 1; i < count; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Federated learning over wireless networks: data generation, "
               "training and resource allocation",
               "fedl-lab"};
  app.require_subcommand(1);
  Options options;
  std::string config, data, grid;
  std::uint64_t seed = 0;
  double kappa = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "Input file (JSON)");
    sub->add_option("--out", options.out, "Output directory")->required();
    sub->add_option("--seed", seed, "Seed overriding the config");
  };
  auto* datagen = app.add_subcommand("datagen", "Generate a synthetic federated dataset");
  add_common(datagen);
  auto* train = app.add_subcommand("train", "Train with FEDL or FedAvg");
  add_common(train);
  train->add_option("--data", data, "Dataset directory written by datagen")->required();
  train->add_option("--algo", options.algo, "fedl or fedavg");
  auto* allocate = app.add_subcommand("allocate", "Solve the resource allocation at one price");
  add_common(allocate);
  allocate->add_option("--kappa", kappa, "Energy/time price overriding the instance");
  auto* pareto = app.add_subcommand("pareto", "Sweep the price to trace the time/energy frontier");
  add_common(pareto);
  pareto->add_option("--kappa-grid", grid, "MIN:MAX:COUNT:log")->required();

  std::vector<std::string> argv_store{"fedl-lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto* sub = app.get_subcommands().front();
  options.command = sub->get_name();
  if (sub->count("--config")) options.config = config;
  if (sub->count("--seed")) options.seed = seed;
  if (!data.empty()) options.data = data;
  if (allocate->count("--kappa")) options.kappa = kappa;
  if (!grid.empty()) options.kappa_grid = grid;

  try {
    check_thread_cap();
    if (sub == datagen) return cmd_datagen(options, out, err);
    if (sub == train) return cmd_train(options, out, err);
    if (sub == allocate) return cmd_allocate(options, out, err);
    return cmd_pareto(options, out, err);
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace fedl_lab::cli
