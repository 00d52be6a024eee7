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

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fedl_lab::cli {

struct Options {
  std::string command;
  std::optional<std::filesystem::path> config;
  std::filesystem::path out;
  std::optional<std::filesystem::path> data;
  std::optional<std::uint64_t> seed;
  std::string algo = "fedl";
  std::optional<double> kappa;
  std::optional<std::string> kappa_grid;
};

// Collects inputs and outputs of one run and writes manifest.json.
class Manifest {
 public:
  explicit Manifest(const Options& options);

  // Records an input file's hash under its path.
  void add_input(const std::filesystem::path& path);
  void add_setting(const std::string& key, nlohmann::json value);
  void add_output(const std::filesystem::path& path);
  void set_status(const std::string& status) { status_ = status; }

  // Hash over the command, settings and input hashes; independent of wall
  // time and output location.
  std::string content_hash() const;
  std::filesystem::path write() const;

 private:
  Options options_;
  nlohmann::json inputs_ = nlohmann::json::array();
  nlohmann::json settings_ = nlohmann::json::object();
  std::vector<std::string> outputs_;
  std::string status_ = "ok";
  std::chrono::steady_clock::time_point start_;
};

int cmd_datagen(const Options& options, std::ostream& out, std::ostream& err);
int cmd_train(const Options& options, std::ostream& out, std::ostream& err);
int cmd_allocate(const Options& options, std::ostream& out, std::ostream& err);
int cmd_pareto(const Options& options, std::ostream& out, std::ostream& err);

}  // namespace fedl_lab::cli
