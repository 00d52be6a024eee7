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

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "fedl_lab/data/synthetic.hpp"
#include "fedl_lab/errors.hpp"

namespace fedl_lab::data {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception& e) {
    throw InvalidInputError("spec key '" + key + "': " + e.what());
  }
}

std::size_t count_field(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidInputError("spec key '" + key +
                            "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

template <typename T>
std::pair<T, T> range_field(const json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2) {
    throw InvalidInputError("spec key '" + key + "' must be [min, max]");
  }
  if constexpr (std::is_same_v<T, std::size_t>) {
    return {count_field(v[0], key), count_field(v[1], key)};
  } else {
    return {field<T>(v[0], key), field<T>(v[1], key)};
  }
}

}  // namespace

SyntheticSpec parse_synthetic_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("synthetic spec: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InvalidInputError("synthetic spec must be a JSON object");
  }
  SyntheticSpec spec;
  for (const auto& [key, v] : doc.items()) {
    if (key == "n_users") {
      spec.n_users = count_field(v, key);
    } else if (key == "dim") {
      spec.dim = count_field(v, key);
    } else if (key == "target_rho") {
      spec.target_rho = field<double>(v, key);
    } else if (key == "size_range") {
      std::tie(spec.size_min, spec.size_max) = range_field<std::size_t>(v, key);
    } else if (key == "size_law") {
      spec.size_law = field<double>(v, key);
    } else if (key == "split") {
      spec.split = field<double>(v, key);
    } else if (key == "seed") {
      spec.seed = field<std::uint64_t>(v, key);
    } else if (key == "sigma_range") {
      std::tie(spec.sigma_min, spec.sigma_max) = range_field<double>(v, key);
    } else if (key == "noise_variance") {
      spec.noise_variance = field<double>(v, key);
    } else {
      throw InvalidInputError("unknown synthetic spec key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

std::string synthetic_spec_to_json(const SyntheticSpec& spec) {
  const json doc = {
      {"n_users", spec.n_users},
      {"dim", spec.dim},
      {"target_rho", spec.target_rho},
      {"size_range", {spec.size_min, spec.size_max}},
      {"size_law", spec.size_law},
      {"split", spec.split},
      {"seed", spec.seed},
      {"sigma_range", {spec.sigma_min, spec.sigma_max}},
      {"noise_variance", spec.noise_variance},
  };
  return doc.dump();
}

}  // namespace fedl_lab::data
