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

#include "fedl_lab/wireless/instance.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/rng.hpp"

namespace fedl_lab::wireless {

using nlohmann::json;

namespace {

constexpr double kBitsPerMb = 8e6;

double number(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw InvalidInputError(std::string("instance is missing '") + key + "'");
  }
  const auto& v = obj.at(key);
  if (!v.is_number()) {
    throw InvalidInputError(std::string("instance field '") + key +
                            "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

Instance generate_instance(const InstanceOptions& o) {
  if (o.n_ues == 0) throw InvalidInputError("instance needs at least one UE");
  Rng rng = make_stream(o.seed, 0x1a57a4ce);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  Instance inst;
  inst.sys = {o.bandwidth, o.noise, o.kappa, o.n_ues};
  inst.ues.reserve(o.n_ues);
  for (std::size_t n = 0; n < o.n_ues; ++n) {
    UEProfile ue;
    const double d = uniform(o.distance_min, o.distance_max);
    const double mean_gain = o.g0 * std::pow(1.0 / d, o.path_loss_exponent);
    ue.hbar_n = mean_gain;
    if (o.fading) {
      std::exponential_distribution<double> fade(1.0);
      ue.hbar_n = mean_gain * std::max(fade(rng), 1e-12);
    }
    ue.D_n = uniform(o.data_mb_min, o.data_mb_max) * kBitsPerMb;
    ue.c_n = uniform(o.c_min, o.c_max);
    ue.f_max = uniform(o.f_max_min, o.f_max_max);
    ue.f_min = std::min(o.f_min, ue.f_max);
    ue.alpha_n = o.alpha;
    ue.p_min = o.p_min;
    ue.p_max = o.p_max;
    ue.s_n = o.s_nats;
    inst.ues.push_back(ue);
  }
  validate_instance(inst.ues, inst.sys);
  return inst;
}

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("instance: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("system") || !doc.contains("ues") ||
      !doc["ues"].is_array()) {
    throw InvalidInputError("instance needs a 'system' object and 'ues' array");
  }
  Instance inst;
  const auto& s = doc["system"];
  inst.sys.B = number(s, "B");
  inst.sys.N0 = number(s, "N0");
  inst.sys.kappa = s.contains("kappa") ? number(s, "kappa") : 1.0;
  if (s.contains("N")) {
    const double n = number(s, "N");
    if (!(n >= 0.0) || n != std::floor(n)) {
      throw InvalidInputError("instance field 'N' must be a count");
    }
    inst.sys.N = static_cast<std::size_t>(n);
  }
  for (const auto& u : doc["ues"]) {
    UEProfile ue;
    ue.c_n = number(u, "c_n");
    ue.D_n = number(u, "D_n");
    ue.alpha_n = number(u, "alpha_n");
    ue.f_min = number(u, "f_min");
    ue.f_max = number(u, "f_max");
    ue.hbar_n = number(u, "hbar_n");
    ue.p_min = number(u, "p_min");
    ue.p_max = number(u, "p_max");
    ue.s_n = number(u, "s_n");
    inst.ues.push_back(ue);
  }
  if (inst.sys.N == 0) inst.sys.N = inst.ues.size();
  validate_instance(inst.ues, inst.sys);

  if (doc.contains("rho")) inst.rho = number(doc, "rho");
  inst.consts = fl::LocalSolverConstants::gradient_descent(inst.rho);
  if (doc.contains("local_solver")) {
    const auto& ls = doc["local_solver"];
    if (ls.contains("c")) inst.consts.c = number(ls, "c");
    if (ls.contains("gamma")) inst.consts.gamma = number(ls, "gamma");
  }
  inst.consts.validate();
  if (doc.contains("gap0_over_eps")) {
    inst.gap0_over_eps = number(doc, "gap0_over_eps");
    if (!(inst.gap0_over_eps > 1.0)) {
      throw InvalidInputError("gap0_over_eps must exceed 1");
    }
  }
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["system"] = {{"B", inst.sys.B},
                   {"N0", inst.sys.N0},
                   {"kappa", inst.sys.kappa},
                   {"N", inst.ues.size()}};
  json ues = json::array();
  for (const auto& ue : inst.ues) {
    ues.push_back({{"c_n", ue.c_n},
                   {"D_n", ue.D_n},
                   {"alpha_n", ue.alpha_n},
                   {"f_min", ue.f_min},
                   {"f_max", ue.f_max},
                   {"hbar_n", ue.hbar_n},
                   {"p_min", ue.p_min},
                   {"p_max", ue.p_max},
                   {"s_n", ue.s_n}});
  }
  doc["ues"] = ues;
  doc["rho"] = inst.rho;
  doc["local_solver"] = {{"c", inst.consts.c}, {"gamma", inst.consts.gamma}};
  doc["gap0_over_eps"] = inst.gap0_over_eps;
  return doc.dump(2) + "\n";
}

}  // namespace fedl_lab::wireless
