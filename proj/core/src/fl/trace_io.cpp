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

#include "fedl_lab/fl/trace_io.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/io_util.hpp"

namespace fedl_lab::fl {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("config key '") + key +
                            "': " + e.what());
  }
}

std::size_t count_field(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidInputError(std::string("config key '") + key +
                            "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

TrainFile parse_train_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("train config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InvalidInputError("train config must be a JSON object");
  }
  static const std::set<std::string> known = {
      "eta", "theta", "K_g", "K_l", "h", "batch", "S", "seed", "loss"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) {
      throw InvalidInputError("unknown train config key '" + key + "'");
    }
  }

  TrainFile out;
  auto& cfg = out.config;
  if (doc.contains("eta")) cfg.eta = field<double>(doc, "eta");
  if (doc.contains("theta")) cfg.theta = field<double>(doc, "theta");
  if (doc.contains("K_g")) cfg.K_g = count_field(doc, "K_g");
  if (doc.contains("K_l")) cfg.K_l = count_field(doc, "K_l");
  if (doc.contains("h")) cfg.h = field<double>(doc, "h");
  if (doc.contains("seed")) cfg.seed = field<std::uint64_t>(doc, "seed");
  if (doc.contains("S") && !doc["S"].is_null()) cfg.S = count_field(doc, "S");
  if (doc.contains("batch")) {
    const auto& b = doc["batch"];
    if (b.is_string()) {
      if (b.get<std::string>() != "FULL") {
        throw InvalidInputError("batch must be an integer or \"FULL\"");
      }
    } else {
      cfg.batch = count_field(doc, "batch");
    }
  }
  if (doc.contains("loss")) {
    const auto& l = doc["loss"];
    out.model.kind = parse_loss_kind(field<std::string>(l, "kind"));
    if (l.contains("classes")) out.model.classes = count_field(l, "classes");
    if (l.contains("reg")) out.model.reg = field<double>(l, "reg");
    out.model.validate();
  }
  return out;
}

std::string train_config_to_json(const TrainConfig& cfg,
                                 const LossModel& model) {
  json doc;
  doc["eta"] = cfg.eta;
  doc["theta"] = cfg.theta;
  doc["K_g"] = cfg.K_g;
  doc["K_l"] = cfg.K_l;
  doc["h"] = cfg.h;
  doc["batch"] = cfg.batch ? json(*cfg.batch) : json("FULL");
  doc["S"] = cfg.S ? json(*cfg.S) : json(nullptr);
  doc["seed"] = cfg.seed;
  doc["loss"] = {{"kind", std::string(to_string(model.kind))},
                 {"classes", model.classes},
                 {"reg", model.reg}};
  return doc.dump(2) + "\n";
}

std::string trace_to_csv(const TrainingTrace& trace) {
  std::string out =
      "round,global_loss,test_accuracy,grad_bar_norm,mean_local_iters,"
      "elapsed_ms\n";
  for (const auto& r : trace.rounds) {
    out += std::to_string(r.round);
    for (double v : {r.global_loss, r.test_accuracy, r.grad_bar_norm,
                     r.mean_local_iters, r.elapsed_ms}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace fedl_lab::fl
