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

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "commands.hpp"
#include "fedl_lab/curvature.hpp"
#include "fedl_lab/data/csv_io.hpp"
#include "fedl_lab/data/synthetic.hpp"
#include "fedl_lab/errors.hpp"
#include "fedl_lab/fl/rates.hpp"
#include "fedl_lab/fl/trace_io.hpp"
#include "fedl_lab/fl/trainer.hpp"
#include "fedl_lab/io_util.hpp"
#include "fedl_lab/wireless/allocation.hpp"
#include "fedl_lab/wireless/instance.hpp"
#include "fedl_lab/wireless/kkt.hpp"
#include "fedl_lab_cli/cli.hpp"

namespace fedl_lab::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json number_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

fs::path write_output(Manifest& manifest, const fs::path& path,
                      std::string_view contents) {
  write_file_atomic(path, contents);
  manifest.add_output(path);
  return path;
}

// Every regular file below `dir`, in a stable order.
std::vector<fs::path> files_below(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

wireless::Instance load_or_generate_instance(const Options& options,
                                             Manifest& manifest) {
  wireless::Instance inst;
  if (options.config) {
    inst = wireless::parse_instance(read_file(*options.config));
    manifest.add_input(*options.config);
  } else {
    wireless::InstanceOptions gen;
    gen.seed = options.seed.value_or(0);
    inst = wireless::generate_instance(gen);
    manifest.add_setting("seed", gen.seed);
    write_output(manifest, options.out / "instance.json",
                 wireless::instance_to_json(inst) + "\n");
  }
  if (options.kappa) inst.sys.kappa = *options.kappa;
  inst.sys.validate();
  manifest.add_setting("kappa", inst.sys.kappa);
  return inst;
}

const char* subset_name(const wireless::Partition& p, std::size_t n) {
  auto in = [n](const std::vector<std::size_t>& v) {
    return std::find(v.begin(), v.end(), n) != v.end();
  };
  if (in(p.n1)) return "N1";
  if (in(p.n2)) return "N2";
  return "N3";
}

const char* tau_case_name(wireless::TauCase c) {
  switch (c) {
    case wireless::TauCase::kAtMax:
      return "tau_max";
    case wireless::TauCase::kInterior:
      return "interior";
    case wireless::TauCase::kAtMin:
      return "tau_min";
  }
  return "?";
}

wireless::AllocationOptions allocation_options(const wireless::Instance& inst) {
  wireless::AllocationOptions opts;
  opts.gap0_over_eps = inst.gap0_over_eps;
  return opts;
}

}  // namespace

int cmd_datagen(const Options& options, std::ostream& out, std::ostream&) {
  if (!options.config) throw InvalidInputError("datagen requires --config");
  Manifest manifest(options);
  auto spec = data::parse_synthetic_spec(read_file(*options.config));
  manifest.add_input(*options.config);
  if (options.seed) spec.seed = *options.seed;
  manifest.add_setting("seed", spec.seed);
  manifest.add_setting("spec", json::parse(data::synthetic_spec_to_json(spec)));

  const auto generated = data::generate_synthetic(spec);
  for (const auto& p : data::write_dataset_dir(options.out, spec, generated)) {
    manifest.add_output(p);
  }
  const auto m = manifest.write();
  out << "datagen: " << generated.train.size() << " UEs written to "
      << options.out.string() << " (content hash " << manifest.content_hash()
      << ", manifest " << m.string() << ")\n";
  return kExitOk;
}

int cmd_train(const Options& options, std::ostream& out, std::ostream& err) {
  if (options.algo != "fedl" && options.algo != "fedavg") {
    throw InvalidInputError("unknown algorithm '" + options.algo +
                            "' (expected fedl or fedavg)");
  }
  if (!options.data) throw InvalidInputError("train requires --data DIR");
  Manifest manifest(options);
  fl::TrainFile file;
  if (options.config) {
    file = fl::parse_train_config(read_file(*options.config));
    manifest.add_input(*options.config);
  }
  auto& cfg = file.config;
  if (options.seed) cfg.seed = *options.seed;
  const auto split = data::load_dataset_dir(*options.data);
  for (const auto& p : files_below(*options.data)) manifest.add_input(p);
  cfg.validate(split.train.size());
  manifest.add_setting("seed", cfg.seed);
  manifest.add_setting("algo", options.algo);
  manifest.add_setting("config", json::parse(fl::train_config_to_json(cfg, file.model)));

  json summary;
  summary["algorithm"] = options.algo;
  if (options.algo == "fedl") {
    const double rho = estimate_curvature(file.model, split.train).rho();
    const double Theta = fl::theta_rate(cfg.theta, cfg.eta, rho);
    summary["rho"] = number_or_null(rho);
    summary["Theta"] = number_or_null(Theta);
    if (!(Theta > 0.0 && Theta < 1.0)) {
      err << "warning: Theta = " << format_double(Theta)
          << " lies outside (0, 1) at rho = " << format_double(rho)
          << "; the linear-rate guarantee does not apply\n";
    }
  }

  fl::RunOptions run_opts;
  run_opts.test = split.test;
  fl::TrainingTrace trace;
  int code = kExitOk;
  try {
    trace = options.algo == "fedl"
                ? fl::run_fedl(cfg, split.train, file.model, run_opts)
                : fl::run_fedavg(cfg, split.train, file.model, run_opts);
  } catch (const fl::DivergenceError& e) {
    trace = e.partial_trace();
    code = kExitNumericalFailure;
    summary["error"] = e.what();
    manifest.set_status("diverged");
    err << "error: " << e.what() << " (partial trace kept)\n";
  }

  summary["diverged"] = code != kExitOk;
  summary["rounds"] = trace.rounds.size();
  summary["initial_loss"] = number_or_null(trace.initial_loss);
  if (!trace.rounds.empty()) {
    summary["final_loss"] = number_or_null(trace.rounds.back().global_loss);
    summary["final_test_accuracy"] = number_or_null(trace.rounds.back().test_accuracy);
  } else {
    summary["final_loss"] = nullptr;
    summary["final_test_accuracy"] = nullptr;
  }
  if (!trace.final_w.empty()) {
    json w = json::array();
    for (std::size_t j = 0; j < trace.final_w.size(); ++j) {
      w.push_back(number_or_null(trace.final_w[j]));
    }
    summary["final_w"] = w;
  }
  write_output(manifest, options.out / "trace.csv", fl::trace_to_csv(trace));
  write_output(manifest, options.out / "summary.json", summary.dump(2) + "\n");
  manifest.write();
  out << "train: " << options.algo << ", " << trace.rounds.size()
      << " rounds, final loss " << summary["final_loss"].dump() << "\n";
  return code;
}

int cmd_allocate(const Options& options, std::ostream& out, std::ostream& err) {
  Manifest manifest(options);
  const auto inst = load_or_generate_instance(options, manifest);
  const auto alloc = wireless::solve_fedl_alloc(
      inst.ues, inst.sys, inst.consts, inst.rho,
      allocation_options(inst));

  std::string csv = "ue,subset,f_star,T_cp,E_cp,tau_star,tau_case,power,E_co\n";
  for (std::size_t n = 0; n < inst.ues.size(); ++n) {
    const auto& ue = inst.ues[n];
    const double f = alloc.sub1.f_star[n];
    const double tau = alloc.sub2.tau_star[n];
    csv += std::to_string(n) + ',' + subset_name(alloc.sub1.partition, n);
    for (double v : {f, wireless::time_cp(ue, f), alloc.sub1.energy_cp[n], tau}) {
      csv += ',' + format_double(v);
    }
    csv += ',';
    csv += tau_case_name(alloc.sub2.cases[n]);
    for (double v : {wireless::power_of_tau(ue, inst.sys, tau), alloc.sub2.energy_co[n]}) {
      csv += ',' + format_double(v);
    }
    csv += '\n';
  }

  const auto het = wireless::heterogeneity(inst.ues, inst.sys);
  const auto kkt1 = wireless::kkt_check_sub1(alloc.sub1, inst.ues, inst.sys, inst.sys.kappa);
  const auto kkt2 = wireless::kkt_check_sub2(alloc.sub2, inst.ues, inst.sys, inst.sys.kappa);
  json summary = {
      {"kappa", inst.sys.kappa},
      {"T_cp_star", alloc.sub1.T_cp_star},
      {"T_co_star", alloc.sub2.T_co_star},
      {"theta_star", alloc.sub3.theta_star},
      {"eta_star", alloc.sub3.eta_star},
      {"Theta", alloc.sub3.Theta},
      {"K_l", alloc.sub3.K_l},
      {"K_g", alloc.K_g},
      {"E_g", alloc.E_g},
      {"T_g", alloc.T_g},
      {"total_energy", alloc.total_energy},
      {"total_time", alloc.total_time},
      {"objective", alloc.objective},
      {"region", std::string(wireless::to_string(alloc.region.region))},
      {"thresholds", alloc.region.thresholds},
      {"L_cp", het.L_cp},
      {"L_co", het.L_co},
      {"kkt_residual", {{"sub1", kkt1.max_residual()}, {"sub2", kkt2.max_residual()}}},
  };
  if (!(alloc.sub3.Theta > 0.0 && alloc.sub3.Theta < 1.0)) {
    err << "warning: Theta = " << format_double(alloc.sub3.Theta)
        << " lies outside (0, 1)\n";
  }
  write_output(manifest, options.out / "allocation.csv", csv);
  write_output(manifest, options.out / "summary.json", summary.dump(2) + "\n");
  manifest.write();
  out << "allocate: kappa " << format_double(inst.sys.kappa) << ", region "
      << wireless::to_string(alloc.region.region) << ", objective "
      << format_double(alloc.objective) << "\n";
  return kExitOk;
}

int cmd_pareto(const Options& options, std::ostream& out, std::ostream&) {
  if (!options.kappa_grid) throw InvalidInputError("pareto requires --kappa-grid");
  const auto grid = parse_kappa_grid(*options.kappa_grid);
  if (grid.empty()) throw InvalidInputError("kappa grid is empty");
  Manifest manifest(options);
  manifest.add_setting("kappa_grid", *options.kappa_grid);
  const auto inst = load_or_generate_instance(options, manifest);
  const auto points = wireless::pareto_sweep(
      inst.ues, inst.sys, inst.consts, inst.rho, grid,
      allocation_options(inst));

  std::string csv = "kappa,total_time,total_energy,theta,eta,Theta,objective\n";
  for (const auto& p : points) {
    bool first = true;
    for (double v : {p.kappa, p.total_time, p.total_energy, p.theta, p.eta,
                     p.Theta, p.objective}) {
      if (!first) csv += ',';
      csv += format_double(v);
      first = false;
    }
    csv += '\n';
  }
  write_output(manifest, options.out / "frontier.csv", csv);
  manifest.write();
  out << "pareto: " << points.size() << " points written to "
      << (options.out / "frontier.csv").string() << "\n";
  return kExitOk;
}

}  // namespace fedl_lab::cli
